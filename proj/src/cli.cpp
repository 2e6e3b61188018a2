#include "sphconf/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cctype>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <json.hpp>
#include <limits>
#include <sstream>

#include "sphconf/chart.hpp"
#include "sphconf/errors.hpp"
#include "sphconf/geometry.hpp"
#include "sphconf/io.hpp"
#include "sphconf/morse.hpp"
#include "sphconf/optimize.hpp"
#include "sphconf/perturbation.hpp"
#include "sphconf/potential.hpp"
#include "sphconf/stationarity.hpp"
#include "sphconf/sweep.hpp"

namespace sphconf {

namespace {

std::string fmt(double x, int digits) {
  std::ostringstream s;
  s << std::setprecision(digits) << x;
  return s.str();
}

// CSV fields that may contain commas (class names) are always quoted.
std::string csv_field(const std::string& s) {
  std::string body = s;
  size_t pos = 0;
  while ((pos = body.find('"', pos)) != std::string::npos) {
    body.insert(pos, 1, '"');
    pos += 2;
  }
  return '"' + body + '"';
}

ChartPoint critical_chart(std::string name) {
  std::transform(name.begin(), name.end(), name.begin(),
                 [](unsigned char c) { return std::toupper(c); });
  if (name == "C0") return chart_pentagon();
  if (name == "C1") return chart_square_pyramid();
  if (name == "C2") return chart_bipyramid();
  throw ArgumentError("unknown critical point '" + name + "' (use C0, C1 or C2)");
}

std::pair<int, int> parse_int_pair(const std::string& text, const char* what) {
  int a = 0, b = 0;
  char comma = 0;
  std::istringstream in(text);
  if (!(in >> a >> comma >> b) || comma != ',' || !in.eof())
    throw ArgumentError(std::string(what) + " wants two integers as 'A,B', got '" +
                        text + "'");
  return {a, b};
}

double parse_tol(const std::string& text) {
  try {
    size_t pos = 0;
    double v = std::stod(text, &pos);
    if (pos != text.size() || !(v > 0)) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw ArgumentError("--tol wants a positive number, got '" + text + "'");
  }
}

// Common input spec: a config comes from a file, a partition, or a named
// critical point; optimize and construct can additionally draw a random start.
struct InputOpts {
  std::string file;
  std::string partition;
  std::string critical;
  std::string random;  // "D,N"
};

void add_input_options(CLI::App* cmd, InputOpts& in, bool with_random) {
  cmd->add_option("config", in.file, "configuration file (.json or .csv)");
  cmd->add_option("--partition", in.partition,
                  "orthogonal-simplex partition such as 3,2 or 1,2,2");
  cmd->add_option("--critical", in.critical, "named critical point C0 | C1 | C2");
  if (with_random)
    cmd->add_option("--random", in.random, "random start 'D,N' on S^{D-1}");
}

Config resolve_input(const CLI::App* cmd, const InputOpts& in, double unit_tol,
                     std::uint64_t seed) {
  auto has = [cmd](const char* name) {
    const CLI::Option* o = cmd->get_option_no_throw(name);
    return o != nullptr && o->count() > 0;
  };
  int provided = has("config") + has("--partition") + has("--critical") +
                 has("--random");
  if (provided != 1)
    throw ArgumentError(
        "give exactly one input: a config file, --partition, --critical" +
        std::string(cmd->get_option_no_throw("--random") ? " or --random" : ""));
  if (!in.file.empty()) return load_config(in.file, unit_tol);
  if (!in.partition.empty()) return pyramid_config(Partition::parse(in.partition));
  if (!in.critical.empty()) return from_spherical(critical_chart(in.critical));
  auto [d, n] = parse_int_pair(in.random, "--random");
  return random_config(d, n, seed);
}

std::string classify_text(const Config& config, double tol, bool* failed = nullptr) {
  try {
    return classify(config, tol).to_string();
  } catch (const UnsupportedError&) {
    if (failed) *failed = true;
    return "unsupported";
  } catch (const ClassificationError& e) {
    if (failed) *failed = true;
    return std::string("unclassified: ") + e.what();
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"point configurations on spheres: construction, verification,\n"
               "classification, saddle analysis and energy experiments"};
  app.name("sphconf");
  app.require_subcommand(1);

  // ---- construct ----
  struct {
    InputOpts in;
    int cross = 0, simplex = 0, polygon = 0;
    double fp = 0;
    std::uint64_t seed = 1;
    std::string outfile;
  } co;
  auto* construct = app.add_subcommand("construct", "build a named configuration");
  construct->add_option("--partition", co.in.partition,
                        "orthogonal-simplex partition such as 3,2 or 1,2,2");
  construct->add_option("--critical", co.in.critical,
                        "named critical point C0 | C1 | C2");
  construct->add_option("--random", co.in.random, "random points 'D,N' on S^{D-1}");
  construct->add_option("--cross", co.cross, "cross polytope in R^D");
  construct->add_option("--simplex", co.simplex, "regular M-simplex on S^{M-2}");
  construct->add_option("--polygon", co.polygon, "regular N-gon on the equator of S^2");
  construct->add_option("--fp", co.fp, "square pyramid with base height T");
  construct->add_option("--seed", co.seed, "random seed");
  construct->add_option("--out", co.outfile, "write here instead of stdout");
  construct->callback([&] {
    int provided = (construct->count("--partition") > 0) +
                   (construct->count("--critical") > 0) +
                   (construct->count("--random") > 0) +
                   (construct->count("--cross") > 0) +
                   (construct->count("--simplex") > 0) +
                   (construct->count("--polygon") > 0) +
                   (construct->count("--fp") > 0);
    if (provided != 1)
      throw ArgumentError(
          "construct needs exactly one of --partition, --critical, --random, "
          "--cross, --simplex, --polygon, --fp");
    Config cfg = [&] {
      if (construct->count("--cross")) return cross_polytope(co.cross);
      if (construct->count("--simplex")) return regular_simplex(co.simplex);
      if (construct->count("--polygon")) return regular_polygon(co.polygon);
      if (construct->count("--fp")) return square_pyramid(co.fp);
      return resolve_input(construct, co.in, 1e-9, co.seed);
    }();
    if (co.outfile.empty()) {
      out << config_to_json(cfg);
    } else {
      save_config(cfg, co.outfile);
      err << "wrote " << co.outfile << "\n";
    }
  });

  // ---- energy ----
  struct {
    InputOpts in;
    std::string potential = "log";
    std::string format = "text";
    double unit_tol = 1e-9;
    int digits = 12;
  } en;
  auto* energy_cmd = app.add_subcommand("energy", "pair energy of a configuration");
  add_input_options(energy_cmd, en.in, false);
  energy_cmd->add_option("--potential", en.potential,
                         "log | riesz:S | gauss:A | biquad:A,B,C");
  energy_cmd->add_option("--format", en.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  energy_cmd->add_option("--unit-tol", en.unit_tol, "unit-norm tolerance for files");
  energy_cmd->add_option("--digits", en.digits, "output precision");
  energy_cmd->callback([&] {
    Config cfg = resolve_input(energy_cmd, en.in, en.unit_tol, 0);
    Potential pot = Potential::parse(en.potential);
    double value = energy(cfg, pot);
    if (en.format == "json") {
      nlohmann::json j{{"n", cfg.size()},
                       {"dim", cfg.dim()},
                       {"potential", pot.to_string()},
                       {"energy", value}};
      out << j.dump(2) << "\n";
    } else {
      out << "energy = " << fmt(value, en.digits) << "\n";
    }
  });

  // ---- verify ----
  struct {
    InputOpts in;
    std::string tol = "1e-10";
    std::string format = "text";
    double unit_tol = 1e-9;
    int digits = 12;
  } ve;
  auto* verify = app.add_subcommand(
      "verify", "force-balance report and class of a configuration");
  add_input_options(verify, ve.in, false);
  verify->add_option("--tol", ve.tol, "stationarity tolerance");
  verify->add_option("--format", ve.format, "text | json | csv")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  verify->add_option("--unit-tol", ve.unit_tol, "unit-norm tolerance for files");
  verify->add_option("--digits", ve.digits, "output precision");
  verify->callback([&] {
    Config cfg = resolve_input(verify, ve.in, ve.unit_tol, 0);
    double tol = parse_tol(ve.tol);
    ForceReport report = log_force_report(cfg);
    const double nm1 = cfg.size() - 1;
    double lambda_defect = (report.lambda.array() - nm1).abs().maxCoeff();
    double sum_defect = report.distance_sum_defect.cwiseAbs().maxCoeff();
    std::string cls = classify_text(cfg, tol);
    if (ve.format == "json") {
      nlohmann::json j{{"n", cfg.size()},
                       {"dim", cfg.dim()},
                       {"class", cls},
                       {"max_residual", report.max_residual},
                       {"lambda_defect", lambda_defect},
                       {"distance_sum_defect", sum_defect},
                       {"centroid_norm", report.centroid_norm},
                       {"stationary", report.max_residual < tol}};
      out << j.dump(2) << "\n";
    } else if (ve.format == "csv") {
      out << std::setprecision(ve.digits);
      out << "n,dim,class,max_residual,lambda_defect,distance_sum_defect,"
             "centroid_norm\n";
      out << cfg.size() << ',' << cfg.dim() << ',' << csv_field(cls) << ','
          << report.max_residual << ',' << lambda_defect << ',' << sum_defect
          << ',' << report.centroid_norm << "\n";
    } else {
      if (report.max_residual < tol)
        out << "max_residual < " << ve.tol << ", class=" << cls << "\n";
      else
        out << "max_residual = " << fmt(report.max_residual, ve.digits)
            << " (tol " << ve.tol << "), class=" << cls << "\n";
      out << "n = " << cfg.size() << ", dim = " << cfg.dim() << "\n";
      out << "max_residual = " << fmt(report.max_residual, ve.digits) << "\n";
      out << "lambda_defect = " << fmt(lambda_defect, ve.digits) << "\n";
      out << "distance_sum_defect = " << fmt(sum_defect, ve.digits) << "\n";
      out << "centroid_norm = " << fmt(report.centroid_norm, ve.digits) << "\n";
    }
  });

  // ---- classify ----
  struct {
    InputOpts in;
    double tol = 1e-8;
    std::string format = "text";
    double unit_tol = 1e-9;
    int digits = 12;
  } cl;
  auto* classify_cmd =
      app.add_subcommand("classify", "stationary class with split diagnostics");
  add_input_options(classify_cmd, cl.in, false);
  classify_cmd->add_option("--tol", cl.tol, "stationarity tolerance");
  classify_cmd->add_option("--format", cl.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  classify_cmd->add_option("--unit-tol", cl.unit_tol,
                           "unit-norm tolerance for files");
  classify_cmd->add_option("--digits", cl.digits, "output precision");
  classify_cmd->callback([&] {
    Config cfg = resolve_input(classify_cmd, cl.in, cl.unit_tol, 0);
    StationaryClass sc;
    try {
      sc = classify(cfg, cl.tol);
    } catch (const ClassificationError& e) {
      if (cl.format == "json") {
        nlohmann::json j{{"class", "unclassified"}, {"reason", e.what()}};
        out << j.dump(2) << "\n";
      } else {
        out << "class = unclassified\n";
        out << "reason = " << e.what() << "\n";
      }
      return;
    }
    nlohmann::json j{{"class", sc.to_string()}};
    if (sc.diagnostics) {
      j["rank_A"] = sc.diagnostics->rank;
      j["force_defect"] = sc.diagnostics->force_defect;
      if (sc.diagnostics->has_factor()) {
        IdentityDefects def = identity_defects(*sc.diagnostics);
        double worst = std::max({def.q.cwiseAbs().maxCoeff(),
                                 def.r.cwiseAbs().maxCoeff(),
                                 def.s.cwiseAbs().maxCoeff(),
                                 def.t.cwiseAbs().maxCoeff()});
        j["identity_defect"] = worst;
        j["min_slack"] = def.min_slack;
        j["max_factor_excess"] = def.max_factor_excess;
      }
    }
    if (cl.format == "json") {
      out << j.dump(2) << "\n";
    } else {
      out << "class = " << j["class"].get<std::string>() << "\n";
      for (const char* key :
           {"rank_A", "force_defect", "identity_defect", "min_slack",
            "max_factor_excess"}) {
        if (!j.contains(key)) continue;
        if (j[key].is_number_integer())
          out << key << " = " << j[key].get<int>() << "\n";
        else
          out << key << " = " << fmt(j[key].get<double>(), cl.digits) << "\n";
      }
    }
  });

  // ---- path ----
  struct {
    int k = 0, m = 0, grid = 101;
    int digits = 12;
  } pa;
  auto* path = app.add_subcommand(
      "path", "pyramid height family: closed form vs direct energy (CSV)");
  path->add_option("--k", pa.k, "first block size")->required();
  path->add_option("--m", pa.m, "second block size")->required();
  path->add_option("--grid", pa.grid, "number of samples");
  path->add_option("--digits", pa.digits, "output precision");
  path->callback([&] {
    if (pa.grid < 2) throw ArgumentError("--grid must be at least 2");
    if (pa.k < 2 || pa.m < 2) throw ArgumentError("--k and --m must be at least 2");
    const double q = 1.0 / (pa.k + pa.m);
    const double lo = -q / pa.m, hi = q / pa.k;
    out << std::setprecision(pa.digits);
    out << "t,f,f_direct,sign\n";
    for (int i = 0; i < pa.grid; ++i) {
      double t = lo + (hi - lo) * i / (pa.grid - 1);
      PathSample s = pyramid_energy(pa.k, pa.m, t);
      out << s.t << ',' << s.energy << ',' << s.energy_direct << ','
          << s.derivative_sign << "\n";
    }
  });

  // ---- escape ----
  struct {
    InputOpts in;
    double theta = 0;
    std::string potential = "log";
    std::string format = "text";
    std::string outfile;
    double unit_tol = 1e-9;
    int digits = 12;
  } es;
  auto* escape = app.add_subcommand(
      "escape", "strict descent step off a degenerate configuration");
  add_input_options(escape, es.in, false);
  escape->add_option("--theta", es.theta, "swing angle in (0, pi)")->required();
  escape->add_option("--potential", es.potential,
                     "log | riesz:S | gauss:A | biquad:A,B,C");
  escape->add_option("--format", es.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  escape->add_option("--out", es.outfile, "write the escaped configuration here");
  escape->add_option("--unit-tol", es.unit_tol, "unit-norm tolerance for files");
  escape->add_option("--digits", es.digits, "output precision");
  escape->callback([&] {
    Config cfg = resolve_input(escape, es.in, es.unit_tol, 0);
    Potential pot = Potential::parse(es.potential);
    double before = energy(cfg, pot);
    auto [moved, delta] = degenerate_escape(cfg, pot, es.theta);
    if (es.format == "json") {
      nlohmann::json j{{"delta", delta},
                       {"energy_before", before},
                       {"energy_after", before + delta}};
      out << j.dump(2) << "\n";
    } else {
      out << "delta = " << fmt(delta, es.digits) << "\n";
      out << "energy_before = " << fmt(before, es.digits) << "\n";
      out << "energy_after = " << fmt(before + delta, es.digits) << "\n";
    }
    if (!es.outfile.empty()) {
      save_config(moved, es.outfile);
      err << "wrote " << es.outfile << "\n";
    }
  });

  // ---- optimize ----
  struct {
    InputOpts in;
    std::string potential = "log";
    OptimizeOptions opts;
    double noise = 0;
    std::string outfile, trace_out;
    std::string format = "text";
    double unit_tol = 1e-9;
    int digits = 12;
  } op;
  auto* optimize = app.add_subcommand("optimize", "projected gradient descent");
  add_input_options(optimize, op.in, true);
  optimize->add_option("--potential", op.potential,
                       "log | riesz:S | gauss:A | biquad:A,B,C");
  optimize->add_option("--max-iters", op.opts.max_iters, "iteration cap");
  optimize->add_option("--grad-tol", op.opts.grad_tol, "convergence threshold");
  optimize->add_option("--step0", op.opts.step0, "initial step size");
  optimize->add_option("--backtrack", op.opts.backtrack, "line-search shrink factor");
  optimize->add_option("--armijo", op.opts.armijo, "sufficient-decrease constant");
  optimize->add_option("--seed", op.opts.seed, "random seed");
  optimize->add_option("--noise", op.noise, "tangential noise added to the start");
  optimize->add_option("--out", op.outfile, "write the final configuration here");
  optimize->add_option("--trace-out", op.trace_out, "write iter,energy,grad_norm CSV");
  optimize->add_option("--format", op.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  optimize->add_option("--unit-tol", op.unit_tol, "unit-norm tolerance for files");
  optimize->add_option("--digits", op.digits, "output precision");
  optimize->callback([&] {
    Config start = resolve_input(optimize, op.in, op.unit_tol, op.opts.seed);
    if (op.noise > 0) start = add_tangent_noise(start, op.noise, op.opts.seed);
    Potential pot = Potential::parse(op.potential);
    auto [final_cfg, trace] = minimize(start, pot, op.opts);
    double final_energy = trace.energies.back();
    std::string cls = trace.final_class ? trace.final_class->to_string() : "";
    if (op.format == "json") {
      nlohmann::json j{{"iterations", trace.iterations},
                       {"converged", trace.converged},
                       {"energy", final_energy},
                       {"grad_norm", trace.final_grad_norm}};
      if (!cls.empty()) j["class"] = cls;
      out << j.dump(2) << "\n";
    } else {
      out << "iterations = " << trace.iterations << "\n";
      out << "converged = " << (trace.converged ? "true" : "false") << "\n";
      out << "energy = " << fmt(final_energy, op.digits) << "\n";
      out << "grad_norm = " << fmt(trace.final_grad_norm, op.digits) << "\n";
      if (!cls.empty()) out << "class = " << cls << "\n";
    }
    if (!op.outfile.empty()) {
      save_config(final_cfg, op.outfile);
      err << "wrote " << op.outfile << "\n";
    }
    if (!op.trace_out.empty()) {
      std::ostringstream csv;
      csv << std::setprecision(17) << "iter,energy,grad_norm\n";
      for (size_t i = 0; i < trace.energies.size(); ++i)
        csv << i << ',' << trace.energies[i] << ',' << trace.grad_norms[i] << "\n";
      std::ofstream f(op.trace_out, std::ios::binary);
      if (!f) throw ArgumentError("cannot open '" + op.trace_out + "' for writing");
      f << csv.str();
    }
  });

  // ---- basin ----
  struct {
    int dim = 3, trials = 100, jobs = 1;
    std::string potential = "log";
    OptimizeOptions opts;
    int digits = 12;
  } ba;
  auto* basin = app.add_subcommand(
      "basin", "seeded random starts, minimized and classified (CSV)");
  basin->add_option("--dim", ba.dim, "sphere dimension parameter d")->required();
  basin->add_option("--trials", ba.trials, "number of starts");
  basin->add_option("--potential", ba.potential,
                    "log | riesz:S | gauss:A | biquad:A,B,C");
  basin->add_option("--seed", ba.opts.seed, "base seed");
  basin->add_option("--jobs", ba.jobs, "worker threads");
  basin->add_option("--max-iters", ba.opts.max_iters, "iteration cap");
  basin->add_option("--grad-tol", ba.opts.grad_tol, "convergence threshold");
  basin->add_option("--digits", ba.digits, "output precision");
  basin->callback([&] {
    Potential pot = Potential::parse(ba.potential);
    BasinResult res = basin_experiment(ba.dim, ba.trials, pot, ba.opts, ba.jobs);
    out << std::setprecision(ba.digits);
    out << "trial,class,energy\n";
    for (size_t i = 0; i < res.classes.size(); ++i)
      out << i << ',' << csv_field(res.classes[i]) << ',' << res.energies[i] << "\n";
    for (const auto& [cls, count] : res.histogram)
      err << cls << ": " << count << "\n";
  });

  // ---- morse ----
  struct {
    InputOpts in;
    std::string potential = "log";
    std::string method = "auto";
    double fd_step = 1e-4;
    double zero_tol = 0;
    std::string format = "text";
    double unit_tol = 1e-9;
    int digits = 12;
  } mo;
  auto* morse = app.add_subcommand("morse", "Hessian index and nullity");
  add_input_options(morse, mo.in, false);
  morse->add_option("--potential", mo.potential,
                    "log | riesz:S | gauss:A | biquad:A,B,C");
  morse->add_option("--method", mo.method, "auto | chart | general | both")
      ->check(CLI::IsMember({"auto", "chart", "general", "both"}));
  morse->add_option("--fd-step", mo.fd_step, "finite-difference step");
  morse->add_option("--zero-tol", mo.zero_tol,
                    "null-eigenvalue threshold (0: relative default)");
  morse->add_option("--format", mo.format, "text | json")
      ->check(CLI::IsMember({"text", "json"}));
  morse->add_option("--unit-tol", mo.unit_tol, "unit-norm tolerance for files");
  morse->add_option("--digits", mo.digits, "output precision");
  morse->callback([&] {
    Potential pot = Potential::parse(mo.potential);
    const bool from_alias = morse->count("--critical") > 0;
    std::string method = mo.method;
    if (method == "auto")
      method = (from_alias && pot.kind() == Potential::Kind::Log) ? "chart"
                                                                  : "general";
    if ((method == "chart" || method == "both") &&
        pot.kind() != Potential::Kind::Log)
      throw ArgumentError("the chart method only covers the log potential");

    std::optional<MorseReport> chart_rep, general_rep;
    if (method == "chart" || method == "both") {
      ChartPoint v = from_alias
                         ? critical_chart(mo.in.critical)
                         : to_spherical(resolve_input(morse, mo.in, mo.unit_tol, 0));
      chart_rep = chart_morse_index(v, mo.fd_step, mo.zero_tol);
    }
    if (method == "general" || method == "both") {
      Config cfg = resolve_input(morse, mo.in, mo.unit_tol, 0);
      general_rep = morse_index(cfg, pot, mo.fd_step, mo.zero_tol);
    }

    auto to_json = [&](const MorseReport& r) {
      nlohmann::json j{{"index", r.index},
                       {"nullity", r.nullity},
                       {"orbit_dim", r.orbit_dim},
                       {"zero_tol", r.zero_tol}};
      auto eigs = nlohmann::json::array();
      for (int i = 0; i < r.eigenvalues.size(); ++i)
        eigs.push_back(r.eigenvalues[i]);
      j["eigenvalues"] = std::move(eigs);
      return j;
    };
    if (mo.format == "json") {
      nlohmann::json j;
      if (chart_rep) j["chart"] = to_json(*chart_rep);
      if (general_rep) j["general"] = to_json(*general_rep);
      out << j.dump(2) << "\n";
      return;
    }
    auto print = [&](const char* tag, const MorseReport& r, bool bare) {
      if (!bare) out << tag << ": ";
      out << "index=" << r.index << " nullity=" << r.nullity;
      if (r.orbit_dim > 0) out << " orbit_dim=" << r.orbit_dim;
      out << "\n";
    };
    const bool bare = method != "both";
    if (chart_rep) print("chart", *chart_rep, bare);
    if (general_rep) print("general", *general_rep, bare);
    const MorseReport& detail = general_rep ? *general_rep : *chart_rep;
    out << "zero_tol = " << fmt(detail.zero_tol, mo.digits) << "\n";
    out << "eigenvalues =";
    for (int i = 0; i < detail.eigenvalues.size(); ++i)
      out << ' ' << fmt(detail.eigenvalues[i], mo.digits);
    out << "\n";
  });

  // ---- sweep ----
  struct {
    double from = 0, to = 0, step = 0;
    int jobs = 1;
    int digits = 12;
  } sw;
  auto* sweep = app.add_subcommand(
      "sweep", "Riesz bipyramid-vs-pyramid gap over an exponent grid (CSV)");
  sweep->add_option("--from", sw.from, "first exponent")->required();
  sweep->add_option("--to", sw.to, "last exponent")->required();
  sweep->add_option("--step", sw.step, "grid spacing")->required();
  sweep->add_option("--jobs", sw.jobs, "worker threads");
  sweep->add_option("--digits", sw.digits, "output precision");
  sweep->callback([&] {
    SweepResult res = riesz_sweep(sw.from, sw.to, sw.step, sw.jobs);
    out << std::setprecision(sw.digits);
    out << "s,e_tbp,t_star,e_fp,gap\n";
    for (const SweepRow& r : res.rows)
      out << r.s << ',' << r.tbp_energy << ',' << r.t_star << ',' << r.fp_energy
          << ',' << r.gap << "\n";
    if (res.crossover) out << "# crossover = " << *res.crossover << "\n";
  });

  // ---- crossover ----
  struct {
    double lo = 0, hi = 0, tol = 1e-6;
    int digits = 12;
  } cr;
  auto* crossover = app.add_subcommand(
      "crossover", "bisect the sign change of the bipyramid-vs-pyramid gap");
  crossover->add_option("--lo", cr.lo, "bracket start")->required();
  crossover->add_option("--hi", cr.hi, "bracket end")->required();
  crossover->add_option("--tol", cr.tol, "bisection width");
  crossover->add_option("--digits", cr.digits, "output precision");
  crossover->callback([&] {
    double s = find_crossover(cr.lo, cr.hi, cr.tol);
    out << "s* = " << fmt(s, cr.digits) << "\n";
  });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ArgumentError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace sphconf
