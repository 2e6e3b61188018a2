#include "sphconf/optimize.hpp"

#include <cmath>
#include <future>
#include <limits>

#include "sphconf/perturbation.hpp"

namespace sphconf {

namespace {

Eigen::MatrixXd projected_gradient(const Eigen::MatrixXd& pts, const Potential& pot) {
  Eigen::MatrixXd g = detail::gradient_of(pts, pot);
  for (int i = 0; i < g.rows(); ++i)
    g.row(i) -= g.row(i).dot(pts.row(i)) * pts.row(i);
  return g;
}

}  // namespace

std::pair<Config, OptimizeTrace> minimize(const Config& start, const Potential& pot,
                                          const OptimizeOptions& opts) {
  if (opts.max_iters < 1) throw ArgumentError("iteration budget must be positive");
  if (!(opts.grad_tol > 0)) throw ArgumentError("gradient tolerance must be positive");
  if (!(opts.backtrack > 0 && opts.backtrack < 1))
    throw ArgumentError("backtracking factor must lie in (0, 1)");
  if (!(opts.armijo > 0 && opts.armijo < 1))
    throw ArgumentError("sufficient-decrease factor must lie in (0, 1)");

  Eigen::MatrixXd x = start.points();
  const int n = static_cast<int>(x.rows());
  const double step0 = opts.step0 > 0 ? opts.step0 : 0.1 / (n - 1);

  double e = detail::energy_of(x, pot);
  Eigen::MatrixXd g = projected_gradient(x, pot);
  double gn = g.rowwise().norm().maxCoeff();

  OptimizeTrace trace;
  trace.energies.push_back(e);
  trace.grad_norms.push_back(gn);

  for (int iter = 0; iter < opts.max_iters; ++iter) {
    if (gn < opts.grad_tol) {
      trace.converged = true;
      break;
    }
    double decrease = g.squaredNorm();
    double s = step0;
    bool accepted = false;
    while (s >= 1e-16) {
      Eigen::MatrixXd y = x - s * g;
      for (int i = 0; i < n; ++i) y.row(i).normalize();
      double ey;
      try {
        ey = detail::energy_of(y, pot);
      } catch (const SingularPairError&) {
        s *= opts.backtrack;
        continue;
      }
      // Once the predicted decrease drops below the rounding granularity of
      // the energy itself, the Armijo test reads pure noise; from there any
      // step that does not measurably increase the energy is taken, which
      // lets the gradient keep contracting past the energy resolution.
      double predicted = opts.armijo * s * decrease;
      double slack =
          8.0 * std::numeric_limits<double>::epsilon() * (1.0 + std::abs(e));
      bool ok = predicted > slack ? ey <= e - predicted : ey <= e + slack;
      if (ok) {
        x = std::move(y);
        e = ey;
        accepted = true;
        break;
      }
      s *= opts.backtrack;
    }
    if (!accepted) break;
    ++trace.iterations;
    g = projected_gradient(x, pot);
    gn = g.rowwise().norm().maxCoeff();
    trace.energies.push_back(e);
    trace.grad_norms.push_back(gn);
  }
  if (gn < opts.grad_tol) trace.converged = true;
  trace.final_grad_norm = gn;

  Config out = Config::unchecked(std::move(x), start.label() + "-min");
  if (out.size() == out.dim() + 2) {
    try {
      trace.final_class = classify(out, 1e-8);
    } catch (const Error&) {
      trace.final_class.reset();
    }
  }
  return {std::move(out), std::move(trace)};
}

namespace {

struct TrialOutcome {
  std::string cls;
  double energy;
};

TrialOutcome run_trial(int d, const Potential& pot, const OptimizeOptions& opts,
                       std::uint64_t trial_seed) {
  try {
    Config start = random_config(d, d + 2, trial_seed);
    auto [out, trace] = minimize(start, pot, opts);
    if (!trace.converged) return {"unconverged", trace.energies.back()};
    if (!trace.final_class) return {"unclassified", trace.energies.back()};
    return {trace.final_class->to_string(), trace.energies.back()};
  } catch (const Error&) {
    return {"error", std::numeric_limits<double>::quiet_NaN()};
  }
}

}  // namespace

BasinResult basin_experiment(int d, int trials, const Potential& pot,
                             const OptimizeOptions& opts, int jobs) {
  if (d < 2) throw ArgumentError("basin experiment needs d >= 2");
  if (trials < 1) throw ArgumentError("basin experiment needs at least one trial");
  if (jobs < 1) throw ArgumentError("job count must be positive");

  std::vector<TrialOutcome> outcomes(trials);
  auto shard = [&](int offset) {
    for (int i = offset; i < trials; i += jobs)
      outcomes[i] = run_trial(d, pot, opts, detail::mix_seed(opts.seed, i));
  };
  if (jobs == 1) {
    shard(0);
  } else {
    std::vector<std::future<void>> futures;
    futures.reserve(jobs);
    for (int w = 0; w < jobs; ++w)
      futures.push_back(std::async(std::launch::async, shard, w));
    for (auto& f : futures) f.get();
  }

  BasinResult result;
  result.classes.reserve(trials);
  result.energies.reserve(trials);
  for (auto& o : outcomes) {
    result.classes.push_back(o.cls);
    result.energies.push_back(o.energy);
    ++result.histogram[o.cls];
  }
  return result;
}

std::vector<SplitEnergy> split_energy_table(int d, const Potential& pot) {
  if (d < 2) throw ArgumentError("split table needs d >= 2");
  std::vector<SplitEnergy> rows;
  for (int n = 2; 2 * n <= d + 2; ++n) {
    int m = d + 2 - n;
    Config c = orthogonal_simplexes(Partition::of({m, n}));
    rows.push_back({m, n, energy(c, pot)});
  }
  return rows;
}

Config add_tangent_noise(const Config& config, double scale, std::uint64_t seed) {
  Bundle b = random_bundle(config, seed, scale);
  Eigen::MatrixXd y = config.points() + b.h;
  for (int i = 0; i < y.rows(); ++i) y.row(i).normalize();
  return Config::unchecked(std::move(y), config.label() + "-noisy");
}

}  // namespace sphconf
