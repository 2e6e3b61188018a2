#include <pybind11/eigen.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

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

namespace py = pybind11;
using namespace sphconf;

namespace {

OptimizeOptions make_options(int max_iters, double grad_tol, double step0,
                             double backtrack, double armijo, std::uint64_t seed) {
  OptimizeOptions o;
  o.max_iters = max_iters;
  o.grad_tol = grad_tol;
  o.step0 = step0;
  o.backtrack = backtrack;
  o.armijo = armijo;
  o.seed = seed;
  return o;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "point configurations on spheres: energies, stationarity, Morse data";
  m.attr("__version__") = "0.1.0";

  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<ArgumentError>(m, "ArgumentError", PyExc_ValueError);
  py::register_exception<NumericError>(m, "NumericError", PyExc_ArithmeticError);

  py::class_<Config>(m, "Config")
      .def_static("from_points", &Config::from_points, py::arg("points"),
                  py::arg("label") = "")
      .def_static("unchecked", &Config::unchecked, py::arg("points"),
                  py::arg("label") = "")
      .def_property_readonly("points", &Config::points)
      .def_property_readonly("dim", &Config::dim)
      .def_property_readonly("size", &Config::size)
      .def_property_readonly("label", &Config::label)
      .def("gram", &Config::gram)
      .def("centroid", &Config::centroid)
      .def("min_pairwise_distance", &Config::min_pairwise_distance)
      .def("span_rank", &Config::span_rank, py::arg("rel_tol") = 1e-8)
      .def("__repr__", [](const Config& c) {
        return "<Config n=" + std::to_string(c.size()) +
               " dim=" + std::to_string(c.dim()) +
               (c.label().empty() ? "" : " '" + c.label() + "'") + ">";
      });

  m.def("regular_simplex", &regular_simplex, py::arg("m"));
  m.def(
      "orthogonal_simplexes",
      [](const std::vector<int>& blocks) {
        return orthogonal_simplexes(Partition::of(blocks));
      },
      py::arg("blocks"));
  m.def(
      "pyramid_config",
      [](const std::vector<int>& blocks) {
        return pyramid_config(Partition::of(blocks));
      },
      py::arg("blocks"));
  m.def("cross_polytope", &cross_polytope, py::arg("d"));
  m.def("square_pyramid", &square_pyramid, py::arg("t"));
  m.def("regular_polygon", &regular_polygon, py::arg("n"));
  m.def("random_config", &random_config, py::arg("d"), py::arg("n"),
        py::arg("seed"));

  py::class_<Potential> pot(m, "Potential");
  pot.def_static("log", &Potential::log)
      .def_static("riesz", &Potential::riesz, py::arg("s"))
      .def_static("gauss", &Potential::gauss, py::arg("alpha"))
      .def_static("biquadratic", &Potential::biquadratic, py::arg("a"),
                  py::arg("b"), py::arg("c"))
      .def_static("parse", &Potential::parse, py::arg("text"))
      .def("eval", &Potential::eval, py::arg("t"), py::arg("order") = 0)
      .def_property_readonly("strictly_convex", &Potential::strictly_convex)
      .def("__repr__",
           [](const Potential& p) { return "<Potential " + p.to_string() + ">"; })
      .def("__str__", &Potential::to_string);

  m.def("energy", &energy, py::arg("config"), py::arg("potential"));
  m.def("euclidean_gradient", &euclidean_gradient, py::arg("config"),
        py::arg("potential"));
  m.def("riemannian_gradient", &riemannian_gradient, py::arg("config"),
        py::arg("potential"));
  m.def("riemannian_grad_norm", &riemannian_grad_norm, py::arg("config"),
        py::arg("potential"));

  py::class_<ForceReport>(m, "ForceReport")
      .def_readonly("residual", &ForceReport::residual)
      .def_readonly("lambda_", &ForceReport::lambda)
      .def_readonly("distance_sum_defect", &ForceReport::distance_sum_defect)
      .def_readonly("max_residual", &ForceReport::max_residual)
      .def_readonly("centroid_norm", &ForceReport::centroid_norm);
  m.def("log_force_report", &log_force_report, py::arg("config"));

  py::class_<SplitDiagnostics>(m, "SplitDiagnostics")
      .def_readonly("n", &SplitDiagnostics::n)
      .def_readonly("dim", &SplitDiagnostics::dim)
      .def_readonly("c", &SplitDiagnostics::c)
      .def_readonly("force_matrix", &SplitDiagnostics::force_matrix)
      .def_readonly("split_matrix", &SplitDiagnostics::split_matrix)
      .def_readonly("force_defect", &SplitDiagnostics::force_defect)
      .def_readonly("rank", &SplitDiagnostics::rank)
      .def_readonly("factor", &SplitDiagnostics::factor)
      .def_readonly("q", &SplitDiagnostics::q)
      .def_readonly("r", &SplitDiagnostics::r)
      .def_readonly("s", &SplitDiagnostics::s)
      .def_readonly("t", &SplitDiagnostics::t)
      .def_readonly("min_slack", &SplitDiagnostics::min_slack)
      .def("has_factor", &SplitDiagnostics::has_factor);
  m.def("build_diagnostics", &build_diagnostics, py::arg("config"));

  py::class_<IdentityDefects>(m, "IdentityDefects")
      .def_readonly("q", &IdentityDefects::q)
      .def_readonly("r", &IdentityDefects::r)
      .def_readonly("s", &IdentityDefects::s)
      .def_readonly("t", &IdentityDefects::t)
      .def_readonly("min_slack", &IdentityDefects::min_slack)
      .def_readonly("max_factor_excess", &IdentityDefects::max_factor_excess);
  m.def("identity_defects", &identity_defects, py::arg("diagnostics"));
  m.def("factor_profile", &factor_profile, py::arg("diagnostics"), py::arg("t"));
  m.def("convexity_scan", &convexity_scan, py::arg("diagnostics"),
        py::arg("grid_size"));

  py::class_<StationaryClass> sc(m, "StationaryClass");
  py::enum_<StationaryClass::Kind>(sc, "Kind")
      .value("TwoSimplex", StationaryClass::Kind::TwoSimplex)
      .value("Pyramid", StationaryClass::Kind::Pyramid)
      .value("Degenerate", StationaryClass::Kind::Degenerate)
      .value("NonStationary", StationaryClass::Kind::NonStationary);
  sc.def_readonly("kind", &StationaryClass::kind)
      .def_readonly("partition", &StationaryClass::partition)
      .def_readonly("spanned_dim", &StationaryClass::spanned_dim)
      .def_readonly("max_residual", &StationaryClass::max_residual)
      .def_readonly("diagnostics", &StationaryClass::diagnostics)
      .def("to_string", &StationaryClass::to_string)
      .def("__repr__", [](const StationaryClass& c) {
        return "<StationaryClass " + c.to_string() + ">";
      });
  m.def("classify", &classify, py::arg("config"), py::arg("tol") = 1e-8);

  m.def(
      "random_bundle",
      [](const Config& c, std::uint64_t seed, double scale) {
        return random_bundle(c, seed, scale).h;
      },
      py::arg("config"), py::arg("seed"), py::arg("scale"));
  m.def(
      "rotation_bundle",
      [](const Config& c, const Eigen::MatrixXd& skew) {
        return rotation_bundle(c, skew).h;
      },
      py::arg("config"), py::arg("skew"));
  m.def("random_skew", &random_skew, py::arg("d"), py::arg("seed"));

  py::class_<SplitShape>(m, "SplitShape")
      .def_readonly("m", &SplitShape::m)
      .def_readonly("n", &SplitShape::n);
  m.def("detect_split", &detect_split, py::arg("config"), py::arg("tol") = 1e-8);

  py::class_<QuadForm>(m, "QuadForm")
      .def_readonly("total", &QuadForm::total)
      .def_readonly("first_block", &QuadForm::first_block)
      .def_readonly("second_block", &QuadForm::second_block)
      .def_readonly("cross", &QuadForm::cross);
  m.def(
      "quadratic_form",
      [](const Config& c, const Eigen::MatrixXd& h) {
        return quadratic_form(c, Bundle{h});
      },
      py::arg("config"), py::arg("bundle"));
  m.def(
      "second_order_check",
      [](const Config& c, const Eigen::MatrixXd& h, const std::vector<double>& e) {
        return second_order_check(c, Bundle{h}, e);
      },
      py::arg("config"), py::arg("bundle"), py::arg("eps_list"));

  m.def("degenerate_escape", &degenerate_escape, py::arg("config"),
        py::arg("potential"), py::arg("theta"));
  m.def("pyramid_path", &pyramid_path, py::arg("k"), py::arg("m"), py::arg("t"));

  py::class_<PathSample>(m, "PathSample")
      .def_readonly("t", &PathSample::t)
      .def_readonly("energy", &PathSample::energy)
      .def_readonly("energy_direct", &PathSample::energy_direct)
      .def_readonly("derivative_sign", &PathSample::derivative_sign);
  m.def("pyramid_energy", &pyramid_energy, py::arg("k"), py::arg("m"),
        py::arg("t"));

  m.def("symmetrized_gap", &symmetrized_gap, py::arg("m"));
  m.def("paired_gap", &paired_gap, py::arg("f"), py::arg("g"));
  m.def("random_zero_rowsum_square", &random_zero_rowsum_square, py::arg("m"),
        py::arg("seed"));
  m.def("random_zero_rowsum", &random_zero_rowsum, py::arg("rows"),
        py::arg("cols"), py::arg("seed"));

  py::class_<OptimizeTrace>(m, "OptimizeTrace")
      .def_readonly("iterations", &OptimizeTrace::iterations)
      .def_readonly("energies", &OptimizeTrace::energies)
      .def_readonly("grad_norms", &OptimizeTrace::grad_norms)
      .def_readonly("final_grad_norm", &OptimizeTrace::final_grad_norm)
      .def_readonly("converged", &OptimizeTrace::converged)
      .def_readonly("final_class", &OptimizeTrace::final_class);
  m.def(
      "minimize",
      [](const Config& start, const Potential& p, int max_iters, double grad_tol,
         double step0, double backtrack, double armijo, std::uint64_t seed) {
        return minimize(start, p,
                        make_options(max_iters, grad_tol, step0, backtrack,
                                     armijo, seed));
      },
      py::arg("start"), py::arg("potential"), py::arg("max_iters") = 100000,
      py::arg("grad_tol") = 1e-11, py::arg("step0") = 0.0,
      py::arg("backtrack") = 0.5, py::arg("armijo") = 1e-4, py::arg("seed") = 0);

  py::class_<BasinResult>(m, "BasinResult")
      .def_readonly("classes", &BasinResult::classes)
      .def_readonly("energies", &BasinResult::energies)
      .def_readonly("histogram", &BasinResult::histogram);
  m.def(
      "basin_experiment",
      [](int d, int trials, const Potential& p, std::uint64_t seed, int jobs,
         int max_iters, double grad_tol) {
        OptimizeOptions o = make_options(max_iters, grad_tol, 0.0, 0.5, 1e-4, seed);
        return basin_experiment(d, trials, p, o, jobs);
      },
      py::arg("d"), py::arg("trials"), py::arg("potential"), py::arg("seed") = 0,
      py::arg("jobs") = 1, py::arg("max_iters") = 100000,
      py::arg("grad_tol") = 1e-11);

  py::class_<SplitEnergy>(m, "SplitEnergy")
      .def_readonly("m", &SplitEnergy::m)
      .def_readonly("n", &SplitEnergy::n)
      .def_readonly("energy", &SplitEnergy::energy);
  m.def("split_energy_table", &split_energy_table, py::arg("d"),
        py::arg("potential"));
  m.def("add_tangent_noise", &add_tangent_noise, py::arg("config"),
        py::arg("scale"), py::arg("seed"));

  m.def("chart_pentagon", [] { return chart_pentagon().v; });
  m.def("chart_square_pyramid", [] { return chart_square_pyramid().v; });
  m.def("chart_bipyramid", [] { return chart_bipyramid().v; });
  m.def(
      "from_spherical",
      [](const Eigen::Matrix<double, 7, 1>& v) {
        return from_spherical(ChartPoint{v});
      },
      py::arg("v"));
  m.def(
      "to_spherical", [](const Config& c) { return to_spherical(c).v; },
      py::arg("config"));
  m.def(
      "chart_energy",
      [](const Eigen::Matrix<double, 7, 1>& v) { return chart_energy(ChartPoint{v}); },
      py::arg("v"));
  m.def(
      "chart_gradient",
      [](const Eigen::Matrix<double, 7, 1>& v, double fd_step) {
        return chart_gradient(ChartPoint{v}, fd_step);
      },
      py::arg("v"), py::arg("fd_step") = 1e-4);
  m.def(
      "chart_hessian",
      [](const Eigen::Matrix<double, 7, 1>& v, double fd_step) {
        return chart_hessian(ChartPoint{v}, fd_step);
      },
      py::arg("v"), py::arg("fd_step") = 1e-4);

  py::class_<MorseReport>(m, "MorseReport")
      .def_readonly("eigenvalues", &MorseReport::eigenvalues)
      .def_readonly("index", &MorseReport::index)
      .def_readonly("nullity", &MorseReport::nullity)
      .def_readonly("orbit_dim", &MorseReport::orbit_dim)
      .def_readonly("zero_tol", &MorseReport::zero_tol);
  m.def(
      "chart_morse_index",
      [](const Eigen::Matrix<double, 7, 1>& v, double fd_step, double zero_tol) {
        return chart_morse_index(ChartPoint{v}, fd_step, zero_tol);
      },
      py::arg("v"), py::arg("fd_step") = 1e-4, py::arg("zero_tol") = 0.0);
  m.def("morse_index", &morse_index, py::arg("config"), py::arg("potential"),
        py::arg("fd_step") = 1e-4, py::arg("zero_tol") = 0.0);

  py::class_<HeightOpt>(m, "HeightOpt")
      .def_readonly("t_star", &HeightOpt::t_star)
      .def_readonly("energy", &HeightOpt::energy);
  m.def("optimal_pyramid_height", &optimal_pyramid_height, py::arg("s"));
  m.def("riesz_gap", &riesz_gap, py::arg("s"));
  m.def("find_crossover", &find_crossover, py::arg("lo"), py::arg("hi"),
        py::arg("tol") = 1e-6);

  py::class_<SweepRow>(m, "SweepRow")
      .def_readonly("s", &SweepRow::s)
      .def_readonly("tbp_energy", &SweepRow::tbp_energy)
      .def_readonly("t_star", &SweepRow::t_star)
      .def_readonly("fp_energy", &SweepRow::fp_energy)
      .def_readonly("gap", &SweepRow::gap);
  py::class_<SweepResult>(m, "SweepResult")
      .def_readonly("rows", &SweepResult::rows)
      .def_readonly("crossover", &SweepResult::crossover);
  m.def("riesz_sweep", &riesz_sweep, py::arg("from_s"), py::arg("to_s"),
        py::arg("step"), py::arg("jobs") = 1);

  m.def("config_to_json", &config_to_json, py::arg("config"));
  m.def("config_from_json", &config_from_json, py::arg("text"),
        py::arg("unit_tol") = 1e-9);
  m.def("config_to_csv", &config_to_csv, py::arg("config"));
  m.def("config_from_csv", &config_from_csv, py::arg("text"),
        py::arg("unit_tol") = 1e-9);
  m.def("save_config", &save_config, py::arg("config"), py::arg("path"));
  m.def("load_config", &load_config, py::arg("path"), py::arg("unit_tol") = 1e-9);
}
