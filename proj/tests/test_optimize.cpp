#include <doctest.h>

#include <cmath>

#include "sphconf/chart.hpp"
#include "sphconf/morse.hpp"
#include "sphconf/optimize.hpp"
#include "sphconf/perturbation.hpp"

using namespace sphconf;

namespace {

const double kBipyramidEnergy = -3.0 * std::log(3.0) - 8.0 * std::log(2.0);

}  // namespace

TEST_CASE("descent from a minimum converges immediately") {
  Config c = orthogonal_simplexes(Partition::of({3, 2}));
  auto [out, trace] = minimize(c, Potential::log());
  CHECK(trace.converged);
  CHECK(trace.iterations == 0);
  CHECK(trace.final_grad_norm <= 1e-11);
  REQUIRE(trace.final_class.has_value());
  CHECK(trace.final_class->to_string() == "TwoSimplex(3,2)");
  CHECK((out.points() - c.points()).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("random starts on the 2-sphere reach the bipyramid") {
  for (std::uint64_t seed = 1; seed <= 10; ++seed) {
    Config start = random_config(3, 5, seed);
    auto [out, trace] = minimize(start, Potential::log());
    CHECK(trace.converged);
    CHECK(trace.final_grad_norm < 1e-10);
    REQUIRE(trace.final_class.has_value());
    CHECK(trace.final_class->to_string() == "TwoSimplex(3,2)");
    CHECK(std::abs(energy(out, Potential::log()) - kBipyramidEnergy) <= 1e-8);
  }
}

TEST_CASE("trace bookkeeping and monotone energies") {
  auto [out, trace] = minimize(random_config(3, 5, 4), Potential::log());
  CHECK(trace.energies.size() == static_cast<size_t>(trace.iterations) + 1);
  CHECK(trace.grad_norms.size() == trace.energies.size());
  CHECK(trace.final_grad_norm == trace.grad_norms.back());
  for (size_t i = 1; i < trace.energies.size(); ++i)
    CHECK(trace.energies[i] <= trace.energies[i - 1] + 1e-12);
}

TEST_CASE("descent leaves shallow saddle points") {
  Potential lg = Potential::log();

  Config near_pyramid =
      add_tangent_noise(from_spherical(chart_square_pyramid()), 1e-4, 11);
  auto [out1, tr1] = minimize(near_pyramid, lg);
  CHECK(tr1.converged);
  REQUIRE(tr1.final_class.has_value());
  CHECK(tr1.final_class->to_string() == "TwoSimplex(3,2)");
  CHECK(std::abs(energy(out1, lg) - kBipyramidEnergy) <= 1e-8);

  Config near_pentagon = add_tangent_noise(regular_polygon(5), 1e-6, 12);
  auto [out2, tr2] = minimize(near_pentagon, lg);
  CHECK(tr2.converged);
  REQUIRE(tr2.final_class.has_value());
  CHECK(tr2.final_class->to_string() == "TwoSimplex(3,2)");
  CHECK(std::abs(energy(out2, lg) - kBipyramidEnergy) <= 1e-8);
}

TEST_CASE("higher-dimensional starts settle into two-simplex splits") {
  for (std::uint64_t seed : {1, 2, 3}) {
    auto [out, trace] = minimize(random_config(4, 6, seed), Potential::log());
    CHECK(trace.converged);
    REQUIRE(trace.final_class.has_value());
    CHECK(trace.final_class->is(StationaryClass::Kind::TwoSimplex));
  }
}

TEST_CASE("classification is skipped for unsupported point counts") {
  auto [out, trace] = minimize(random_config(3, 6, 1), Potential::log());
  CHECK(trace.converged);
  CHECK(!trace.final_class.has_value());
}

TEST_CASE("optimizer options are validated") {
  Config c = random_config(3, 5, 1);
  Potential lg = Potential::log();
  OptimizeOptions opts;
  opts.max_iters = 0;
  CHECK_THROWS_AS(minimize(c, lg, opts), ArgumentError);
  opts = {};
  opts.grad_tol = 0;
  CHECK_THROWS_AS(minimize(c, lg, opts), ArgumentError);
  opts = {};
  opts.backtrack = 1.0;
  CHECK_THROWS_AS(minimize(c, lg, opts), ArgumentError);
  opts = {};
  opts.armijo = 0;
  CHECK_THROWS_AS(minimize(c, lg, opts), ArgumentError);
}

TEST_CASE("iteration budget cuts off without converging") {
  OptimizeOptions opts;
  opts.max_iters = 3;
  auto [out, trace] = minimize(random_config(3, 5, 2), Potential::log(), opts);
  CHECK(!trace.converged);
  CHECK(trace.iterations == 3);
}

TEST_CASE("basin runs are deterministic and job-count independent") {
  OptimizeOptions opts;
  opts.seed = 5;
  BasinResult serial = basin_experiment(3, 12, Potential::log(), opts, 1);
  BasinResult parallel = basin_experiment(3, 12, Potential::log(), opts, 3);
  REQUIRE(serial.classes.size() == 12);
  CHECK(serial.classes == parallel.classes);
  REQUIRE(serial.energies.size() == 12);
  for (int i = 0; i < 12; ++i) CHECK(serial.energies[i] == parallel.energies[i]);

  int total = 0;
  for (const auto& [name, count] : serial.histogram) total += count;
  CHECK(total == 12);
  CHECK(serial.histogram.at("TwoSimplex(3,2)") == 12);

  CHECK_THROWS_AS(basin_experiment(1, 5, Potential::log()), ArgumentError);
  CHECK_THROWS_AS(basin_experiment(3, 0, Potential::log()), ArgumentError);
}

TEST_CASE("split energies favor the most balanced partition") {
  for (int d = 2; d <= 12; ++d) {
    auto table = split_energy_table(d, Potential::log());
    REQUIRE(!table.empty());
    int best = 0;
    for (int i = 1; i < static_cast<int>(table.size()); ++i)
      if (table[i].energy < table[best].energy) best = i;
    CHECK(table[best].m - table[best].n == (d % 2 == 0 ? 0 : 1));
    for (int i = 0; i < static_cast<int>(table.size()); ++i) {
      CHECK(table[i].m >= table[i].n);
      CHECK(table[i].m + table[i].n == d + 2);
      if (i != best) CHECK(table[i].energy > table[best].energy + 1e-9);
    }
  }
}

TEST_CASE("tangential noise is deterministic and stays on the sphere") {
  Config c = orthogonal_simplexes(Partition::of({3, 2}));
  Config noisy = add_tangent_noise(c, 1e-3, 9);
  Config again = add_tangent_noise(c, 1e-3, 9);
  CHECK((noisy.points() - again.points()).cwiseAbs().maxCoeff() == 0.0);
  CHECK((noisy.points().rowwise().norm().array() - 1.0).abs().maxCoeff() <= 1e-12);
  double moved = (noisy.points() - c.points()).rowwise().norm().maxCoeff();
  CHECK(moved > 1e-5);
  CHECK(moved <= 2e-3);
}
