#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sphconf/geometry.hpp"
#include "sphconf/potential.hpp"
#include "sphconf/stationarity.hpp"

namespace sphconf {

struct OptimizeOptions {
  int max_iters = 100000;
  double grad_tol = 1e-11;
  double step0 = 0;  // <= 0 means 0.1/(N-1)
  double backtrack = 0.5;
  double armijo = 1e-4;
  std::uint64_t seed = 0;
};

struct OptimizeTrace {
  int iterations = 0;
  std::vector<double> energies;    // initial value, then one per accepted step
  std::vector<double> grad_norms;  // aligned with energies
  double final_grad_norm = 0;
  bool converged = false;
  // Absent when classification is unsupported for the shape (N != d+2).
  std::optional<StationaryClass> final_class;
};

// Projected gradient descent with radial renormalization and Armijo
// backtracking. A singular pair met during the line search rejects the step;
// only a step underflowing 1e-16 aborts.
std::pair<Config, OptimizeTrace> minimize(const Config& start, const Potential& pot,
                                          const OptimizeOptions& opts = {});

struct BasinResult {
  std::vector<std::string> classes;  // per trial
  std::vector<double> energies;      // per trial
  std::map<std::string, int> histogram;
};

// trials independent seeded starts on S^{d-1} with N = d+2, each minimized;
// per-trial seeds derive from opts.seed, so results are reproducible and
// independent of jobs.
BasinResult basin_experiment(int d, int trials, const Potential& pot,
                             const OptimizeOptions& opts = {}, int jobs = 1);

// Energy of every orthogonal-simplex split [m, n], m >= n >= 2, m+n = d+2.
struct SplitEnergy {
  int m = 0, n = 0;
  double energy = 0;
};
std::vector<SplitEnergy> split_energy_table(int d, const Potential& pot);

// Tangential gaussian displacement of the given max amplitude, renormalized.
Config add_tangent_noise(const Config& config, double scale, std::uint64_t seed);

}  // namespace sphconf
