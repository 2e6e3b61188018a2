#pragma once

#include <optional>
#include <vector>

namespace sphconf {

// Height of the square-pyramid family minimizing the Riesz-s energy, found by
// a coarse scan plus golden-section refinement to |dt| < 1e-12.
struct HeightOpt {
  double t_star = 0;
  double energy = 0;
};
HeightOpt optimal_pyramid_height(double s);

// E_s(triangular bipyramid) - E_s(optimal square pyramid); negative while the
// bipyramid is the better of the two.
double riesz_gap(double s);

// Bisection for the sign change of riesz_gap on [lo, hi] to |ds| < tol.
// Throws BracketError when the endpoints do not bracket one.
double find_crossover(double lo, double hi, double tol = 1e-6);

struct SweepRow {
  double s = 0;
  double tbp_energy = 0;
  double t_star = 0;
  double fp_energy = 0;
  double gap = 0;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::optional<double> crossover;  // refined from the first adjacent sign change
};

SweepResult riesz_sweep(double from, double to, double step, int jobs = 1);

}  // namespace sphconf
