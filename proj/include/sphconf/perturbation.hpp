#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <utility>
#include <vector>

#include "sphconf/geometry.hpp"
#include "sphconf/potential.hpp"

namespace sphconf {

// Per-point displacement field h_i, one row per point.
struct Bundle {
  Eigen::MatrixXd h;
};

// Independent normal rows projected tangential and scaled to max row norm.
Bundle random_bundle(const Config& config, std::uint64_t seed, double scale);
// h_i = W x_i for skew W: the first-order action of a rigid rotation.
Bundle rotation_bundle(const Config& config, const Eigen::MatrixXd& skew);
Eigen::MatrixXd random_skew(int d, std::uint64_t seed);

// Block sizes of a config laid out in canonical two-simplex coordinates
// (first simplex in coordinates 0..m-2, second in m-1..d-1).
struct SplitShape {
  int m = 0, n = 0;
};
SplitShape detect_split(const Config& config, double tol = 1e-8);

// Second-order energy expansion at a canonical two-simplex config: for
// y_i = x_i + h_i on the sphere, 2(E(Y) - E(X)) = total + O(eps^3) with
//   total = ||sum h||^2 + first_block + second_block + cross,
// each of the three named parts individually nonnegative. Displacements are
// projected tangential internally before evaluation.
struct QuadForm {
  double total = 0;
  double first_block = 0;
  double second_block = 0;
  double cross = 0;
};
QuadForm quadratic_form(const Config& config, const Bundle& bundle);

// |2(E(Y_eps) - E(X)) - Q(h_eps)| / eps^3 for the bundle rescaled to each eps;
// bounded ratios certify the cubic remainder.
std::vector<double> second_order_check(const Config& config, const Bundle& bundle,
                                       const std::vector<double>& eps_list);

// Strict descent direction off a degenerate config: rotate one suitable pair
// of points oppositely by theta in the plane of their difference direction and
// an unspanned axis. Returns the new config and the (strictly negative)
// energy change. Requires span rank < d, N >= d+2, strictly convex potential.
std::pair<Config, double> degenerate_escape(const Config& config,
                                            const Potential& pot, double theta);

// One-parameter family through pyramid_config([1,k,m]) at t = 0: the two
// simplex blocks slide to heights -1/(k+m)-mt and -1/(k+m)+kt under the fixed
// apex. The admissible bracket is [-1/(m(k+m)), 1/(k(k+m))]; at the endpoints
// one block reaches the equator and the config becomes a two-simplex split.
Config pyramid_path(int k, int m, double t);

struct PathSample {
  double t = 0;
  double energy = 0;         // closed form
  double energy_direct = 0;  // energy(pyramid_path(k,m,t), Log)
  int derivative_sign = 0;   // sign of d(energy)/dt, 0 within roundoff
};
PathSample pyramid_energy(int k, int m, double t);

// Slack of the pivotal quadratic inequalities; both nonnegative on their
// feasible sets (up to roundoff).
// Square M (m>=3), zero diagonal, zero row sums:
//   sum_{i<j} (M_ij + M_ji)^2 - 1/(m-2) sum_j (colsum_j)^2
double symmetrized_gap(const Eigen::MatrixXd& m);
// F m-by-n and G n-by-m with zero row sums; y = colsums(F), z = colsums(G):
//   sum_{ij} (F_ij + G_ji)^2 - (1/m) sum_j y_j^2 - (1/n) sum_i z_i^2
double paired_gap(const Eigen::MatrixXd& f, const Eigen::MatrixXd& g);

// Random feasible inputs for the two gaps.
Eigen::MatrixXd random_zero_rowsum_square(int m, std::uint64_t seed);
Eigen::MatrixXd random_zero_rowsum(int rows, int cols, std::uint64_t seed);

}  // namespace sphconf
