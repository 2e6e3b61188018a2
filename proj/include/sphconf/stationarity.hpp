#pragma once

#include <Eigen/Dense>
#include <array>
#include <optional>
#include <string>
#include <vector>

#include "sphconf/geometry.hpp"

namespace sphconf {

// Structure analysis of a (near-)stationary Log config via two derived
// matrices. With r_ij := 1 - x_i.x_j and c := (N-1)/N:
//   force_matrix B:  b_ij = 1/r_ij off-diagonal, b_ii = N-1 - sum_{j!=i} b_ij,
//                    so B X = 0 exactly at stationary configs;
//   split_matrix A:  a_ij = c - b_ij.
// For N = d+2 a nondegenerate stationary config makes A rank one with a
// symmetric factorization a_ij = f_i f_j; the signs of f split the points into
// the two orthogonal simplexes, and f = 0 marks an equidistant (apex) vertex.
struct SplitDiagnostics {
  int n = 0;
  int dim = 0;
  double c = 0;
  Eigen::MatrixXd force_matrix;
  Eigen::MatrixXd split_matrix;
  // max_i ||(B X)_i||; equals the force residual, ~0 iff stationary.
  double force_defect = 0;
  int rank = 0;
  // Rank-one factor with the first nonzero entry made positive; empty when
  // N != d+2 or the rank/sign structure does not admit one.
  Eigen::VectorXd factor;

  bool has_factor() const { return factor.size() > 0; }

  // Row sums of the factor reconstruction r_ij = 1/(c - f_i f_j); each of
  // these is a sharp identity at genuine two-simplex configs:
  //   q_i = sum_{j!=i} 1/(c - f_i f_j)                  = N
  //   r_i = sum_{j!=i} f_j/(c - f_i f_j)                = 0
  //   s_i = sum_{j!=i} (f_j^2 - f_j f_i)/(c - f_i f_j)  = 1
  //   t_i = sum_{j!=i} (c - f_j^2)/(c - f_i f_j)        = N-2
  Eigen::VectorXd q, r, s, t;
  double min_slack = 0;  // min_{i!=j} (c - f_i f_j) - 1/2
};

SplitDiagnostics build_diagnostics(const Config& config);

// Defects of the four identities plus the factor bounds; requires a factor.
struct IdentityDefects {
  Eigen::VectorXd q;  // q_i - N
  Eigen::VectorXd r;  // r_i
  Eigen::VectorXd s;  // s_i - 1
  Eigen::VectorXd t;  // t_i - (N-2)
  double min_slack = 0;
  double max_factor_excess = 0;  // max_i |f_i| - sqrt(c), negative when bounded
};

IdentityDefects identity_defects(const SplitDiagnostics& diag);

// F(t) = sum_j (c - f_j^2)/(c - t f_j), strictly convex on (-sqrt(c), sqrt(c))
// with F(f_i) = N-1 at stationary configs.
double factor_profile(const SplitDiagnostics& diag, double t);

// (t, F(t), F''(t)) sampled strictly inside (-sqrt(c), sqrt(c)).
std::vector<std::array<double, 3>> convexity_scan(const SplitDiagnostics& diag,
                                                  int grid_size);

struct StationaryClass {
  enum class Kind { TwoSimplex, Pyramid, Degenerate, NonStationary };

  Kind kind = Kind::NonStationary;
  // TwoSimplex: {m, n} with m >= n; Pyramid: full partition, apexes first.
  std::vector<int> partition;
  int spanned_dim = 0;      // Degenerate only
  double max_residual = 0;  // NonStationary only
  std::optional<SplitDiagnostics> diagnostics;

  std::string to_string() const;
  bool is(Kind k) const { return kind == k; }
};

// Decision procedure: force residual gate, span-rank gate, then (N = d+2 only)
// apex peeling through the factor zeros and a sign-split with direct Gram
// verification. Throws UnsupportedError for other shapes past the gates and
// ClassificationError when claimed stationarity has inconsistent structure.
StationaryClass classify(const Config& config, double tol = 1e-8);

}  // namespace sphconf
