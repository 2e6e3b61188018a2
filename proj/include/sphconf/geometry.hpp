#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <string>
#include <vector>

#include "sphconf/errors.hpp"

namespace sphconf {

// N unit vectors on S^{d-1}, one per row. Rows are kept unit to 1e-12 and
// pairwise distinct (min distance > 1e-9) unless built through unchecked().
class Config {
 public:
  static Config from_points(Eigen::MatrixXd points, std::string label = "");
  // Skips the distinctness check; for deliberately degenerate fixtures.
  static Config unchecked(Eigen::MatrixXd points, std::string label = "");

  int dim() const { return static_cast<int>(pts_.cols()); }
  int size() const { return static_cast<int>(pts_.rows()); }
  const Eigen::MatrixXd& points() const { return pts_; }
  Eigen::RowVectorXd point(int i) const { return pts_.row(i); }
  const std::string& label() const { return label_; }
  void set_label(std::string l) { label_ = std::move(l); }

  // Inner-product matrix with the diagonal pinned to exactly 1.
  Eigen::MatrixXd gram() const;
  Eigen::RowVectorXd centroid() const { return pts_.colwise().mean(); }
  double min_pairwise_distance() const;
  // Dimension actually spanned: singular values above rel_tol * max(sigma_max, 1).
  int span_rank(double rel_tol = 1e-8) const;

 private:
  Config(Eigen::MatrixXd pts, std::string label)
      : pts_(std::move(pts)), label_(std::move(label)) {}
  Eigen::MatrixXd pts_;
  std::string label_;
};

// Ordered block sizes [n_1,...,n_k]. A block of size 1 is an apex (equidistant
// vertex) and contributes one dimension (its pole axis); a block of size n >= 2
// is a regular n-simplex spanning n-1 dimensions.
struct Partition {
  std::vector<int> blocks;

  static Partition of(std::vector<int> blocks);
  static Partition parse(const std::string& csv);  // "1,2,2"

  int total() const;      // number of points N
  int dimension() const;  // #ones + sum over n>=2 of (n-1)
  int apex_count() const;
  bool all_regular() const;  // no apex blocks
  // Apex blocks must precede the regular blocks for pyramid construction.
  bool ones_first() const;
  std::string to_string() const;
};

// Regular simplex of m unit vectors in R^{m-1}, mutual inner product -1/(m-1),
// centroid at the origin.
Config regular_simplex(int m);

// Mutually orthogonal regular simplexes, one per block (all blocks >= 2),
// each occupying its own coordinate slice; points ordered block by block.
Config orthogonal_simplexes(const Partition& p);

// Apex blocks (ones, listed first) are peeled onto the remaining construction
// recursively: apex at the pole, everything below scaled to height -1/(N-1).
Config pyramid_config(const Partition& p);

// +-e_1, ..., +-e_d (the [2,...,2] orthogonal-simplex split).
Config cross_polytope(int d);

// Apex at the north pole over a square base at height t in (-1,1).
Config square_pyramid(double t);

// n >= 3 points evenly spaced on the equator of S^2; degenerate by design.
Config regular_polygon(int n);

// Independent uniform points on S^{d-1}; identical output for identical seeds.
Config random_config(int d, int n, std::uint64_t seed);

namespace detail {

// Rotation with R*from = to (both unit); identity/pi-rotation edge cases handled.
Eigen::MatrixXd rotation_taking(const Eigen::VectorXd& from, const Eigen::VectorXd& to);
// d x (d-1) matrix whose orthonormal columns span the tangent space at unit x.
Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& x);
// Deterministic substream derivation for per-trial seeding.
std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream);

}  // namespace detail

}  // namespace sphconf
