#include "sphconf/geometry.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <numeric>
#include <random>
#include <sstream>

namespace sphconf {

namespace {

constexpr double kUnitTol = 1e-12;
constexpr double kDistinctTol = 1e-9;

void check_shape(const Eigen::MatrixXd& pts) {
  if (pts.rows() < 2) throw ArgumentError("config needs at least 2 points");
  if (pts.cols() < 1) throw ArgumentError("config needs ambient dimension >= 1");
  if (!pts.allFinite()) throw ArgumentError("config has non-finite coordinates");
  for (int i = 0; i < pts.rows(); ++i) {
    if (std::abs(pts.row(i).norm() - 1.0) > kUnitTol) {
      std::ostringstream msg;
      msg << "point " << i << " is off the unit sphere by "
          << std::abs(pts.row(i).norm() - 1.0);
      throw ArgumentError(msg.str());
    }
  }
}

}  // namespace

Config Config::from_points(Eigen::MatrixXd points, std::string label) {
  check_shape(points);
  for (int i = 0; i < points.rows(); ++i)
    for (int j = i + 1; j < points.rows(); ++j)
      if ((points.row(i) - points.row(j)).norm() <= kDistinctTol) {
        std::ostringstream msg;
        msg << "points " << i << " and " << j << " coincide";
        throw ArgumentError(msg.str());
      }
  return Config(std::move(points), std::move(label));
}

Config Config::unchecked(Eigen::MatrixXd points, std::string label) {
  check_shape(points);
  return Config(std::move(points), std::move(label));
}

Eigen::MatrixXd Config::gram() const {
  Eigen::MatrixXd g = pts_ * pts_.transpose();
  g.diagonal().setOnes();
  return g;
}

double Config::min_pairwise_distance() const {
  double best = std::numeric_limits<double>::infinity();
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      best = std::min(best, (pts_.row(i) - pts_.row(j)).norm());
  return best;
}

int Config::span_rank(double rel_tol) const {
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts_);
  const auto& sv = svd.singularValues();
  double cutoff = rel_tol * std::max(sv(0), 1.0);
  int rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++rank;
  return rank;
}

Partition Partition::of(std::vector<int> blocks) {
  if (blocks.empty()) throw ArgumentError("partition needs at least one block");
  for (int b : blocks)
    if (b < 1) throw ArgumentError("partition blocks must be positive");
  return Partition{std::move(blocks)};
}

Partition Partition::parse(const std::string& csv) {
  // getline drops a final empty field, so a trailing comma needs its own check.
  if (!csv.empty() && csv.back() == ',')
    throw ArgumentError("cannot parse partition component ''");
  std::vector<int> blocks;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      size_t pos = 0;
      int v = std::stoi(item, &pos);
      if (pos != item.size()) throw std::invalid_argument(item);
      blocks.push_back(v);
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse partition component '" + item + "'");
    }
  }
  return of(std::move(blocks));
}

int Partition::total() const {
  return std::accumulate(blocks.begin(), blocks.end(), 0);
}

int Partition::dimension() const {
  int d = 0;
  for (int b : blocks) d += (b == 1) ? 1 : b - 1;
  return d;
}

int Partition::apex_count() const {
  int k = 0;
  for (int b : blocks) k += (b == 1);
  return k;
}

bool Partition::all_regular() const { return apex_count() == 0; }

bool Partition::ones_first() const {
  bool seen_big = false;
  for (int b : blocks) {
    if (b >= 2) seen_big = true;
    else if (seen_big) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream out;
  out << '[';
  for (size_t i = 0; i < blocks.size(); ++i) {
    if (i) out << ',';
    out << blocks[i];
  }
  out << ']';
  return out.str();
}

namespace detail {

Eigen::MatrixXd rotation_taking(const Eigen::VectorXd& from, const Eigen::VectorXd& to) {
  const int d = static_cast<int>(from.size());
  Eigen::VectorXd u = from.normalized();
  Eigen::VectorXd t = to.normalized();
  double c = u.dot(t);
  Eigen::MatrixXd id = Eigen::MatrixXd::Identity(d, d);
  if (c > 1.0 - 1e-14) return id;
  if (c < -1.0 + 1e-14) {
    if (d == 1) return -id;
    // Half-turn in the plane of u and an arbitrary perpendicular direction.
    int k;
    u.cwiseAbs().minCoeff(&k);
    Eigen::VectorXd v = Eigen::VectorXd::Unit(d, k);
    v -= v.dot(u) * u;
    v.normalize();
    return id - 2.0 * u * u.transpose() - 2.0 * v * v.transpose();
  }
  Eigen::VectorXd v = (t - c * u).normalized();
  double s = t.dot(v);
  Eigen::MatrixXd r = id;
  r += (c - 1.0) * (u * u.transpose() + v * v.transpose());
  r += s * (v * u.transpose() - u * v.transpose());
  return r;
}

Eigen::MatrixXd tangent_frame(const Eigen::VectorXd& x) {
  const int d = static_cast<int>(x.size());
  Eigen::MatrixXd frame(d, d - 1);
  Eigen::VectorXd pole = Eigen::VectorXd::Unit(d, d - 1);
  if ((x - pole).norm() < 1e-12) {
    frame = Eigen::MatrixXd::Identity(d, d).leftCols(d - 1);
    return frame;
  }
  // Householder reflection carrying e_d to x: the other reflected basis
  // vectors are an orthonormal basis of the tangent space at x.
  Eigen::VectorXd v = (x - pole).normalized();
  for (int j = 0; j < d - 1; ++j)
    frame.col(j) = Eigen::VectorXd::Unit(d, j) - 2.0 * v(j) * v;
  return frame;
}

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace detail

Config regular_simplex(int m) {
  if (m < 2) throw ArgumentError("regular simplex needs m >= 2");
  if (m == 2) {
    Eigen::MatrixXd pts(2, 1);
    pts << 1.0, -1.0;
    return Config::from_points(std::move(pts), "simplex-2");
  }
  // Scaled shifted basis vectors in the hyperplane orthogonal to (1,...,1),
  // then reflected so that hyperplane becomes coordinates 0..m-2.
  const double scale = std::sqrt(double(m) / (m - 1.0));
  Eigen::MatrixXd raw(m, m);
  for (int i = 0; i < m; ++i) {
    Eigen::VectorXd p = -Eigen::VectorXd::Constant(m, 1.0 / m);
    p(i) += 1.0;
    raw.row(i) = scale * p.transpose();
  }
  Eigen::VectorXd ones_dir = Eigen::VectorXd::Constant(m, 1.0 / std::sqrt(double(m)));
  Eigen::MatrixXd h =
      detail::rotation_taking(ones_dir, Eigen::VectorXd::Unit(m, m - 1));
  Eigen::MatrixXd flat = raw * h.transpose();
  Eigen::MatrixXd pts = flat.leftCols(m - 1);
  for (int i = 0; i < m; ++i) pts.row(i).normalize();
  return Config::from_points(std::move(pts), "simplex-" + std::to_string(m));
}

Config orthogonal_simplexes(const Partition& p) {
  if (!p.all_regular())
    throw ArgumentError("orthogonal simplexes need every block >= 2");
  const int n = p.total();
  const int d = p.dimension();
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(n, d);
  int row = 0, col = 0;
  for (int b : p.blocks) {
    Config s = regular_simplex(b);
    pts.block(row, col, b, b - 1) = s.points();
    row += b;
    col += b - 1;
  }
  return Config::from_points(std::move(pts), "ortho-" + p.to_string());
}

namespace {

// New apex at the pole; the existing configuration drops to height -1/(N-1).
Config lift_with_apex(const Config& inner, const std::string& label) {
  const int n = inner.size() + 1;
  const int d = inner.dim() + 1;
  const double depth = 1.0 / (n - 1);
  const double shrink = std::sqrt(1.0 - depth * depth);
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(n, d);
  pts(0, d - 1) = 1.0;
  for (int i = 0; i < inner.size(); ++i) {
    pts.block(i + 1, 0, 1, d - 1) = shrink * inner.points().row(i);
    pts(i + 1, d - 1) = -depth;
  }
  return Config::from_points(std::move(pts), label);
}

}  // namespace

Config pyramid_config(const Partition& p) {
  if (!p.ones_first())
    throw ArgumentError("apex blocks must precede the regular blocks");
  const int apexes = p.apex_count();
  if (apexes == static_cast<int>(p.blocks.size()))
    throw ArgumentError("pyramid needs at least one block >= 2");
  if (apexes == 0) return orthogonal_simplexes(p);
  Partition rest = Partition::of(
      std::vector<int>(p.blocks.begin() + apexes, p.blocks.end()));
  Config c = orthogonal_simplexes(rest);
  for (int k = 0; k < apexes; ++k)
    c = lift_with_apex(c, "pyramid-" + p.to_string());
  return c;
}

Config cross_polytope(int d) {
  if (d < 1) throw ArgumentError("cross polytope needs d >= 1");
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(2 * d, d);
  for (int i = 0; i < d; ++i) {
    pts(2 * i, i) = 1.0;
    pts(2 * i + 1, i) = -1.0;
  }
  return Config::from_points(std::move(pts), "cross-" + std::to_string(d));
}

Config square_pyramid(double t) {
  if (!(t > -1.0 && t < 1.0))
    throw ArgumentError("square pyramid height must lie in (-1, 1)");
  const double r = std::sqrt(1.0 - t * t);
  Eigen::MatrixXd pts(5, 3);
  pts << 0, 0, 1,
         r, 0, t,
        -r, 0, t,
         0, r, t,
         0, -r, t;
  return Config::from_points(std::move(pts), "square-pyramid");
}

Config regular_polygon(int n) {
  if (n < 3) throw ArgumentError("polygon needs n >= 3");
  Eigen::MatrixXd pts(n, 3);
  for (int k = 0; k < n; ++k) {
    double a = 2.0 * M_PI * k / n;
    pts.row(k) << std::cos(a), std::sin(a), 0.0;
  }
  return Config::from_points(std::move(pts), "polygon-" + std::to_string(n));
}

Config random_config(int d, int n, std::uint64_t seed) {
  if (d < 1 || n < 2) throw ArgumentError("random config needs d >= 1, n >= 2");
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd pts(n, d);
  for (int i = 0; i < n; ++i) {
    double norm = 0;
    do {
      for (int j = 0; j < d; ++j) pts(i, j) = normal(gen);
      norm = pts.row(i).norm();
    } while (norm < 1e-8);
    pts.row(i) /= norm;
  }
  return Config::from_points(std::move(pts),
                             "random-" + std::to_string(d) + "x" + std::to_string(n));
}

}  // namespace sphconf
