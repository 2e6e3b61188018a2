#include "sphconf/perturbation.hpp"

#include <Eigen/SVD>
#include <cmath>
#include <random>
#include <sstream>

namespace sphconf {

namespace {

Eigen::MatrixXd tangentialized(const Config& config, const Eigen::MatrixXd& h) {
  if (h.rows() != config.size() || h.cols() != config.dim())
    throw ArgumentError("displacement shape does not match the config");
  Eigen::MatrixXd out = h;
  const auto& pts = config.points();
  for (int i = 0; i < out.rows(); ++i)
    out.row(i) -= out.row(i).dot(pts.row(i)) * pts.row(i);
  return out;
}

Eigen::MatrixXd normal_matrix(int rows, int cols, std::uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::normal_distribution<double> normal(0.0, 1.0);
  Eigen::MatrixXd m(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) m(i, j) = normal(gen);
  return m;
}

}  // namespace

Bundle random_bundle(const Config& config, std::uint64_t seed, double scale) {
  if (!(scale > 0)) throw ArgumentError("bundle scale must be positive");
  Eigen::MatrixXd h;
  double top = 0;
  std::uint64_t attempt = 0;
  do {
    h = tangentialized(config, normal_matrix(config.size(), config.dim(),
                                             detail::mix_seed(seed, attempt)));
    top = h.rowwise().norm().maxCoeff();
    ++attempt;
  } while (top < 1e-12);
  return Bundle{h * (scale / top)};
}

Bundle rotation_bundle(const Config& config, const Eigen::MatrixXd& skew) {
  const int d = config.dim();
  if (skew.rows() != d || skew.cols() != d)
    throw ArgumentError("skew generator shape does not match the config");
  if ((skew + skew.transpose()).cwiseAbs().maxCoeff() > 1e-12)
    throw ArgumentError("rotation generator must be antisymmetric");
  return Bundle{config.points() * skew.transpose()};
}

Eigen::MatrixXd random_skew(int d, std::uint64_t seed) {
  if (d < 2) throw ArgumentError("skew generator needs d >= 2");
  Eigen::MatrixXd m = normal_matrix(d, d, seed);
  return 0.5 * (m - m.transpose());
}

SplitShape detect_split(const Config& config, double tol) {
  const int n_total = config.size();
  const int d = config.dim();
  if (n_total != d + 2)
    throw ArgumentError("canonical two-simplex coordinates need n = d + 2");
  Eigen::MatrixXd g = config.gram();
  const auto& pts = config.points();
  const double support_tol = 1e-9;

  for (int m = 2; m <= n_total - 2; ++m) {
    int n = n_total - m;
    bool ok = true;
    for (int i = 0; i < m && ok; ++i)
      for (int c = m - 1; c < d; ++c)
        if (std::abs(pts(i, c)) > support_tol) {
          ok = false;
          break;
        }
    for (int j = m; j < n_total && ok; ++j)
      for (int c = 0; c < m - 1; ++c)
        if (std::abs(pts(j, c)) > support_tol) {
          ok = false;
          break;
        }
    if (!ok) continue;
    for (int i = 0; i < m && ok; ++i)
      for (int j = i + 1; j < m; ++j)
        if (std::abs(g(i, j) + 1.0 / (m - 1.0)) > tol) {
          ok = false;
          break;
        }
    for (int i = m; i < n_total && ok; ++i)
      for (int j = i + 1; j < n_total; ++j)
        if (std::abs(g(i, j) + 1.0 / (n - 1.0)) > tol) {
          ok = false;
          break;
        }
    if (ok) return SplitShape{m, n};
  }
  throw ArgumentError("config is not in canonical two-simplex coordinates");
}

QuadForm quadratic_form(const Config& config, const Bundle& bundle) {
  SplitShape shape = detect_split(config);
  const int m = shape.m, n = shape.n;
  const int d = config.dim();
  Eigen::MatrixXd h = tangentialized(config, bundle.h);
  const auto& pts = config.points();

  // Coordinate split: a/c are the first m-1 columns, b/d the last n-1.
  auto first = [&](int i) { return h.row(i).head(m - 1); };
  auto second = [&](int i) { return h.row(i).tail(n - 1); };

  double s_pp = 0;
  const double w1 = (m - 1.0) / m;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double sig = pts.row(i).head(m - 1).dot(first(j)) +
                   pts.row(j).head(m - 1).dot(first(i));
      s_pp += w1 * w1 * sig * sig;
    }

  double s_qq = 0;
  const double w2 = (n - 1.0) / n;
  for (int i = m; i < m + n; ++i)
    for (int j = i + 1; j < m + n; ++j) {
      double sig = pts.row(i).tail(n - 1).dot(second(j)) +
                   pts.row(j).tail(n - 1).dot(second(i));
      s_qq += w2 * w2 * sig * sig;
    }

  double s_pq = 0;
  for (int i = 0; i < m; ++i)
    for (int j = m; j < m + n; ++j) {
      double sig = pts.row(i).head(m - 1).dot(first(j)) +
                   pts.row(j).tail(n - 1).dot(second(i));
      s_pq += sig * sig;
    }

  Eigen::RowVectorXd sum_a = Eigen::RowVectorXd::Zero(m - 1);
  Eigen::RowVectorXd sum_b = Eigen::RowVectorXd::Zero(n - 1);
  for (int i = 0; i < m; ++i) {
    sum_a += first(i);
    sum_b += second(i);
  }
  Eigen::RowVectorXd sum_c = Eigen::RowVectorXd::Zero(m - 1);
  Eigen::RowVectorXd sum_d = Eigen::RowVectorXd::Zero(n - 1);
  for (int j = m; j < m + n; ++j) {
    sum_c += first(j);
    sum_d += second(j);
  }
  Eigen::RowVectorXd sum_h = Eigen::RowVectorXd::Zero(d);
  for (int i = 0; i < m + n; ++i) sum_h += h.row(i);

  QuadForm q;
  q.first_block = s_pp - sum_a.squaredNorm() / m;
  q.second_block = s_qq - sum_d.squaredNorm() / n;
  q.cross = s_pq - sum_b.squaredNorm() / m - sum_c.squaredNorm() / n;
  q.total = sum_h.squaredNorm() -
            (sum_a.squaredNorm() + sum_b.squaredNorm()) / m -
            (sum_c.squaredNorm() + sum_d.squaredNorm()) / n + s_pp + s_qq + s_pq;
  return q;
}

std::vector<double> second_order_check(const Config& config, const Bundle& bundle,
                                       const std::vector<double>& eps_list) {
  Eigen::MatrixXd h0 = tangentialized(config, bundle.h);
  double top = h0.rowwise().norm().maxCoeff();
  if (top < 1e-15) throw ArgumentError("displacement bundle is zero");
  const Potential pot = Potential::log();
  const double e0 = energy(config, pot);

  std::vector<double> ratios;
  ratios.reserve(eps_list.size());
  for (double eps : eps_list) {
    if (!(eps > 0)) throw ArgumentError("scales must be positive");
    Eigen::MatrixXd h = h0 * (eps / top);
    QuadForm q = quadratic_form(config, Bundle{h});
    Eigen::MatrixXd y = config.points() + h;
    for (int i = 0; i < y.rows(); ++i) y.row(i).normalize();
    double delta = detail::energy_of(y, pot) - e0;
    ratios.push_back(std::abs(2.0 * delta - q.total) / (eps * eps * eps));
  }
  return ratios;
}

std::pair<Config, double> degenerate_escape(const Config& config,
                                            const Potential& pot, double theta) {
  if (!(theta > 0 && theta < M_PI))
    throw ArgumentError("escape angle must lie strictly between 0 and pi");
  const int d = config.dim();
  const int n = config.size();
  if (config.span_rank() >= d)
    throw NotDegenerateError("config spans the full ambient space");
  if (n < d + 2)
    throw NotApplicableError("escape construction needs at least d + 2 points");
  if (!pot.strictly_convex())
    throw ArgumentError("escape construction needs a strictly convex potential");

  const auto& pts = config.points();
  Eigen::JacobiSVD<Eigen::MatrixXd> svd(pts, Eigen::ComputeFullV);
  Eigen::VectorXd axis = svd.matrixV().col(d - 1);

  int pi = -1, pj = -1;
  for (int i = 0; i < n && pi < 0; ++i)
    for (int j = i + 1; j < n && pi < 0; ++j) {
      Eigen::RowVectorXd diff = pts.row(i) - pts.row(j);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if (std::abs(pts.row(k).dot(diff)) > 1e-9) {
          pi = i;
          pj = j;
          break;
        }
      }
    }
  if (pi < 0)
    throw NotApplicableError("no pair of points has an off-axis witness");

  Eigen::RowVectorXd mid = 0.5 * (pts.row(pi) + pts.row(pj));
  Eigen::RowVectorXd e2 = pts.row(pi) - pts.row(pj);
  double rho = 0.5 * e2.norm();
  e2.normalize();

  Eigen::MatrixXd moved = pts;
  Eigen::RowVectorXd swing =
      std::cos(theta) * e2 + std::sin(theta) * axis.transpose();
  moved.row(pi) = mid + rho * swing;
  moved.row(pj) = mid - rho * swing;

  double before = energy(config, pot);
  Config out = Config::from_points(std::move(moved), config.label() + "-escaped");
  double after = energy(out, pot);
  return {std::move(out), after - before};
}

namespace {

void check_path_args(int k, int m, double t) {
  if (k < 2 || m < 2) throw ArgumentError("pyramid path needs block sizes >= 2");
  double lo = -1.0 / (m * (k + m)) - 1e-12;
  double hi = 1.0 / (k * (k + m)) + 1e-12;
  if (!(t >= lo && t <= hi)) {
    std::ostringstream msg;
    msg << "path parameter " << t << " outside [" << lo << ", " << hi << "]";
    throw ArgumentError(msg.str());
  }
}

}  // namespace

Config pyramid_path(int k, int m, double t) {
  check_path_args(k, m, t);
  const int d = k + m - 1;
  const int n = k + m + 1;
  const double q = 1.0 / (k + m);
  const double hy = q + m * t;
  const double hz = q - k * t;

  Config ys = regular_simplex(k);
  Config zs = regular_simplex(m);
  Eigen::MatrixXd pts = Eigen::MatrixXd::Zero(n, d);
  pts(0, d - 1) = 1.0;
  const double ry = std::sqrt(1.0 - hy * hy);
  const double rz = std::sqrt(1.0 - hz * hz);
  for (int i = 0; i < k; ++i) {
    pts.block(1 + i, 0, 1, k - 1) = ry * ys.points().row(i);
    pts(1 + i, d - 1) = -hy;
  }
  for (int j = 0; j < m; ++j) {
    pts.block(1 + k + j, k - 1, 1, m - 1) = rz * zs.points().row(j);
    pts(1 + k + j, d - 1) = -hz;
  }
  return Config::from_points(std::move(pts), "pyramid-path");
}

PathSample pyramid_energy(int k, int m, double t) {
  check_path_args(k, m, t);
  const int n = k + m + 1;
  const double q = 1.0 / (k + m);
  const double hy = q + m * t;
  const double hz = q - k * t;

  double half = -(k * std::log1p(hy) + m * std::log1p(hz) +
                  0.5 * k * (k - 1.0) *
                      (std::log1p(-hy * hy) + std::log(k / (k - 1.0))) +
                  0.5 * m * (m - 1.0) *
                      (std::log1p(-hz * hz) + std::log(m / (m - 1.0))) +
                  k * m * std::log1p(-hy * hz));

  PathSample sample;
  sample.t = t;
  sample.energy = half - 0.5 * n * (n - 1.0) * std::log(2.0);
  sample.energy_direct = energy(pyramid_path(k, m, t), Potential::log());

  double km = double(k) * m;
  double deriv = -(km / (1.0 + hy) - km / (1.0 + hz) -
                   k * (k - 1.0) * m * hy / (1.0 - hy * hy) +
                   m * (m - 1.0) * k * hz / (1.0 - hz * hz) -
                   km * (m * hz - k * hy) / (1.0 - hy * hz));
  double thresh = 1e-11 * (1.0 + std::abs(sample.energy));
  sample.derivative_sign = std::abs(deriv) <= thresh ? 0 : (deriv > 0 ? 1 : -1);
  return sample;
}

double symmetrized_gap(const Eigen::MatrixXd& mat) {
  const int m = static_cast<int>(mat.rows());
  if (mat.cols() != m) throw ArgumentError("symmetrized gap needs a square matrix");
  if (m < 3) throw ArgumentError("symmetrized gap needs size >= 3");
  for (int i = 0; i < m; ++i) {
    if (std::abs(mat(i, i)) > 1e-12)
      throw ArgumentError("matrix must have zero diagonal");
    if (std::abs(mat.row(i).sum()) > 1e-9)
      throw ArgumentError("matrix must have zero row sums");
  }
  double quad = 0;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      double s = mat(i, j) + mat(j, i);
      quad += s * s;
    }
  double cols = mat.colwise().sum().squaredNorm();
  return quad - cols / (m - 2.0);
}

double paired_gap(const Eigen::MatrixXd& f, const Eigen::MatrixXd& g) {
  const int m = static_cast<int>(f.rows());
  const int n = static_cast<int>(f.cols());
  if (g.rows() != n || g.cols() != m)
    throw ArgumentError("paired gap needs shapes m-by-n and n-by-m");
  if (m < 1 || n < 1) throw ArgumentError("paired gap needs nonempty matrices");
  for (int i = 0; i < m; ++i)
    if (std::abs(f.row(i).sum()) > 1e-9)
      throw ArgumentError("first matrix must have zero row sums");
  for (int j = 0; j < n; ++j)
    if (std::abs(g.row(j).sum()) > 1e-9)
      throw ArgumentError("second matrix must have zero row sums");
  double quad = 0;
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) {
      double s = f(i, j) + g(j, i);
      quad += s * s;
    }
  double y = f.colwise().sum().squaredNorm();
  double z = g.colwise().sum().squaredNorm();
  return quad - y / m - z / n;
}

Eigen::MatrixXd random_zero_rowsum_square(int m, std::uint64_t seed) {
  if (m < 3) throw ArgumentError("generator needs size >= 3");
  Eigen::MatrixXd mat = normal_matrix(m, m, seed);
  mat.diagonal().setZero();
  for (int i = 0; i < m; ++i) {
    double shift = mat.row(i).sum() / (m - 1.0);
    for (int j = 0; j < m; ++j)
      if (j != i) mat(i, j) -= shift;
  }
  return mat;
}

Eigen::MatrixXd random_zero_rowsum(int rows, int cols, std::uint64_t seed) {
  if (rows < 1 || cols < 2)
    throw ArgumentError("generator needs at least one row and two columns");
  Eigen::MatrixXd mat = normal_matrix(rows, cols, seed);
  for (int i = 0; i < rows; ++i) mat.row(i).array() -= mat.row(i).mean();
  return mat;
}

}  // namespace sphconf
