#include "sphconf/morse.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <cmath>

namespace sphconf {

namespace {

void check_gauge(const ChartPoint& v) {
  for (int k = 2; k <= 5; ++k)
    if (std::abs(std::sin(v.theta(k))) <= 1e-9)
      throw GaugeSingularError("a chart point sits at a pole");
}

template <typename F, int P>
Eigen::Matrix<double, P, P> fd_hessian(const F& f, double h) {
  Eigen::Matrix<double, P, P> hess;
  Eigen::Matrix<double, P, 1> u = Eigen::Matrix<double, P, 1>::Zero();
  const double f0 = f(u);
  for (int a = 0; a < P; ++a) {
    u(a) = h;
    double fp = f(u);
    u(a) = -h;
    double fm = f(u);
    u(a) = 0;
    hess(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
  }
  for (int a = 0; a < P; ++a)
    for (int b = a + 1; b < P; ++b) {
      u(a) = h;
      u(b) = h;
      double fpp = f(u);
      u(b) = -h;
      double fpm = f(u);
      u(a) = -h;
      double fmm = f(u);
      u(b) = h;
      double fmp = f(u);
      u(a) = u(b) = 0;
      hess(a, b) = hess(b, a) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
    }
  return hess;
}

MorseReport count_spectrum(const Eigen::MatrixXd& hess, int orbit_dim,
                           double zero_tol) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(hess);
  MorseReport rep;
  rep.eigenvalues = es.eigenvalues();
  rep.orbit_dim = orbit_dim;
  double top = rep.eigenvalues.cwiseAbs().maxCoeff();
  rep.zero_tol = zero_tol > 0 ? zero_tol : 1e-6 * top;
  int zeros = 0;
  for (int i = 0; i < rep.eigenvalues.size(); ++i) {
    double lam = rep.eigenvalues(i);
    if (lam < -rep.zero_tol)
      ++rep.index;
    else if (std::abs(lam) <= rep.zero_tol)
      ++zeros;
  }
  rep.nullity = std::max(0, zeros - orbit_dim);
  return rep;
}

}  // namespace

double chart_energy(const ChartPoint& v) {
  return energy(from_spherical(v), Potential::log());
}

Eigen::Matrix<double, 7, 1> chart_gradient(const ChartPoint& v, double fd_step) {
  if (!(fd_step > 0)) throw ArgumentError("difference step must be positive");
  check_gauge(v);
  Eigen::Matrix<double, 7, 1> g;
  ChartPoint probe = v;
  for (int a = 0; a < 7; ++a) {
    probe.v(a) = v.v(a) + fd_step;
    double fp = chart_energy(probe);
    probe.v(a) = v.v(a) - fd_step;
    double fm = chart_energy(probe);
    probe.v(a) = v.v(a);
    g(a) = (fp - fm) / (2.0 * fd_step);
  }
  return g;
}

Eigen::Matrix<double, 7, 7> chart_hessian(const ChartPoint& v, double fd_step) {
  if (!(fd_step > 0)) throw ArgumentError("difference step must be positive");
  check_gauge(v);
  auto f = [&](const Eigen::Matrix<double, 7, 1>& u) {
    ChartPoint probe;
    probe.v = v.v + u;
    return chart_energy(probe);
  };
  return fd_hessian<decltype(f), 7>(f, fd_step);
}

MorseReport chart_morse_index(const ChartPoint& v, double fd_step, double zero_tol) {
  Eigen::Matrix<double, 7, 1> g = chart_gradient(v, fd_step);
  if (g.cwiseAbs().maxCoeff() >= 1e-6)
    throw NotStationaryError("chart gradient is not negligible");
  Eigen::Matrix<double, 7, 7> hess = chart_hessian(v, fd_step);
  hess = 0.5 * (hess + hess.transpose()).eval();
  return count_spectrum(hess, 0, zero_tol);
}

MorseReport morse_index(const Config& config, const Potential& pot,
                        double fd_step, double zero_tol) {
  if (!(fd_step > 0)) throw ArgumentError("difference step must be positive");
  if (riemannian_grad_norm(config, pot) >= 1e-8)
    throw NotStationaryError("config is not stationary under this potential");

  const int n = config.size();
  const int d = config.dim();
  const int p = n * (d - 1);
  const auto& pts = config.points();

  std::vector<Eigen::MatrixXd> frames;
  frames.reserve(n);
  for (int i = 0; i < n; ++i)
    frames.push_back(detail::tangent_frame(pts.row(i).transpose()));

  auto f = [&](const Eigen::VectorXd& u) {
    Eigen::MatrixXd y = pts;
    for (int i = 0; i < n; ++i) {
      y.row(i) += (frames[i] * u.segment(i * (d - 1), d - 1)).transpose();
      y.row(i).normalize();
    }
    return detail::energy_of(y, pot);
  };

  Eigen::MatrixXd hess(p, p);
  {
    Eigen::VectorXd u = Eigen::VectorXd::Zero(p);
    const double h = fd_step;
    const double f0 = f(u);
    for (int a = 0; a < p; ++a) {
      u(a) = h;
      double fp = f(u);
      u(a) = -h;
      double fm = f(u);
      u(a) = 0;
      hess(a, a) = (fp - 2.0 * f0 + fm) / (h * h);
    }
    for (int a = 0; a < p; ++a)
      for (int b = a + 1; b < p; ++b) {
        u(a) = h;
        u(b) = h;
        double fpp = f(u);
        u(b) = -h;
        double fpm = f(u);
        u(a) = -h;
        double fmm = f(u);
        u(b) = h;
        double fmp = f(u);
        u(a) = u(b) = 0;
        hess(a, b) = hess(b, a) = (fpp - fpm - fmp + fmm) / (4.0 * h * h);
      }
  }
  hess = 0.5 * (hess + hess.transpose()).eval();

  // First-order action of each rotation generator, written in the frames.
  const int gens = d * (d - 1) / 2;
  Eigen::MatrixXd orbit(p, gens);
  int col = 0;
  for (int a = 0; a < d; ++a)
    for (int b = a + 1; b < d; ++b, ++col)
      for (int i = 0; i < n; ++i) {
        Eigen::VectorXd w = Eigen::VectorXd::Zero(d);
        w(a) = pts(i, b);
        w(b) = -pts(i, a);
        orbit.block(i * (d - 1), col, d - 1, 1) = frames[i].transpose() * w;
      }

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(orbit, Eigen::ComputeThinU);
  const auto& sv = svd.singularValues();
  double cutoff = 1e-8 * std::max(sv(0), 1.0);
  int orbit_dim = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++orbit_dim;
  if (orbit_dim > 0) {
    Eigen::MatrixXd q = svd.matrixU().leftCols(orbit_dim);
    Eigen::MatrixXd proj = Eigen::MatrixXd::Identity(p, p) - q * q.transpose();
    hess = proj * hess * proj;
  }
  return count_spectrum(hess, orbit_dim, zero_tol);
}

}  // namespace sphconf
