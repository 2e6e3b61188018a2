#include "sphconf/chart.hpp"

#include <cmath>

namespace sphconf {

namespace {

int theta_slot(int k) {
  switch (k) {
    case 2: return 0;
    case 3: return 2;
    case 4: return 4;
    case 5: return 6;
  }
  throw ArgumentError("theta index must be 2..5");
}

int phi_slot(int k) {
  switch (k) {
    case 3: return 1;
    case 4: return 3;
    case 5: return 5;
  }
  throw ArgumentError("phi index must be 3..5");
}

}  // namespace

double ChartPoint::theta(int k) const { return v(theta_slot(k)); }
double ChartPoint::phi(int k) const { return v(phi_slot(k)); }

ChartPoint chart_pentagon() {
  ChartPoint c;
  const double fifth = 2.0 * M_PI / 5.0;
  c.v << fifth, 0.0, 2.0 * fifth, M_PI, 2.0 * fifth, M_PI, fifth;
  return c;
}

ChartPoint chart_square_pyramid() {
  ChartPoint c;
  const double w = std::acos(-0.25);
  c.v << w, 0.5 * M_PI, w, M_PI, w, 1.5 * M_PI, w;
  return c;
}

ChartPoint chart_bipyramid() {
  ChartPoint c;
  const double h = 0.5 * M_PI;
  const double t = 2.0 * M_PI / 3.0;
  c.v << h, M_PI, h, 0.5 * M_PI, t, 1.5 * M_PI, t;
  return c;
}

Config from_spherical(const ChartPoint& c) {
  Eigen::MatrixXd pts(5, 3);
  pts.row(0) << 0.0, 0.0, 1.0;
  auto place = [&](int row, double theta, double phi) {
    pts.row(row) << std::sin(theta) * std::cos(phi),
        std::sin(theta) * std::sin(phi), std::cos(theta);
  };
  place(1, c.theta(2), 0.0);
  for (int k = 3; k <= 5; ++k) place(k - 1, c.theta(k), c.phi(k));
  return Config::unchecked(std::move(pts), "chart");
}

ChartPoint to_spherical(const Config& config) {
  if (config.dim() != 3 || config.size() != 5)
    throw ArgumentError("spherical chart needs 5 points on the 2-sphere");
  Eigen::MatrixXd pts = config.points();

  Eigen::MatrixXd r1 = detail::rotation_taking(
      pts.row(0).transpose(), Eigen::Vector3d::UnitZ());
  pts = pts * r1.transpose();

  double rho = std::hypot(pts(1, 0), pts(1, 1));
  if (rho < 1e-9)
    throw GaugeSingularError("second point sits at a pole; azimuth gauge undefined");
  double alpha = std::atan2(pts(1, 1), pts(1, 0));
  Eigen::Matrix3d rz;
  rz << std::cos(alpha), std::sin(alpha), 0,
      -std::sin(alpha), std::cos(alpha), 0,
      0, 0, 1;
  pts = pts * rz.transpose();

  auto polar = [](double z) {
    return std::acos(std::clamp(z, -1.0, 1.0));
  };
  auto azimuth = [](double x, double y) {
    if (std::hypot(x, y) < 1e-9) return 0.0;
    double phi = std::atan2(y, x);
    if (phi < 0) phi += 2.0 * M_PI;
    return phi;
  };

  ChartPoint c;
  c.v(0) = polar(pts(1, 2));
  for (int k = 3; k <= 5; ++k) {
    c.v(2 * (k - 3) + 1) = azimuth(pts(k - 1, 0), pts(k - 1, 1));
    c.v(2 * (k - 3) + 2) = polar(pts(k - 1, 2));
  }
  return c;
}

}  // namespace sphconf
