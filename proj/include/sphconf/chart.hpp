#pragma once

#include <Eigen/Dense>

#include "sphconf/geometry.hpp"

namespace sphconf {

// Gauge-fixed spherical coordinates for five points on S^2. Point 1 sits at the
// north pole and point 2 on the phi = 0 meridian, which kills the three
// rotational degrees of freedom and leaves the seven angles
//   (theta2, phi3, theta3, phi4, theta4, phi5, theta5),
// with x = (sin t cos p, sin t sin p, cos t), theta in [0,pi], phi in [0,2pi).
struct ChartPoint {
  Eigen::Matrix<double, 7, 1> v;

  double theta(int k) const;  // polar angle of point k in 2..5
  double phi(int k) const;    // azimuth of point k in 3..5
};

// Planar regular pentagon (a great circle through the pole).
ChartPoint chart_pentagon();
// Apex over a square base at height -1/4.
ChartPoint chart_square_pyramid();
// Triangular bipyramid with its two-point axis horizontal.
ChartPoint chart_bipyramid();

Config from_spherical(const ChartPoint& v);
// Rotates the config into the gauge first; throws GaugeSingularError when
// x2 lands on a pole (x1 = +-x2).
ChartPoint to_spherical(const Config& config);

}  // namespace sphconf
