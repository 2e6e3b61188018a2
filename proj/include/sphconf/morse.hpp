#pragma once

#include <Eigen/Dense>

#include "sphconf/chart.hpp"
#include "sphconf/geometry.hpp"
#include "sphconf/potential.hpp"

namespace sphconf {

struct MorseReport {
  Eigen::VectorXd eigenvalues;  // ascending
  int index = 0;                // eigenvalues below -zero_tol
  int nullity = 0;              // |eigenvalue| <= zero_tol, rotation zeros excluded
  int orbit_dim = 0;            // rank of the rotation-generator span (0 in chart)
  double zero_tol = 0;          // resolved absolute threshold
};

// Log energy as a function of the seven chart angles.
double chart_energy(const ChartPoint& v);

// Central finite-difference gradient/Hessian in the chart. Both throw
// GaugeSingularError when any of points 2..5 sits at a pole.
Eigen::Matrix<double, 7, 1> chart_gradient(const ChartPoint& v, double fd_step = 1e-4);
Eigen::Matrix<double, 7, 7> chart_hessian(const ChartPoint& v, double fd_step = 1e-4);

// Throws NotStationaryError when the chart gradient exceeds 1e-6.
// zero_tol <= 0 resolves to 1e-6 * max |eigenvalue|.
MorseReport chart_morse_index(const ChartPoint& v, double fd_step = 1e-4,
                              double zero_tol = 0);

// Coordinate-free variant for any dimension and potential: finite-difference
// Hessian over an orthonormal tangent frame (N(d-1) directions, radial
// renormalization retraction), with the span of the d(d-1)/2 rotation
// generators projected out before counting. Requires a stationary input
// (Riemannian gradient norm < 1e-8).
MorseReport morse_index(const Config& config, const Potential& pot,
                        double fd_step = 1e-4, double zero_tol = 0);

}  // namespace sphconf
