#pragma once

#include <Eigen/Dense>
#include <string>

#include "sphconf/geometry.hpp"

namespace sphconf {

// Pair potential h(t) of the inner product t = x.y, so the pair energy of
// {x, y} is h(x.y) and |x-y|^2 = 2-2t throughout:
//   Log:         h(t) = -(1/2) log(2-2t)            (= -log|x-y|)
//   Riesz s>0:   h(t) = (2-2t)^{-s/2}               (= |x-y|^{-s})
//   Riesz s<0:   h(t) = -(2-2t)^{|s|/2}             (= -|x-y|^{|s|})
//   Gauss:       h(t) = exp(alpha t),  alpha > 0
//   BiQuadratic: h(t) = a t^2 + b t + c,  a > 0, b > 2a
class Potential {
 public:
  enum class Kind { Log, Riesz, Gauss, BiQuadratic };

  static Potential log();
  static Potential riesz(double s);
  static Potential gauss(double alpha);
  static Potential biquadratic(double a, double b, double c);
  // "log" | "riesz:S" | "gauss:A" | "biquad:A,B,C"
  static Potential parse(const std::string& text);

  Kind kind() const { return kind_; }
  double riesz_s() const { return s_; }
  double gauss_alpha() const { return alpha_; }
  double quad_a() const { return qa_; }
  double quad_b() const { return qb_; }
  double quad_c() const { return qc_; }
  std::string to_string() const;

  // h, h' or h'' at t (order 0, 1, 2). Log/Riesz throw SingularPairError
  // when 1 - t < 1e-15.
  double eval(double t, int order = 0) const;

  // h'' > 0 on (-1,1): Log, Riesz s>0, Riesz -2<s<0, Gauss, BiQuadratic.
  bool strictly_convex() const;

 private:
  Kind kind_ = Kind::Log;
  double s_ = 0, alpha_ = 0, qa_ = 0, qb_ = 0, qc_ = 0;
};

// Sum of h over ordered pairs i != j, i.e. exactly twice the sum over i < j.
double energy(const Config& config, const Potential& pot);

// Free gradient in R^{N x d}: row i is 2 * sum_{j != i} h'(x_i.x_j) x_j.
Eigen::MatrixXd euclidean_gradient(const Config& config, const Potential& pot);

// Rows projected onto each point's tangent space.
Eigen::MatrixXd riemannian_gradient(const Config& config, const Potential& pot);

// max_i || (I - x_i x_i^T) grad_i ||.
double riemannian_grad_norm(const Config& config, const Potential& pot);

// Per-point force balance for the Log kind, written with r_ij := 1 - x_i.x_j:
// at a stationary config sum_{j != i} (x_i - x_j)/r_ij = (N-1) x_i and
// sum_j r_ij = N for every i.
struct ForceReport {
  Eigen::VectorXd residual;             // ||sum_j (x_i-x_j)/r_ij - (N-1) x_i||
  Eigen::VectorXd lambda;               // x_i . sum_j (x_i-x_j)/r_ij
  Eigen::VectorXd distance_sum_defect;  // sum_j r_ij - N
  double max_residual = 0;
  double centroid_norm = 0;
};

ForceReport log_force_report(const Config& config);

namespace detail {

// Raw-matrix versions used by the optimizer's line search, where candidate
// point sets exist before any Config validation.
double energy_of(const Eigen::MatrixXd& pts, const Potential& pot);
Eigen::MatrixXd gradient_of(const Eigen::MatrixXd& pts, const Potential& pot);

}  // namespace detail

}  // namespace sphconf
