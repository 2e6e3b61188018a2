#include "sphconf/potential.hpp"

#include <cmath>
#include <json.hpp>
#include <sstream>

namespace sphconf {

namespace {

std::string num(double x) { return nlohmann::json(x).dump(); }

}  // namespace

Potential Potential::log() { return Potential(); }

Potential Potential::riesz(double s) {
  if (s == 0.0) throw ArgumentError("riesz exponent must be nonzero");
  if (!std::isfinite(s)) throw ArgumentError("riesz exponent must be finite");
  Potential p;
  p.kind_ = Kind::Riesz;
  p.s_ = s;
  return p;
}

Potential Potential::gauss(double alpha) {
  if (!(alpha > 0.0) || !std::isfinite(alpha))
    throw ArgumentError("gauss width must be positive");
  Potential p;
  p.kind_ = Kind::Gauss;
  p.alpha_ = alpha;
  return p;
}

Potential Potential::biquadratic(double a, double b, double c) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c))
    throw ArgumentError("biquadratic coefficients must be finite");
  if (!(a > 0.0)) throw ArgumentError("biquadratic needs a > 0");
  if (!(b > 2.0 * a)) throw ArgumentError("biquadratic needs b > 2a");
  Potential p;
  p.kind_ = Kind::BiQuadratic;
  p.qa_ = a;
  p.qb_ = b;
  p.qc_ = c;
  return p;
}

Potential Potential::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string args = colon == std::string::npos ? "" : text.substr(colon + 1);
  auto number = [](const std::string& s) {
    try {
      size_t pos = 0;
      double v = std::stod(s, &pos);
      if (pos != s.size()) throw std::invalid_argument(s);
      return v;
    } catch (const std::exception&) {
      throw ArgumentError("cannot parse number '" + s + "' in potential spec");
    }
  };
  if (name == "log") {
    if (!args.empty()) throw ArgumentError("log potential takes no parameters");
    return log();
  }
  if (name == "riesz") {
    if (args.empty()) throw ArgumentError("riesz potential needs an exponent, e.g. riesz:1");
    return riesz(number(args));
  }
  if (name == "gauss") {
    if (args.empty()) throw ArgumentError("gauss potential needs a width, e.g. gauss:1");
    return gauss(number(args));
  }
  if (name == "biquad") {
    std::vector<double> v;
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ',')) v.push_back(number(item));
    if (v.size() != 3)
      throw ArgumentError("biquad potential needs three coefficients, e.g. biquad:1,3,0");
    return biquadratic(v[0], v[1], v[2]);
  }
  throw ArgumentError("unknown potential '" + name +
                      "' (expected log, riesz:s, gauss:a, or biquad:a,b,c)");
}

std::string Potential::to_string() const {
  switch (kind_) {
    case Kind::Log:
      return "log";
    case Kind::Riesz:
      return "riesz:" + num(s_);
    case Kind::Gauss:
      return "gauss:" + num(alpha_);
    case Kind::BiQuadratic:
      return "biquad:" + num(qa_) + "," + num(qb_) + "," + num(qc_);
  }
  return "";
}

double Potential::eval(double t, int order) const {
  if (order < 0 || order > 2) throw ArgumentError("derivative order must be 0, 1, or 2");
  switch (kind_) {
    case Kind::Log: {
      double r = 1.0 - t;
      if (r < 1e-15) throw SingularPairError("pair at zero distance under log potential");
      if (order == 0) return -0.5 * std::log(2.0 * r);
      if (order == 1) return 0.5 / r;
      return 0.5 / (r * r);
    }
    case Kind::Riesz: {
      double u = 2.0 - 2.0 * t;
      if (1.0 - t < 1e-15)
        throw SingularPairError("pair at zero distance under riesz potential");
      if (s_ > 0.0) {
        if (order == 0) return std::pow(u, -0.5 * s_);
        if (order == 1) return s_ * std::pow(u, -0.5 * s_ - 1.0);
        return s_ * (s_ + 2.0) * std::pow(u, -0.5 * s_ - 2.0);
      }
      double p = -s_;
      if (order == 0) return -std::pow(u, 0.5 * p);
      if (order == 1) return p * std::pow(u, 0.5 * p - 1.0);
      return -p * (p - 2.0) * std::pow(u, 0.5 * p - 2.0);
    }
    case Kind::Gauss: {
      double base = std::exp(alpha_ * t);
      if (order == 0) return base;
      if (order == 1) return alpha_ * base;
      return alpha_ * alpha_ * base;
    }
    case Kind::BiQuadratic: {
      if (order == 0) return (qa_ * t + qb_) * t + qc_;
      if (order == 1) return 2.0 * qa_ * t + qb_;
      return 2.0 * qa_;
    }
  }
  throw ArgumentError("unreachable potential kind");
}

bool Potential::strictly_convex() const {
  switch (kind_) {
    case Kind::Log:
      return true;
    case Kind::Riesz:
      return s_ > -2.0;
    case Kind::Gauss:
      return true;
    case Kind::BiQuadratic:
      return true;
  }
  return false;
}

namespace detail {

double energy_of(const Eigen::MatrixXd& pts, const Potential& pot) {
  const int n = static_cast<int>(pts.rows());
  double acc = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) acc += pot.eval(pts.row(i).dot(pts.row(j)));
  return 2.0 * acc;
}

Eigen::MatrixXd gradient_of(const Eigen::MatrixXd& pts, const Potential& pot) {
  const int n = static_cast<int>(pts.rows());
  Eigen::MatrixXd g = Eigen::MatrixXd::Zero(n, pts.cols());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      g.row(i) += 2.0 * pot.eval(pts.row(i).dot(pts.row(j)), 1) * pts.row(j);
    }
  return g;
}

}  // namespace detail

double energy(const Config& config, const Potential& pot) {
  return detail::energy_of(config.points(), pot);
}

Eigen::MatrixXd euclidean_gradient(const Config& config, const Potential& pot) {
  return detail::gradient_of(config.points(), pot);
}

Eigen::MatrixXd riemannian_gradient(const Config& config, const Potential& pot) {
  Eigen::MatrixXd g = detail::gradient_of(config.points(), pot);
  const auto& pts = config.points();
  for (int i = 0; i < g.rows(); ++i)
    g.row(i) -= g.row(i).dot(pts.row(i)) * pts.row(i);
  return g;
}

double riemannian_grad_norm(const Config& config, const Potential& pot) {
  Eigen::MatrixXd g = riemannian_gradient(config, pot);
  return g.rowwise().norm().maxCoeff();
}

ForceReport log_force_report(const Config& config) {
  const auto& pts = config.points();
  const int n = config.size();
  ForceReport rep;
  rep.residual.resize(n);
  rep.lambda.resize(n);
  rep.distance_sum_defect.resize(n);
  for (int i = 0; i < n; ++i) {
    Eigen::RowVectorXd force = Eigen::RowVectorXd::Zero(config.dim());
    double dist_sum = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double r = 1.0 - pts.row(i).dot(pts.row(j));
      if (r < 1e-15) throw SingularPairError("pair at zero distance in force report");
      force += (pts.row(i) - pts.row(j)) / r;
      dist_sum += r;
    }
    rep.residual(i) = (force - (n - 1.0) * pts.row(i)).norm();
    rep.lambda(i) = pts.row(i).dot(force);
    rep.distance_sum_defect(i) = dist_sum - n;
  }
  rep.max_residual = rep.residual.maxCoeff();
  rep.centroid_norm = config.centroid().norm();
  return rep;
}

}  // namespace sphconf
