#include "sphconf/stationarity.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>
#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>

#include "sphconf/potential.hpp"

namespace sphconf {

namespace {

Eigen::MatrixXd interaction_matrix(const Eigen::MatrixXd& pts) {
  const int n = static_cast<int>(pts.rows());
  Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    double off = 0.0;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      double r = 1.0 - pts.row(i).dot(pts.row(j));
      if (r < 1e-15)
        throw SingularPairError("pair at zero distance in interaction matrix");
      b(i, j) = 1.0 / r;
      off += b(i, j);
    }
    b(i, i) = (n - 1.0) - off;
  }
  return b;
}

}  // namespace

SplitDiagnostics build_diagnostics(const Config& config) {
  const int n = config.size();
  SplitDiagnostics diag;
  diag.n = n;
  diag.dim = config.dim();
  diag.c = (n - 1.0) / n;
  diag.force_matrix = interaction_matrix(config.points());
  diag.split_matrix =
      Eigen::MatrixXd::Constant(n, n, diag.c) - diag.force_matrix;
  diag.force_defect =
      (diag.force_matrix * config.points()).rowwise().norm().maxCoeff();

  Eigen::JacobiSVD<Eigen::MatrixXd> svd(diag.split_matrix);
  const auto& sv = svd.singularValues();
  double cutoff = 1e-8 * std::max(sv(0), 1.0);
  diag.rank = 0;
  for (int i = 0; i < sv.size(); ++i)
    if (sv(i) > cutoff) ++diag.rank;

  diag.min_slack = std::numeric_limits<double>::quiet_NaN();
  if (diag.rank == 1 && n == diag.dim + 2) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(diag.split_matrix);
    const auto& ev = es.eigenvalues();
    int top = std::abs(ev(0)) > std::abs(ev(n - 1)) ? 0 : n - 1;
    if (ev(top) > 0) {
      Eigen::VectorXd a = std::sqrt(ev(top)) * es.eigenvectors().col(top);
      for (int i = 0; i < n; ++i) {
        if (std::abs(a(i)) > 1e-9) {
          if (a(i) < 0) a = -a;
          break;
        }
      }
      diag.factor = a;
      diag.q.resize(n);
      diag.r.resize(n);
      diag.s.resize(n);
      diag.t.resize(n);
      for (int i = 0; i < n; ++i) {
        double q = 0, r = 0, s = 0, t = 0;
        for (int j = 0; j < n; ++j) {
          if (j == i) continue;
          double den = diag.c - a(i) * a(j);
          q += 1.0 / den;
          r += a(j) / den;
          s += (a(j) * a(j) - a(j) * a(i)) / den;
          t += (diag.c - a(j) * a(j)) / den;
        }
        diag.q(i) = q;
        diag.r(i) = r;
        diag.s(i) = s;
        diag.t(i) = t;
      }
      diag.min_slack = std::numeric_limits<double>::infinity();
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
          if (j != i)
            diag.min_slack =
                std::min(diag.min_slack, diag.c - a(i) * a(j) - 0.5);
    }
  }
  return diag;
}

IdentityDefects identity_defects(const SplitDiagnostics& diag) {
  if (!diag.has_factor())
    throw NotApplicableError("diagnostics carry no rank-one factor");
  IdentityDefects d;
  d.q = diag.q.array() - diag.n;
  d.r = diag.r;
  d.s = diag.s.array() - 1.0;
  d.t = diag.t.array() - (diag.n - 2.0);
  d.min_slack = diag.min_slack;
  d.max_factor_excess =
      diag.factor.array().abs().maxCoeff() - std::sqrt(diag.c);
  return d;
}

double factor_profile(const SplitDiagnostics& diag, double t) {
  if (!diag.has_factor())
    throw NotApplicableError("diagnostics carry no rank-one factor");
  double f = 0;
  for (int j = 0; j < diag.n; ++j) {
    double a = diag.factor(j);
    f += (diag.c - a * a) / (diag.c - t * a);
  }
  return f;
}

std::vector<std::array<double, 3>> convexity_scan(const SplitDiagnostics& diag,
                                                  int grid_size) {
  if (!diag.has_factor())
    throw NotApplicableError("diagnostics carry no rank-one factor");
  if (grid_size < 1) throw ArgumentError("grid size must be positive");
  const double s = std::sqrt(diag.c);
  std::vector<std::array<double, 3>> rows;
  rows.reserve(grid_size);
  for (int k = 0; k < grid_size; ++k) {
    double t = -s + (k + 0.5) * 2.0 * s / grid_size;
    double curve = 0;
    for (int j = 0; j < diag.n; ++j) {
      double a = diag.factor(j);
      double den = diag.c - t * a;
      curve += 2.0 * (diag.c - a * a) * a * a / (den * den * den);
    }
    rows.push_back({t, factor_profile(diag, t), curve});
  }
  return rows;
}

std::string StationaryClass::to_string() const {
  std::ostringstream out;
  switch (kind) {
    case Kind::TwoSimplex:
      out << "TwoSimplex(" << partition[0] << "," << partition[1] << ")";
      break;
    case Kind::Pyramid:
      out << "Pyramid(" << Partition::of(partition).to_string() << ")";
      break;
    case Kind::Degenerate:
      out << "Degenerate(" << spanned_dim << ")";
      break;
    case Kind::NonStationary:
      out << "NonStationary(" << std::scientific << std::setprecision(3)
          << max_residual << ")";
      break;
  }
  return out.str();
}

namespace {

StationaryClass classify_impl(const Config& config, double tol, int depth) {
  const int n = config.size();
  const int d = config.dim();

  ForceReport rep = log_force_report(config);
  StationaryClass result;
  result.max_residual = rep.max_residual;
  result.spanned_dim = config.span_rank();

  if (rep.max_residual > tol) {
    result.kind = StationaryClass::Kind::NonStationary;
    return result;
  }
  if (result.spanned_dim < d) {
    result.kind = StationaryClass::Kind::Degenerate;
    return result;
  }
  if (n != d + 2)
    throw UnsupportedError(
        "stationary classification covers n = d + 2 points in d dimensions");

  SplitDiagnostics diag = build_diagnostics(config);
  if (diag.rank != 1) {
    std::ostringstream msg;
    msg << "split matrix has rank " << diag.rank << ", expected 1";
    throw ClassificationError(msg.str());
  }
  if (!diag.has_factor())
    throw ClassificationError("split matrix is rank one but negative");

  const Eigen::VectorXd& a = diag.factor;
  const double zero_tol = 1e-6 * std::sqrt(diag.c);

  int apex = -1;
  for (int i = 0; i < n; ++i)
    if (std::abs(a(i)) < zero_tol) {
      apex = i;
      break;
    }

  if (apex >= 0) {
    if (depth > n)
      throw ClassificationError("apex recursion failed to terminate");
    const auto& pts = config.points();
    for (int j = 0; j < n; ++j) {
      if (j == apex) continue;
      double r = 1.0 - pts.row(apex).dot(pts.row(j));
      if (std::abs(r - double(n) / (n - 1)) > 1e-6) {
        std::ostringstream msg;
        msg << "apex candidate " << apex << " sits at the wrong distance from point "
            << j;
        throw ClassificationError(msg.str());
      }
    }
    Eigen::MatrixXd rot = detail::rotation_taking(
        pts.row(apex).transpose(), Eigen::VectorXd::Unit(d, d - 1));
    Eigen::MatrixXd turned = pts * rot.transpose();
    Eigen::MatrixXd sub(n - 1, d - 1);
    const double stretch = (n - 1.0) / std::sqrt(double(n) * (n - 2.0));
    int row = 0;
    for (int j = 0; j < n; ++j) {
      if (j == apex) continue;
      sub.row(row) = stretch * turned.row(j).head(d - 1);
      sub.row(row).normalize();
      ++row;
    }
    StationaryClass inner =
        classify_impl(Config::from_points(std::move(sub)), tol, depth + 1);
    if (inner.kind != StationaryClass::Kind::TwoSimplex &&
        inner.kind != StationaryClass::Kind::Pyramid)
      throw ClassificationError(
          "configuration under the apex is not a recognizable stationary family");
    std::vector<int> blocks = {1};
    blocks.insert(blocks.end(), inner.partition.begin(), inner.partition.end());
    result.kind = StationaryClass::Kind::Pyramid;
    result.partition = std::move(blocks);
    result.diagnostics = std::move(diag);
    return result;
  }

  std::vector<int> pos, neg;
  for (int i = 0; i < n; ++i) (a(i) > 0 ? pos : neg).push_back(i);
  if (pos.size() < 2 || neg.size() < 2)
    throw ClassificationError(
        "factor signs do not split into two groups of at least two points");

  const double group_tol = std::max(1e-8, tol);
  for (const auto* group : {&pos, &neg}) {
    double mean = 0;
    for (int i : *group) mean += a(i);
    mean /= group->size();
    for (int i : *group)
      if (std::abs(a(i) - mean) > group_tol)
        throw ClassificationError("factor values within a sign group disagree");
  }

  Eigen::MatrixXd g = config.gram();
  const double gram_tol = std::max(1e-8, tol);
  for (const auto* group : {&pos, &neg}) {
    double target = -1.0 / (double(group->size()) - 1.0);
    for (size_t u = 0; u < group->size(); ++u)
      for (size_t v = u + 1; v < group->size(); ++v)
        if (std::abs(g((*group)[u], (*group)[v]) - target) > gram_tol)
          throw ClassificationError("within-group inner products are off target");
  }
  for (int i : pos)
    for (int j : neg)
      if (std::abs(g(i, j)) > gram_tol)
        throw ClassificationError("cross-group inner products are not orthogonal");

  int k = static_cast<int>(std::max(pos.size(), neg.size()));
  int m = static_cast<int>(std::min(pos.size(), neg.size()));
  result.kind = StationaryClass::Kind::TwoSimplex;
  result.partition = {k, m};
  result.diagnostics = std::move(diag);
  return result;
}

}  // namespace

StationaryClass classify(const Config& config, double tol) {
  return classify_impl(config, tol, 0);
}

}  // namespace sphconf
