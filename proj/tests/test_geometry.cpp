#include <doctest.h>

#include <cmath>
#include <set>

#include "sphconf/geometry.hpp"

using namespace sphconf;

namespace {

double max_abs(const Eigen::MatrixXd& m) { return m.cwiseAbs().maxCoeff(); }

double max_unit_defect(const Config& c) {
  return (c.points().rowwise().norm().array() - 1.0).abs().maxCoeff();
}

}  // namespace

TEST_CASE("regular simplex has constant mutual inner product") {
  for (int m = 2; m <= 9; ++m) {
    Config c = regular_simplex(m);
    CHECK(c.size() == m);
    CHECK(c.dim() == m - 1);
    CHECK(max_unit_defect(c) <= 1e-12);
    CHECK(c.centroid().norm() <= 1e-12);
    Eigen::MatrixXd g = c.gram();
    for (int i = 0; i < m; ++i)
      for (int j = 0; j < m; ++j) {
        double want = i == j ? 1.0 : -1.0 / (m - 1.0);
        CHECK(std::abs(g(i, j) - want) <= 1e-12);
      }
  }
  Config two = regular_simplex(2);
  CHECK(two.points()(0, 0) == 1.0);
  CHECK(two.points()(1, 0) == -1.0);
  CHECK_THROWS_AS(regular_simplex(1), ArgumentError);
}

TEST_CASE("partition parsing and derived quantities") {
  Partition p = Partition::parse("1,2,2");
  CHECK(p.blocks == std::vector<int>{1, 2, 2});
  CHECK(p.total() == 5);
  CHECK(p.dimension() == 3);
  CHECK(p.apex_count() == 1);
  CHECK(!p.all_regular());
  CHECK(p.ones_first());
  CHECK(p.to_string() == "[1,2,2]");

  CHECK(Partition::parse("3,2").dimension() == 3);
  CHECK(Partition::of({1, 1, 2, 2}).dimension() == 4);
  CHECK(Partition::of({1, 1, 3}).dimension() == 4);
  CHECK(Partition::of({4, 3}).all_regular());
  CHECK(!Partition::of({2, 1, 2}).ones_first());
  CHECK(Partition::of({2, 2}).ones_first());

  CHECK_THROWS_AS(Partition::of({}), ArgumentError);
  CHECK_THROWS_AS(Partition::of({0, 2}), ArgumentError);
  CHECK_THROWS_AS(Partition::of({3, -1}), ArgumentError);
  CHECK_THROWS_AS(Partition::parse(""), ArgumentError);
  CHECK_THROWS_AS(Partition::parse("a,2"), ArgumentError);
  CHECK_THROWS_AS(Partition::parse("3,"), ArgumentError);
}

TEST_CASE("orthogonal simplexes have block gram structure") {
  Config c = orthogonal_simplexes(Partition::of({3, 2}));
  CHECK(c.size() == 5);
  CHECK(c.dim() == 3);
  Eigen::MatrixXd g = c.gram();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(std::abs(g(i, j) + 0.5) <= 1e-12);
  CHECK(std::abs(g(3, 4) + 1.0) <= 1e-12);
  for (int i = 0; i < 3; ++i)
    for (int j = 3; j < 5; ++j) CHECK(std::abs(g(i, j)) <= 1e-12);

  CHECK_THROWS_AS(orthogonal_simplexes(Partition::of({1, 2, 2})), ArgumentError);
}

TEST_CASE("orthogonal simplexes stay clean in high dimension") {
  for (int d = 2; d <= 30; ++d) {
    int n_total = d + 2;
    for (int n = 2; n <= n_total / 2; ++n) {
      Config c = orthogonal_simplexes(Partition::of({n_total - n, n}));
      CHECK(c.size() == n_total);
      CHECK(c.dim() == d);
      CHECK(max_unit_defect(c) <= 1e-12);
      CHECK(c.centroid().norm() <= 1e-12);
      // Cross-block pairs are orthogonal and realize the minimum distance.
      CHECK(c.min_pairwise_distance() >= std::sqrt(2.0) - 1e-12);
    }
  }
}

TEST_CASE("pyramid construction peels apexes onto the pole") {
  Config c = pyramid_config(Partition::parse("1,2,2"));
  Config sq = square_pyramid(-0.25);
  CHECK(max_abs(c.points() - sq.points()) == 0.0);

  // No apexes: identical to the plain orthogonal construction.
  Config flat = pyramid_config(Partition::of({3, 2}));
  CHECK(max_abs(flat.points() - orthogonal_simplexes(Partition::of({3, 2})).points()) == 0.0);

  // One apex over a 2-simplex is an equilateral triangle on the circle.
  Config tri = pyramid_config(Partition::of({1, 2}));
  CHECK(tri.dim() == 2);
  Eigen::MatrixXd g = tri.gram();
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) CHECK(std::abs(g(i, j) + 0.5) <= 1e-12);

  CHECK_THROWS_AS(pyramid_config(Partition::of({2, 1, 2})), ArgumentError);
  CHECK_THROWS_AS(pyramid_config(Partition::of({1, 1})), ArgumentError);
}

TEST_CASE("every apex is equidistant from all other points") {
  for (const auto& blocks :
       {std::vector<int>{1, 2, 2}, {1, 3, 2}, {1, 1, 2, 2}, {1, 4, 3}}) {
    Partition p = Partition::of(blocks);
    Config c = pyramid_config(p);
    int n = c.size();
    Eigen::MatrixXd g = c.gram();
    for (int a = 0; a < p.apex_count(); ++a)
      for (int j = 0; j < n; ++j)
        if (j != a) CHECK(std::abs(g(a, j) + 1.0 / (n - 1.0)) <= 1e-12);
  }
}

TEST_CASE("cross polytope pairs axes antipodally") {
  Config c = cross_polytope(3);
  CHECK(c.size() == 6);
  CHECK(c.dim() == 3);
  Eigen::MatrixXd g = c.gram();
  for (int i = 0; i < 6; ++i)
    for (int j = i + 1; j < 6; ++j) {
      double want = (j == i + 1 && i % 2 == 0) ? -1.0 : 0.0;
      CHECK(std::abs(g(i, j) - want) <= 1e-15);
    }
  CHECK_THROWS_AS(cross_polytope(0), ArgumentError);
}

TEST_CASE("square pyramid geometry at a generic height") {
  double t = 0.3;
  Config c = square_pyramid(t);
  Eigen::MatrixXd g = c.gram();
  for (int j = 1; j < 5; ++j) CHECK(std::abs(g(0, j) - t) <= 1e-12);
  CHECK(std::abs(g(1, 2) - (2 * t * t - 1)) <= 1e-12);
  CHECK(std::abs(g(1, 3) - t * t) <= 1e-12);
  CHECK_THROWS_AS(square_pyramid(1.0), ArgumentError);
  CHECK_THROWS_AS(square_pyramid(-1.5), ArgumentError);
}

TEST_CASE("regular polygon sits on the equator") {
  Config c = regular_polygon(5);
  CHECK(c.size() == 5);
  CHECK(c.dim() == 3);
  CHECK(c.span_rank() == 2);
  for (int i = 0; i < 5; ++i) CHECK(c.points()(i, 2) == 0.0);
  Eigen::MatrixXd g = c.gram();
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j)
      CHECK(std::abs(g(i, j) - std::cos(2.0 * M_PI * (j - i) / 5.0)) <= 1e-12);
  CHECK_THROWS_AS(regular_polygon(2), ArgumentError);
}

TEST_CASE("random configs are reproducible and unit") {
  Config a = random_config(4, 6, 42);
  Config b = random_config(4, 6, 42);
  CHECK(max_abs(a.points() - b.points()) == 0.0);
  Config c = random_config(4, 6, 43);
  CHECK(max_abs(a.points() - c.points()) > 1e-3);
  CHECK(max_unit_defect(a) <= 1e-12);
  Config big = random_config(30, 32, 7);
  CHECK(max_unit_defect(big) <= 1e-12);
  CHECK_THROWS_AS(random_config(0, 5, 1), ArgumentError);
  CHECK_THROWS_AS(random_config(3, 1, 1), ArgumentError);
}

TEST_CASE("config construction validates its input") {
  Eigen::MatrixXd off(2, 2);
  off << 1.0, 0.0, 0.0, 1.0 + 1e-9;
  CHECK_THROWS_AS(Config::from_points(off), ArgumentError);
  CHECK_THROWS_AS(Config::unchecked(off), ArgumentError);

  Eigen::MatrixXd dup(2, 2);
  dup << 1.0, 0.0, 1.0, 0.0;
  CHECK_THROWS_AS(Config::from_points(dup), ArgumentError);
  CHECK(Config::unchecked(dup).size() == 2);

  Eigen::MatrixXd nan_pts(2, 2);
  nan_pts << 1.0, 0.0, std::nan(""), 0.0;
  CHECK_THROWS_AS(Config::from_points(nan_pts), ArgumentError);

  Eigen::MatrixXd one_row(1, 3);
  one_row << 0.0, 0.0, 1.0;
  CHECK_THROWS_AS(Config::from_points(one_row), ArgumentError);
}

TEST_CASE("gram diagonal is pinned to one") {
  Config c = random_config(5, 7, 9);
  Eigen::MatrixXd g = c.gram();
  for (int i = 0; i < c.size(); ++i) CHECK(g(i, i) == 1.0);
}

TEST_CASE("span rank distinguishes degenerate configs") {
  CHECK(regular_polygon(7).span_rank() == 2);
  CHECK(orthogonal_simplexes(Partition::of({3, 2})).span_rank() == 3);
  CHECK(regular_simplex(5).span_rank() == 4);
  CHECK(random_config(6, 8, 3).span_rank() == 6);
}

TEST_CASE("rotation taking one unit vector to another") {
  auto check_rotation = [](const Eigen::VectorXd& u, const Eigen::VectorXd& v) {
    Eigen::MatrixXd r = detail::rotation_taking(u, v);
    CHECK((r * u - v).norm() <= 1e-12);
    int d = static_cast<int>(u.size());
    CHECK(max_abs(r.transpose() * r - Eigen::MatrixXd::Identity(d, d)) <= 1e-12);
  };
  Eigen::VectorXd u(3), v(3);
  u << 1, 0, 0;
  v << 0, 0.6, 0.8;
  check_rotation(u, v);
  check_rotation(u, u);
  check_rotation(u, (-u).eval());
  Eigen::VectorXd a = random_config(5, 2, 1).point(0).transpose();
  Eigen::VectorXd b = random_config(5, 2, 2).point(1).transpose();
  check_rotation(a, b);
  Eigen::VectorXd s(1), t(1);
  s << 1;
  t << -1;
  check_rotation(s, t);
}

TEST_CASE("tangent frame spans the orthogonal complement") {
  for (int d : {2, 3, 7}) {
    Eigen::VectorXd x = random_config(d, 2, d).point(0).transpose();
    Eigen::MatrixXd q = detail::tangent_frame(x);
    CHECK(q.rows() == d);
    CHECK(q.cols() == d - 1);
    CHECK(max_abs(q.transpose() * q - Eigen::MatrixXd::Identity(d - 1, d - 1)) <= 1e-12);
    CHECK((q.transpose() * x).cwiseAbs().maxCoeff() <= 1e-12);
  }
  Eigen::VectorXd pole(3);
  pole << 0, 0, 1;
  Eigen::MatrixXd q = detail::tangent_frame(pole);
  CHECK((q.transpose() * pole).cwiseAbs().maxCoeff() <= 1e-12);
}

TEST_CASE("seed mixing separates streams deterministically") {
  CHECK(detail::mix_seed(5, 0) == detail::mix_seed(5, 0));
  CHECK(detail::mix_seed(5, 0) != detail::mix_seed(5, 1));
  CHECK(detail::mix_seed(5, 0) != detail::mix_seed(6, 0));
}
