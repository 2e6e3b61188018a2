#include <doctest.h>

#include <cmath>

#include "sphconf/potential.hpp"

using namespace sphconf;

namespace {

const double kLog2 = std::log(2.0);

// Finite-difference cross-check of the first two derivatives of h.
void check_derivatives(const Potential& pot, double t) {
  const double h = 1e-6;
  double d1 = (pot.eval(t + h) - pot.eval(t - h)) / (2 * h);
  double d2 = (pot.eval(t + h, 1) - pot.eval(t - h, 1)) / (2 * h);
  CHECK(std::abs(d1 - pot.eval(t, 1)) <= 1e-6 * (1 + std::abs(d1)));
  CHECK(std::abs(d2 - pot.eval(t, 2)) <= 1e-6 * (1 + std::abs(d2)));
}

}  // namespace

TEST_CASE("pair potential closed-form values") {
  Potential lg = Potential::log();
  CHECK(std::abs(lg.eval(0.0) + 0.5 * kLog2) <= 1e-15);
  CHECK(std::abs(lg.eval(0.0, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(lg.eval(0.0, 2) - 0.5) <= 1e-15);
  CHECK(std::abs(lg.eval(0.5, 1) - 1.0) <= 1e-15);
  CHECK(std::abs(lg.eval(0.5, 2) - 2.0) <= 1e-15);

  Potential r2 = Potential::riesz(2);
  CHECK(std::abs(r2.eval(0.0) - 0.5) <= 1e-15);
  CHECK(std::abs(r2.eval(0.0, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(r2.eval(0.0, 2) - 1.0) <= 1e-15);

  // Negative order: h(t) = -|x - y|^{|s|}.
  Potential rm = Potential::riesz(-1);
  CHECK(std::abs(rm.eval(-1.0) + 2.0) <= 1e-15);
  CHECK(std::abs(rm.eval(-1.0, 1) - 0.5) <= 1e-15);
  CHECK(std::abs(rm.eval(-1.0, 2) - 0.125) <= 1e-15);

  Potential ga = Potential::gauss(1.5);
  CHECK(std::abs(ga.eval(0.2) - std::exp(0.3)) <= 1e-15);
  CHECK(std::abs(ga.eval(0.2, 1) - 1.5 * std::exp(0.3)) <= 1e-15);
  CHECK(std::abs(ga.eval(0.2, 2) - 2.25 * std::exp(0.3)) <= 1e-14);

  Potential bq = Potential::biquadratic(1, 3, 0.5);
  CHECK(std::abs(bq.eval(0.4) - (0.16 + 1.2 + 0.5)) <= 1e-15);
  CHECK(std::abs(bq.eval(0.4, 1) - 3.8) <= 1e-15);
  CHECK(bq.eval(0.4, 2) == 2.0);
}

TEST_CASE("pair potential derivatives match finite differences") {
  for (double t : {-0.9, -0.3, 0.2, 0.8}) {
    check_derivatives(Potential::log(), t);
    check_derivatives(Potential::riesz(2), t);
    check_derivatives(Potential::riesz(-1), t);
    check_derivatives(Potential::gauss(1.3), t);
    check_derivatives(Potential::biquadratic(1, 3, 0.5), t);
  }
}

TEST_CASE("potential factories validate their parameters") {
  CHECK_THROWS_AS(Potential::riesz(0), ArgumentError);
  CHECK_THROWS_AS(Potential::gauss(0), ArgumentError);
  CHECK_THROWS_AS(Potential::gauss(-1), ArgumentError);
  CHECK_THROWS_AS(Potential::biquadratic(0, 1, 0), ArgumentError);
  CHECK_THROWS_AS(Potential::biquadratic(-1, 3, 0), ArgumentError);
  CHECK_THROWS_AS(Potential::biquadratic(1, 2, 0), ArgumentError);
  CHECK(Potential::biquadratic(1, 2.001, 0).quad_b() == 2.001);
}

TEST_CASE("potential text parsing round-trips") {
  CHECK(Potential::parse("log").kind() == Potential::Kind::Log);
  CHECK(Potential::parse("riesz:2.5").riesz_s() == 2.5);
  CHECK(Potential::parse("riesz:-1.5").riesz_s() == -1.5);
  CHECK(Potential::parse("gauss:1.25").gauss_alpha() == 1.25);
  Potential bq = Potential::parse("biquad:1,3,0.5");
  CHECK(bq.quad_a() == 1.0);
  CHECK(bq.quad_b() == 3.0);
  CHECK(bq.quad_c() == 0.5);

  for (const char* text : {"log", "riesz:2.5", "riesz:-1.5", "gauss:1.25",
                           "biquad:1,3,0.5"}) {
    Potential p = Potential::parse(text);
    CHECK(Potential::parse(p.to_string()).to_string() == p.to_string());
  }

  for (const char* bad : {"", "nope", "riesz", "riesz:", "riesz:x", "riesz:0",
                          "gauss:-1", "biquad:1,3", "log:1"})
    CHECK_THROWS_AS(Potential::parse(bad), ArgumentError);
}

TEST_CASE("strict convexity by potential kind") {
  CHECK(Potential::log().strictly_convex());
  CHECK(Potential::riesz(2).strictly_convex());
  CHECK(Potential::riesz(-1).strictly_convex());
  CHECK(Potential::riesz(-1.999).strictly_convex());
  CHECK(!Potential::riesz(-2).strictly_convex());
  CHECK(!Potential::riesz(-3).strictly_convex());
  CHECK(Potential::gauss(1).strictly_convex());
  CHECK(Potential::biquadratic(1, 3, 0).strictly_convex());
}

TEST_CASE("coincident-pair guard") {
  CHECK_THROWS_AS(Potential::log().eval(1.0), SingularPairError);
  CHECK_THROWS_AS(Potential::riesz(2).eval(1.0, 1), SingularPairError);
  CHECK_THROWS_AS(Potential::riesz(-1).eval(1.0), SingularPairError);
  CHECK(std::abs(Potential::gauss(1).eval(1.0) - std::exp(1.0)) <= 1e-15);
  CHECK(Potential::biquadratic(1, 3, 0).eval(1.0) == 4.0);
}

TEST_CASE("energies of reference configurations") {
  Potential lg = Potential::log();
  double e_tbp = energy(orthogonal_simplexes(Partition::of({3, 2})), lg);
  CHECK(std::abs(e_tbp - (-3.0 * std::log(3.0) - 8.0 * kLog2)) <= 1e-12);

  CHECK(std::abs(energy(cross_polytope(2), lg) + 8.0 * kLog2) <= 1e-12);
  CHECK(std::abs(energy(regular_polygon(5), lg) + 5.0 * std::log(5.0)) <= 1e-12);

  for (int m = 3; m <= 6; ++m) {
    double want = -0.5 * m * (m - 1.0) * std::log(2.0 * m / (m - 1.0));
    CHECK(std::abs(energy(regular_simplex(m), lg) - want) <= 1e-12);
  }

  // Rotation/embedding invariance: the equatorial triangle is the 3-simplex.
  CHECK(std::abs(energy(regular_polygon(3), lg) - energy(regular_simplex(3), lg)) <=
        1e-12);
}

TEST_CASE("small-exponent energies approach logarithmic differences") {
  Config a = orthogonal_simplexes(Partition::of({3, 2}));
  Config b = square_pyramid(-0.25);
  Potential lg = Potential::log();
  double want = energy(a, lg) - energy(b, lg);
  double s = 1e-6;
  double got = (energy(a, Potential::riesz(s)) - energy(b, Potential::riesz(s))) / s;
  CHECK(std::abs(got - want) <= 1e-3 * std::abs(want));
}

TEST_CASE("free gradient matches finite differences of the energy") {
  for (int d : {2, 3, 4, 6}) {
    Config c = random_config(d, d + 2, 100 + d);
    for (const Potential& pot :
         {Potential::log(), Potential::riesz(2), Potential::gauss(1),
          Potential::biquadratic(1, 3, 0)}) {
      Eigen::MatrixXd g = euclidean_gradient(c, pot);
      const double h = 1e-6;
      for (int i = 0; i < c.size(); i += 2)
        for (int k = 0; k < d; ++k) {
          Eigen::MatrixXd up = c.points(), dn = c.points();
          up(i, k) += h;
          dn(i, k) -= h;
          double fd =
              (detail::energy_of(up, pot) - detail::energy_of(dn, pot)) / (2 * h);
          CHECK(std::abs(fd - g(i, k)) <= 1e-5 * (1.0 + std::abs(fd)));
        }
    }
  }
}

TEST_CASE("projected gradient rows are tangential") {
  Config c = random_config(4, 6, 11);
  Potential lg = Potential::log();
  Eigen::MatrixXd g = riemannian_gradient(c, lg);
  for (int i = 0; i < c.size(); ++i)
    CHECK(std::abs(g.row(i).dot(c.point(i))) <= 1e-13);
  CHECK(riemannian_grad_norm(c, lg) == doctest::Approx(g.rowwise().norm().maxCoeff()));
}

TEST_CASE("force report identities hold at the bipyramid") {
  Config c = orthogonal_simplexes(Partition::of({3, 2}));
  ForceReport r = log_force_report(c);
  CHECK(r.max_residual <= 1e-12);
  for (int i = 0; i < 5; ++i) {
    CHECK(std::abs(r.lambda(i) - 4.0) <= 1e-12);
    CHECK(std::abs(r.distance_sum_defect(i)) <= 1e-12);
  }
  CHECK(r.centroid_norm <= 1e-12);
}

TEST_CASE("force report identities that hold off stationarity") {
  Config c = random_config(3, 5, 21);
  ForceReport r = log_force_report(c);
  int n = c.size();
  // The multiplier is n-1 for every configuration, stationary or not,
  // and the distance-sum defect is determined by the centroid alone.
  Eigen::RowVectorXd centroid = c.centroid();
  Eigen::MatrixXd g = riemannian_gradient(c, Potential::log());
  for (int i = 0; i < n; ++i) {
    CHECK(std::abs(r.lambda(i) - (n - 1.0)) <= 1e-10);
    CHECK(std::abs(r.distance_sum_defect(i) + n * c.point(i).dot(centroid)) <= 1e-12);
    CHECK(std::abs(r.residual(i) - g.row(i).norm()) <= 1e-12);
  }
  CHECK(r.max_residual > 1e-3);  // a random cloud is nowhere near balanced
}

TEST_CASE("near-coincident pairs trip the singular guard") {
  Eigen::MatrixXd pts(3, 3);
  pts << 1, 0, 0,
      1, 1e-12, 0,
      0, 1, 0;
  for (int i = 0; i < 3; ++i) pts.row(i).normalize();
  Config c = Config::unchecked(pts);
  CHECK_THROWS_AS(energy(c, Potential::log()), SingularPairError);
  CHECK_THROWS_AS(log_force_report(c), SingularPairError);
}
