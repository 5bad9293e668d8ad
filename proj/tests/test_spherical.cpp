#include <doctest.h>

#include <cmath>
#include <random>

#include "wdb/spherical.hpp"

using namespace wdb;

namespace {

// test-side oracle: plain adaptive Simpson, independent of the library's
// Gauss-Legendre path
double simpson(double (*f)(double), double a, double b, int depth = 24,
               double tol = 1e-13) {
  const double m = 0.5 * (a + b);
  auto s = [&](double x0, double x2) {
    const double x1 = 0.5 * (x0 + x2);
    return (x2 - x0) / 6.0 * (f(x0) + 4.0 * f(x1) + f(x2));
  };
  const double whole = s(a, b), left = s(a, m), right = s(m, b);
  if (depth <= 0 || std::fabs(left + right - whole) < 15.0 * tol)
    return left + right + (left + right - whole) / 15.0;
  return simpson(f, a, m, depth - 1, tol * 0.5) +
         simpson(f, m, b, depth - 1, tol * 0.5);
}

double sin4(double x) { return std::pow(std::sin(x), 4.0); }

}  // namespace

TEST_CASE("unit ball volumes") {
  CHECK(unit_ball_volume(1) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(unit_ball_volume(2) == doctest::Approx(M_PI).epsilon(1e-15));
  CHECK(unit_ball_volume(3) == doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-15));
  CHECK(unit_ball_volume(4) == doctest::Approx(M_PI * M_PI / 2.0).epsilon(1e-15));
  CHECK_THROWS_AS(unit_ball_volume(0), domain_error);
}

TEST_CASE("sphere areas") {
  CHECK(sphere_area(2, 1.0) == doctest::Approx(2.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_area(3, 1.0) == doctest::Approx(4.0 * M_PI).epsilon(1e-15));
  CHECK(sphere_area(3, 2.0) == doctest::Approx(16.0 * M_PI).epsilon(1e-15));
  CHECK_THROWS_AS(sphere_area(3, 0.0), domain_error);
  CHECK_THROWS_AS(sphere_area(3, -1.0), domain_error);
}

TEST_CASE("sin power integral recursion matches quadrature") {
  for (int k = 0; k <= 12; ++k) {
    for (auto [a, b] : {std::pair{0.0, M_PI}, {0.3, 2.2}, {1.0, 1.5}}) {
      const double exact = sin_power_integral(k, a, b);
      const double quad = sin_power_integral_quad(k, a, b);
      CHECK(exact == doctest::Approx(quad).epsilon(1e-12));
      CHECK(exact >= 0.0);
    }
  }
  CHECK_THROWS_AS(sin_power_integral(2, -0.1, 1.0), domain_error);
  CHECK_THROWS_AS(sin_power_integral(2, 1.0, 0.5), domain_error);
}

TEST_CASE("cap volume: trivial anchors") {
  const Dimension n3(3);
  CHECK(cap_volume(n3, 1.0, M_PI) ==
        doctest::Approx(4.0 * M_PI / 3.0).epsilon(1e-14));
  CHECK(cap_volume(n3, 1.0, 0.5 * M_PI) ==
        doctest::Approx(2.0 * M_PI / 3.0).epsilon(1e-14));
  CHECK_THROWS_AS(cap_volume(n3, 1.0, -0.1), domain_error);
  CHECK_THROWS_AS(cap_volume(n3, 1.0, M_PI + 0.1), domain_error);
}

TEST_CASE("cap volume n=4 theta=pi/3: simpson and monte carlo oracles") {
  const Dimension n4(4);
  const double v = cap_volume(n4, 1.0, M_PI / 3.0);

  const double oracle =
      unit_ball_volume(3) * simpson(&sin4, 0.0, M_PI / 3.0);
  CHECK(v == doctest::Approx(oracle).epsilon(1e-11));

  // cap = {x in unit 4-ball : x1 >= cos(theta)}
  std::mt19937_64 rng(20240817);
  std::uniform_real_distribution<double> ux(std::cos(M_PI / 3.0), 1.0);
  const double s = std::sin(M_PI / 3.0);
  std::uniform_real_distribution<double> ut(-s, s);
  const int n_samples = 2'000'000;
  int hits = 0;
  for (int i = 0; i < n_samples; ++i) {
    const double x1 = ux(rng), x2 = ut(rng), x3 = ut(rng), x4 = ut(rng);
    if (x1 * x1 + x2 * x2 + x3 * x3 + x4 * x4 <= 1.0) ++hits;
  }
  const double box = (1.0 - std::cos(M_PI / 3.0)) * std::pow(2.0 * s, 3);
  const double mc = box * hits / n_samples;
  CHECK(v == doctest::Approx(mc).epsilon(6e-3));
}

TEST_CASE("zone area anchors and derived value") {
  const Dimension n3(3);
  CHECK(zone_area(n3, 0.0, M_PI) == doctest::Approx(4.0 * M_PI).epsilon(1e-12));
  CHECK(zone_area(n3, 0.0, 0.5 * M_PI) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-12));
  CHECK_THROWS_AS(zone_area(n3, 0.5, 0.2), domain_error);
  CHECK_THROWS_AS(zone_area(n3, -0.1, 0.2), domain_error);

  // n=5: f = 4 alpha_4 sin^3, antiderivative of sin^3 = cos^3/3 - cos
  const Dimension n5(5);
  auto anti = [](double t) {
    return std::pow(std::cos(t), 3) / 3.0 - std::cos(t);
  };
  const double closed =
      4.0 * unit_ball_volume(4) * (anti(M_PI / 3.0) - anti(M_PI / 6.0));
  CHECK(zone_area(n5, M_PI / 6.0, M_PI / 3.0) ==
        doctest::Approx(closed).epsilon(1e-12));
}

TEST_CASE("latitude sphere measure") {
  const Dimension n3(3);
  CHECK(latitude_sphere_measure(n3, 0.5 * M_PI) ==
        doctest::Approx(2.0 * M_PI).epsilon(1e-14));
  CHECK(latitude_sphere_measure(n3, M_PI / 6.0) ==
        doctest::Approx(M_PI).epsilon(1e-14));
  CHECK_THROWS_AS(latitude_sphere_measure(n3, -0.1), domain_error);
}

TEST_CASE("cap volume consistency: alpha_{n-1} int sin^n = alpha_n") {
  for (int n = 3; n <= 10; ++n) {
    const double lhs = cap_volume(Dimension(n), 1.0, M_PI);
    const double rhs = unit_ball_volume(n);
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * rhs);
  }
}

TEST_CASE("zone of the whole sphere equals n alpha_n") {
  for (int n = 3; n <= 10; ++n) {
    const double lhs = zone_area(Dimension(n), 0.0, M_PI);
    const double rhs = n * unit_ball_volume(n);
    CHECK(std::fabs(lhs - rhs) <= 1e-10 * rhs);
  }
}

TEST_CASE("cap volume monotone in theta and radius; zone additive") {
  const Dimension n4(4);
  double prev = 0.0;
  for (int i = 1; i <= 20; ++i) {
    const double v = cap_volume(n4, 1.0, i * M_PI / 20.0);
    CHECK(v > prev);
    prev = v;
  }
  CHECK(cap_volume(n4, 2.0, 1.0) > cap_volume(n4, 1.0, 1.0));

  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(0.0, M_PI);
  for (int i = 0; i < 25; ++i) {
    double t1 = u(rng), t2 = u(rng), t3 = u(rng);
    if (t1 > t2) std::swap(t1, t2);
    if (t2 > t3) std::swap(t2, t3);
    if (t1 > t2) std::swap(t1, t2);
    const double whole = zone_area(n4, t1, t3);
    const double split = zone_area(n4, t1, t2) + zone_area(n4, t2, t3);
    CHECK(split == doctest::Approx(whole).epsilon(1e-11));
  }
}

TEST_CASE("cap volume dilation covariance is exact up to roundoff") {
  const Dimension n5(5);
  for (double lambda : {0.5, 2.0, 3.7}) {
    const double lhs = cap_volume(n5, lambda * 1.3, 0.8);
    const double rhs = std::pow(lambda, 5) * cap_volume(n5, 1.3, 0.8);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-14));
  }
}
