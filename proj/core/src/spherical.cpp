#include "wdb/spherical.hpp"

#include <cmath>
#include <vector>

#include "wdb/quadrature.hpp"

namespace wdb {

double unit_ball_volume(int k) {
  if (k < 1) throw domain_error("unit_ball_volume: k must be >= 1");
  // iterate the two interleaved chains from alpha_1 = 2 and alpha_2 = pi
  double a = (k % 2 == 1) ? 2.0 : M_PI;
  for (int m = (k % 2 == 1) ? 1 : 2; m < k; m += 2) a *= 2.0 * M_PI / (m + 2);
  return a;
}

double sphere_area(int k, double r) {
  if (k < 1) throw domain_error("sphere_area: k must be >= 1");
  if (r <= 0.0) throw domain_error("sphere_area: radius must be positive");
  return k * unit_ball_volume(k) * std::pow(r, k - 1);
}

namespace {
void check_angle_range(double lower, double upper) {
  if (!(lower >= 0.0 && upper <= M_PI && lower <= upper))
    throw domain_error("sin-power integral: need 0 <= lower <= upper <= pi");
}
}  // namespace

double sin_power_integral(int exponent, double lower, double upper) {
  if (exponent < 0) throw domain_error("sin_power_integral: exponent < 0");
  check_angle_range(lower, upper);
  // S_k = [-cos t sin^{k-1} t]/k + (k-1)/k S_{k-2}
  const double cl = std::cos(lower), cu = std::cos(upper);
  const double sl = std::sin(lower), su = std::sin(upper);
  double s_even = upper - lower;       // S_0
  double s_odd = cl - cu;              // S_1
  double result = (exponent % 2 == 0) ? s_even : s_odd;
  for (int k = 2; k <= exponent; ++k) {
    const double boundary =
        (cl * std::pow(sl, k - 1) - cu * std::pow(su, k - 1)) / k;
    double& s = (k % 2 == 0) ? s_even : s_odd;
    s = boundary + (k - 1.0) / k * s;
    if (k == exponent) result = s;
  }
  return result;
}

double sin_power_integral_quad(int exponent, double lower, double upper,
                               double abs_tol) {
  if (exponent < 0) throw domain_error("sin_power_integral_quad: exponent < 0");
  check_angle_range(lower, upper);
  return integrate(
      [exponent](double t) { return std::pow(std::sin(t), exponent); }, lower,
      upper, abs_tol);
}

double cap_volume(Dimension n, double r, double theta) {
  if (r <= 0.0) throw domain_error("cap_volume: radius must be positive");
  if (!(theta >= 0.0 && theta <= M_PI))
    throw domain_error("cap_volume: theta must lie in [0, pi]");
  return unit_ball_volume(n.n - 1) * std::pow(r, n.n) *
         sin_power_integral(n.n, 0.0, theta);
}

double latitude_sphere_measure(Dimension n, double t) {
  if (!(t >= 0.0 && t <= M_PI))
    throw domain_error("latitude_sphere_measure: t must lie in [0, pi]");
  return (n.n - 1) * unit_ball_volume(n.n - 1) * std::pow(std::sin(t), n.n - 2);
}

double zone_area(Dimension n, double t1, double t2) {
  if (!(t1 >= 0.0 && t2 <= M_PI && t1 <= t2))
    throw domain_error("zone_area: need 0 <= t1 <= t2 <= pi");
  return integrate(
      [n](double t) { return latitude_sphere_measure(n, t); }, t1, t2, 1e-12);
}

}  // namespace wdb
