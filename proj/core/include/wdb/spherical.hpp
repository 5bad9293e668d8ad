#ifndef WDB_SPHERICAL_HPP
#define WDB_SPHERICAL_HPP

#include "wdb/types.hpp"

namespace wdb {

// Volume alpha_k of the unit ball in R^k, by the recursion
// alpha_k = alpha_{k-2} * 2*pi / k with alpha_1 = 2, alpha_2 = pi.
// The recursion (rather than Gamma evaluation) keeps results bit-stable.
double unit_ball_volume(int k);

// Surface measure of the (k-1)-sphere of radius r in R^k: k * alpha_k * r^{k-1}.
double sphere_area(int k, double r);

// Integral of sin^exponent over [lower, upper] in [0, pi], evaluated by the
// exact integer-exponent antiderivative recursion.
double sin_power_integral(int exponent, double lower, double upper);

// Same integral by adaptive quadrature; the independent cross-check path.
double sin_power_integral_quad(int exponent, double lower, double upper,
                               double abs_tol = 1e-12);

// Volume of the polar cap of the n-ball of radius r subtended by polar
// angle theta: alpha_{n-1} * r^n * integral_0^theta sin^n.
// theta = pi gives the full ball.
double cap_volume(Dimension n, double r, double theta);

// (n-1)-measure of the zone {polar angle in [t1, t2]} on the unit
// (n-1)-sphere in R^n, as the integral of the latitude sphere measure f(t).
double zone_area(Dimension n, double t1, double t2);

// Measure of the latitude (n-2)-sphere at polar angle t on the unit
// (n-1)-sphere: (n-1) * alpha_{n-1} * sin^{n-2}(t).  This is the zone
// integrand and the "inner perimeter" function of the cuff comparisons.
double latitude_sphere_measure(Dimension n, double t);

}  // namespace wdb

#endif
