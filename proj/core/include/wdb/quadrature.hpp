#ifndef WDB_QUADRATURE_HPP
#define WDB_QUADRATURE_HPP

#include <array>
#include <cmath>

#include "wdb/errors.hpp"

namespace wdb {

// 15-point Gauss-Legendre nodes/weights on [-1, 1] (symmetric half stored).
namespace detail {
constexpr std::array<double, 8> kGl15Nodes = {
    0.0,
    0.2011940939974345,
    0.3941513470775634,
    0.5709721726085388,
    0.7244177313601701,
    0.8482065834104272,
    0.9372733924007060,
    0.9879925180204854,
};
constexpr std::array<double, 8> kGl15Weights = {
    0.2025782419255613,
    0.1984314853271116,
    0.1861610000155622,
    0.1662692058169939,
    0.1395706779261543,
    0.1071592204671719,
    0.0703660474881081,
    0.0307532419961173,
};
}  // namespace detail

template <typename F>
double gauss15(F&& f, double a, double b) {
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  double sum = detail::kGl15Weights[0] * f(mid);
  for (int i = 1; i < 8; ++i) {
    const double dx = half * detail::kGl15Nodes[i];
    sum += detail::kGl15Weights[i] * (f(mid - dx) + f(mid + dx));
  }
  return sum * half;
}

// Adaptive composite Gauss-Legendre to an absolute tolerance.  The interval
// is split until the two-panel refinement agrees with the single panel.
template <typename F>
double integrate(F&& f, double a, double b, double abs_tol = 1e-12) {
  if (a == b) return 0.0;
  struct Rec {
    const F& f;
    double tol;
    int depth_limit;
    double run(double lo, double hi, double whole, int depth) const {
      const double mid = 0.5 * (lo + hi);
      const double left = gauss15(f, lo, mid);
      const double right = gauss15(f, mid, hi);
      const double err = std::fabs(left + right - whole);
      if (err < tol || depth >= depth_limit) {
        if (depth >= depth_limit && err > 64.0 * tol)
          throw internal_error("adaptive quadrature failed to converge");
        return left + right;
      }
      return run(lo, mid, left, depth + 1) + run(mid, hi, right, depth + 1);
    }
  };
  Rec rec{f, abs_tol, 48};
  return rec.run(a, b, gauss15(f, a, b), 0);
}

}  // namespace wdb

#endif
