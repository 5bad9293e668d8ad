#ifndef WDB_ROOTFIND_HPP
#define WDB_ROOTFIND_HPP

#include <cmath>
#include <functional>
#include <utility>

#include "wdb/errors.hpp"

namespace wdb {

// Bisection on a bracketed sign change, then one secant polish step.
// Used where monotonicity is established but smoothness constants are not.
template <typename F>
double bisect_root(F&& f, double lo, double hi, double f_tol = 1e-12,
                   int max_iter = 200) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw internal_error("bisect_root: endpoints do not bracket a root");
  double mid = lo, fmid = flo;
  for (int i = 0; i < max_iter; ++i) {
    mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;  // interval at machine resolution
    fmid = f(mid);
    if (std::fabs(fmid) < f_tol) break;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  // secant polish inside the final bracket
  if (fhi != flo) {
    const double s = lo - flo * (hi - lo) / (fhi - flo);
    if (s > std::fmin(lo, hi) && s < std::fmax(lo, hi)) {
      const double fs = f(s);
      if (std::fabs(fs) <= std::fabs(fmid)) return s;
    }
  }
  return mid;
}

// Expand a trial bracket geometrically toward the hard limits until the
// function changes sign.  f must be monotone between the limits.
template <typename F>
std::pair<double, double> expand_bracket(F&& f, double lo, double hi,
                                         double limit_lo, double limit_hi,
                                         int max_steps = 80) {
  double flo = f(lo), fhi = f(hi);
  for (int i = 0; i < max_steps; ++i) {
    if ((flo > 0.0) != (fhi > 0.0)) return {lo, hi};
    if (std::fabs(flo) < std::fabs(fhi)) {
      hi = lo;
      fhi = flo;
      lo = limit_lo + 0.5 * (lo - limit_lo);
      flo = f(lo);
    } else {
      lo = hi;
      flo = fhi;
      hi = limit_hi - 0.5 * (limit_hi - hi);
      fhi = f(hi);
    }
  }
  throw internal_error("expand_bracket: no sign change found");
}

}  // namespace wdb

#endif
