// Test-side oracles, independent of the library's Green's-theorem path:
// region volumes by vertical-scanline decomposition of the meridian plane.
#ifndef WDB_TESTS_ORACLES_HPP
#define WDB_TESTS_ORACLES_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "wdb/network.hpp"
#include "wdb/spherical.hpp"

namespace wdb_test {

// crossings of the vertical line at x with the network's edges, each with
// the label of the region immediately below the crossing
struct Crossing {
  double y;
  wdb::RegionLabel below;
};

inline std::vector<Crossing> scan_crossings(const wdb::GeneratingNetwork& net,
                                            double x) {
  using namespace wdb;
  std::vector<Crossing> out;
  auto below_label = [](const MeridianEdge& e, double u) {
    const Vec2 t = edge_tangent(e, u);
    return t.x > 0.0 ? e.right : e.left;
  };
  for (const auto& e : net.edges) {
    if (e.kind == EdgeKind::kSegment) {
      const double dp = e.p.x - x, dq = e.q.x - x;
      if ((dp > 0.0) == (dq > 0.0)) continue;
      if (dp == dq) continue;
      const double u = dp / (dp - dq);
      out.push_back({e.p.y + u * (e.q.y - e.p.y), below_label(e, u)});
    } else {
      const ArcGeometry g = arc_geometry(e);
      const double dx2 = g.radius * g.radius - (x - g.center.x) * (x - g.center.x);
      if (dx2 <= 0.0) continue;
      const double dy = std::sqrt(dx2);
      for (const double y : {g.center.y + dy, g.center.y - dy}) {
        const double a = std::atan2(y - g.center.y, x - g.center.x);
        double rel = wdb::wrap_angle(a - g.a0);
        if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
        if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
        const double u = rel / g.sweep;
        if (u <= 1e-12 || u >= 1.0 - 1e-12) continue;
        out.push_back({y, below_label(e, u)});
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const Crossing& a, const Crossing& b) { return a.y > b.y; });
  return out;
}

// integrand: sum over the label's y-intervals of (y_hi^{n-1} - y_lo^{n-1})
inline double scan_integrand(const wdb::GeneratingNetwork& net,
                             wdb::RegionLabel label, double x) {
  const int n = net.dimension.n;
  const auto crossings = scan_crossings(net, x);
  double sum = 0.0;
  wdb::RegionLabel current = wdb::RegionLabel::kExt;
  double y_enter = 0.0;
  for (const auto& c : crossings) {
    if (current == label) sum += std::pow(y_enter, n - 1) - std::pow(c.y, n - 1);
    current = c.below;
    y_enter = c.y;
  }
  if (current == label) sum += std::pow(y_enter, n - 1);  // down to the axis
  return sum;
}

// volume of the revolved region by scanline quadrature (composite
// Gauss-like midpoint refinement between the edges' x-breakpoints)
inline double scanline_volume(const wdb::GeneratingNetwork& net,
                              wdb::RegionLabel label, int panels = 2000) {
  using namespace wdb;
  std::vector<double> breaks;
  for (const auto& e : net.edges) {
    breaks.push_back(e.p.x);
    breaks.push_back(e.q.x);
    if (e.kind == EdgeKind::kArc) {
      const ArcGeometry g = arc_geometry(e);
      for (const double target : {0.0, M_PI, -M_PI}) {
        double rel = wdb::wrap_angle(target - g.a0);
        if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
        if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
        if ((g.sweep > 0.0 && rel <= g.sweep) || (g.sweep < 0.0 && rel >= g.sweep))
          breaks.push_back(g.center.x + g.radius * std::cos(target));
      }
    }
  }
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end(),
                           [](double a, double b) { return std::fabs(a - b) < 1e-13; }),
               breaks.end());
  double total = 0.0;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double a = breaks[i], b = breaks[i + 1];
    if (b - a < 1e-14) continue;
    // midpoint rule with sqrt-aware clustering near the panel ends
    double s = 0.0;
    for (int k = 0; k < panels; ++k) {
      const double t = (k + 0.5) / panels;
      // chebyshev-like substitution clusters points near both endpoints
      const double u = 0.5 - 0.5 * std::cos(M_PI * t);
      const double w = 0.5 * M_PI * std::sin(M_PI * t) / panels;
      s += w * scan_integrand(net, label, a + u * (b - a));
    }
    total += s * (b - a);
  }
  return wdb::unit_ball_volume(net.dimension.n - 1) * total;
}

}  // namespace wdb_test

#endif
