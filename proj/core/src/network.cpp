#include "wdb/network.hpp"

#include <algorithm>
#include <cmath>

#include "wdb/quadrature.hpp"
#include "wdb/spherical.hpp"

namespace wdb {

std::string to_string(RegionLabel l) {
  switch (l) {
    case RegionLabel::kB1: return "B1";
    case RegionLabel::kB2: return "B2";
    case RegionLabel::kExt: return "EXT";
  }
  return "?";
}

RegionLabel region_label_from_string(const std::string& s) {
  if (s == "B1") return RegionLabel::kB1;
  if (s == "B2") return RegionLabel::kB2;
  if (s == "EXT") return RegionLabel::kExt;
  throw domain_error("unknown region label: " + s);
}

MeridianEdge make_segment(Vec2 p, Vec2 q, RegionLabel left, RegionLabel right) {
  return {EdgeKind::kSegment, p, q, 0.0, left, right};
}

MeridianEdge make_arc(Vec2 p, Vec2 q, double curvature, RegionLabel left,
                      RegionLabel right) {
  if (curvature == 0.0) return make_segment(p, q, left, right);
  return {EdgeKind::kArc, p, q, curvature, left, right};
}

ArcGeometry arc_geometry(const MeridianEdge& e) {
  if (e.kind != EdgeKind::kArc || e.curvature == 0.0)
    throw domain_error("arc_geometry: not an arc");
  const double radius = 1.0 / std::fabs(e.curvature);
  const Vec2 chord = e.q - e.p;
  const double len = norm(chord);
  if (len <= 0.0) throw domain_error("arc_geometry: zero-length chord");
  const double half = 0.5 * len;
  if (half > radius * (1.0 + 1e-9))
    throw domain_error("arc_geometry: chord longer than diameter");
  const double h2 = radius * radius - half * half;
  const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
  const Vec2 mid = 0.5 * (e.p + e.q);
  const Vec2 n = rot90(chord / len);
  // arcs span at most a half turn, so the center sits on the turning side
  const double side = e.curvature > 0.0 ? 1.0 : -1.0;
  const Vec2 center = mid + side * h * n;
  const double a0 = std::atan2(e.p.y - center.y, e.p.x - center.x);
  const double a1 = std::atan2(e.q.y - center.y, e.q.x - center.x);
  double sweep = wrap_angle(a1 - a0);
  if (e.curvature > 0.0 && sweep < 0.0) sweep += 2.0 * M_PI;
  if (e.curvature < 0.0 && sweep > 0.0) sweep -= 2.0 * M_PI;
  if (sweep == 0.0) sweep = e.curvature > 0.0 ? M_PI : -M_PI;  // half turn
  return {center, radius, a0, sweep};
}

Vec2 edge_point(const MeridianEdge& e, double u) {
  if (e.kind == EdgeKind::kSegment) return e.p + u * (e.q - e.p);
  const ArcGeometry g = arc_geometry(e);
  return g.center + g.radius * dir(g.a0 + u * g.sweep);
}

Vec2 edge_tangent(const MeridianEdge& e, double u) {
  if (e.kind == EdgeKind::kSegment) return unit(e.q - e.p);
  const ArcGeometry g = arc_geometry(e);
  const double a = g.a0 + u * g.sweep;
  return g.sweep > 0.0 ? dir(a + 0.5 * M_PI) : dir(a - 0.5 * M_PI);
}

double edge_length(const MeridianEdge& e) {
  if (e.kind == EdgeKind::kSegment) return dist(e.p, e.q);
  const ArcGeometry g = arc_geometry(e);
  return std::fabs(g.sweep) * g.radius;
}

double edge_min_y(const MeridianEdge& e) {
  double m = std::fmin(e.p.y, e.q.y);
  if (e.kind == EdgeKind::kArc) {
    const ArcGeometry g = arc_geometry(e);
    // interior minimum only if the bottom of the circle is swept
    const double bottom = -0.5 * M_PI;
    double rel = wrap_angle(bottom - g.a0);
    if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
    if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
    if ((g.sweep > 0.0 && rel <= g.sweep) || (g.sweep < 0.0 && rel >= g.sweep))
      m = std::fmin(m, g.center.y - g.radius);
  }
  return m;
}

MeridianEdge reversed(const MeridianEdge& e) {
  MeridianEdge r = e;
  std::swap(r.p, r.q);
  r.curvature = -e.curvature;
  std::swap(r.left, r.right);
  return r;
}

double edge_integral_y_dx(const MeridianEdge& e, int m, double abs_tol) {
  if (e.kind == EdgeKind::kSegment) {
    // y linear in u: integrate exactly with one Gauss panel of ample order
    const double dx = e.q.x - e.p.x;
    if (dx == 0.0) return 0.0;
    return dx * gauss15([&](double u) {
             const double y = e.p.y + u * (e.q.y - e.p.y);
             return std::pow(y, m);
           },
           0.0, 1.0);
  }
  const ArcGeometry g = arc_geometry(e);
  return integrate(
      [&](double a) {
        const double y = g.center.y + g.radius * std::sin(a);
        return std::pow(y, m) * (-g.radius * std::sin(a));
      },
      g.a0, g.a0 + g.sweep, abs_tol);
}

double edge_integral_y_ds(const MeridianEdge& e, int m, double abs_tol) {
  if (e.kind == EdgeKind::kSegment) {
    const double len = dist(e.p, e.q);
    return len * gauss15([&](double u) {
             const double y = e.p.y + u * (e.q.y - e.p.y);
             return std::pow(y, m);
           },
           0.0, 1.0);
  }
  const ArcGeometry g = arc_geometry(e);
  const double s = integrate(
      [&](double a) {
        const double y = g.center.y + g.radius * std::sin(a);
        return std::pow(y, m);
      },
      std::fmin(g.a0, g.a0 + g.sweep), std::fmax(g.a0, g.a0 + g.sweep),
      abs_tol);
  return s * g.radius;
}

double network_scale(const GeneratingNetwork& net) {
  double s = 1.0;
  for (const auto& e : net.edges) {
    s = std::fmax(s, std::fabs(e.p.x));
    s = std::fmax(s, std::fabs(e.p.y));
    s = std::fmax(s, std::fabs(e.q.x));
    s = std::fmax(s, std::fabs(e.q.y));
  }
  return s;
}

NetworkNodes build_nodes(const GeneratingNetwork& net) {
  NetworkNodes nn;
  nn.merge_tol = 1e-9 * network_scale(net);
  nn.edge_node.resize(net.edges.size());
  auto find_or_add = [&](Vec2 p) {
    for (size_t i = 0; i < nn.position.size(); ++i)
      if (dist(nn.position[i], p) <= nn.merge_tol) return static_cast<int>(i);
    nn.position.push_back(p);
    nn.incident_edges.emplace_back();
    return static_cast<int>(nn.position.size() - 1);
  };
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const int a = find_or_add(net.edges[i].p);
    const int b = find_or_add(net.edges[i].q);
    nn.edge_node[i] = {a, b};
    nn.incident_edges[a].push_back(static_cast<int>(i));
    if (b != a) nn.incident_edges[b].push_back(static_cast<int>(i));
  }
  return nn;
}

double volume(const GeneratingNetwork& net, RegionLabel label) {
  if (label == RegionLabel::kExt)
    throw domain_error("volume: exterior region is unbounded");
  const int n = net.dimension.n;
  const double alpha = unit_ball_volume(n - 1);
  double sum = 0.0;
  for (const auto& e : net.edges) {
    double sign = 0.0;
    if (e.right == label) sign += 1.0;
    if (e.left == label) sign -= 1.0;
    if (sign != 0.0) sum += sign * edge_integral_y_dx(e, n - 1);
  }
  return alpha * sum;
}

namespace {

// weight applied to an edge, by its side-label pair
double edge_weight(const MeridianEdge& e, const WeightTriple& w) {
  const bool has_ext = e.left == RegionLabel::kExt || e.right == RegionLabel::kExt;
  const bool has_b1 = e.left == RegionLabel::kB1 || e.right == RegionLabel::kB1;
  const bool has_b2 = e.left == RegionLabel::kB2 || e.right == RegionLabel::kB2;
  if (has_ext && has_b1) return w.w1;
  if (has_ext && has_b2) return w.w2;
  if (has_b1 && has_b2) return w.w0;
  throw domain_error("edge with invalid side-label pair");
}

}  // namespace

AreaBreakdown weighted_area(const GeneratingNetwork& net, const WeightTriple& w) {
  const int n = net.dimension.n;
  const double ring = (n - 1) * unit_ball_volume(n - 1);
  AreaBreakdown out;
  for (const auto& e : net.edges) {
    const double a = ring * edge_integral_y_ds(e, n - 2);
    const bool has_ext =
        e.left == RegionLabel::kExt || e.right == RegionLabel::kExt;
    const bool has_b1 = e.left == RegionLabel::kB1 || e.right == RegionLabel::kB1;
    if (has_ext && has_b1)
      out.ext1 += a;
    else if (has_ext)
      out.ext2 += a;
    else
      out.interface_ += a;
  }
  out.q = w.w1 * out.ext1 + w.w2 * out.ext2 + w.w0 * out.interface_;
  return out;
}

std::vector<JunctionResidual> junction_residuals(const GeneratingNetwork& net,
                                                 const WeightTriple& w) {
  const NetworkNodes nn = build_nodes(net);
  const double axis_tol = nn.merge_tol;
  std::vector<JunctionResidual> out;
  for (size_t v = 0; v < nn.position.size(); ++v) {
    if (nn.position[v].y <= axis_tol) continue;
    const auto& inc = nn.incident_edges[v];
    if (inc.size() < 3) continue;
    if (inc.size() > 3)
      throw structural_error("junction of degree " + std::to_string(inc.size()) +
                             " (curves never meet in fours)");
    Vec2 sum{0.0, 0.0};
    for (int ei : inc) {
      const auto& e = net.edges[ei];
      const bool at_tail = nn.edge_node[ei][0] == static_cast<int>(v);
      const Vec2 t = at_tail ? edge_tangent(e, 0.0) : -edge_tangent(e, 1.0);
      sum = sum + edge_weight(e, w) * t;
    }
    out.push_back({static_cast<int>(v), nn.position[v], norm(sum)});
  }
  return out;
}

GeneratingNetwork dilated(const GeneratingNetwork& net, double factor) {
  if (factor <= 0.0) throw domain_error("dilated: factor must be positive");
  GeneratingNetwork out = net;
  for (auto& e : out.edges) {
    e.p = factor * e.p;
    e.q = factor * e.q;
    e.curvature /= factor;
  }
  return out;
}

}  // namespace wdb
