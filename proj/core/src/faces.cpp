#include <algorithm>
#include <cmath>
#include <optional>
#include <vector>

#include "wdb/network.hpp"

// Face structure of the meridian cross-section.  The revolved regions of a
// generating network correspond to the planar faces of the network together
// with its mirror image across the axis (the full meridian plane section),
// so label consistency and exterior connectivity are checked there.

namespace wdb {
namespace {

struct HalfEdge {
  int edge;        // index into the doubled edge list
  bool forward;    // travel p -> q
  int origin;
  int head;
  double out_angle;  // travel direction leaving origin
  double in_angle;   // travel direction arriving at head
  double out_curv;   // signed curvature as traversed
  double turn;       // total tangent rotation along the edge
  RegionLabel left;  // label of the face on the left of travel
};

struct CrossSection {
  std::vector<MeridianEdge> edges;  // real edges then mirrored copies
  NetworkNodes nodes;
  std::vector<HalfEdge> half;                 // 2 per edge
  std::vector<std::vector<int>> out_at_node;  // rotation order, ccw
};

MeridianEdge mirrored(const MeridianEdge& e) {
  MeridianEdge m = e;
  m.p = {e.p.x, -e.p.y};
  m.q = {e.q.x, -e.q.y};
  m.curvature = -e.curvature;
  std::swap(m.left, m.right);
  return m;
}

double angle_of(Vec2 v) { return std::atan2(v.y, v.x); }

CrossSection build_cross_section(const GeneratingNetwork& net) {
  CrossSection cs;
  const double axis_tol = 1e-9 * network_scale(net);
  cs.edges = net.edges;
  for (const auto& e : net.edges) {
    // skip mirrors that would coincide with the original (axis-hugging edge)
    if (std::fabs(e.p.y) <= axis_tol && std::fabs(e.q.y) <= axis_tol &&
        e.kind == EdgeKind::kSegment)
      continue;
    cs.edges.push_back(mirrored(e));
  }
  GeneratingNetwork doubled{net.dimension, cs.edges};
  cs.nodes = build_nodes(doubled);

  cs.half.resize(2 * cs.edges.size());
  for (size_t i = 0; i < cs.edges.size(); ++i) {
    const auto& e = cs.edges[i];
    double turn = 0.0;
    if (e.kind == EdgeKind::kArc) turn = arc_geometry(e).sweep;
    const Vec2 t0 = edge_tangent(e, 0.0);
    const Vec2 t1 = edge_tangent(e, 1.0);
    const int a = cs.nodes.edge_node[i][0];
    const int b = cs.nodes.edge_node[i][1];
    cs.half[2 * i] = {static_cast<int>(i), true,  a, b,
                      angle_of(t0),  angle_of(t1), e.curvature, turn, e.left};
    cs.half[2 * i + 1] = {static_cast<int>(i), false, b, a,
                          angle_of(-t1), angle_of(-t0), -e.curvature, -turn,
                          e.right};
  }

  cs.out_at_node.resize(cs.nodes.position.size());
  for (size_t h = 0; h < cs.half.size(); ++h)
    cs.out_at_node[cs.half[h].origin].push_back(static_cast<int>(h));
  for (auto& ring : cs.out_at_node)
    std::sort(ring.begin(), ring.end(), [&](int a, int b) {
      if (cs.half[a].out_angle != cs.half[b].out_angle)
        return cs.half[a].out_angle < cs.half[b].out_angle;
      return cs.half[a].out_curv < cs.half[b].out_curv;
    });
  return cs;
}

int twin(int h) { return h ^ 1; }

// successor of h in the walk keeping the face on the left: the clockwise
// neighbor of twin(h) in the rotation at head(h)
int next_half_edge(const CrossSection& cs, int h) {
  const int t = twin(h);
  const auto& ring = cs.out_at_node[cs.half[h].head];
  const auto it = std::find(ring.begin(), ring.end(), t);
  const size_t i = static_cast<size_t>(it - ring.begin());
  return ring[(i + ring.size() - 1) % ring.size()];
}

struct FaceWalk {
  std::vector<int> half_edges;
  double turning = 0.0;
  bool label_consistent = true;
  RegionLabel label = RegionLabel::kExt;
};

std::vector<FaceWalk> face_walks(const CrossSection& cs) {
  std::vector<FaceWalk> walks;
  std::vector<char> seen(cs.half.size(), 0);
  for (size_t start = 0; start < cs.half.size(); ++start) {
    if (seen[start]) continue;
    FaceWalk w;
    w.label = cs.half[start].left;
    int h = static_cast<int>(start);
    do {
      seen[h] = 1;
      w.half_edges.push_back(h);
      if (cs.half[h].left != w.label) w.label_consistent = false;
      const int nx = next_half_edge(cs, h);
      w.turning += cs.half[h].turn +
                   wrap_angle(cs.half[nx].out_angle - cs.half[h].in_angle);
      h = nx;
    } while (h != static_cast<int>(start));
    walks.push_back(std::move(w));
  }
  return walks;
}

// ---- ray casting ----

struct RayHit {
  double dist;
  int edge;      // index into the cross-section edge list
  double side;   // >0: ray origin on the left of the edge's travel direction
};

std::optional<RayHit> nearest_hit(const CrossSection& cs, Vec2 origin, Vec2 d,
                                  double skip_dist, double end_tol) {
  std::optional<RayHit> best;
  auto consider = [&](double dist, int edge, double u) {
    if (dist <= skip_dist) return;
    if (u < end_tol || u > 1.0 - end_tol) return;  // endpoint hit: ambiguous
    const Vec2 t = edge_tangent(cs.edges[edge], u);
    const double side = cross(t, -1.0 * d);
    if (std::fabs(side) < 1e-9) return;  // tangential: ambiguous
    if (!best || dist < best->dist) best = RayHit{dist, edge, side};
  };
  for (size_t i = 0; i < cs.edges.size(); ++i) {
    const auto& e = cs.edges[i];
    if (e.kind == EdgeKind::kSegment) {
      const Vec2 r = e.q - e.p;
      const double denom = cross(d, r);
      if (std::fabs(denom) < 1e-14) continue;
      const Vec2 w = e.p - origin;
      const double s = cross(w, r) / denom;   // distance along ray
      const double u = cross(w, d) / denom;   // parameter on segment
      if (s > 0.0 && u >= 0.0 && u <= 1.0) consider(s, static_cast<int>(i), u);
    } else {
      const ArcGeometry g = arc_geometry(e);
      const Vec2 f = origin - g.center;
      const double b = dot(f, d);
      const double c = dot(f, f) - g.radius * g.radius;
      const double disc = b * b - c;
      if (disc < 0.0) continue;
      const double root = std::sqrt(disc);
      for (const double s : {-b - root, -b + root}) {
        if (s <= 0.0) continue;
        const Vec2 hit = origin + s * d;
        const double a = std::atan2(hit.y - g.center.y, hit.x - g.center.x);
        double rel = wrap_angle(a - g.a0);
        if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
        if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
        const double u = rel / g.sweep;
        if (u >= 0.0 && u <= 1.0) consider(s, static_cast<int>(i), u);
      }
    }
  }
  return best;
}

RegionLabel label_from_hit(const CrossSection& cs, const RayHit& hit) {
  const auto& e = cs.edges[hit.edge];
  return hit.side > 0.0 ? e.left : e.right;
}

std::optional<RegionLabel> probe_label(const CrossSection& cs, Vec2 point,
                                       double skip_dist) {
  // several ray directions; require agreement of all that hit something
  static const double kAngles[] = {0.7853981, 2.356194, -2.356194, -0.7853981,
                                   0.1234567, 1.8234567, -1.3234567, 2.9234567};
  std::optional<RegionLabel> agreed;
  int hits = 0;
  for (double a : kAngles) {
    const auto h = nearest_hit(cs, point, dir(a), skip_dist, 1e-9);
    if (!h) continue;
    const RegionLabel l = label_from_hit(cs, *h);
    if (hits == 0) agreed = l;
    else if (agreed != l) return std::nullopt;  // inconsistent labeling
    ++hits;
  }
  if (hits == 0) return RegionLabel::kExt;  // escaped: unbounded face
  return agreed;
}

// ---- pairwise edge crossings ----

bool params_interior(double u, double tol) { return u > tol && u < 1.0 - tol; }

double arc_param(const ArcGeometry& g, Vec2 pt) {
  const double a = std::atan2(pt.y - g.center.y, pt.x - g.center.x);
  double rel = wrap_angle(a - g.a0);
  if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
  if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
  return rel / g.sweep;
}

// proper interior intersection of two edges (shared endpoints excluded)
bool edges_cross(const MeridianEdge& ea, const MeridianEdge& eb, double tol) {
  const double end_tol_a = tol / std::fmax(edge_length(ea), tol);
  const double end_tol_b = tol / std::fmax(edge_length(eb), tol);
  auto interior_pair = [&](double ua, double ub) {
    return params_interior(ua, end_tol_a) && params_interior(ub, end_tol_b);
  };
  // a point counts as a crossing if interior to at least one edge and on
  // both curves; endpoint-to-interior contact is also a crossing
  auto contact = [&](double ua, double ub) {
    const bool ia = ua > -end_tol_a && ua < 1.0 + end_tol_a;
    const bool ib = ub > -end_tol_b && ub < 1.0 + end_tol_b;
    if (!ia || !ib) return false;
    return interior_pair(ua, ub) || (params_interior(ua, end_tol_a) && ib) ||
           (params_interior(ub, end_tol_b) && ia);
  };
  if (ea.kind == EdgeKind::kSegment && eb.kind == EdgeKind::kSegment) {
    const Vec2 r = ea.q - ea.p, s = eb.q - eb.p;
    const double denom = cross(r, s);
    if (std::fabs(denom) < 1e-14 * norm(r) * norm(s)) return false;  // parallel
    const Vec2 w = eb.p - ea.p;
    const double ua = cross(w, s) / denom;
    const double ub = cross(w, r) / denom;
    return contact(ua, ub);
  }
  if (ea.kind == EdgeKind::kArc && eb.kind == EdgeKind::kArc) {
    const ArcGeometry ga = arc_geometry(ea), gb = arc_geometry(eb);
    const double d = dist(ga.center, gb.center);
    if (d < tol && std::fabs(ga.radius - gb.radius) < tol) {
      // same circle: overlapping sweeps are a crossing
      for (double ub : {0.25, 0.5, 0.75}) {
        const double ua = arc_param(ga, edge_point(eb, ub));
        if (params_interior(ua, end_tol_a)) return true;
      }
      return false;
    }
    if (d > ga.radius + gb.radius || d < std::fabs(ga.radius - gb.radius))
      return false;
    const double a = (d * d + ga.radius * ga.radius - gb.radius * gb.radius) /
                     (2.0 * d);
    const double h2 = ga.radius * ga.radius - a * a;
    const double h = h2 > 0.0 ? std::sqrt(h2) : 0.0;
    const Vec2 base = ga.center + a / d * (gb.center - ga.center);
    const Vec2 off = h / d * rot90(gb.center - ga.center);
    for (const Vec2 pt : {base + off, base - off}) {
      if (contact(arc_param(ga, pt), arc_param(gb, pt))) return true;
      if (h == 0.0) break;
    }
    return false;
  }
  // segment-arc
  const MeridianEdge& seg = ea.kind == EdgeKind::kSegment ? ea : eb;
  const MeridianEdge& arc = ea.kind == EdgeKind::kSegment ? eb : ea;
  const ArcGeometry g = arc_geometry(arc);
  const Vec2 r = seg.q - seg.p;
  const double len = norm(r);
  const Vec2 u = r / len;
  const Vec2 f = seg.p - g.center;
  const double b = dot(f, u);
  const double c = dot(f, f) - g.radius * g.radius;
  const double disc = b * b - c;
  if (disc < 0.0) return false;
  const double root = std::sqrt(disc);
  for (const double s : {-b - root, -b + root}) {
    const double us = s / len;
    const double ua = arc_param(g, seg.p + s * u);
    const double u_seg = ea.kind == EdgeKind::kSegment ? us : ua;
    const double u_other = ea.kind == EdgeKind::kSegment ? ua : us;
    if (contact(u_seg, u_other)) return true;
    if (disc == 0.0) break;
  }
  return false;
}

}  // namespace

RegionLabel region_label_at(const GeneratingNetwork& net, Vec2 point) {
  const CrossSection cs = build_cross_section(net);
  const auto l = probe_label(cs, point, 0.0);
  if (!l) throw internal_error("region_label_at: inconsistent labels at probe");
  return *l;
}

std::vector<Violation> validate(const GeneratingNetwork& net) {
  std::vector<Violation> out;
  const double scale = network_scale(net);
  const double tol = 1e-9 * scale;

  // per-edge geometry and labels
  bool arcs_ok = true;
  for (size_t i = 0; i < net.edges.size(); ++i) {
    const auto& e = net.edges[i];
    const int idx = static_cast<int>(i);
    if (dist(e.p, e.q) <= tol) {
      out.push_back({ViolationCode::kZeroLengthEdge, idx, -1, "degenerate edge"});
      arcs_ok = false;
      continue;
    }
    if (e.left == e.right)
      out.push_back({ViolationCode::kSameLabelBothSides, idx, -1,
                     "edge with equal side labels"});
    if (e.kind == EdgeKind::kArc) {
      const double half_chord = 0.5 * dist(e.p, e.q);
      if (half_chord * std::fabs(e.curvature) > 1.0 + 1e-9) {
        out.push_back({ViolationCode::kBadArc, idx, -1,
                       "chord exceeds arc diameter"});
        arcs_ok = false;
        continue;
      }
    }
    if (edge_min_y(e) < -tol)
      out.push_back({ViolationCode::kBelowAxis, idx, -1,
                     "edge dips below the axis"});
    if (std::fabs(e.p.y) <= tol && std::fabs(e.q.y) <= tol &&
        e.kind == EdgeKind::kSegment)
      out.push_back({ViolationCode::kAxisEdge, idx, -1,
                     "segment lying on the axis"});
  }

  // node degrees
  const NetworkNodes nn = build_nodes(net);
  for (size_t v = 0; v < nn.position.size(); ++v) {
    if (nn.position[v].y <= tol) continue;  // axis endpoints are free
    const size_t deg = nn.incident_edges[v].size();
    if (deg == 1)
      out.push_back({ViolationCode::kDanglingNode, -1, static_cast<int>(v),
                     "degree-1 node off the axis"});
    if (deg >= 4)
      out.push_back({ViolationCode::kQuadJunction, -1, static_cast<int>(v),
                     "junction of degree >= 4"});
  }

  if (!arcs_ok) return out;

  // pairwise proper crossings
  for (size_t i = 0; i < net.edges.size(); ++i)
    for (size_t j = i + 1; j < net.edges.size(); ++j)
      if (edges_cross(net.edges[i], net.edges[j], tol)) {
        out.push_back({ViolationCode::kEdgeCrossing, static_cast<int>(i),
                       static_cast<int>(j), "edges intersect"});
      }
  for (const auto& v : out)
    if (v.code == ViolationCode::kEdgeCrossing ||
        v.code == ViolationCode::kBelowAxis ||
        v.code == ViolationCode::kAxisEdge)
      return out;  // face structure would be meaningless

  // face traversal of the doubled cross-section
  const CrossSection cs = build_cross_section(net);
  const auto walks = face_walks(cs);
  const double turn_tol = 1e-6;

  // the face right of the rightmost point of the arrangement is unbounded
  {
    double best_x = -1e300;
    int best_half = -1;
    for (size_t i = 0; i < cs.edges.size(); ++i) {
      const auto& e = cs.edges[i];
      double x = std::fmax(e.p.x, e.q.x);
      double u_at = e.p.x > e.q.x ? 0.0 : 1.0;
      if (e.kind == EdgeKind::kArc) {
        const ArcGeometry g = arc_geometry(e);
        double rel = wrap_angle(0.0 - g.a0);
        if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
        if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
        const double u = rel / g.sweep;
        if (u >= 0.0 && u <= 1.0 && g.center.x + g.radius > x) {
          x = g.center.x + g.radius;
          u_at = u;
        }
      }
      if (x > best_x) {
        best_x = x;
        const Vec2 t = edge_tangent(e, u_at);
        // pick the traversal whose left side faces +x
        best_half = static_cast<int>(2 * i) + (rot90(t).x > 0.0 ? 0 : 1);
      }
    }
    if (best_half >= 0 && cs.half[best_half].left != RegionLabel::kExt)
      out.push_back({ViolationCode::kUnboundedNotExt, cs.half[best_half].edge,
                     -1, "unbounded face labeled " +
                     to_string(cs.half[best_half].left)});
  }

  for (const auto& w : walks) {
    if (!w.label_consistent) {
      out.push_back({ViolationCode::kLabelInconsistent,
                     cs.half[w.half_edges.front()].edge, -1,
                     "face bordered by mixed labels"});
      continue;
    }
    if (std::fabs(w.turning - 2.0 * M_PI) < turn_tol) {
      if (w.label == RegionLabel::kExt)
        out.push_back({ViolationCode::kExtDisconnected,
                       cs.half[w.half_edges.front()].edge, -1,
                       "bounded face labeled EXT (trapped hollow)"});
    } else if (std::fabs(w.turning + 2.0 * M_PI) < turn_tol) {
      // containment: the walk's labels must match the face it sits in
      int longest = w.half_edges.front();
      double len = 0.0;
      for (int h : w.half_edges) {
        const double l = edge_length(cs.edges[cs.half[h].edge]);
        if (l > len) {
          len = l;
          longest = h;
        }
      }
      const auto& he = cs.half[longest];
      const auto& e = cs.edges[he.edge];
      const double um = 0.5;
      Vec2 t = edge_tangent(e, um);
      if (!he.forward) t = -t;
      const Vec2 sample = edge_point(e, um) + (1e-7 * scale) * rot90(t);
      const auto found = probe_label(cs, sample, 0.5e-7 * scale);
      if (!found || *found != he.left)
        out.push_back({ViolationCode::kLabelInconsistent, he.edge, -1,
                       "enclosed component labeled " + to_string(he.left) +
                           " sits in a " +
                           (found ? to_string(*found) : std::string("mixed")) +
                           " face"});
    } else {
      out.push_back({ViolationCode::kLabelInconsistent,
                     cs.half[w.half_edges.front()].edge, -1,
                     "unexpected face turning"});
    }
  }
  return out;
}

std::string to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::kBadArc: return "BAD_ARC";
    case ViolationCode::kZeroLengthEdge: return "ZERO_LENGTH_EDGE";
    case ViolationCode::kBelowAxis: return "BELOW_AXIS";
    case ViolationCode::kAxisEdge: return "AXIS_EDGE";
    case ViolationCode::kSameLabelBothSides: return "SAME_LABEL_BOTH_SIDES";
    case ViolationCode::kDanglingNode: return "DANGLING_NODE";
    case ViolationCode::kQuadJunction: return "QUAD_JUNCTION";
    case ViolationCode::kEdgeCrossing: return "EDGE_CROSSING";
    case ViolationCode::kLabelInconsistent: return "LABEL_INCONSISTENT";
    case ViolationCode::kExtDisconnected: return "EXT_DISCONNECTED";
    case ViolationCode::kUnboundedNotExt: return "UNBOUNDED_NOT_EXT";
  }
  return "?";
}

}  // namespace wdb
