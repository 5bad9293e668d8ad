#include "wdb/symmetrize.hpp"

#include <algorithm>
#include <cmath>

#include "wdb/errors.hpp"
#include "wdb/quadrature.hpp"

namespace wdb {
namespace {

// geometry helpers shared with the network module via a label-free view
MeridianEdge as_medge(const PlanarEdge& e) {
  return {e.kind, e.p, e.q, e.curvature, RegionLabel::kB1, RegionLabel::kExt};
}
Vec2 pt(const PlanarEdge& e, double u) { return edge_point(as_medge(e), u); }
Vec2 tq(const PlanarEdge& e, double u) { return edge_tangent(as_medge(e), u); }
double elen(const PlanarEdge& e) { return edge_length(as_medge(e)); }

double edge_area_contrib(const PlanarEdge& e) {
  // 0.5 * int (x dy - y dx)
  if (e.kind == EdgeKind::kSegment) return 0.5 * cross(e.p, e.q);
  const ArcGeometry g = arc_geometry(as_medge(e));
  return 0.5 * (g.radius * g.radius * g.sweep + cross(g.center, e.q - e.p));
}

PlanarEdge sub_edge(const PlanarEdge& e, double u0, double u1) {
  PlanarEdge s = e;
  s.p = pt(e, u0);
  s.q = pt(e, u1);
  return s;
}

double scale_of(const PlanarRegion& r) {
  double s = 1.0;
  for (const auto& loop : r.loops)
    for (const auto& e : loop) {
      s = std::fmax(s, std::fmax(std::fabs(e.p.x), std::fabs(e.p.y)));
      s = std::fmax(s, std::fmax(std::fabs(e.q.x), std::fabs(e.q.y)));
    }
  return s;
}

}  // namespace

PlanarRegion make_disk(Vec2 c, double radius) {
  if (radius <= 0.0) throw domain_error("make_disk: radius must be positive");
  PlanarLoop loop;
  const Vec2 a{c.x - radius, c.y}, b{c.x + radius, c.y};
  loop.push_back({EdgeKind::kArc, a, b, 1.0 / radius, false});  // lower half
  loop.push_back({EdgeKind::kArc, b, a, 1.0 / radius, false});  // upper half
  return {{loop}};
}

PlanarRegion make_rectangle(Vec2 lo, Vec2 hi) {
  return make_polygon({{lo.x, lo.y}, {hi.x, lo.y}, {hi.x, hi.y}, {lo.x, hi.y}});
}

PlanarRegion make_polygon(const std::vector<Vec2>& v) {
  PlanarLoop loop;
  for (size_t i = 0; i < v.size(); ++i)
    loop.push_back({EdgeKind::kSegment, v[i], v[(i + 1) % v.size()], 0.0, false});
  return {{loop}};
}

PlanarRegion make_ellipse(Vec2 c, double a, double b, int segments) {
  std::vector<Vec2> v;
  v.reserve(segments);
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * M_PI * i / segments;
    v.push_back({c.x + a * std::cos(t), c.y + b * std::sin(t)});
  }
  return make_polygon(v);
}

double region_area(const PlanarRegion& r) {
  double a = 0.0;
  for (const auto& loop : r.loops)
    for (const auto& e : loop) a += edge_area_contrib(e);
  return a;
}

double region_perimeter(const PlanarRegion& r) {
  double p = 0.0;
  for (const auto& loop : r.loops)
    for (const auto& e : loop) p += elen(e);
  return p;
}

Vec2 region_centroid(const PlanarRegion& r) {
  // sampled Green's-theorem moments; a reference point, not a precise datum
  double a = 0.0, mx = 0.0, my = 0.0;
  for (const auto& loop : r.loops)
    for (const auto& e : loop) {
      const int kSamples = 64;
      const double len = elen(e);
      for (int i = 0; i < kSamples; ++i) {
        const double u = (i + 0.5) / kSamples;
        const Vec2 g = pt(e, u);
        const Vec2 d = tq(e, u) * (len / kSamples);
        const double da = 0.5 * cross(g, d);
        a += da;
        // centroid of the triangle fan wedge at 2/3 of the radius
        mx += da * (2.0 / 3.0) * g.x;
        my += da * (2.0 / 3.0) * g.y;
      }
    }
  if (std::fabs(a) < 1e-300) throw domain_error("centroid of zero-area region");
  return {mx / a, my / a};
}

// ---- clipping by a half-plane ----

namespace {

struct ChainEnd {
  Vec2 point;
  double s;  // position along the cut line
};

struct Chain {
  std::vector<PlanarEdge> edges;
  Vec2 start, end;
};

std::vector<double> line_crossings(const PlanarEdge& e, Vec2 n, double c,
                                   double end_tol) {
  std::vector<double> out;
  if (e.kind == EdgeKind::kSegment) {
    const double dp = dot(n, e.p) - c;
    const double dq = dot(n, e.q) - c;
    if ((dp > 0.0) == (dq > 0.0)) return out;
    const double u = dp / (dp - dq);
    if (u > end_tol && u < 1.0 - end_tol) out.push_back(u);
    return out;
  }
  const ArcGeometry g = arc_geometry(as_medge(e));
  // distance from center to line along n
  const double d = dot(n, g.center) - c;
  if (std::fabs(d) >= g.radius) return out;
  const Vec2 t{-n.y, n.x};
  const double h = std::sqrt(g.radius * g.radius - d * d);
  for (const double sgn : {-1.0, 1.0}) {
    const Vec2 hit = g.center - d * n + sgn * h * t;
    const double a = std::atan2(hit.y - g.center.y, hit.x - g.center.x);
    double rel = wrap_angle(a - g.a0);
    if (g.sweep > 0.0 && rel < 0.0) rel += 2.0 * M_PI;
    if (g.sweep < 0.0 && rel > 0.0) rel -= 2.0 * M_PI;
    const double u = rel / g.sweep;
    if (u > end_tol && u < 1.0 - end_tol) out.push_back(u);
    if (h == 0.0) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

PlanarRegion clip(const PlanarRegion& r, const BisectionLine& line,
                  int keep_sign, bool* boundary_on_line) {
  const Vec2 n = unit(line.normal);
  const double c = line.offset / norm(line.normal);
  const double scale = scale_of(r);
  const double tol = 1e-11 * scale;
  const double sgn = keep_sign < 0 ? -1.0 : 1.0;
  if (boundary_on_line) *boundary_on_line = false;

  std::vector<Chain> chains;
  std::vector<PlanarLoop> whole_loops;
  std::vector<ChainEnd> cut_points;  // paired along the line by parity

  for (const auto& loop : r.loops) {
    // split edges at crossings, keep sub-edges on the kept side
    std::vector<PlanarEdge> subs;
    std::vector<char> kept;
    for (const auto& e : loop) {
      std::vector<double> us = line_crossings(e, n, c, tol / std::fmax(elen(e), tol));
      us.insert(us.begin(), 0.0);
      us.push_back(1.0);
      for (size_t i = 0; i + 1 < us.size(); ++i) {
        const PlanarEdge s = sub_edge(e, us[i], us[i + 1]);
        const double dm = dot(n, pt(s, 0.5)) - c;
        if (boundary_on_line && std::fabs(dm) < tol &&
            std::fabs(dot(n, s.p) - c) < tol && std::fabs(dot(n, s.q) - c) < tol)
          *boundary_on_line = true;
        subs.push_back(s);
        kept.push_back(sgn * dm >= 0.0 ? 1 : 0);
      }
    }
    const size_t m = subs.size();
    if (std::all_of(kept.begin(), kept.end(), [](char k) { return k == 1; })) {
      whole_loops.push_back(subs);
      continue;
    }
    if (std::all_of(kept.begin(), kept.end(), [](char k) { return k == 0; }))
      continue;
    // maximal kept runs in cyclic order
    size_t start = 0;
    while (kept[start]) ++start;  // start at a dropped sub-edge
    Chain cur;
    for (size_t step = 0; step <= m; ++step) {
      const size_t i = (start + step) % m;
      if (step == m) {
        if (!cur.edges.empty()) {
          cur.end = cur.edges.back().q;
          chains.push_back(cur);
        }
        break;
      }
      if (kept[i]) {
        if (cur.edges.empty()) cur.start = subs[i].p;
        cur.edges.push_back(subs[i]);
      } else if (!cur.edges.empty()) {
        cur.end = cur.edges.back().q;
        chains.push_back(cur);
        cur = Chain{};
      }
    }
  }

  const Vec2 t{-n.y, n.x};
  for (const auto& ch : chains) {
    cut_points.push_back({ch.start, dot(t, ch.start)});
    cut_points.push_back({ch.end, dot(t, ch.end)});
  }
  std::sort(cut_points.begin(), cut_points.end(),
            [](const ChainEnd& a, const ChainEnd& b) { return a.s < b.s; });

  // closing segments along the line: consecutive pairs bound the kept side
  std::vector<PlanarEdge> cut_segments;
  for (size_t i = 0; i + 1 < cut_points.size(); i += 2) {
    PlanarEdge seg;
    seg.kind = EdgeKind::kSegment;
    seg.from_cut = true;
    // direction chosen so the kept side lies on the left
    const Vec2 d = sgn < 0 ? Vec2{-t.x, -t.y} : t;
    const bool fwd = dot(d, cut_points[i + 1].point - cut_points[i].point) > 0.0;
    seg.p = fwd ? cut_points[i].point : cut_points[i + 1].point;
    seg.q = fwd ? cut_points[i + 1].point : cut_points[i].point;
    if (dist(seg.p, seg.q) > tol) cut_segments.push_back(seg);
  }

  // stitch chains and closing segments into loops
  PlanarRegion out;
  out.loops = whole_loops;
  std::vector<char> chain_used(chains.size(), 0);
  std::vector<char> seg_used(cut_segments.size(), 0);
  auto find_chain = [&](Vec2 at) -> int {
    for (size_t i = 0; i < chains.size(); ++i)
      if (!chain_used[i] && dist(chains[i].start, at) <= 4.0 * tol)
        return static_cast<int>(i);
    return -1;
  };
  auto find_seg = [&](Vec2 at) -> int {
    for (size_t i = 0; i < cut_segments.size(); ++i)
      if (!seg_used[i] && dist(cut_segments[i].p, at) <= 4.0 * tol)
        return static_cast<int>(i);
    return -1;
  };
  for (size_t c0 = 0; c0 < chains.size(); ++c0) {
    if (chain_used[c0]) continue;
    PlanarLoop loop;
    Vec2 cursor = chains[c0].start;
    const Vec2 origin = cursor;
    int guard = 0;
    while (guard++ < 10000) {
      const int ci = find_chain(cursor);
      if (ci >= 0) {
        chain_used[ci] = 1;
        for (const auto& e : chains[ci].edges) loop.push_back(e);
        cursor = chains[ci].end;
      } else {
        const int si = find_seg(cursor);
        if (si < 0) throw internal_error("clip: unable to stitch cut boundary");
        seg_used[si] = 1;
        loop.push_back(cut_segments[si]);
        cursor = cut_segments[si].q;
      }
      if (dist(cursor, origin) <= 4.0 * tol) break;
    }
    out.loops.push_back(std::move(loop));
  }
  return out;
}

BisectionLine bisect_single(const PlanarRegion& r, Vec2 direction,
                            std::optional<Vec2> reference) {
  const double total = region_area(r);
  if (!(total > 0.0)) throw domain_error("bisect_single: zero-area region");
  const Vec2 n = unit(direction);
  const Vec2 ref = reference ? *reference : region_centroid(r);

  double lo = 1e300, hi = -1e300;
  for (const auto& loop : r.loops)
    for (const auto& e : loop)
      for (double u = 0.0; u <= 1.0; u += 0.125) {
        const double s = dot(n, pt(e, u));
        lo = std::fmin(lo, s);
        hi = std::fmax(hi, s);
      }
  const double pad = 0.01 * (hi - lo) + 1e-12;
  lo -= pad;
  hi += pad;
  auto area_leq = [&](double c) {
    return region_area(clip(r, {n, c}, -1));
  };
  const double target = 0.5 * total;
  const double tol = 1e-12 * (hi - lo);
  // lowest and highest offsets achieving the half split (plateaus possible
  // for disconnected regions), then the admissible point nearest the
  // reference
  double a = lo, b = hi;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    (area_leq(mid) < target ? a : b) = mid;
  }
  const double c_low = 0.5 * (a + b);
  a = lo;
  b = hi;
  while (b - a > tol) {
    const double mid = 0.5 * (a + b);
    (area_leq(mid) <= target ? a : b) = mid;
  }
  const double c_high = 0.5 * (a + b);
  const double c = std::clamp(dot(n, ref), c_low, c_high);
  return {n, c};
}

BisectionLine bisect_double(const PlanarRegion& r1, const PlanarRegion& r2) {
  const double a2 = region_area(r2);
  if (!(region_area(r1) > 0.0) || !(a2 > 0.0))
    throw domain_error("bisect_double: regions must have positive area");
  const Vec2 ref = region_centroid(r1);
  auto imbalance = [&](double theta) {
    const BisectionLine line = bisect_single(r1, dir(theta), ref);
    // area of r2 on the positive side of the line minus the negative side
    const double neg = region_area(clip(r2, line, -1));
    return (a2 - neg) - neg;
  };
  const int kSamples = 720;
  double prev = imbalance(0.0);
  for (int i = 1; i <= kSamples; ++i) {
    const double theta = M_PI * i / kSamples;
    // f(pi) = -f(0): evaluate through the flip at the wrap
    const double cur = i == kSamples ? -imbalance(0.0) : imbalance(theta);
    if (prev == 0.0) return bisect_single(r1, dir(M_PI * (i - 1) / kSamples), ref);
    if ((prev > 0.0) != (cur > 0.0)) {
      double lo = M_PI * (i - 1) / kSamples, hi = theta;
      double flo = prev;
      while (hi - lo > 1e-10) {
        const double mid = 0.5 * (lo + hi);
        const double fm = imbalance(mid);
        if (fm == 0.0) return bisect_single(r1, dir(mid), ref);
        if ((fm > 0.0) == (flo > 0.0)) {
          lo = mid;
          flo = fm;
        } else {
          hi = mid;
        }
      }
      return bisect_single(r1, dir(0.5 * (lo + hi)), ref);
    }
    prev = cur;
  }
  throw internal_error("bisect_double: no sign change found");
}

// ---- angular stretch ----

namespace {

void check_sector(const std::vector<const PlanarLoop*>& loops, double k) {
  double amin = 1e300, amax = -1e300;
  double a0 = 0.0;
  bool first = true;
  for (const auto* loop : loops)
    for (const auto& e : *loop)
      for (int i = 0; i <= 64; ++i) {
        const Vec2 g = pt(e, i / 64.0);
        if (norm(g) < 1e-12) continue;
        const double a = std::atan2(g.y, g.x);
        if (first) {
          a0 = a;
          first = false;
        }
        const double rel = wrap_angle(a - a0);
        amin = std::fmin(amin, rel);
        amax = std::fmax(amax, rel);
      }
  if (first) throw domain_error("angular_stretch: empty input");
  if (amax - amin > M_PI / k + 1e-9)
    throw domain_error("angular_stretch: input exceeds a pi/k sector");
}

double stretched_edge_length(const PlanarEdge& e, double k) {
  const double len = elen(e);
  return integrate(
      [&](double u) {
        const Vec2 g = pt(e, u);
        const Vec2 d = tq(e, u) * len;
        const double r = norm(g);
        if (r < 1e-14) return 0.0;
        const double rp = dot(g, d) / r;
        const double tp = cross(g, d) / (r * r);
        return std::hypot(rp, k * r * tp);
      },
      0.0, 1.0, 1e-12);
}

double stretched_edge_area(const PlanarEdge& e, double k) {
  const double len = elen(e);
  return integrate(
      [&](double u) {
        const Vec2 g = pt(e, u);
        const Vec2 d = tq(e, u) * len;
        return 0.5 * k * cross(g, d);
      },
      0.0, 1.0, 1e-12);
}

Vec2 stretch_point(Vec2 g, double k) {
  const double r = norm(g);
  if (r < 1e-300) return g;
  const double a = std::atan2(g.y, g.x);
  return {r * std::cos(k * a), r * std::sin(k * a)};
}

}  // namespace

StretchResult angular_stretch(const PlanarRegion& r, double k) {
  if (k <= 1.0) throw domain_error("angular_stretch: factor must exceed 1");
  std::vector<const PlanarLoop*> loops;
  for (const auto& l : r.loops) loops.push_back(&l);
  check_sector(loops, k);
  StretchResult out;
  out.area_before = region_area(r);
  out.length_before = region_perimeter(r);
  for (const auto& loop : r.loops)
    for (const auto& e : loop) {
      out.area_after += stretched_edge_area(e, k);
      out.length_after += stretched_edge_length(e, k);
      for (int i = 0; i < 32; ++i)
        out.image_polyline.push_back(stretch_point(pt(e, i / 32.0), k));
    }
  return out;
}

StretchResult angular_stretch_curve(const PlanarLoop& chain, double k) {
  if (k <= 1.0) throw domain_error("angular_stretch: factor must exceed 1");
  std::vector<const PlanarLoop*> loops{&chain};
  check_sector(loops, k);
  StretchResult out;
  for (const auto& e : chain) {
    out.length_before += elen(e);
    out.length_after += stretched_edge_length(e, k);
    for (int i = 0; i <= 32; ++i)
      out.image_polyline.push_back(stretch_point(pt(e, i / 32.0), k));
  }
  return out;
}

// ---- the certificate pipeline ----

namespace {

double true_perimeter(const PlanarRegion& r) {
  double p = 0.0;
  for (const auto& loop : r.loops)
    for (const auto& e : loop)
      if (!e.from_cut) p += elen(e);
  return p;
}

PlanarRegion translated(const PlanarRegion& r, Vec2 delta) {
  PlanarRegion out = r;
  for (auto& loop : out.loops)
    for (auto& e : loop) {
      e.p = e.p + delta;
      e.q = e.q + delta;
    }
  return out;
}

}  // namespace

SymmetrizeCertificate symmetrize_certificate(const PlanarRegion& region) {
  SymmetrizeCertificate cert;
  cert.area_before = region_area(region);
  cert.perimeter_before = region_perimeter(region);
  if (!(cert.area_before > 0.0))
    throw domain_error("symmetrize_certificate: zero-area region");

  bool on_line1 = false, on_line2 = false;

  cert.line1 = bisect_single(region, {1.0, 0.0});
  const PlanarRegion half_lo = clip(region, cert.line1, -1, &on_line1);
  const PlanarRegion half_hi = clip(region, cert.line1, +1);
  const bool lo_half = true_perimeter(half_lo) <= true_perimeter(half_hi);
  const PlanarRegion& half = lo_half ? half_lo : half_hi;

  cert.line2 = bisect_single(half, {0.0, 1.0});
  const PlanarRegion quart_lo = clip(half, cert.line2, -1, &on_line2);
  const PlanarRegion quart_hi = clip(half, cert.line2, +1);
  const bool lo_quart = true_perimeter(quart_lo) <= true_perimeter(quart_hi);
  const PlanarRegion& quarter = lo_quart ? quart_lo : quart_hi;
  cert.boundary_on_bisector = on_line1 || on_line2;

  const Vec2 origin{cert.line1.offset / norm(cert.line1.normal),
                    cert.line2.offset / norm(cert.line2.normal)};
  const PlanarRegion local = translated(quarter, -origin);

  // quarter occupies one quadrant about the origin: doubling angles maps it
  // to a half-plane, and reflecting across that half-plane's boundary
  // rebuilds a full enclosure with twice the stretched quantities
  const StretchResult st = angular_stretch(local, 2.0);
  double true_len_after = 0.0;
  for (const auto& loop : local.loops)
    for (const auto& e : loop)
      if (!e.from_cut) true_len_after += stretched_edge_length(e, 2.0);

  cert.area_after = 2.0 * st.area_after;
  cert.perimeter_after = 2.0 * true_len_after;
  cert.strict = cert.perimeter_after <
                cert.perimeter_before * (1.0 - 1e-9) - 1e-12;
  return cert;
}

}  // namespace wdb
