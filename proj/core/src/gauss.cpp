#include "wdb/gauss.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "wdb/quadrature.hpp"
#include "wdb/rootfind.hpp"

namespace wdb {

std::string to_string(Pointing p) {
  switch (p) {
    case Pointing::kLeft: return "LEFT";
    case Pointing::kRight: return "RIGHT";
    case Pointing::kVertical: return "VERTICAL";
  }
  return "?";
}

std::string to_string(OverlapCase c) {
  switch (c) {
    case OverlapCase::kSameSide: return "SAME_SIDE";
    case OverlapCase::kBothWays: return "BOTH_WAYS";
    case OverlapCase::kNotApplicable: return "NOT_APPLICABLE";
  }
  return "?";
}

std::string to_string(AuditVerdict v) {
  return v == AuditVerdict::kConsistent ? "CONSISTENT" : "CONTRADICTION";
}

double cuff_h_general(int exponent, double t, double beta) {
  if (beta <= 0.0) throw domain_error("cuff h: beta must be positive");
  if (t < 0.0 || t + beta > M_PI)
    throw domain_error("cuff h: window [t, t+beta] must lie in [0, pi]");
  const double ft = std::pow(std::sin(t), exponent);
  if (ft <= 0.0) throw domain_error("cuff h: f(t) vanishes at t = 0 or pi");
  return sin_power_integral(exponent, t, t + beta) / ft;
}

double cuff_area_per_inner_perimeter(Dimension n, double t, double beta) {
  return cuff_h_general(n.n - 2, t, beta);
}

namespace {

double fold(double a) { return std::fabs(wrap_angle(a)); }

// image of |wrap_angle(.)| over the unwrapped angle interval [a, b]
std::pair<double, double> fold_interval(double a, double b) {
  if (a > b) std::swap(a, b);
  double lo = std::fmin(fold(a), fold(b));
  double hi = std::fmax(fold(a), fold(b));
  for (double k = std::ceil(a / M_PI); k * M_PI <= b + 1e-15; k += 1.0) {
    const double v = std::fabs(std::remainder(k, 2.0)) < 0.5 ? 0.0 : M_PI;
    lo = std::fmin(lo, v);
    hi = std::fmax(hi, v);
  }
  return {lo, hi};
}

double outward_normal_angle(const MeridianEdge& e, double u) {
  const Vec2 t = edge_tangent(e, u);
  const Vec2 nrm = e.left == RegionLabel::kExt ? rot90(t) : -rot90(t);
  return std::atan2(nrm.y, nrm.x);
}

bool is_exterior(const MeridianEdge& e) {
  return e.left == RegionLabel::kExt || e.right == RegionLabel::kExt;
}

RegionLabel bubble_side(const MeridianEdge& e) {
  return e.left == RegionLabel::kExt ? e.right : e.left;
}

double edge_turn(const MeridianEdge& e) {
  return e.kind == EdgeKind::kArc ? arc_geometry(e).sweep : 0.0;
}

}  // namespace

SleeveDecomposition sleeves_and_cuffs(const GeneratingNetwork& net,
                                      const WeightTriple& w,
                                      double balance_tol) {
  for (const auto& jr : junction_residuals(net, w))
    if (jr.residual > balance_tol)
      throw domain_error("sleeves_and_cuffs: junction out of force balance");

  const Dimension dim = net.dimension;
  const NetworkNodes nn = build_nodes(net);
  const double axis_tol = nn.merge_tol;

  // smooth exterior components: exterior edges joined across degree-2 nodes
  std::vector<int> chain_of(net.edges.size(), -1);
  std::vector<std::vector<int>> chains;
  for (size_t i = 0; i < net.edges.size(); ++i) {
    if (!is_exterior(net.edges[i]) || chain_of[i] >= 0) continue;
    std::vector<int> stack{static_cast<int>(i)};
    std::vector<int> chain;
    chain_of[i] = static_cast<int>(chains.size());
    while (!stack.empty()) {
      const int e = stack.back();
      stack.pop_back();
      chain.push_back(e);
      for (int v : nn.edge_node[e]) {
        if (nn.incident_edges[v].size() != 2) continue;  // junction or end
        for (int other : nn.incident_edges[v]) {
          if (other == e || chain_of[other] >= 0) continue;
          if (!is_exterior(net.edges[other])) continue;
          chain_of[other] = chain_of[e];
          stack.push_back(other);
        }
      }
    }
    chains.push_back(std::move(chain));
  }

  SleeveDecomposition out;
  for (const auto& chain : chains) {
    Sleeve s;
    s.edges = chain;
    s.bubble = bubble_side(net.edges[chain.front()]);
    double lo = M_PI, hi = 0.0;
    bool touches_axis = false;
    for (int e : chain) {
      const double a0 = outward_normal_angle(net.edges[e], 0.0);
      const auto iv = fold_interval(a0, a0 + edge_turn(net.edges[e]));
      lo = std::fmin(lo, iv.first);
      hi = std::fmax(hi, iv.second);
      for (int v : nn.edge_node[e])
        if (nn.position[v].y <= axis_tol) touches_axis = true;
    }
    s.t_start = lo;
    s.t_end = hi;
    s.is_end_sleeve = touches_axis || lo < 1e-9 || hi > M_PI - 1e-9;
    out.sleeves.push_back(std::move(s));
  }
  std::sort(out.sleeves.begin(), out.sleeves.end(),
            [](const Sleeve& a, const Sleeve& b) {
              return a.t_start < b.t_start ||
                     (a.t_start == b.t_start && a.t_end < b.t_end);
            });
  // re-map chain ids after sorting
  std::vector<int> sleeve_of_edge(net.edges.size(), -1);
  for (size_t si = 0; si < out.sleeves.size(); ++si)
    for (int e : out.sleeves[si].edges) sleeve_of_edge[e] = static_cast<int>(si);

  // junction cuffs and antennae
  for (size_t v = 0; v < nn.position.size(); ++v) {
    if (nn.position[v].y <= axis_tol) continue;
    if (nn.incident_edges[v].size() != 3) continue;
    std::vector<int> ext;
    for (int e : nn.incident_edges[v])
      if (is_exterior(net.edges[e])) ext.push_back(e);
    if (ext.size() != 2)
      throw domain_error("sleeves_and_cuffs: junction without two exterior edges");

    auto at_node_u = [&](int e) {
      return nn.edge_node[e][0] == static_cast<int>(v) ? 0.0 : 1.0;
    };
    const double ta = fold(outward_normal_angle(net.edges[ext[0]], at_node_u(ext[0])));
    const double tb = fold(outward_normal_angle(net.edges[ext[1]], at_node_u(ext[1])));
    Cuff c;
    c.junction_node = static_cast<int>(v);
    c.raw_lo = std::fmin(ta, tb);
    c.raw_hi = std::fmax(ta, tb);
    c.beta = c.raw_hi - c.raw_lo;
    c.t = c.raw_lo <= M_PI - c.raw_hi ? c.raw_lo : M_PI - c.raw_hi;
    c.inner_perimeter = latitude_sphere_measure(dim, c.t);
    c.sleeve_a = sleeve_of_edge[ext[0]];
    c.sleeve_b = sleeve_of_edge[ext[1]];
    out.cuffs.push_back(c);

    Antenna ant;
    ant.junction_node = static_cast<int>(v);
    ant.position = nn.position[v];
    Vec2 sum{0.0, 0.0};
    for (int e : ext) {
      const double u = at_node_u(e);
      const Vec2 t = u == 0.0 ? edge_tangent(net.edges[e], 0.0)
                              : -edge_tangent(net.edges[e], 1.0);
      sum = sum + t;
    }
    ant.direction = norm(sum) > 1e-12 ? unit(sum)
                                      : Vec2{0.0, 1.0};  // opposite conormals
    ant.steepness = fold(std::atan2(ant.direction.y, ant.direction.x));
    const double x = ant.direction.x;
    ant.pointing = std::fabs(x) <= 1e-9 ? Pointing::kVertical
                   : (x < 0.0 ? Pointing::kLeft : Pointing::kRight);
    out.antennae.push_back(ant);
  }
  std::sort(out.cuffs.begin(), out.cuffs.end(),
            [](const Cuff& a, const Cuff& b) { return a.raw_lo < b.raw_lo; });

  for (const auto& s : out.sleeves)
    out.total_sleeve_area += zone_area(dim, s.t_start, s.t_end);
  for (const auto& c : out.cuffs)
    out.total_cuff_area += zone_area(dim, c.raw_lo, c.raw_hi);

  // zone measure of [0, pi] not covered by any sleeve
  double cursor = 0.0;
  double deficit = 0.0;
  for (const auto& s : out.sleeves) {
    if (s.t_start > cursor) deficit += zone_area(dim, cursor, s.t_start);
    cursor = std::fmax(cursor, s.t_end);
  }
  if (cursor < M_PI) deficit += zone_area(dim, cursor, M_PI);
  out.coverage_deficit = deficit;
  return out;
}

double cuff_area(Dimension n, const Cuff& cuff) {
  return zone_area(n, cuff.t, cuff.t + cuff.beta);
}

double cap_perimeter_for_area(Dimension n, double area) {
  const double total = n.n * unit_ball_volume(n.n);
  if (!(area > 0.0 && area < total))
    throw domain_error("cap_perimeter_for_area: area outside (0, n*alpha_n)");
  const double theta = bisect_root(
      [&](double th) { return zone_area(n, 0.0, th) - area; }, 1e-12,
      M_PI - 1e-12, 1e-13 * total);
  return latitude_sphere_measure(n, theta);
}

OverlapExcessReport overlap_excess(const GeneratingNetwork& net,
                                   const WeightTriple& w,
                                   const StandardBubbleGeometry& m) {
  OverlapExcessReport rep;
  const Dimension dim = net.dimension;
  if (m.degenerate != DegenerateKind::kNone) {
    rep.not_applicable_reason = "matched standard bubble is degenerate";
    return rep;
  }
  const SleeveDecomposition dec = sleeves_and_cuffs(net, w);
  for (const auto& c : dec.cuffs)
    rep.competitor_cuff_areas.push_back(cuff_area(dim, c));
  const SleeveDecomposition std_dec = sleeves_and_cuffs(to_network(m), w);
  if (std_dec.cuffs.size() != 1)
    throw internal_error("overlap_excess: standard bubble without single cuff");
  const Cuff& km = std_dec.cuffs.front();
  rep.standard_cuff_area = cuff_area(dim, km);
  rep.standard_inner_perimeter = km.inner_perimeter;

  if (dec.cuffs.size() < 2) {
    rep.not_applicable_reason = "competitor has fewer than two cuffs";
    return rep;
  }

  // informational hypothesis check: per-bubble exterior areas below standard
  {
    const MeasuredQuantities mm = measured(m);
    const AreaBreakdown a = weighted_area(net, w);
    if (a.ext1 >= mm.a_ext1)
      rep.violated_hypotheses.push_back("A_ext1(C) >= A_ext1(M)");
    if (a.ext2 >= mm.a_ext2)
      rep.violated_hypotheses.push_back("A_ext2(C) >= A_ext2(M)");
  }

  bool any_left = false, any_right = false;
  for (const auto& a : dec.antennae) {
    if (a.pointing != Pointing::kRight) any_left = true;   // vertical: both
    if (a.pointing != Pointing::kLeft) any_right = true;
  }
  const bool both_ways = any_left && any_right;
  auto cuffs_of_sleeve = [&](int si) {
    std::vector<int> ids;
    for (size_t ci = 0; ci < dec.cuffs.size(); ++ci)
      if (dec.cuffs[ci].sleeve_a == si || dec.cuffs[ci].sleeve_b == si)
        ids.push_back(static_cast<int>(ci));
    return ids;
  };

  if (!both_ways) {
    rep.kase = OverlapCase::kSameSide;
    // witness: the largest end sleeve; its cuff is higher than K_M
    int best = -1;
    double best_area = -1.0;
    for (size_t si = 0; si < dec.sleeves.size(); ++si) {
      if (!dec.sleeves[si].is_end_sleeve) continue;
      const double a =
          zone_area(dim, dec.sleeves[si].t_start, dec.sleeves[si].t_end);
      if (a > best_area) {
        best_area = a;
        best = static_cast<int>(si);
      }
    }
    if (best < 0) {
      rep.kase = OverlapCase::kNotApplicable;
      rep.not_applicable_reason = "no end sleeve";
      return rep;
    }
    rep.witness_sleeve = best;
    const auto ids = cuffs_of_sleeve(best);
    double total = 0.0;
    for (int ci : ids) total += rep.competitor_cuff_areas[ci];
    rep.excess = total - rep.standard_cuff_area;
    const auto& s = dec.sleeves[best];
    rep.witness_perimeter =
        latitude_sphere_measure(dim, std::fmax(s.t_start, 1e-12)) +
        latitude_sphere_measure(dim, std::fmin(s.t_end, M_PI - 1e-12));
    rep.isoperimetric_bound = cap_perimeter_for_area(dim, best_area);
    return rep;
  }

  rep.kase = OverlapCase::kBothWays;
  // witness: a double-cuffed sleeve with antennae pointing both ways;
  // fall back to the double-cuffed sleeve of largest total cuff area
  auto pointing_at = [&](int junction) {
    for (const auto& a : dec.antennae)
      if (a.junction_node == junction) return a.pointing;
    return Pointing::kVertical;
  };
  int witness = -1;
  double witness_total = -1.0;
  for (size_t si = 0; si < dec.sleeves.size(); ++si) {
    const auto ids = cuffs_of_sleeve(static_cast<int>(si));
    if (ids.size() != 2) continue;
    const Pointing pa = pointing_at(dec.cuffs[ids[0]].junction_node);
    const Pointing pb = pointing_at(dec.cuffs[ids[1]].junction_node);
    const bool opposite =
        (pa != Pointing::kRight && pb != Pointing::kLeft) ||
        (pa != Pointing::kLeft && pb != Pointing::kRight);
    const double total =
        rep.competitor_cuff_areas[ids[0]] + rep.competitor_cuff_areas[ids[1]];
    const double score = total + (opposite ? 1e6 : 0.0);
    if (score > witness_total) {
      witness_total = score;
      witness = static_cast<int>(si);
    }
  }
  if (witness < 0) {
    rep.kase = OverlapCase::kNotApplicable;
    rep.not_applicable_reason = "no double-cuffed sleeve";
    return rep;
  }
  rep.witness_sleeve = witness;
  const auto ids = cuffs_of_sleeve(witness);
  double total = 0.0;
  for (int ci : ids) total += rep.competitor_cuff_areas[ci];
  rep.excess = total - rep.standard_cuff_area;
  const auto& s = dec.sleeves[witness];
  rep.witness_perimeter =
      latitude_sphere_measure(dim, std::fmax(s.t_start, 1e-12)) +
      latitude_sphere_measure(dim, std::fmin(s.t_end, M_PI - 1e-12));
  rep.isoperimetric_bound =
      cap_perimeter_for_area(dim, zone_area(dim, s.t_start, s.t_end));
  return rep;
}

namespace {

// mean curvature of the revolved surface at edge parameter u, with respect
// to the outward (exterior-facing) normal; |.| is reported
double mean_curvature(const MeridianEdge& e, int n, double u) {
  const Vec2 t = edge_tangent(e, u);
  const Vec2 pt = edge_point(e, u);
  // curvature of the meridian plus (n-2) latitude curvatures, left normal
  const double h_left = e.curvature - (n - 2) * t.x / pt.y;
  return e.left == RegionLabel::kExt ? h_left : -h_left;
}

}  // namespace

CalibrationAuditReport calibration_audit(const GeneratingNetwork& net,
                                         const ProblemInstance& alpha,
                                         std::optional<double> assumed_mu) {
  const Dimension dim = net.dimension;
  const int n = dim.n;
  CalibrationAuditReport rep;

  const SleeveDecomposition dec = sleeves_and_cuffs(net, alpha.weights);
  const StandardBubbleGeometry m = construct(alpha);
  const MeasuredQuantities mm = measured(m);
  const double sphere_total = n * unit_ball_volume(n);

  rep.total_sleeve_area = dec.total_sleeve_area;
  rep.coverage_deficit = dec.coverage_deficit;
  rep.total_overlap = dec.total_sleeve_area - (sphere_total - dec.coverage_deficit);
  rep.coverage_identity_residual =
      dec.total_sleeve_area - dec.total_cuff_area - sphere_total;
  rep.exterior_singular_spheres = static_cast<int>(dec.cuffs.size());

  if (m.degenerate == DegenerateKind::kNone) {
    const SleeveDecomposition std_dec =
        sleeves_and_cuffs(to_network(m), alpha.weights);
    rep.standard_overlap = std_dec.total_cuff_area;
  }

  const double ring = (n - 1) * unit_ball_volume(n - 1);
  double max_ratio = 0.0;
  for (const auto& s : dec.sleeves) {
    PieceAudit pa;
    pa.bubble = s.bubble == RegionLabel::kB1 ? 1 : 2;
    pa.edges = s.edges;
    pa.gauss_zone_area = zone_area(dim, s.t_start, s.t_end);
    double area = 0.0, gk = 0.0;
    double hmin = 1e300, hmax = -1e300, hsum = 0.0;
    int hcount = 0;
    for (int ei : s.edges) {
      const auto& e = net.edges[ei];
      area += ring * edge_integral_y_ds(e, n - 2);
      const double len = edge_length(e);
      gk += ring * len *
            integrate(
                [&](double u) {
                  const Vec2 t = edge_tangent(e, u);
                  return std::fabs(e.curvature) *
                         std::pow(std::fabs(t.x), n - 2);
                },
                0.0, 1.0, 1e-12);
      for (int k = 1; k < 16; ++k) {
        const double h = std::fabs(mean_curvature(e, n, k / 16.0));
        hmin = std::fmin(hmin, h);
        hmax = std::fmax(hmax, h);
        hsum += h;
        ++hcount;
      }
    }
    pa.area_competitor = area;
    pa.h_mean = hsum / hcount;
    pa.h_min = hmin;
    pa.h_max = hmax;
    pa.h_constant = (hmax - hmin) <= 1e-8 * std::fmax(1.0, hmax);
    pa.gk_integral = gk;
    pa.amgm_bound = area * std::pow(pa.h_mean / (n - 1), n - 1);

    // compare against the matching bubble of the standard: per-bubble totals
    double bubble_total = 0.0;
    for (const auto& s2 : dec.sleeves)
      if (s2.bubble == s.bubble)
        for (int ei : s2.edges)
          bubble_total += ring * edge_integral_y_ds(net.edges[ei], n - 2);
    pa.area_standard = pa.bubble == 1 ? mm.a_ext1 : mm.a_ext2;
    pa.h_standard = pa.bubble == 1 ? mm.h_ext1 : mm.h_ext2;
    pa.area_ratio = bubble_total / pa.area_standard;
    pa.curvature_ratio = pa.h_mean / pa.h_standard;
    max_ratio = std::fmax(max_ratio, std::fmax(pa.area_ratio, pa.curvature_ratio));
    rep.pieces.push_back(std::move(pa));
  }

  rep.effective_mu = assumed_mu.value_or(max_ratio);
  rep.required_gauss_area = sphere_total + rep.total_overlap;
  rep.available_gauss_area =
      std::pow(rep.effective_mu, n) * (sphere_total + rep.standard_overlap);
  rep.verdict = rep.available_gauss_area <
                        rep.required_gauss_area * (1.0 - 1e-12)
                    ? AuditVerdict::kContradiction
                    : AuditVerdict::kConsistent;
  return rep;
}

}  // namespace wdb
