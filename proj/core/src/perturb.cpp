#include "wdb/perturb.hpp"

#include <algorithm>
#include <cmath>

#include "wdb/rootfind.hpp"
#include "wdb/spherical.hpp"

namespace wdb {

FamilyKind family_from_string(const std::string& s) {
  if (s == "RADIAL_BUMP") return FamilyKind::kRadialBump;
  if (s == "JUNCTION_SLIDE") return FamilyKind::kJunctionSlide;
  if (s == "EXTRA_SLEEVE") return FamilyKind::kExtraSleeve;
  throw domain_error("unknown perturbation family: " + s);
}

std::string to_string(FamilyKind k) {
  switch (k) {
    case FamilyKind::kRadialBump: return "RADIAL_BUMP";
    case FamilyKind::kJunctionSlide: return "JUNCTION_SLIDE";
    case FamilyKind::kExtraSleeve: return "EXTRA_SLEEVE";
  }
  return "?";
}

namespace {

// arc (or segment) through p with tangent direction u and center on the
// axis, continued to its axis landing point
MeridianEdge axis_cap_at(Vec2 p, Vec2 u, RegionLabel left, RegionLabel right) {
  if (std::fabs(u.x) < 1e-13) return make_segment(p, {p.x, 0.0}, left, right);
  const double c = p.x + p.y * u.y / u.x;
  const double radius = std::hypot(p.x - c, p.y);
  const Vec2 to_center{c - p.x, -p.y};
  const double kappa =
      dot(rot90(u), to_center) > 0.0 ? 1.0 / radius : -1.0 / radius;
  // travel from angle of p around the circle: ccw reaches pi first, cw 0
  const double land = kappa > 0.0 ? c - radius : c + radius;
  return make_arc(p, {land, 0.0}, kappa, left, right);
}

// signed curvature of the circle through a and b with tangent t at a
double chord_curvature(Vec2 a, Vec2 b, Vec2 t) {
  const Vec2 ch = b - a;
  const double len2 = dot(ch, ch);
  return 2.0 * cross(t, ch) / len2;
}

// tangent-continuous biarc from (a, ta) to (b, tb); empty curvatures mean a
// straight segment suffices
std::vector<MeridianEdge> biarc(Vec2 a, Vec2 ta, Vec2 b, Vec2 tb,
                                RegionLabel left, RegionLabel right) {
  const Vec2 v = b - a;
  const Vec2 t = ta + tb;
  const double tt = dot(t, t);
  const double vt = dot(v, t);
  const double aa = tt - 4.0;
  std::vector<MeridianEdge> out;
  if (std::fabs(cross(ta, v)) < 1e-14 * norm(v) &&
      std::fabs(cross(tb, v)) < 1e-14 * norm(v)) {
    out.push_back(make_segment(a, b, left, right));
    return out;
  }
  double p;
  if (std::fabs(aa) < 1e-14) {
    p = dot(v, v) / (2.0 * vt);
  } else {
    p = (vt - std::sqrt(vt * vt - aa * dot(v, v))) / aa;
  }
  if (!(p > 0.0)) throw internal_error("biarc: no admissible joint");
  const Vec2 tm = (v - p * t) / (2.0 * p);
  const Vec2 m = a + p * (ta + tm);
  out.push_back(make_arc(a, m, chord_curvature(a, m, ta), left, right));
  out.push_back(make_arc(m, b, chord_curvature(m, b, tm), left, right));
  return out;
}

GeneratingNetwork radial_bump(const ProblemInstance& alpha,
                              const StandardBubbleGeometry& g, double eps,
                              const PerturbationOptions& opt) {
  GeneratingNetwork net = to_network(g);
  const MeridianEdge cap1 = net.edges[0];  // (B1 | EXT) exterior of bubble 1
  const double lambda = g.dilation;

  // outward normal of cap1 (left label is B1, so outward is the right side)
  auto build = [&](double corrector) {
    std::vector<MeridianEdge> chain;
    const int m = opt.bump_samples;
    Vec2 prev = cap1.p;
    for (int i = 1; i <= m; ++i) {
      const double u = static_cast<double>(i) / m;
      const double su = std::sin(M_PI * u);
      const double wiggle = std::sin(2.0 * M_PI * u) * su * su;
      const double window = su * su * su * su;
      const double disp = lambda * (eps * wiggle + corrector * window);
      const Vec2 out_n = -1.0 * rot90(edge_tangent(cap1, u));
      const Vec2 to = edge_point(cap1, u) + disp * out_n;
      chain.push_back(make_segment(prev, i == m ? edge_point(cap1, 1.0) : to,
                                   cap1.left, cap1.right));
      prev = i == m ? edge_point(cap1, 1.0) : to;
    }
    GeneratingNetwork out{net.dimension, {}};
    for (auto& e : chain) out.edges.push_back(e);
    out.edges.push_back(net.edges[1]);
    out.edges.push_back(net.edges[2]);
    return out;
  };

  if (!opt.restore_volume) return build(0.0);
  const double v_target = alpha.volumes.v1;
  auto residual = [&](double c) {
    return volume(build(c), RegionLabel::kB1) / v_target - 1.0;
  };
  const double cmax = 0.75 * eps + 1e-4;
  const auto br = expand_bracket(residual, -0.25 * eps - 1e-6,
                                 0.25 * eps + 1e-6, -cmax, cmax);
  const double c = bisect_root(residual, br.first, br.second, opt.volume_tol);
  return build(c);
}

GeneratingNetwork junction_slide(const ProblemInstance& alpha,
                                 const StandardBubbleGeometry& g, double eps,
                                 const PerturbationOptions& opt) {
  const double rho = g.junction_radius * (1.0 + eps);
  const Vec2 j{0.0, rho};
  const int n = alpha.dimension.n;

  auto volume_b1 = [&](double phi1) {
    GeneratingNetwork net{alpha.dimension, {}};
    net.edges.push_back(
        axis_cap_at(j, dir(phi1), RegionLabel::kB1, RegionLabel::kExt));
    net.edges.push_back(
        axis_cap_at(j, dir(g.phi0), RegionLabel::kB2, RegionLabel::kB1));
    return volume(net, RegionLabel::kB1);
  };
  auto volume_b2 = [&](double phi2) {
    GeneratingNetwork net{alpha.dimension, {}};
    net.edges.push_back(
        axis_cap_at(j, dir(phi2), RegionLabel::kExt, RegionLabel::kB2));
    net.edges.push_back(
        axis_cap_at(j, dir(g.phi0), RegionLabel::kB2, RegionLabel::kB1));
    return volume(net, RegionLabel::kB2);
  };

  const double pad = 1e-7;
  auto solve = [&](auto&& vol, double target, double lo, double hi) {
    auto res = [&](double phi) { return std::log(vol(phi) / target); };
    const auto br = expand_bracket(res, lo + 0.1 * (hi - lo),
                                   hi - 0.1 * (hi - lo), lo + pad, hi - pad);
    return bisect_root(res, br.first, br.second, opt.volume_tol);
  };
  // V1 runs from ~0 near phi1 = 3pi/2 to infinity near pi/2, V2 mirrored
  const double phi1 =
      solve(volume_b1, alpha.volumes.v1, 0.5 * M_PI, 1.5 * M_PI);
  const double phi2 =
      solve(volume_b2, alpha.volumes.v2, -0.5 * M_PI, 0.5 * M_PI);

  GeneratingNetwork net{alpha.dimension, {}};
  net.edges.push_back(
      axis_cap_at(j, dir(phi1), RegionLabel::kB1, RegionLabel::kExt));
  net.edges.push_back(
      axis_cap_at(j, dir(phi2), RegionLabel::kExt, RegionLabel::kB2));
  net.edges.push_back(
      axis_cap_at(j, dir(g.phi0), RegionLabel::kB2, RegionLabel::kB1));
  (void)n;
  return net;
}

GeneratingNetwork peanut(Dimension dim, const WeightTriple& w, double d,
                         double h, double psi) {
  const JunctionAngles ja = junction_angles(w);
  const Vec2 a{-d, h};
  const Vec2 u0 = dir(ja.phi0 + psi);
  const Vec2 u1 = dir(ja.phi1 + psi);
  const Vec2 u2 = dir(ja.phi2 + psi);

  GeneratingNetwork net{dim, {}};
  // left cap and interface from junction A
  net.edges.push_back(axis_cap_at(a, u1, RegionLabel::kB1, RegionLabel::kExt));
  net.edges.push_back(axis_cap_at(a, u0, RegionLabel::kB2, RegionLabel::kB1));
  // band: single arc from A to its mirror image, center on x = 0
  if (std::fabs(u2.y) < 1e-13) {
    net.edges.push_back(
        make_segment(a, {d, h}, RegionLabel::kExt, RegionLabel::kB2));
  } else {
    const double s = a.x / u2.y;  // center = a + s * rot90(u2) has x = 0
    net.edges.push_back(make_arc(a, {d, h}, 1.0 / s, RegionLabel::kExt,
                                 RegionLabel::kB2));
  }
  // mirrored right cap and interface
  const Vec2 b{d, h};
  const Vec2 m1{-u1.x, u1.y};
  const Vec2 m0{-u0.x, u0.y};
  net.edges.push_back(axis_cap_at(b, m1, RegionLabel::kExt, RegionLabel::kB1));
  net.edges.push_back(axis_cap_at(b, m0, RegionLabel::kB1, RegionLabel::kB2));
  return net;
}

GeneratingNetwork extra_sleeve(const ProblemInstance& alpha,
                               const StandardBubbleGeometry& g, double eps,
                               const PerturbationOptions& opt) {
  const double d = eps * g.junction_radius;
  double h = g.junction_radius;
  double psi = g.psi;

  // 2-unknown damped Newton on (h, psi) matching both volumes
  const double v1t = alpha.volumes.v1, v2t = alpha.volumes.v2;
  auto residual = [&](double hh, double pp, double* r1, double* r2) {
    const GeneratingNetwork net = peanut(alpha.dimension, alpha.weights, d, hh, pp);
    *r1 = volume(net, RegionLabel::kB1) / v1t - 1.0;
    *r2 = volume(net, RegionLabel::kB2) / v2t - 1.0;
  };
  double r1, r2;
  residual(h, psi, &r1, &r2);
  for (int iter = 0; iter < 60; ++iter) {
    const double err = std::fmax(std::fabs(r1), std::fabs(r2));
    if (err < opt.volume_tol) break;
    if (iter == 59)
      throw internal_error("extra_sleeve: volume solve did not converge");
    const double dh = 1e-7 * g.junction_radius;
    const double dp = 1e-7;
    double a1, a2, b1, b2;
    residual(h + dh, psi, &a1, &a2);
    residual(h, psi + dp, &b1, &b2);
    const double j11 = (a1 - r1) / dh, j12 = (b1 - r1) / dp;
    const double j21 = (a2 - r2) / dh, j22 = (b2 - r2) / dp;
    const double det = j11 * j22 - j12 * j21;
    if (std::fabs(det) < 1e-30)
      throw internal_error("extra_sleeve: singular volume Jacobian");
    double step_h = -(j22 * r1 - j12 * r2) / det;
    double step_p = -(-j21 * r1 + j11 * r2) / det;
    double scale = 1.0;
    for (int back = 0; back < 30; ++back) {
      double n1, n2;
      const double th = h + scale * step_h, tp = psi + scale * step_p;
      if (th > 0.1 * g.junction_radius) {
        residual(th, tp, &n1, &n2);
        if (std::fmax(std::fabs(n1), std::fabs(n2)) < err) {
          h = th;
          psi = tp;
          r1 = n1;
          r2 = n2;
          break;
        }
      }
      scale *= 0.5;
      if (back == 29)
        throw internal_error("extra_sleeve: line search stalled");
    }
  }
  return peanut(alpha.dimension, alpha.weights, d, h, psi);
}

}  // namespace

GeneratingNetwork make_competitor(const ProblemInstance& alpha,
                                  const StandardBubbleGeometry& g,
                                  FamilyKind family, double epsilon,
                                  const PerturbationOptions& opt) {
  if (g.degenerate != DegenerateKind::kNone)
    throw domain_error("make_competitor: instance is not strict");
  if (epsilon == 0.0) return to_network(g);
  switch (family) {
    case FamilyKind::kRadialBump: return radial_bump(alpha, g, epsilon, opt);
    case FamilyKind::kJunctionSlide:
      return junction_slide(alpha, g, epsilon, opt);
    case FamilyKind::kExtraSleeve: return extra_sleeve(alpha, g, epsilon, opt);
  }
  throw internal_error("make_competitor: unreachable");
}

CompetitorFactory default_competitor_factory(const PerturbationOptions& opt) {
  return [opt](const ProblemInstance& alpha, const StandardBubbleGeometry& g,
               const std::string& family, double epsilon,
               unsigned) -> std::optional<GeneratingNetwork> {
    return make_competitor(alpha, g, family_from_string(family), epsilon, opt);
  };
}

GeneratingNetwork make_caterpillar(Dimension n, const WeightTriple& w,
                                   Vec2 junction_a, Vec2 junction_b,
                                   double psi_a, double psi_b) {
  const JunctionAngles ja = junction_angles(w);
  const Vec2 ua0 = dir(ja.phi0 + psi_a);
  const Vec2 ua1 = dir(ja.phi1 + psi_a);
  const Vec2 ua2 = dir(ja.phi2 + psi_a);
  // mirrored frame at B, rotated by psi_b
  const Vec2 ub0 = dir(M_PI - ja.phi0 - psi_b);
  const Vec2 ub1 = dir(M_PI - ja.phi1 - psi_b);
  const Vec2 ub2 = dir(M_PI - ja.phi2 - psi_b);

  GeneratingNetwork net{n, {}};
  net.edges.push_back(
      axis_cap_at(junction_a, ua1, RegionLabel::kB1, RegionLabel::kExt));
  net.edges.push_back(
      axis_cap_at(junction_a, ua0, RegionLabel::kB2, RegionLabel::kB1));
  for (auto& e : biarc(junction_a, ua2, junction_b, -1.0 * ub2,
                       RegionLabel::kExt, RegionLabel::kB2))
    net.edges.push_back(e);
  net.edges.push_back(
      axis_cap_at(junction_b, ub1, RegionLabel::kExt, RegionLabel::kB1));
  net.edges.push_back(
      axis_cap_at(junction_b, ub0, RegionLabel::kB1, RegionLabel::kB2));
  return net;
}

}  // namespace wdb
