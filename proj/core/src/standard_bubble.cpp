#include "wdb/standard_bubble.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "wdb/rootfind.hpp"
#include "wdb/spherical.hpp"

namespace wdb {

namespace {
constexpr double kFlatCurvature = 1e-13;  // below this an arc is a segment
}

std::string to_string(DegenerateKind k) {
  switch (k) {
    case DegenerateKind::kNone: return "NONE";
    case DegenerateKind::kDisjoint: return "DISJOINT";
    case DegenerateKind::kNested: return "NESTED";
    case DegenerateKind::kSingle: return "SINGLE";
  }
  return "?";
}

JunctionAngles junction_angles(const WeightTriple& w) {
  if (classify_weights(w) != WeightClass::kStrict)
    throw domain_error(
        "junction_angles: weights are not strict; use construct_degenerate");
  auto pair_angle = [](double wi, double wj, double wk) {
    return std::acos((wk * wk - wi * wi - wj * wj) / (2.0 * wi * wj));
  };
  JunctionAngles a;
  a.theta01 = pair_angle(w.w0, w.w1, w.w2);
  a.theta02 = pair_angle(w.w0, w.w2, w.w1);
  a.theta12 = pair_angle(w.w1, w.w2, w.w0);
  a.phi0 = -0.5 * M_PI;
  a.phi1 = a.phi0 - a.theta01;
  a.phi2 = a.phi0 + a.theta02;
  return a;
}

namespace {

// Meridian arc of the cap through the junction (0, rho) with tangent
// direction phi, continued to its axis landing point.  The stored edge
// curvature follows the network's ccw travel convention, so it is
// -cos(phi)/rho while the cap's balance-convention curvature is +cos(phi)/rho.
MeridianEdge cap_edge(double rho, double phi, RegionLabel left,
                      RegionLabel right) {
  const Vec2 j{0.0, rho};
  const double c = std::cos(phi);
  if (std::fabs(c) < kFlatCurvature)
    return make_segment(j, {0.0, 0.0}, left, right);
  const double center = rho * std::tan(phi);
  const double radius = rho / std::fabs(c);
  const double land = c < 0.0 ? center - radius : center + radius;
  return make_arc(j, {land, 0.0}, -c / rho, left, right);
}

GeneratingNetwork strict_network(Dimension dim, double rho, double phi0,
                                 double phi1, double phi2) {
  GeneratingNetwork net{dim, {}};
  net.edges.push_back(cap_edge(rho, phi1, RegionLabel::kB1, RegionLabel::kExt));
  net.edges.push_back(cap_edge(rho, phi2, RegionLabel::kExt, RegionLabel::kB2));
  net.edges.push_back(cap_edge(rho, phi0, RegionLabel::kB2, RegionLabel::kB1));
  return net;
}

// closed-form volumes of the two bubbles for the rho = 1 configuration
struct StrictVolumes {
  double v1, v2;
};

StrictVolumes strict_volumes(Dimension dim, double phi0, double phi1,
                             double phi2) {
  auto cap_solid = [&](double phi, double pole_sign) {
    // solid polar cap of the sphere behind the cap, cut by the junction plane
    const double c = std::cos(phi);
    if (std::fabs(c) < kFlatCurvature) return 0.0;
    const double center = std::tan(phi);
    const double radius = 1.0 / std::fabs(c);
    const double cos_t = -pole_sign * center / radius;
    return cap_volume(dim, radius, std::acos(std::clamp(cos_t, -1.0, 1.0)));
  };
  // cap 1 lands left of the junction plane, cap 2 right; the interface bulge
  // is carved from whichever bubble it bends into
  const double vol1 = cap_solid(phi1, -1.0);
  const double vol2 = cap_solid(phi2, +1.0);
  const double kappa0 = std::cos(phi0);
  double bulge = 0.0;
  if (std::fabs(kappa0) >= kFlatCurvature)
    bulge = cap_solid(phi0, kappa0 > 0.0 ? +1.0 : -1.0);
  const double s = kappa0 > 0.0 ? 1.0 : (kappa0 < 0.0 ? -1.0 : 0.0);
  return {vol1 + s * bulge, vol2 - s * bulge};
}

}  // namespace

VolumePair frame_volumes(Dimension n, const JunctionAngles& angles,
                         double psi) {
  if (!(psi > angles.theta01 - M_PI && psi < M_PI - angles.theta02))
    throw domain_error("frame_volumes: psi outside the admissible interval");
  const StrictVolumes v = strict_volumes(n, angles.phi0 + psi,
                                         angles.phi1 + psi, angles.phi2 + psi);
  return {v.v1, v.v2};
}

namespace {

StandardBubbleGeometry construct_strict(const ProblemInstance& alpha,
                                        const ConstructOptions& opt) {
  const JunctionAngles ja = junction_angles(alpha.weights);
  const double target = alpha.volumes.v1 / alpha.volumes.v2;

  // psi rotates the conormal frame; at the interval ends one exterior cap
  // flattens and the volume ratio runs to 0 or infinity, monotonically.
  const double lo = ja.theta01 - M_PI;
  const double hi = M_PI - ja.theta02;
  auto log_ratio = [&](double psi) {
    const StrictVolumes v = strict_volumes(alpha.dimension, ja.phi0 + psi,
                                           ja.phi1 + psi, ja.phi2 + psi);
    if (!(v.v1 > 0.0) || !(v.v2 > 0.0))
      throw internal_error("construct: nonpositive volume inside psi range");
    return std::log(v.v1 / v.v2) - std::log(target);
  };
  const double pad = 1e-6 * (hi - lo);
  auto bracket = expand_bracket(log_ratio, lo + 0.25 * (hi - lo),
                                hi - 0.25 * (hi - lo), lo + pad, hi - pad);
  const double psi =
      bisect_root(log_ratio, bracket.first, bracket.second, opt.ratio_tol);

  StandardBubbleGeometry g{alpha.dimension, alpha.weights, alpha.volumes};
  g.degenerate = DegenerateKind::kNone;
  g.psi = psi;
  g.phi0 = wrap_angle(ja.phi0 + psi);
  g.phi1 = wrap_angle(ja.phi1 + psi);
  g.phi2 = wrap_angle(ja.phi2 + psi);
  const StrictVolumes v1frame =
      strict_volumes(alpha.dimension, g.phi0, g.phi1, g.phi2);
  const double lambda =
      std::pow(alpha.volumes.v1 / v1frame.v1, 1.0 / alpha.dimension.n);
  g.dilation = lambda;
  g.junction_radius = lambda;
  g.kappa0 = std::cos(g.phi0) / lambda;
  g.kappa1 = std::cos(g.phi1) / lambda;
  g.kappa2 = std::cos(g.phi2) / lambda;
  return g;
}

double ball_radius(Dimension n, double v) {
  return std::pow(v / unit_ball_volume(n.n), 1.0 / n.n);
}

}  // namespace

StandardBubbleGeometry construct_degenerate(const ProblemInstance& alpha) {
  check_valid(alpha.weights);
  check_valid(alpha.volumes);
  StandardBubbleGeometry g{alpha.dimension, alpha.weights, alpha.volumes};

  if (alpha.volumes.v1 == 0.0 || alpha.volumes.v2 == 0.0) {
    g.degenerate = DegenerateKind::kSingle;
    g.enclosed_bubble = alpha.volumes.v1 > 0.0 ? 1 : 2;
    g.deg_r1 = ball_radius(alpha.dimension,
                           alpha.volumes.v1 > 0.0 ? alpha.volumes.v1
                                                  : alpha.volumes.v2);
    g.deg_c1 = 0.0;
    return g;
  }

  const WeightClass cls = classify_weights(alpha.weights);
  if (cls == WeightClass::kStrict)
    throw domain_error(
        "construct_degenerate: strict weights with positive volumes");
  switch (degenerate_regime(alpha.weights)) {
    case DegenerateRegime::kDisjoint: {
      g.degenerate = DegenerateKind::kDisjoint;
      g.deg_r1 = ball_radius(alpha.dimension, alpha.volumes.v1);
      g.deg_r2 = ball_radius(alpha.dimension, alpha.volumes.v2);
      const double gap = 0.25 * (g.deg_r1 + g.deg_r2);
      g.deg_c1 = -(g.deg_r1 + 0.5 * gap);
      g.deg_c2 = g.deg_r2 + 0.5 * gap;
      return g;
    }
    case DegenerateRegime::kNested1:
    case DegenerateRegime::kNested2: {
      // the dominant-weight bubble is enclosed: inner sphere is interface
      g.degenerate = DegenerateKind::kNested;
      g.enclosed_bubble =
          degenerate_regime(alpha.weights) == DegenerateRegime::kNested1 ? 1 : 2;
      const double v_in =
          g.enclosed_bubble == 1 ? alpha.volumes.v1 : alpha.volumes.v2;
      g.deg_r1 = ball_radius(alpha.dimension, v_in);
      g.deg_r2 =
          ball_radius(alpha.dimension, alpha.volumes.v1 + alpha.volumes.v2);
      g.deg_c1 = g.deg_c2 = 0.0;
      return g;
    }
  }
  throw internal_error("construct_degenerate: unreachable");
}

StandardBubbleGeometry construct(const ProblemInstance& alpha,
                                 const ConstructOptions& opt) {
  check_valid(alpha.weights);
  check_valid(alpha.volumes);
  if (alpha.volumes.v1 == 0.0 || alpha.volumes.v2 == 0.0)
    return construct_degenerate(alpha);
  if (classify_weights(alpha.weights) != WeightClass::kStrict)
    return construct_degenerate(alpha);
  return construct_strict(alpha, opt);
}

GeneratingNetwork to_network(const StandardBubbleGeometry& g) {
  const Dimension n = g.dimension;
  switch (g.degenerate) {
    case DegenerateKind::kNone:
      return dilated(
          strict_network(n, 1.0, g.phi0, g.phi1, g.phi2), g.dilation);
    case DegenerateKind::kSingle: {
      GeneratingNetwork net{n, {}};
      const RegionLabel inner =
          g.enclosed_bubble == 1 ? RegionLabel::kB1 : RegionLabel::kB2;
      net.edges.push_back(make_arc({g.deg_c1 - g.deg_r1, 0.0},
                                   {g.deg_c1 + g.deg_r1, 0.0}, -1.0 / g.deg_r1,
                                   RegionLabel::kExt, inner));
      return net;
    }
    case DegenerateKind::kDisjoint: {
      GeneratingNetwork net{n, {}};
      net.edges.push_back(make_arc({g.deg_c1 - g.deg_r1, 0.0},
                                   {g.deg_c1 + g.deg_r1, 0.0}, -1.0 / g.deg_r1,
                                   RegionLabel::kExt, RegionLabel::kB1));
      net.edges.push_back(make_arc({g.deg_c2 - g.deg_r2, 0.0},
                                   {g.deg_c2 + g.deg_r2, 0.0}, -1.0 / g.deg_r2,
                                   RegionLabel::kExt, RegionLabel::kB2));
      return net;
    }
    case DegenerateKind::kNested: {
      GeneratingNetwork net{n, {}};
      const RegionLabel in_label =
          g.enclosed_bubble == 1 ? RegionLabel::kB1 : RegionLabel::kB2;
      const RegionLabel out_label =
          g.enclosed_bubble == 1 ? RegionLabel::kB2 : RegionLabel::kB1;
      net.edges.push_back(make_arc({-g.deg_r1, 0.0}, {g.deg_r1, 0.0},
                                   -1.0 / g.deg_r1, out_label, in_label));
      net.edges.push_back(make_arc({-g.deg_r2, 0.0}, {g.deg_r2, 0.0},
                                   -1.0 / g.deg_r2, RegionLabel::kExt,
                                   out_label));
      return net;
    }
  }
  throw internal_error("to_network: unreachable");
}

MeasuredQuantities measured(const StandardBubbleGeometry& g) {
  const Dimension dim = g.dimension;
  const int n = dim.n;
  MeasuredQuantities m;
  auto sphere_h = [&](double r) { return (n - 1) / r; };

  switch (g.degenerate) {
    case DegenerateKind::kSingle: {
      const double a = sphere_area(n, g.deg_r1);
      const double v = unit_ball_volume(n) * std::pow(g.deg_r1, n);
      if (g.enclosed_bubble == 1) {
        m.a_ext1 = a;
        m.v1 = v;
        m.h_ext1 = sphere_h(g.deg_r1);
        m.q = g.weights.w1 * a;
      } else {
        m.a_ext2 = a;
        m.v2 = v;
        m.h_ext2 = sphere_h(g.deg_r1);
        m.q = g.weights.w2 * a;
      }
      return m;
    }
    case DegenerateKind::kDisjoint: {
      m.a_ext1 = sphere_area(n, g.deg_r1);
      m.a_ext2 = sphere_area(n, g.deg_r2);
      m.v1 = unit_ball_volume(n) * std::pow(g.deg_r1, n);
      m.v2 = unit_ball_volume(n) * std::pow(g.deg_r2, n);
      m.h_ext1 = sphere_h(g.deg_r1);
      m.h_ext2 = sphere_h(g.deg_r2);
      m.q = g.weights.w1 * m.a_ext1 + g.weights.w2 * m.a_ext2;
      return m;
    }
    case DegenerateKind::kNested: {
      const double a_in = sphere_area(n, g.deg_r1);
      const double a_out = sphere_area(n, g.deg_r2);
      const double v_in = unit_ball_volume(n) * std::pow(g.deg_r1, n);
      const double v_out = unit_ball_volume(n) * std::pow(g.deg_r2, n);
      m.a_int = a_in;
      m.h_int = sphere_h(g.deg_r1);
      if (g.enclosed_bubble == 1) {
        m.v1 = v_in;
        m.v2 = v_out - v_in;
        m.a_ext2 = a_out;
        m.h_ext2 = sphere_h(g.deg_r2);
        m.q = g.weights.w0 * a_in + g.weights.w2 * a_out;
      } else {
        m.v2 = v_in;
        m.v1 = v_out - v_in;
        m.a_ext1 = a_out;
        m.h_ext1 = sphere_h(g.deg_r2);
        m.q = g.weights.w0 * a_in + g.weights.w1 * a_out;
      }
      return m;
    }
    case DegenerateKind::kNone: break;
  }

  // three spherical caps meeting at the junction circle of radius lambda
  const double rho = g.junction_radius;
  auto cap = [&](double phi, double pole_sign, double& area, double& h) {
    const double c = std::cos(phi);
    if (std::fabs(c) < kFlatCurvature) {
      // flat (n-1)-disk spanning the junction circle
      area = unit_ball_volume(n - 1) * std::pow(rho, n - 1);
      h = 0.0;
      return 0.0;
    }
    const double center = rho * std::tan(phi);
    const double radius = rho / std::fabs(c);
    const double cos_t = std::clamp(-pole_sign * center / radius, -1.0, 1.0);
    const double theta = std::acos(cos_t);
    area = std::pow(radius, n - 1) * (n - 1) * unit_ball_volume(n - 1) *
           sin_power_integral(n - 2, 0.0, theta);
    h = (n - 1) / radius;
    return cap_volume(dim, radius, theta);
  };
  const double vol1 = cap(g.phi1, -1.0, m.a_ext1, m.h_ext1);
  const double vol2 = cap(g.phi2, +1.0, m.a_ext2, m.h_ext2);
  const double kappa0 = std::cos(g.phi0);
  double bulge = 0.0;
  if (std::fabs(kappa0) >= kFlatCurvature)
    bulge = cap(g.phi0, kappa0 > 0.0 ? 1.0 : -1.0, m.a_int, m.h_int);
  else
    cap(g.phi0, 1.0, m.a_int, m.h_int);
  const double s = kappa0 > 0.0 ? 1.0 : (kappa0 < 0.0 ? -1.0 : 0.0);
  m.v1 = vol1 + s * bulge;
  m.v2 = vol2 - s * bulge;
  m.q = g.weights.w1 * m.a_ext1 + g.weights.w2 * m.a_ext2 +
        g.weights.w0 * m.a_int;
  return m;
}

SensitivityTable sensitivity(const ProblemInstance& alpha, double h) {
  if (h <= 0.0) throw domain_error("sensitivity: step must be positive");
  auto quantities = [](const ProblemInstance& a) -> std::array<double, 4> {
    if (classify_weights(a.weights) != WeightClass::kStrict)
      throw domain_error("sensitivity: perturbation leaves the strict region");
    check_valid(a.volumes);
    if (a.volumes.v1 == 0.0 || a.volumes.v2 == 0.0)
      throw domain_error("sensitivity: perturbation reaches a zero volume");
    const StandardBubbleGeometry g = construct(a);
    const double r1 = 1.0 / std::fabs(g.kappa1);
    const double r2 = 1.0 / std::fabs(g.kappa2);
    const double c1 = g.junction_radius * std::tan(g.phi1);
    const double c2 = g.junction_radius * std::tan(g.phi2);
    return {g.kappa0, r1, r2, std::fabs(c1 - c2)};
  };
  auto perturbed = [&](int param, double delta) {
    ProblemInstance a = alpha;
    switch (param) {
      case 0: a.volumes.v1 += delta; break;
      case 1: a.volumes.v2 += delta; break;
      case 2: a.weights.w0 += delta; break;
      case 3: a.weights.w1 += delta; break;
      case 4: a.weights.w2 += delta; break;
    }
    return quantities(a);
  };
  SensitivityTable t;
  for (int param = 0; param < 5; ++param) {
    const auto plus = perturbed(param, h);
    const auto minus = perturbed(param, -h);
    for (int qi = 0; qi < 4; ++qi)
      t.quotient[qi][param] = (plus[qi] - minus[qi]) / (2.0 * h);
  }
  return t;
}

}  // namespace wdb
