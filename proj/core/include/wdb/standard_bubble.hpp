#ifndef WDB_STANDARD_BUBBLE_HPP
#define WDB_STANDARD_BUBBLE_HPP

#include <array>

#include "wdb/network.hpp"
#include "wdb/types.hpp"

namespace wdb {

// Conormal directions at the junction, in the meridian plane.
//
// Convention, fixed here and used by every balance identity:
//  - junction point at (0, rho) on the positive-y meridian half-plane,
//    bubble 1 on the left (negative x), bubble 2 on the right;
//  - u(phi_i) is the unit tangent of cap i at the junction, pointing away
//    from the junction sphere along the surface;
//  - the weighted conormals satisfy w0 u(phi0) + w1 u(phi1) + w2 u(phi2) = 0;
//  - cap i through (0, rho) with tangent direction phi_i has its center on
//    the axis at x = rho tan(phi_i) and signed curvature
//    kappa_i = cos(phi_i) / rho, so sum_i w_i kappa_i = 0 is exactly the
//    horizontal component of the balance.
// In the canonical rotation (free parameter psi = 0) the interface conormal
// points straight down: phi0 = -pi/2.
struct JunctionAngles {
  double phi0, phi1, phi2;        // canonical directions (psi = 0)
  double theta01, theta02, theta12;  // pairwise conormal angles
};

// Pairwise angles by the law of cosines on the weight triangle.
// Requires strictly triangle-inequality weights; degenerate triples are a
// domain error directing callers to construct_degenerate.
JunctionAngles junction_angles(const WeightTriple& w);

enum class DegenerateKind { kNone, kDisjoint, kNested, kSingle };
std::string to_string(DegenerateKind k);

struct StandardBubbleGeometry {
  Dimension dimension;
  WeightTriple weights;
  VolumePair target_volumes;
  DegenerateKind degenerate = DegenerateKind::kNone;

  // nondegenerate data (valid when degenerate == kNone)
  double psi = 0.0;         // rotation of the conormal frame
  double phi0 = 0.0, phi1 = 0.0, phi2 = 0.0;
  double kappa0 = 0.0, kappa1 = 0.0, kappa2 = 0.0;  // signed, = cos(phi)/rho
  double junction_radius = 0.0;
  double dilation = 1.0;

  // degenerate data: sphere radii/centers
  // kDisjoint: spheres (r1,c1) for B1 and (r2,c2) for B2
  // kNested:   r1 = inner radius, r2 = outer radius, centers 0
  // kSingle:   r1, c1; `enclosed_bubble` names the nonempty bubble
  double deg_r1 = 0.0, deg_r2 = 0.0;
  double deg_c1 = 0.0, deg_c2 = 0.0;
  int enclosed_bubble = 0;  // kNested: which bubble is inside; kSingle: which exists
};

struct ConstructOptions {
  double ratio_tol = 1e-12;  // |log ratio| residual for the psi root-find
  double quad_tol = 1e-13;   // quadrature tolerance for volume evaluation
};

// Volumes of the two bubbles in the rho = 1 frame at rotation psi; the
// one-parameter family behind construct.  V1/V2 runs monotonically from
// infinity to 0 as psi crosses (theta01 - pi, pi - theta02).
VolumePair frame_volumes(Dimension n, const JunctionAngles& angles, double psi);

// The unique standard weighted double bubble for the instance; dispatches
// to the degenerate closed forms for non-strict weights or a zero volume.
StandardBubbleGeometry construct(const ProblemInstance& alpha,
                                 const ConstructOptions& opt = {});

// Degenerate closed forms only; strict instances are a domain error.
StandardBubbleGeometry construct_degenerate(const ProblemInstance& alpha);

// Export as a generating network (shared JSON schema), so every competitor
// tool applies uniformly to the standard bubble itself.
GeneratingNetwork to_network(const StandardBubbleGeometry& g);

struct MeasuredQuantities {
  double a_ext1 = 0.0, a_ext2 = 0.0, a_int = 0.0;
  double v1 = 0.0, v2 = 0.0;
  double q = 0.0;
  double h_ext1 = 0.0, h_ext2 = 0.0, h_int = 0.0;  // mean curvature (n-1)|kappa|
};

// Closed-form areas, volumes, weighted total and mean curvatures; the
// denominators and reference values for every audit.
MeasuredQuantities measured(const StandardBubbleGeometry& g);

// Central-difference quotients of (kappa0, R1, R2, center distance) with
// respect to each of (V1, V2, w0, w1, w2).  The interface is reported as a
// curvature because its radius is unbounded across the flat-interface locus.
struct SensitivityTable {
  // rows: kappa0, R1, R2, center_distance; cols: V1, V2, w0, w1, w2
  std::array<std::array<double, 5>, 4> quotient{};
};
SensitivityTable sensitivity(const ProblemInstance& alpha, double h);

}  // namespace wdb

#endif
