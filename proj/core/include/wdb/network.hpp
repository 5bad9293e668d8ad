#ifndef WDB_NETWORK_HPP
#define WDB_NETWORK_HPP

#include <array>
#include <string>
#include <vector>

#include "wdb/geom.hpp"
#include "wdb/types.hpp"

namespace wdb {

enum class RegionLabel { kB1, kB2, kExt };
std::string to_string(RegionLabel l);
RegionLabel region_label_from_string(const std::string& s);

enum class EdgeKind { kSegment, kArc };

// One planar edge of a generating network, in the meridian half-plane
// (x axial, y >= 0 radial).  Curvature is signed with the counterclockwise
// convention along the travel direction p -> q: the center of an arc with
// curvature k lies at p + rot90(tangent)/k.  Arcs span at most a half turn;
// longer profiles are chains of edges.  kSegment has curvature 0, so a flat
// interface needs no infinite-radius special case.
struct MeridianEdge {
  EdgeKind kind = EdgeKind::kSegment;
  Vec2 p;
  Vec2 q;
  double curvature = 0.0;
  RegionLabel left = RegionLabel::kExt;
  RegionLabel right = RegionLabel::kExt;
};

MeridianEdge make_segment(Vec2 p, Vec2 q, RegionLabel left, RegionLabel right);
MeridianEdge make_arc(Vec2 p, Vec2 q, double curvature, RegionLabel left,
                      RegionLabel right);

// Circle data recovered from an arc edge.  angle(u) = a0 + u * sweep,
// u in [0, 1]; sweep is signed (positive = counterclockwise).
struct ArcGeometry {
  Vec2 center;
  double radius;
  double a0;
  double sweep;
};
ArcGeometry arc_geometry(const MeridianEdge& e);

Vec2 edge_point(const MeridianEdge& e, double u);
Vec2 edge_tangent(const MeridianEdge& e, double u);  // unit, travel direction
double edge_length(const MeridianEdge& e);
double edge_min_y(const MeridianEdge& e);
MeridianEdge reversed(const MeridianEdge& e);

// integral of y^m dx (resp. ds) along the edge in travel direction
double edge_integral_y_dx(const MeridianEdge& e, int m, double abs_tol = 1e-13);
double edge_integral_y_ds(const MeridianEdge& e, int m, double abs_tol = 1e-13);

// A competitor double bubble as a labeled planar network of meridian edges.
// Networks are immutable after validation; all queries are pure.
struct GeneratingNetwork {
  Dimension dimension;
  std::vector<MeridianEdge> edges;
};

// Endpoint-merged node structure (tolerance-based).
struct NetworkNodes {
  std::vector<Vec2> position;
  std::vector<std::vector<int>> incident_edges;   // by node
  std::vector<std::array<int, 2>> edge_node;      // [tail, head] per edge
  double merge_tol;
};
NetworkNodes build_nodes(const GeneratingNetwork& net);
double network_scale(const GeneratingNetwork& net);

// n-volume of the solid of revolution of the faces labeled `label`,
// by the boundary integral alpha_{n-1} * sum_e sign_e int y^{n-1} dx.
// Requesting kExt is a domain error (unbounded).
double volume(const GeneratingNetwork& net, RegionLabel label);

// Unweighted (n-1)-areas by side-label pair plus the weighted total Q.
struct AreaBreakdown {
  double ext1 = 0.0;       // edges separating B1 | EXT
  double ext2 = 0.0;       // edges separating B2 | EXT
  double interface_ = 0.0; // edges separating B1 | B2
  double q = 0.0;          // w1*ext1 + w2*ext2 + w0*interface
};
AreaBreakdown weighted_area(const GeneratingNetwork& net, const WeightTriple& w);

// Per-junction equilibrium residual |sum_i w_i t_i| over unit tangents
// directed away from the junction.  Junctions are degree-3 nodes off the
// axis; a node of degree >= 4 is a structural error.
struct JunctionResidual {
  int node;
  Vec2 position;
  double residual;
};
std::vector<JunctionResidual> junction_residuals(const GeneratingNetwork& net,
                                                 const WeightTriple& w);

enum class ViolationCode {
  kBadArc,            // chord longer than the arc diameter
  kZeroLengthEdge,
  kBelowAxis,
  kAxisEdge,          // edge lying entirely on the axis
  kSameLabelBothSides,
  kDanglingNode,      // degree-1 node off the axis
  kQuadJunction,      // degree >= 4 node off the axis
  kEdgeCrossing,
  kLabelInconsistent, // a face bordered by inconsistent side labels
  kExtDisconnected,   // a bounded face labeled EXT (trapped hollow)
  kUnboundedNotExt,
};
std::string to_string(ViolationCode c);

struct Violation {
  ViolationCode code;
  int edge = -1;   // offending edge, if applicable
  int node = -1;   // offending node, if applicable
  std::string message;
};

// Empty result iff all GeneratingNetwork invariants hold.  EXT-connectivity
// and label consistency are checked by face traversal of the meridian
// cross-section (the network plus its mirror image across the axis).
std::vector<Violation> validate(const GeneratingNetwork& net);

// Region label at a sample point of the cross-section plane (the network
// union its axis mirror), by nearest-crossing ray casting.
RegionLabel region_label_at(const GeneratingNetwork& net, Vec2 point);

GeneratingNetwork dilated(const GeneratingNetwork& net, double factor);

}  // namespace wdb

#endif
