#ifndef WDB_SYMMETRIZE_HPP
#define WDB_SYMMETRIZE_HPP

#include <optional>
#include <vector>

#include "wdb/geom.hpp"
#include "wdb/network.hpp"

namespace wdb {

// Planar regions for the symmetry argument: counterclockwise loops of
// segments and circular arcs (curvature convention as in MeridianEdge).
// `from_cut` marks closing segments introduced by bisection cuts, so the
// pipeline can tell the original boundary from cut lines.
struct PlanarEdge {
  EdgeKind kind = EdgeKind::kSegment;
  Vec2 p;
  Vec2 q;
  double curvature = 0.0;
  bool from_cut = false;
};
using PlanarLoop = std::vector<PlanarEdge>;

struct PlanarRegion {
  std::vector<PlanarLoop> loops;
};

PlanarRegion make_disk(Vec2 center, double radius);
PlanarRegion make_rectangle(Vec2 lo, Vec2 hi);
PlanarRegion make_ellipse(Vec2 center, double a, double b, int segments = 4096);
PlanarRegion make_polygon(const std::vector<Vec2>& vertices);

double region_area(const PlanarRegion& r);
double region_perimeter(const PlanarRegion& r);
Vec2 region_centroid(const PlanarRegion& r);

// the line {x : dot(normal, x) = offset}
struct BisectionLine {
  Vec2 normal;
  double offset;
};

// keep_sign < 0 keeps {dot(normal,x) <= offset}, > 0 the other side.
// boundary_on_line is set when original boundary lies along the cut line.
PlanarRegion clip(const PlanarRegion& r, const BisectionLine& line,
                  int keep_sign, bool* boundary_on_line = nullptr);

// Line normal to `direction` splitting the region's area in half; among a
// plateau of bisectors, the one passing nearest the reference point
// (centroid by default).
BisectionLine bisect_single(const PlanarRegion& r, Vec2 direction,
                            std::optional<Vec2> reference = {});

// Rotates the direction through a half turn tracking the signed imbalance of
// r2 across r1's bisector; the intermediate value theorem guarantees a root,
// bracketed to 1e-10.
BisectionLine bisect_double(const PlanarRegion& r1, const PlanarRegion& r2);

struct StretchResult {
  double area_before = 0.0;
  double area_after = 0.0;
  double length_before = 0.0;
  double length_after = 0.0;
  std::vector<Vec2> image_polyline;
};

// Polar map (r, theta) -> (r, k*theta) about the origin.  Area multiplies by
// exactly k; arc length by at most k, with equality only for purely angular
// curves.  The input must lie in an angular sector of width <= pi/k.
StretchResult angular_stretch(const PlanarRegion& r, double k);
StretchResult angular_stretch_curve(const PlanarLoop& chain, double k);

struct SymmetrizeCertificate {
  double area_before = 0.0;
  double area_after = 0.0;
  double perimeter_before = 0.0;
  double perimeter_after = 0.0;
  bool strict = false;             // perimeter strictly decreased
  bool boundary_on_bisector = false;
  BisectionLine line1{{1.0, 0.0}, 0.0};
  BisectionLine line2{{0.0, 1.0}, 0.0};
};

// bisect -> choose half -> bisect -> choose quarter -> angular stretch x2 ->
// reflect.  Area is preserved; the perimeter never increases, and a strict
// decrease certifies the input was not quarter-round about the bisectors.
SymmetrizeCertificate symmetrize_certificate(const PlanarRegion& r);

}  // namespace wdb

#endif
