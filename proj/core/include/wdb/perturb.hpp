#ifndef WDB_PERTURB_HPP
#define WDB_PERTURB_HPP

#include <string>

#include "wdb/network.hpp"
#include "wdb/standard_bubble.hpp"
#include "wdb/unification.hpp"

namespace wdb {

// Volume-preserving competitor families for the mu >= 1 sweeps.
//  - kRadialBump: smooth compactly-supported normal displacement of one
//    exterior arc; volume restored exactly by a compactly-supported
//    corrector solved so V1 matches (probes the smooth second variation).
//  - kJunctionSlide: junction circle moved off its equilibrium height, cap
//    angles re-solved so both volumes match (probes junction criticality).
//  - kExtraSleeve: a small balanced exterior band splits bubble 1 around
//    bubble 2, creating a second cuff (probes the overlap mechanism).
enum class FamilyKind { kRadialBump, kJunctionSlide, kExtraSleeve };

FamilyKind family_from_string(const std::string& s);
std::string to_string(FamilyKind k);

struct PerturbationOptions {
  bool restore_volume = true;
  int bump_samples = 160;     // chain resolution for kRadialBump
  double volume_tol = 1e-11;  // relative volume restoration tolerance
};

// Builds the family member at amplitude epsilon from the standard bubble of
// a strict instance.  The output passes validate() and matches the
// instance's volumes within the class tolerance.
GeneratingNetwork make_competitor(const ProblemInstance& alpha,
                                  const StandardBubbleGeometry& g,
                                  FamilyKind family, double epsilon,
                                  const PerturbationOptions& opt = {});

// Factory adapter for unification::sweep.
CompetitorFactory default_competitor_factory(const PerturbationOptions& opt = {});

// Hand-posed two-junction competitor (bubble 1 split around a bubble-2
// band), with independently rotated balanced junction frames: the synthetic
// corpus generator for the overlap-excess case analysis.  psi_a/psi_b tilt
// the two junction frames; the band is a tangent-continuous biarc.
GeneratingNetwork make_caterpillar(Dimension n, const WeightTriple& w,
                                   Vec2 junction_a, Vec2 junction_b,
                                   double psi_a, double psi_b);

}  // namespace wdb

#endif
