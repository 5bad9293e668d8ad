#ifndef WDB_GAUSS_HPP
#define WDB_GAUSS_HPP

#include <optional>
#include <string>
#include <vector>

#include "wdb/network.hpp"
#include "wdb/spherical.hpp"
#include "wdb/standard_bubble.hpp"

namespace wdb {

// h(t) = integral_t^{t+beta} f(tau) dtau / f(t): cuff area per unit inner
// perimeter at height t, for the latitude measure f of dimension n.
// Decreasing in t on the lemma's domain.
double cuff_area_per_inner_perimeter(Dimension n, double t, double beta);

// Exponent-generic variant (integral of sin^e over [t, t+beta] divided by
// sin^e(t)); the monotonicity conclusions hold for either exponent
// convention, and the grids test both.
double cuff_h_general(int exponent, double t, double beta);

// Gauss image of one smooth exterior component of the revolved competitor:
// the zone of polar angles swept by its outward normal.
struct Sleeve {
  double t_start = 0.0;
  double t_end = 0.0;
  std::vector<int> edges;  // indices of the chain's exterior edges
  bool is_end_sleeve = false;
  RegionLabel bubble = RegionLabel::kB1;  // which bubble it bounds
};

enum class Pointing { kLeft, kRight, kVertical };
std::string to_string(Pointing p);

// Bisector of the exterior angle at a singular junction.
struct Antenna {
  int junction_node = -1;
  Vec2 position;
  Vec2 direction;
  double steepness = 0.0;  // polar angle of the direction, in [0, pi]
  Pointing pointing = Pointing::kVertical;
};

// Overlap annulus of two consecutive sleeves.  After the reflection
// normalization t <= pi - (t + beta), the inner perimeter is f(t).
struct Cuff {
  double t = 0.0;
  double beta = 0.0;
  double inner_perimeter = 0.0;
  int junction_node = -1;
  double raw_lo = 0.0, raw_hi = 0.0;  // overlap interval before normalization
  int sleeve_a = -1, sleeve_b = -1;
};

struct SleeveDecomposition {
  std::vector<Sleeve> sleeves;
  std::vector<Cuff> cuffs;
  std::vector<Antenna> antennae;
  double total_sleeve_area = 0.0;
  double total_cuff_area = 0.0;
  double coverage_deficit = 0.0;  // zone measure of [0, pi] missed by sleeves
};

// Requires every junction within `balance_tol` of force balance.
SleeveDecomposition sleeves_and_cuffs(const GeneratingNetwork& net,
                                      const WeightTriple& w,
                                      double balance_tol = 1e-8);

double cuff_area(Dimension n, const Cuff& cuff);

// Minimal boundary measure of a spherical region of the given area, by the
// isoperimetric theorem within the sphere (caps are optimal): inverts
// zone_area(n, 0, theta) = area and returns f(theta).
double cap_perimeter_for_area(Dimension n, double area);

enum class OverlapCase { kSameSide, kBothWays, kNotApplicable };
std::string to_string(OverlapCase c);

struct OverlapExcessReport {
  OverlapCase kase = OverlapCase::kNotApplicable;
  std::vector<double> competitor_cuff_areas;
  double standard_cuff_area = 0.0;  // area of K_M
  double excess = 0.0;              // witnessing cuff total minus K_M
  int witness_sleeve = -1;
  double witness_perimeter = 0.0;          // boundary measure of the sleeve
  double standard_inner_perimeter = 0.0;   // inner perimeter of K_M
  double isoperimetric_bound = 0.0;        // cap perimeter for the sleeve area
  std::vector<std::string> violated_hypotheses;  // informational
  std::string not_applicable_reason;
};

// The witnessing double-cuffed sleeve comparison: a nonstandard competitor
// must out-overlap the standard's single cuff.  Structural inapplicability
// (fewer than two cuffs) reports kNotApplicable; unmet area hypotheses are
// reported as data.
OverlapExcessReport overlap_excess(const GeneratingNetwork& net,
                                   const WeightTriple& w,
                                   const StandardBubbleGeometry& m);

struct PieceAudit {
  int bubble = 0;  // 1 or 2
  std::vector<int> edges;
  double area_competitor = 0.0, area_standard = 0.0, area_ratio = 0.0;
  double h_mean = 0.0, h_min = 0.0, h_max = 0.0;
  double h_standard = 0.0, curvature_ratio = 0.0;
  bool h_constant = true;
  double gauss_zone_area = 0.0;  // zone of the sleeve interval
  double gk_integral = 0.0;      // integral of |Gauss-Kronecker| over the piece
  double amgm_bound = 0.0;       // area * (|H|/(n-1))^{n-1}
};

enum class AuditVerdict { kConsistent, kContradiction };
std::string to_string(AuditVerdict v);

struct CalibrationAuditReport {
  std::vector<PieceAudit> pieces;
  double total_sleeve_area = 0.0;
  double total_overlap = 0.0;
  double standard_overlap = 0.0;       // cuff area of the matched standard
  double coverage_deficit = 0.0;
  double coverage_identity_residual = 0.0;  // sleeves - cuffs - n*alpha_n
  double effective_mu = 0.0;
  double required_gauss_area = 0.0;    // n*alpha_n + overlap(C)
  double available_gauss_area = 0.0;   // mu^n * (n*alpha_n + cuff(M))
  int exterior_singular_spheres = 0;
  AuditVerdict verdict = AuditVerdict::kConsistent;
};

// Realizes the contradiction chain: a balanced competitor whose pieces are
// assumed (or measured) to have at most `mu` times the standard's areas and
// curvatures cannot generate enough Gauss image to cover the sphere plus its
// own overlap.  Without assumed_mu the measured per-piece ratios are used.
CalibrationAuditReport calibration_audit(const GeneratingNetwork& net,
                                         const ProblemInstance& alpha,
                                         std::optional<double> assumed_mu = {});

}  // namespace wdb

#endif
