#ifndef WDB_UNIFICATION_HPP
#define WDB_UNIFICATION_HPP

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "wdb/network.hpp"
#include "wdb/standard_bubble.hpp"
#include "wdb/types.hpp"

namespace wdb {

// Scaling of volume pairs or weight triples does not affect relative area,
// so instances are normalized to max volume 1 and max weight 1.
struct NormalizeResult {
  ProblemInstance instance;
  double dilation;      // spatial factor applied to competitors
  double weight_scale;  // factor applied to the weight triple
};
NormalizeResult normalize(const ProblemInstance& alpha);

struct PieceComparison {
  double competitor = 0.0;
  double standard = 0.0;
};

// relative area mu = Q(S) / Q(M_alpha) with per-piece breakdown
struct RelativeAreaReport {
  double q_competitor = 0.0;
  double q_standard = 0.0;
  double mu = 0.0;
  PieceComparison ext1, ext2, interface_;
  double measured_v1 = 0.0, measured_v2 = 0.0;
};

// Throws class_mismatch_error if the competitor's volumes do not match the
// instance within `class_tol` (relative to the larger target volume): a
// competitor belongs to exactly one class.
RelativeAreaReport relative_area(const GeneratingNetwork& net,
                                 const ProblemInstance& alpha,
                                 double class_tol = 1e-6);

// Envelope identity: dQ(M)/dw_i equals the matching piece area of M, since
// the standard bubble has zero first variation in shape.
struct WeightVariation {
  double fd_estimate;   // central difference of Q(construct(.)) wrt w_i
  double matched_area;  // corresponding piece area of M
  double error;         // |fd - matched|
};
WeightVariation first_variation_weight(const ProblemInstance& alpha, int i,
                                       double h);

// dQ(M)/dV_i equals the bubble pressure (n-1) w_i |kappa_i|; also reports
// the pressure-difference identity p1 - p2 = (n-1) w0 kappa0.
struct VolumeVariation {
  double fd_estimate;
  double pressure;
  double error;
  double pressure_balance_residual;
};
VolumeVariation first_variation_volume(const ProblemInstance& alpha, int i,
                                       double h);

// ---- sweep over the normalized compact slice ----

struct SweepSpec {
  int n = 3;
  std::vector<double> v2_values;   // v1 fixed at 1
  std::vector<double> w0_values;   // w2 fixed at 1
  std::vector<double> w1_values;
  std::vector<std::string> families;
  std::vector<double> epsilons;
  unsigned seed = 1;
};

struct SweepRow {
  int n;
  double v1, v2, w0, w1, w2;
  std::string family;
  double epsilon;
  double mu;
  std::string status;  // ok | degenerate | <error text>
};

// Builds one competitor per (cell, family, epsilon); nullopt from the
// factory marks the family as inapplicable for that cell (recorded, not
// fatal).  Degenerate cells score their two-sphere optima at mu = 1.
using CompetitorFactory = std::function<std::optional<GeneratingNetwork>(
    const ProblemInstance& alpha, const StandardBubbleGeometry& standard,
    const std::string& family, double epsilon, unsigned seed)>;

std::vector<SweepRow> sweep(const SweepSpec& spec,
                            const CompetitorFactory& factory);

}  // namespace wdb

#endif
