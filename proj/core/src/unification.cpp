#include "wdb/unification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace wdb {

NormalizeResult normalize(const ProblemInstance& alpha) {
  check_valid(alpha.volumes);
  check_valid(alpha.weights);
  const double vmax = std::fmax(alpha.volumes.v1, alpha.volumes.v2);
  const double wmax =
      std::fmax(alpha.weights.w0, std::fmax(alpha.weights.w1, alpha.weights.w2));
  const double dilation = std::pow(vmax, -1.0 / alpha.dimension.n);
  const double wscale = 1.0 / wmax;
  ProblemInstance out{
      {alpha.volumes.v1 / vmax, alpha.volumes.v2 / vmax},
      {alpha.weights.w0 * wscale, alpha.weights.w1 * wscale,
       alpha.weights.w2 * wscale},
      alpha.dimension};
  return {out, dilation, wscale};
}

RelativeAreaReport relative_area(const GeneratingNetwork& net,
                                 const ProblemInstance& alpha,
                                 double class_tol) {
  const auto violations = validate(net);
  if (!violations.empty()) {
    std::ostringstream os;
    os << "relative_area: invalid network:";
    for (const auto& v : violations) os << " " << to_string(v.code);
    throw domain_error(os.str());
  }

  const double v1 = volume(net, RegionLabel::kB1);
  const double v2 = volume(net, RegionLabel::kB2);
  const double vref = std::fmax(alpha.volumes.v1, alpha.volumes.v2);
  if (std::fabs(v1 - alpha.volumes.v1) > class_tol * vref ||
      std::fabs(v2 - alpha.volumes.v2) > class_tol * vref) {
    std::ostringstream os;
    os << "CLASS_MISMATCH: competitor encloses (" << v1 << ", " << v2
       << ") but the instance prescribes (" << alpha.volumes.v1 << ", "
       << alpha.volumes.v2 << ")";
    throw class_mismatch_error(os.str(), v1, v2);
  }

  const AreaBreakdown a = weighted_area(net, alpha.weights);
  const MeasuredQuantities m = measured(construct(alpha));
  RelativeAreaReport r;
  r.q_competitor = a.q;
  r.q_standard = m.q;
  r.mu = a.q / m.q;
  r.ext1 = {a.ext1, m.a_ext1};
  r.ext2 = {a.ext2, m.a_ext2};
  r.interface_ = {a.interface_, m.a_int};
  r.measured_v1 = v1;
  r.measured_v2 = v2;
  return r;
}

namespace {

ProblemInstance with_weight(const ProblemInstance& alpha, int i, double delta) {
  ProblemInstance a = alpha;
  if (i == 0) a.weights.w0 += delta;
  else if (i == 1) a.weights.w1 += delta;
  else if (i == 2) a.weights.w2 += delta;
  else throw domain_error("weight index must be 0, 1 or 2");
  return a;
}

ProblemInstance with_volume(const ProblemInstance& alpha, int i, double delta) {
  ProblemInstance a = alpha;
  if (i == 1) a.volumes.v1 += delta;
  else if (i == 2) a.volumes.v2 += delta;
  else throw domain_error("volume index must be 1 or 2");
  return a;
}

void require_interior(const ProblemInstance& alpha) {
  if (classify_weights(alpha.weights) != WeightClass::kStrict)
    throw domain_error("first variation needs a strict (interior) instance");
}

double q_of(const ProblemInstance& alpha) { return measured(construct(alpha)).q; }

}  // namespace

WeightVariation first_variation_weight(const ProblemInstance& alpha, int i,
                                       double h) {
  require_interior(alpha);
  require_interior(with_weight(alpha, i, h));
  require_interior(with_weight(alpha, i, -h));
  const double qp = q_of(with_weight(alpha, i, h));
  const double qm = q_of(with_weight(alpha, i, -h));
  const double fd = (qp - qm) / (2.0 * h);
  const MeasuredQuantities m = measured(construct(alpha));
  const double area = i == 0 ? m.a_int : (i == 1 ? m.a_ext1 : m.a_ext2);
  return {fd, area, std::fabs(fd - area)};
}

VolumeVariation first_variation_volume(const ProblemInstance& alpha, int i,
                                       double h) {
  if (alpha.volumes.v1 > 0.0 && alpha.volumes.v2 > 0.0) require_interior(alpha);
  const ProblemInstance plus = with_volume(alpha, i, h);
  const ProblemInstance minus = with_volume(alpha, i, -h);
  check_valid(minus.volumes);
  const double fd = (q_of(plus) - q_of(minus)) / (2.0 * h);

  const StandardBubbleGeometry g = construct(alpha);
  const int n = alpha.dimension.n;
  double pressure = 0.0;
  double balance = 0.0;
  switch (g.degenerate) {
    case DegenerateKind::kNone: {
      const double k = i == 1 ? g.kappa1 : g.kappa2;
      const double w = i == 1 ? alpha.weights.w1 : alpha.weights.w2;
      pressure = (n - 1) * w * std::fabs(k);
      const double p1 = (n - 1) * alpha.weights.w1 * std::fabs(g.kappa1);
      const double p2 = (n - 1) * alpha.weights.w2 * std::fabs(g.kappa2);
      balance = (p1 - p2) - (n - 1) * alpha.weights.w0 * g.kappa0;
      break;
    }
    case DegenerateKind::kSingle: {
      const double w =
          g.enclosed_bubble == 1 ? alpha.weights.w1 : alpha.weights.w2;
      pressure = (n - 1) * w / g.deg_r1;
      break;
    }
    case DegenerateKind::kDisjoint: {
      const double w = i == 1 ? alpha.weights.w1 : alpha.weights.w2;
      const double r = i == 1 ? g.deg_r1 : g.deg_r2;
      pressure = (n - 1) * w / r;
      break;
    }
    case DegenerateKind::kNested: {
      // inner sphere paid at w0, outer at the surrounding bubble's weight
      const double w_out =
          g.enclosed_bubble == 1 ? alpha.weights.w2 : alpha.weights.w1;
      pressure = (i == g.enclosed_bubble)
                     ? (n - 1) * (alpha.weights.w0 / g.deg_r1 + w_out / g.deg_r2)
                     : (n - 1) * w_out / g.deg_r2;
      break;
    }
  }
  return {fd, pressure, std::fabs(fd - pressure), balance};
}

std::vector<SweepRow> sweep(const SweepSpec& spec,
                            const CompetitorFactory& factory) {
  std::vector<SweepRow> rows;
  const Dimension dim(spec.n);
  for (double v2 : spec.v2_values)
    for (double w0 : spec.w0_values)
      for (double w1 : spec.w1_values) {
        const ProblemInstance raw{{1.0, v2}, {w0, w1, 1.0}, dim};
        const ProblemInstance alpha = normalize(raw).instance;
        const bool strict =
            classify_weights(alpha.weights) == WeightClass::kStrict &&
            alpha.volumes.v1 > 0.0 && alpha.volumes.v2 > 0.0;
        for (const auto& family : spec.families)
          for (double eps : spec.epsilons) {
            SweepRow row{spec.n, alpha.volumes.v1, alpha.volumes.v2,
                         alpha.weights.w0, alpha.weights.w1, alpha.weights.w2,
                         family,  eps,     1.0,
                         "ok"};
            try {
              const StandardBubbleGeometry g = construct(alpha);
              if (!strict) {
                // boundary cell: the degenerate optimum scores 1
                row.mu =
                    relative_area(to_network(g), alpha).mu;
                row.status = "degenerate";
              } else {
                const auto net = factory(alpha, g, family, eps, spec.seed);
                if (!net) {
                  row.status = "inapplicable";
                } else {
                  row.mu = relative_area(*net, alpha).mu;
                }
              }
            } catch (const std::exception& e) {
              row.status = e.what();
              row.mu = std::nan("");
            }
            rows.push_back(std::move(row));
          }
      }
  return rows;
}

}  // namespace wdb
