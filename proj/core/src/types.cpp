#include "wdb/types.hpp"

#include <cmath>

namespace wdb {

void check_valid(const WeightTriple& w) {
  if (w.w0 < 0.0 || w.w1 < 0.0 || w.w2 < 0.0)
    throw domain_error("weights must be nonnegative");
  if (w.w0 == 0.0 && w.w1 == 0.0 && w.w2 == 0.0)
    throw domain_error("weights must not all be zero");
}

void check_valid(const VolumePair& v) {
  if (v.v1 < 0.0 || v.v2 < 0.0) throw domain_error("volumes must be nonnegative");
  if (v.v1 == 0.0 && v.v2 == 0.0)
    throw domain_error("volumes must not both be zero");
}

WeightClass classify_weights(const WeightTriple& w) {
  check_valid(w);
  const double d0 = w.w0 - (w.w1 + w.w2);
  const double d1 = w.w1 - (w.w2 + w.w0);
  const double d2 = w.w2 - (w.w1 + w.w0);
  if (d0 > 0.0) return WeightClass::kInterfaceDominant;
  if (d1 > 0.0) return WeightClass::kNested1;
  if (d2 > 0.0) return WeightClass::kNested2;
  if (d0 == 0.0 || d1 == 0.0 || d2 == 0.0) return WeightClass::kBoundary;
  return WeightClass::kStrict;
}

DegenerateRegime degenerate_regime(const WeightTriple& w) {
  const double d0 = w.w0 - (w.w1 + w.w2);
  const double d1 = w.w1 - (w.w2 + w.w0);
  const double d2 = w.w2 - (w.w1 + w.w0);
  if (d0 < 0.0 && d1 < 0.0 && d2 < 0.0)
    throw domain_error("degenerate_regime: weights are strict");
  // At most one of the differences can be positive; on equality ties
  // (possible only with a zero weight) the disjoint form is chosen.
  if (d0 >= 0.0) return DegenerateRegime::kDisjoint;
  if (d1 >= 0.0) return DegenerateRegime::kNested1;
  return DegenerateRegime::kNested2;
}

std::string to_string(WeightClass c) {
  switch (c) {
    case WeightClass::kStrict: return "STRICT";
    case WeightClass::kInterfaceDominant: return "INTERFACE_DOMINANT";
    case WeightClass::kNested1: return "NESTED_1";
    case WeightClass::kNested2: return "NESTED_2";
    case WeightClass::kBoundary: return "BOUNDARY";
  }
  return "?";
}

}  // namespace wdb
