#ifndef WDB_TYPES_HPP
#define WDB_TYPES_HPP

#include <string>

#include "wdb/errors.hpp"

namespace wdb {

// Ambient dimension of the Euclidean space the bubbles live in.
// The symmetry reduction needs n > 2; planar work is handled separately
// by the symmetrization module.
struct Dimension {
  int n;
  explicit Dimension(int n_) : n(n_) {
    if (n < 3) throw domain_error("Dimension: n must be >= 3");
  }
};

// Surface energy densities: w0 on the interface between the bubbles,
// w1 and w2 on the exteriors of bubbles 1 and 2.
struct WeightTriple {
  double w0;
  double w1;
  double w2;
};

enum class WeightClass {
  kStrict,             // all three strict triangle inequalities hold
  kInterfaceDominant,  // w0 > w1 + w2: disjoint spheres are optimal
  kNested1,            // w1 > w2 + w0: bubble 1 enclosed in bubble 2
  kNested2,            // w2 > w1 + w0: bubble 2 enclosed in bubble 1
  kBoundary,           // equality in the binding inequality
};

WeightClass classify_weights(const WeightTriple& w);
std::string to_string(WeightClass c);

// Which non-strict regime a kBoundary triple belongs to (equality treated
// as the closed version of the corresponding degenerate case).
enum class DegenerateRegime { kDisjoint, kNested1, kNested2 };
DegenerateRegime degenerate_regime(const WeightTriple& w);

struct VolumePair {
  double v1;
  double v2;
};

// A point of the unification space: one constrained minimization problem.
struct ProblemInstance {
  VolumePair volumes;
  WeightTriple weights;
  Dimension dimension;
};

void check_valid(const WeightTriple& w);
void check_valid(const VolumePair& v);

}  // namespace wdb

#endif
