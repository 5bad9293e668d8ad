#ifndef WDB_ERRORS_HPP
#define WDB_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wdb {

// Invalid argument outside the mathematical domain of an operation.
// CLI maps this (and any parse failure) to exit code 2.
using domain_error = std::domain_error;

// A competitor whose measured volumes do not match the instance it was
// submitted against.  Carries the measured volumes; CLI maps to exit code 3.
struct class_mismatch_error : std::runtime_error {
  double measured_v1;
  double measured_v2;
  class_mismatch_error(const std::string& what, double v1, double v2)
      : std::runtime_error(what), measured_v1(v1), measured_v2(v2) {}
};

// Numerical machinery failed where theory says it should not
// (bracket failure, non-convergence).  CLI maps to exit code 4.
struct internal_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Structural problem with a network (e.g. a junction of degree != 3 where
// exactly 3 incident edges are required).
struct structural_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace wdb

#endif
