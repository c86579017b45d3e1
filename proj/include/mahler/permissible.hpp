#ifndef MAHLER_PERMISSIBLE_HPP
#define MAHLER_PERMISSIBLE_HPP

#include <array>
#include <string>
#include <vector>

#include "mahler/intpoly.hpp"
#include "mahler/torus.hpp"

namespace mahler {

enum class Verdict { Pass, Fail, NotApplicable, Unsupported };

struct ConditionReport {
  Verdict verdict = Verdict::NotApplicable;
  std::string witness;
};

// Outcome of the seven-condition permissibility check for
// P = a(x)(y^2+1) + b(x)y, plus the conductor tuple.
struct PermissibilityReport {
  IntPoly a, b;     // after sign normalization
  bool negated = false;
  int ell = 0;
  std::array<ConditionReport, 7> conditions;  // index i <-> condition i+1
  DiscriminantSplit split;
  bool split_valid = false;
  std::vector<ToricRoot> toric;   // classified roots of Delta, mult_h filled
  std::vector<Int> conductors;    // sorted ascending
  bool permissible = false;
  bool brv_half_measure = false;  // set by check_brv_form
  std::string note;
};

// Evaluate the seven conditions.  Condition (1) short-circuits (without a
// common shift nothing downstream is defined); with short_circuit set, the
// first failing condition stops the evaluation (used by the search loop).
PermissibilityReport check(const IntPoly& a, const IntPoly& b, bool short_circuit = false);

// P built from p(x)y + q(x): a = pq, b = p^2 + q^2, so that
// m(py + q) = m(P)/2.  Delegates to check.
PermissibilityReport check_brv_form(const IntPoly& p, const IntPoly& q);

const char* verdict_name(Verdict v);
const char* kind_name(RootKind k);

}  // namespace mahler

#endif  // MAHLER_PERMISSIBLE_HPP
