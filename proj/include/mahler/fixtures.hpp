#ifndef MAHLER_FIXTURES_HPP
#define MAHLER_FIXTURES_HPP

#include <string>
#include <vector>

#include "mahler/intpoly.hpp"

namespace mahler {

enum class FixtureForm { Quadratic, Linear };

// One reference polynomial with its published measure relation.
// Quadratic: P = a(y^2+1) + by and m(P) = sum r_j d_{f_j}.
// Linear: P = p y + q (stored in a, b) and m(P) = sum r_j d_{f_j}.
struct FixtureEntry {
  std::string label;       // e.g. "T2-43"
  FixtureForm form = FixtureForm::Quadratic;
  IntPoly a, b;            // (a, b) or (p, q)
  std::vector<Int> conductors;   // expected checker tuple (sorted); may differ
                                 // from relation conductors for r_j = 0 entries
  std::vector<Int> relation_conductors;  // conductors of the published relation
  std::vector<Rat> rationals;            // r_j aligned with relation_conductors
  std::string provenance;  // "historical" | "new-strong" | "worked" | "counterexample"
  bool checker_applicable = true;   // linear d4 entry is not permissible-shaped
  bool expect_permissible = true;
  int expected_fail_condition = 0;  // for negative fixtures
};

const std::vector<FixtureEntry>& all_fixtures();
const FixtureEntry& fixture(const std::string& label);

}  // namespace mahler

#endif  // MAHLER_FIXTURES_HPP
