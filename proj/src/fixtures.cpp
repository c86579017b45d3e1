#include "mahler/fixtures.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

#include "mahler/cyclotomic.hpp"

namespace mahler {

namespace {

IntPoly wire(const char* s) {
  auto p = IntPoly::parse(s);
  if (!p) throw std::logic_error(std::string("fixture: bad coefficient string ") + s);
  return *p;
}

// prod Phi_n^e, optionally times x^k.
IntPoly cyc(std::initializer_list<std::pair<long, unsigned>> factors, int x_power = 0) {
  IntPoly p = IntPoly::monomial(x_power, 1);
  for (const auto& [n, e] : factors) p = p * cyclotomic(n).pow(e);
  return p;
}

std::vector<Int> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

std::vector<Rat> rats(std::initializer_list<const char*> v) {
  std::vector<Rat> out;
  for (const char* s : v) out.emplace_back(std::string(s));
  return out;
}

FixtureEntry quad(std::string label, IntPoly a, IntPoly b, std::vector<Int> tuple,
                  std::vector<Rat> r, std::string prov) {
  FixtureEntry f;
  f.label = std::move(label);
  f.form = FixtureForm::Quadratic;
  f.a = std::move(a);
  f.b = std::move(b);
  f.conductors = tuple;
  f.relation_conductors = std::move(tuple);
  f.rationals = std::move(r);
  f.provenance = std::move(prov);
  return f;
}

FixtureEntry lin(std::string label, IntPoly p, IntPoly q, std::vector<Int> tuple,
                 std::vector<Rat> r, std::string prov, bool checker_ok = true) {
  FixtureEntry f;
  f.label = std::move(label);
  f.form = FixtureForm::Linear;
  f.a = std::move(p);
  f.b = std::move(q);
  f.conductors = tuple;
  f.relation_conductors = std::move(tuple);
  f.rationals = std::move(r);
  f.provenance = std::move(prov);
  f.checker_applicable = checker_ok;
  return f;
}

std::vector<FixtureEntry> build() {
  std::vector<FixtureEntry> fx;

  // --- previously published strong examples, one per conductor ---
  fx.push_back(lin("T1-3", wire("1"), wire("1,1"), ints({3}), rats({"1"}), "historical", false));
  fx.push_back(lin("T1-4", wire("1,-1"), wire("1,1"), ints({4}), rats({"1"}), "historical", false));
  fx.push_back(quad("T1-7", cyc({{7, 1}}), wire("2,2,-5,-12,-5,2,2"), ints({7}), rats({"8/7"}),
                    "historical"));
  fx.push_back(quad("T1-8", cyc({{8, 1}}), wire("2,0,-8,0,2"), ints({8}), rats({"1"}),
                    "historical"));
  fx.push_back(lin("T1-11", cyc({{2, 2}, {3, 1}}), cyc({{6, 2}}), ints({11}), rats({"2/3"}),
                   "historical"));
  fx.push_back(lin("T1-15", cyc({{2, 2}}), cyc({{6, 1}}), ints({15}), rats({"6"}), "historical"));
  fx.push_back(quad("T1-19", cyc({{5, 1}}, 1), wire("1,6,2,-8,2,6,1"), ints({19}), rats({"2/5"}),
                    "historical"));
  fx.push_back(quad("T1-20", cyc({{20, 1}}), wire("2,0,-22,0,42,0,-22,0,2"), ints({20}),
                    rats({"2/5"}), "historical"));
  fx.push_back(quad("T1-23", cyc({{12, 1}}, 1), wire("1,-6,0,12,0,-6,1"), ints({23}),
                    rats({"1/6"}), "historical"));
  fx.push_back(quad("T1-24", cyc({{24, 1}}), wire("2,0,-24,0,46,0,-24,0,2"), ints({24}),
                    rats({"1/3"}), "historical"));
  fx.push_back(lin("T1-35", cyc({{3, 2}}), cyc({{4, 1}, {6, 1}}), ints({35}), rats({"1/12"}),
                   "historical"));
  fx.push_back(lin("T1-39", cyc({{2, 4}}), cyc({{3, 1}, {6, 1}}), ints({39}), rats({"1/18"}),
                   "historical"));
  fx.push_back(quad("T1-40", cyc({{4, 1}, {6, 1}}), wire("0,14,-32,14"), ints({40}),
                    rats({"1/6"}), "historical"));
  fx.push_back(lin("T1-55", cyc({{2, 2}, {3, 1}}), cyc({{10, 1}}), ints({55}), rats({"1/30"}),
                   "historical"));
  fx.push_back(lin("T1-84", cyc({{2, 4}}), cyc({{4, 1}, {6, 1}}), ints({84}), rats({"1/36"}),
                   "historical"));
  fx.push_back(quad("T1-120", cyc({{3, 1}, {4, 1}}), wire("2,2,-20,2,2"), ints({120}),
                    rats({"1/36"}), "historical"));
  fx.push_back(quad("T1-303", wire("1,1,1,0,0,0,1,1,1"), wire("2,2,-49,2,98,2,-49,2,2"),
                    ints({303}), rats({"1/132"}), "historical"));
  fx.push_back(quad("T1-755", wire("1,0,1,0,1,0,1,0,1"), wire("2,0,-37,5,70,5,-37,0,2"),
                    ints({755}), rats({"1/410"}), "historical"));

  // --- new strong examples ---
  fx.push_back(quad("T2-43", wire("1,1,0,0,0,0,0,1,1"), wire("2,2,-39,-16,110,-16,-39,2,2"),
                    ints({43}), rats({"2/7"}), "new-strong"));
  fx.push_back(quad("T2-52", wire("1,-2,3,-3,3,-3,3,-2,1"), wire("2,-4,-10,6,14,6,-10,-4,2"),
                    ints({52}), rats({"2/21"}), "new-strong"));
  fx.push_back(quad("T2-56", wire("1,-1,0,0,1,0,0,-1,1"), wire("2,-2,-15,4,24,4,-15,-2,2"),
                    ints({56}), rats({"1/15"}), "new-strong"));
  fx.push_back(quad("T2-68", wire("1,-1,1,-1,1,-1,1,-1,1"), wire("2,-2,-17,6,24,6,-17,-2,2"),
                    ints({68}), rats({"1/18"}), "new-strong"));
  fx.push_back(quad("T2-111", wire("1,-1,1,1,-1,1,1,-1,1"), wire("1,8,-11,-8,26,-8,-11,8,1"),
                    ints({111}), rats({"1/54"}), "new-strong"));
  fx.push_back(quad("T2-132", wire("1,0,0,1,0,1,0,0,1"), wire("2,0,-32,-2,72,-2,-32,0,2"),
                    ints({132}), rats({"1/30"}), "new-strong"));
  fx.push_back(quad("T2-228", wire("1,2,1,-1,-2,-1,1,2,1"), wire("2,4,-46,-38,164,-38,-46,4,2"),
                    ints({228}), rats({"1/54"}), "new-strong"));
  fx.push_back(quad("T2-696", wire("1,0,2,0,2,0,2,0,2,0,2,0,1"),
                    wire("1,-54,245,54,-967,0,1466,0,-967,54,245,-54,1"), ints({696}),
                    rats({"1/252"}), "new-strong"));

  // --- worked examples ---
  {
    FixtureEntry f = quad("W-3-35", cyc({{10, 2}}), wire("2,-4,-3,16,-24,16,-3,-4,2"),
                          ints({3, 35}), rats({"7/5", "1/10"}), "worked");
    fx.push_back(std::move(f));
  }
  fx.push_back(quad("W-3", cyc({{4, 4}}), wire("2,-16,-8,16,44,16,-8,-16,2"), ints({3}),
                    rats({"10"}), "worked"));
  fx.push_back(lin("BRV-3", wire("0,1"), wire("1,0,1"), ints({3}), rats({"1"}), "worked"));
  {
    // zero measure: permissible with empty conductor tuple
    FixtureEntry f = quad("ZERO", wire("0,0,1"), wire("1,0,0,0,1"), ints({}), rats({"0"}),
                          "worked");
    f.relation_conductors = ints({3});
    fx.push_back(std::move(f));
  }
  {
    FixtureEntry f = quad("COND6", wire("0,0,1"), wire("1,4,4,4,1"), ints({}), {},
                          "counterexample");
    f.relation_conductors.clear();
    f.rationals.clear();
    f.expect_permissible = false;
    f.expected_fail_condition = 6;
    fx.push_back(std::move(f));
  }
  return fx;
}

}  // namespace

const std::vector<FixtureEntry>& all_fixtures() {
  static const std::vector<FixtureEntry> fx = build();
  return fx;
}

const FixtureEntry& fixture(const std::string& label) {
  for (const auto& f : all_fixtures())
    if (f.label == label) return f;
  throw std::out_of_range("fixture: unknown label " + label);
}

}  // namespace mahler
