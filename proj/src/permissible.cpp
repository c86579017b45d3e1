#include "mahler/permissible.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mahler/cyclotomic.hpp"
#include "mahler/quadfield.hpp"

namespace mahler {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::NotApplicable: return "not-applicable";
    case Verdict::Unsupported: return "unsupported";
  }
  return "?";
}

const char* kind_name(RootKind k) {
  switch (k) {
    case RootKind::Unclassified: return "?";
    case RootKind::TypeI: return "I";
    case RootKind::TypeIIPlus: return "II+";
    case RootKind::TypeIIMinus: return "II-";
  }
  return "?";
}

namespace {

std::string describe_root(const ToricRoot& r) {
  std::ostringstream os;
  if (r.u0)
    os << "u0=" << *r.u0;
  else
    os << "u0 in [" << r.u_lo.convert_to<double>() << ", " << r.u_hi.convert_to<double>() << "]";
  return os.str();
}

bool is_pass(Verdict v) { return v == Verdict::Pass || v == Verdict::NotApplicable; }

}  // namespace

PermissibilityReport check(const IntPoly& a_in, const IntPoly& b_in, bool short_circuit) {
  if (a_in.is_zero() || b_in.is_zero())
    throw std::invalid_argument("check: a and b must be nonzero");

  PermissibilityReport R;
  R.a = a_in;
  R.b = b_in;

  auto& cond = R.conditions;
  auto done = [&R]() -> PermissibilityReport& {
    R.permissible = std::all_of(R.conditions.begin(), R.conditions.end(),
                                [](const ConditionReport& c) { return is_pass(c.verdict); });
    return R;
  };

  // (1) a and b share an even shift 2*ell with sign +1.
  auto sa = shifted_reciprocal_shift(R.a);
  auto sb = shifted_reciprocal_shift(R.b);
  {
    std::ostringstream w;
    bool ok = sa && sb;
    if (!sa) w << "a is not sign-reciprocal; ";
    if (!sb) w << "b is not sign-reciprocal; ";
    if (ok && (sa->sign != 1 || sb->sign != 1)) {
      ok = false;
      w << "anti-reciprocal factor (sign -1); ";
    }
    if (ok && sa->shift != sb->shift) {
      ok = false;
      w << "shift mismatch " << sa->shift << " vs " << sb->shift << "; ";
    }
    if (ok && (sa->shift % 2 != 0 || sa->shift < 2)) {
      ok = false;
      w << "shift " << sa->shift << " is not 2*ell with ell >= 1; ";
    }
    if (ok) {
      R.ell = sa->shift / 2;
      w << "2*ell = " << sa->shift;
    }
    cond[0] = {ok ? Verdict::Pass : Verdict::Fail, w.str()};
    if (!ok) return done();  // nothing downstream is defined without ell
  }

  // Normalize a to positive leading coefficient; negating both a and b
  // changes neither |P| on the torus nor Delta.
  if (R.a.leading() < 0) {
    R.a = -R.a;
    R.b = -R.b;
    R.negated = true;
  }

  // (2) a = x^k * product of cyclotomics.
  {
    auto cp = detect_cyclotomic_product(R.a);
    std::ostringstream w;
    if (cp) {
      w << "a = x^" << cp->x_power;
      for (auto& [n, m] : cp->factors) {
        w << " * Phi_" << n;
        if (m > 1) w << "^" << m;
      }
      if (R.negated) w << " (after negating a and b)";
    } else {
      w << "a is not a cyclotomic product times a power of x";
    }
    cond[1] = {cp ? Verdict::Pass : Verdict::Fail, w.str()};
    if (short_circuit && !cp) return done();
  }

  // (3) leading-coefficient clauses.
  {
    std::ostringstream w;
    if (R.b.degree() < R.a.degree()) {
      w << "deg b < deg a: no constraint";
      cond[2] = {Verdict::NotApplicable, w.str()};
    } else {
      const Int& lb = R.b.leading();
      bool ok = (lb == 1 || lb == 2);
      if (R.b.degree() > R.a.degree()) ok = (lb == 1);
      w << "lead(b) = " << lb << (R.b.degree() > R.a.degree() ? " (deg b > deg a)" : " (deg b = deg a)");
      cond[2] = {ok ? Verdict::Pass : Verdict::Fail, w.str()};
      if (short_circuit && !ok) return done();
    }
  }

  IntPoly delta = discriminant(R.a, R.b);
  if (delta.is_zero()) {
    R.note = "discriminant vanishes identically (b = +-2a): P is a perfect square in y";
    for (int i = 3; i < 7; ++i) cond[i] = {Verdict::NotApplicable, "discriminant is zero"};
    R.permissible = false;
    return R;
  }
  R.split = gh_split(delta);
  R.split_valid = true;
  const IntPoly& g = R.split.g;
  const IntPoly& h = R.split.h;

  // (4) gcd(g, h) = 1 and gcd(a, b) = 1.
  {
    IntPoly gh = poly_gcd(g, h);
    IntPoly ab = poly_gcd(R.a, R.b);
    bool ok = gh.degree() == 0 && ab.degree() == 0;
    std::ostringstream w;
    w << "gcd(g,h) = " << gh.to_string() << ", gcd(a,b) = " << ab.to_string();
    cond[3] = {ok ? Verdict::Pass : Verdict::Fail, w.str()};
    if (short_circuit && !ok) return done();
  }

  // (5) deg g <= 4.
  {
    bool ok = g.degree() <= 4;
    std::ostringstream w;
    w << "deg g = " << g.degree();
    cond[4] = {ok ? Verdict::Pass : Verdict::Fail, w.str()};
    if (short_circuit && !ok) return done();
  }

  // Toric analysis of Delta and h.
  UTransform t_delta = u_transform(delta);
  R.toric = isolate_toric_roots(t_delta);
  classify_roots(t_delta, R.toric);
  std::vector<ToricRoot> hr = toric_roots_of_h(R.split);
  for (const auto& hroot : hr) {
    bool found = false;
    for (auto& droot : R.toric) {
      if (same_u_root(droot, hroot)) {
        droot.mult_h = hroot.mult_h;
        found = true;
        break;
      }
    }
    if (!found) throw std::logic_error("check: toric root of h missing from Delta");
  }

  // (6) when deg g >= 3: h vanishes at +-1 and has only simple toric roots.
  {
    if (g.degree() < 3) {
      cond[5] = {Verdict::NotApplicable, "deg g < 3"};
    } else {
      bool vanish = h.eval(Int(1)) == 0 || h.eval(Int(-1)) == 0;
      int max_mult = 0;
      for (const auto& r : hr) max_mult = std::max(max_mult, r.mult_h);
      bool simple = max_mult <= 1;
      std::ostringstream w;
      if (!vanish) w << "h(1) != 0 and h(-1) != 0; ";
      if (!simple) w << "ord_alpha h = " << max_mult << " for some toric alpha; ";
      if (vanish && simple) w << "h(+-1) = 0 and all toric roots of h are simple";
      cond[5] = {(vanish && simple) ? Verdict::Pass : Verdict::Fail, w.str()};
      if (short_circuit && !(vanish && simple)) return done();
    }
  }

  // (7) field condition at type-II+ odd-order toric roots of h.
  {
    std::set<Int> tuple;
    bool any_fail = false, any_unsupported = false;
    std::ostringstream w;
    for (const auto& r : R.toric) {
      if (r.mult_h % 2 == 0) continue;  // even order (including 0) is skipped
      if (r.kind != RootKind::TypeIIPlus) continue;
      ConductorResult cr = conductor_set(r, g);
      switch (cr.status) {
        case ConductorStatus::Ok:
          tuple.insert(cr.conductors.begin(), cr.conductors.end());
          w << describe_root(r) << " -> {";
          for (size_t i = 0; i < cr.conductors.size(); ++i)
            w << (i ? "," : "") << cr.conductors[i];
          w << "}; ";
          break;
        case ConductorStatus::NotMultiquadratic:
          any_fail = true;
          w << describe_root(r) << ": sqrt(g(alpha)) not in a multiquadratic field; ";
          break;
        case ConductorStatus::UnsupportedDegree:
          any_unsupported = true;
          w << describe_root(r) << ": [Q(alpha):Q] > 2, not decided; ";
          break;
      }
    }
    Verdict v = any_fail ? Verdict::Fail : (any_unsupported ? Verdict::Unsupported : Verdict::Pass);
    cond[6] = {v, w.str()};
    if (v == Verdict::Pass) R.conductors.assign(tuple.begin(), tuple.end());
  }

  return done();
}

PermissibilityReport check_brv_form(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero())
    throw std::invalid_argument("check_brv_form: p and q must be nonzero");
  IntPoly a = p * q;
  IntPoly b = p * p + q * q;
  PermissibilityReport R = check(a, b);
  R.brv_half_measure = true;
  return R;
}

}  // namespace mahler
