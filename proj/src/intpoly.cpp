#include "mahler/intpoly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include "mahler/factor.hpp"

namespace mahler {

namespace {
const Int kZero{0};
}

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  c_.reserve(coeffs.size());
  for (long v : coeffs) c_.emplace_back(v);
  trim();
}

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::constant(Int c) {
  IntPoly p;
  if (c != 0) p.c_.push_back(std::move(c));
  return p;
}

IntPoly IntPoly::monomial(int k, Int c) {
  IntPoly p;
  if (c != 0) {
    p.c_.assign(static_cast<size_t>(k) + 1, Int(0));
    p.c_.back() = std::move(c);
  }
  return p;
}

void IntPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int IntPoly::order_at_zero() const {
  for (size_t i = 0; i < c_.size(); ++i)
    if (c_[i] != 0) return static_cast<int>(i);
  return 0;
}

const Int& IntPoly::operator[](int i) const {
  if (i < 0 || i >= static_cast<int>(c_.size())) return kZero;
  return c_[static_cast<size_t>(i)];
}

const Int& IntPoly::leading() const {
  if (c_.empty()) return kZero;
  return c_.back();
}

IntPoly IntPoly::operator-() const {
  IntPoly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

IntPoly operator+(const IntPoly& p, const IntPoly& q) {
  std::vector<Int> r(std::max(p.c_.size(), q.c_.size()), Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) r[i] += p.c_[i];
  for (size_t i = 0; i < q.c_.size(); ++i) r[i] += q.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& p, const IntPoly& q) { return p + (-q); }

IntPoly operator*(const IntPoly& p, const IntPoly& q) {
  if (p.is_zero() || q.is_zero()) return IntPoly{};
  std::vector<Int> r(p.c_.size() + q.c_.size() - 1, Int(0));
  for (size_t i = 0; i < p.c_.size(); ++i) {
    if (p.c_[i] == 0) continue;
    for (size_t j = 0; j < q.c_.size(); ++j) r[i + j] += p.c_[i] * q.c_[j];
  }
  return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const Int& k) const {
  if (k == 0) return IntPoly{};
  IntPoly r = *this;
  for (auto& v : r.c_) v *= k;
  return r;
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return IntPoly{};
  std::vector<Int> r(c_.size() - 1);
  for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * static_cast<long>(i);
  return IntPoly(std::move(r));
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& v : c_) {
    g = gcd(g, v);
    if (g == 1) break;
  }
  return abs(g);
}

IntPoly IntPoly::primitive_part() const {
  if (is_zero()) return IntPoly{};
  Int c = content();
  IntPoly r = *this;
  for (auto& v : r.c_) v /= c;
  return r;
}

Int IntPoly::eval(const Int& x) const {
  Int acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Rat IntPoly::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + Rat(*it);
  return acc;
}

int IntPoly::sign_at(const Rat& x) const {
  Rat v = eval(x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

IntPoly IntPoly::reversed() const { return reversed(degree()); }

IntPoly IntPoly::reversed(int shift) const {
  if (is_zero()) return IntPoly{};
  if (shift < degree()) throw std::invalid_argument("reversed: shift below degree");
  std::vector<Int> r(static_cast<size_t>(shift) + 1, Int(0));
  for (size_t i = 0; i < c_.size(); ++i) r[static_cast<size_t>(shift) - i] = c_[i];
  return IntPoly(std::move(r));
}

IntPoly IntPoly::pow(unsigned e) const {
  IntPoly acc = IntPoly::constant(1);
  IntPoly base = *this;
  while (e > 0) {
    if (e & 1u) acc = acc * base;
    base = base * base;
    e >>= 1u;
  }
  return acc;
}

IntPoly IntPoly::composed(const IntPoly& inner) const {
  IntPoly acc;
  for (int i = degree(); i >= 0; --i) {
    acc = acc * inner;
    if (c_[static_cast<size_t>(i)] != 0) acc = acc + IntPoly::constant(c_[static_cast<size_t>(i)]);
  }
  return acc;
}

std::optional<IntPoly> IntPoly::divide_exact(const IntPoly& num, const IntPoly& den) {
  if (den.is_zero()) return std::nullopt;
  if (num.is_zero()) return IntPoly{};
  if (num.degree() < den.degree()) return std::nullopt;
  std::vector<Int> rem(num.c_.begin(), num.c_.end());
  const int dd = den.degree();
  std::vector<Int> quot(num.c_.size() - den.c_.size() + 1, Int(0));
  for (int i = static_cast<int>(rem.size()) - 1; i >= dd; --i) {
    if (rem[static_cast<size_t>(i)] == 0) continue;
    Int q = rem[static_cast<size_t>(i)] / den.leading();
    if (q * den.leading() != rem[static_cast<size_t>(i)]) return std::nullopt;
    quot[static_cast<size_t>(i - dd)] = q;
    for (int j = 0; j <= dd; ++j)
      rem[static_cast<size_t>(i - dd + j)] -= q * den[j];
  }
  for (const auto& v : rem)
    if (v != 0) return std::nullopt;
  return IntPoly(std::move(quot));
}

std::string IntPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (i) os << ',';
    os << c_[i];
  }
  return os.str();
}

std::optional<IntPoly> IntPoly::parse(std::string_view s) {
  std::vector<Int> coeffs;
  size_t pos = 0;
  while (pos <= s.size()) {
    size_t comma = s.find(',', pos);
    std::string_view tok = s.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    // trim surrounding spaces
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.front()))) tok.remove_prefix(1);
    while (!tok.empty() && std::isspace(static_cast<unsigned char>(tok.back()))) tok.remove_suffix(1);
    if (tok.empty()) return std::nullopt;
    size_t k = 0;
    if (tok[k] == '+' || tok[k] == '-') ++k;
    if (k == tok.size()) return std::nullopt;
    for (; k < tok.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(tok[k]))) return std::nullopt;
    coeffs.emplace_back(std::string(tok));
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (coeffs.empty()) return std::nullopt;
  return IntPoly(std::move(coeffs));
}

IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q) {
  if (q.is_zero() || p.degree() < q.degree())
    throw std::invalid_argument("pseudo_remainder: need deg p >= deg q >= 0");
  std::vector<Int> rem(p.coeffs().begin(), p.coeffs().end());
  const int dq = q.degree();
  const Int& lq = q.leading();
  // Exactly deg p - deg q + 1 scaling steps, so the multiplier is
  // lc(q)^(deg p - deg q + 1) regardless of intermediate cancellation.
  for (int dr = static_cast<int>(rem.size()) - 1; dr >= dq; --dr) {
    Int lead = rem[static_cast<size_t>(dr)];
    for (int i = 0; i < dr; ++i) rem[static_cast<size_t>(i)] *= lq;
    for (int j = 0; j < dq; ++j)
      rem[static_cast<size_t>(dr - dq + j)] -= lead * q[j];
    rem[static_cast<size_t>(dr)] = 0;
  }
  rem.resize(static_cast<size_t>(dq));
  return IntPoly(std::move(rem));
}

IntPoly poly_gcd(const IntPoly& p, const IntPoly& q) {
  IntPoly a = p.primitive_part();
  IntPoly b = q.primitive_part();
  if (a.is_zero()) std::swap(a, b);
  if (b.is_zero()) {
    if (!a.is_zero() && a.leading() < 0) a = -a;
    return a;
  }
  if (a.degree() < b.degree()) std::swap(a, b);
  while (!b.is_zero()) {
    IntPoly r = pseudo_remainder(a, b).primitive_part();
    a = std::move(b);
    b = std::move(r);
  }
  if (a.leading() < 0) a = -a;
  return a;
}

SquarefreeDecomposition squarefree_decomposition(const IntPoly& p) {
  if (p.is_zero()) throw std::invalid_argument("squarefree_decomposition: zero polynomial");
  SquarefreeDecomposition out;
  out.content = p.content();
  out.sign = p.leading() < 0 ? -1 : 1;
  IntPoly f = p.primitive_part();
  if (out.sign < 0) f = -f;  // now lc(f) > 0
  if (f.degree() == 0) return out;

  // Yun's algorithm over Z (all divisions below are exact).
  IntPoly fp = f.derivative();
  IntPoly g = poly_gcd(f, fp);
  IntPoly c = *IntPoly::divide_exact(f, g);
  IntPoly d = *IntPoly::divide_exact(fp, g) - c.derivative();
  while (c.degree() > 0) {
    IntPoly fi = poly_gcd(c, d);
    // poly_gcd of coprime inputs is the constant 1; keep the convention
    // that every emitted factor is primitive with positive leading term.
    out.factors.push_back(fi.degree() > 0 ? fi : IntPoly::constant(1));
    c = *IntPoly::divide_exact(c, fi);
    d = *IntPoly::divide_exact(d, fi) - c.derivative();
  }
  // Drop trailing constant factors but keep interior placeholders.
  while (!out.factors.empty() && out.factors.back().degree() == 0) out.factors.pop_back();
  return out;
}

IntPoly discriminant(const IntPoly& a, const IntPoly& b) { return b * b - (a * a) * Int(4); }

DiscriminantSplit gh_split(const IntPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("gh_split: zero discriminant");
  SquarefreeDecomposition dec = squarefree_decomposition(delta);

  Int content_sf, content_sq;
  squarefree_square_split(dec.content, content_sf, content_sq);

  IntPoly g = IntPoly::constant(dec.sign * content_sf);
  IntPoly h = IntPoly::constant(content_sq);
  for (size_t i = 0; i < dec.factors.size(); ++i) {
    const IntPoly& fi = dec.factors[i];
    if (fi.degree() == 0) continue;
    const unsigned mult = static_cast<unsigned>(i + 1);
    if (mult & 1u) g = g * fi;
    h = h * fi.pow(mult / 2);
  }
  return DiscriminantSplit{delta, std::move(g), std::move(h)};
}

std::optional<ReciprocalShift> shifted_reciprocal_shift(const IntPoly& p) {
  if (p.is_zero()) return std::nullopt;
  const int shift = p.degree() + p.order_at_zero();
  for (int sign : {1, -1}) {
    bool ok = true;
    for (int i = p.order_at_zero(); i <= p.degree(); ++i) {
      if (p[shift - i] != sign * p[i]) {
        ok = false;
        break;
      }
    }
    if (ok) return ReciprocalShift{shift, sign};
  }
  return std::nullopt;
}

}  // namespace mahler
