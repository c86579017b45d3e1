#ifndef MAHLER_INTPOLY_HPP
#define MAHLER_INTPOLY_HPP

#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace mahler {

using Int = boost::multiprecision::mpz_int;
using Rat = boost::multiprecision::mpq_rational;

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored ascending by degree.  Invariant: the last coefficient is nonzero
// unless the polynomial is zero (empty vector).
class IntPoly {
 public:
  IntPoly() = default;
  IntPoly(std::initializer_list<long> coeffs);
  explicit IntPoly(std::vector<Int> coeffs);

  static IntPoly constant(Int c);
  // c * x^k
  static IntPoly monomial(int k, Int c = 1);

  bool is_zero() const { return c_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  // Multiplicity of the root x = 0; 0 for the zero polynomial.
  int order_at_zero() const;

  // Coefficient of x^i (zero outside the stored range).
  const Int& operator[](int i) const;
  const Int& leading() const;
  std::span<const Int> coeffs() const { return c_; }

  IntPoly operator-() const;
  friend IntPoly operator+(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator-(const IntPoly& p, const IntPoly& q);
  friend IntPoly operator*(const IntPoly& p, const IntPoly& q);
  IntPoly operator*(const Int& k) const;
  bool operator==(const IntPoly& o) const { return c_ == o.c_; }

  IntPoly derivative() const;
  // gcd of |coefficients|; 0 for the zero polynomial.
  Int content() const;
  // p / content(p), keeping the sign of the leading coefficient.
  IntPoly primitive_part() const;

  Int eval(const Int& x) const;
  Rat eval(const Rat& x) const;
  int sign_at(const Rat& x) const;

  // x^shift * p(1/x).  Requires shift >= degree(); default uses degree().
  IntPoly reversed() const;
  IntPoly reversed(int shift) const;

  IntPoly pow(unsigned e) const;

  // p(inner(x)), exact.
  IntPoly composed(const IntPoly& inner) const;

  // Exact division: quotient if den divides num in Z[x], nullopt otherwise.
  static std::optional<IntPoly> divide_exact(const IntPoly& num, const IntPoly& den);

  std::string to_string() const;  // "c0,c1,...,cd"
  static std::optional<IntPoly> parse(std::string_view s);

 private:
  void trim();
  std::vector<Int> c_;
};

// Primitive gcd with positive leading coefficient (primitive PRS).
// gcd(0, 0) = 0; gcd(p, 0) = |primitive part of p|.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

// Remainder of lc(q)^(deg p - deg q + 1) * p under division by q, exactly
// (deg p >= deg q >= 0).
IntPoly pseudo_remainder(const IntPoly& p, const IntPoly& q);

// Squarefree (Yun) decomposition of a nonzero polynomial:
// p = sign * content * prod factors[i].pow(i+1), each factor primitive,
// squarefree, pairwise coprime, with positive leading coefficient.
struct SquarefreeDecomposition {
  int sign = 1;
  Int content{1};
  std::vector<IntPoly> factors;  // factors[i] has multiplicity i+1
};
SquarefreeDecomposition squarefree_decomposition(const IntPoly& p);

// Delta = g * h^2 exactly, g squarefree (including squarefree integer
// content, and carrying the sign), h with positive leading coefficient
// (carrying the square part of the content).
struct DiscriminantSplit {
  IntPoly delta;
  IntPoly g;
  IntPoly h;
};

// b^2 - 4a^2, the y-discriminant of a(y^2+1) + by.
IntPoly discriminant(const IntPoly& a, const IntPoly& b);

// Requires delta nonzero.
DiscriminantSplit gh_split(const IntPoly& delta);

// The unique shift ell = deg p + ord_0 p and sign with
// x^ell p(1/x) = sign * p(x), if either sign works.
struct ReciprocalShift {
  int shift = 0;
  int sign = 1;
};
std::optional<ReciprocalShift> shifted_reciprocal_shift(const IntPoly& p);

}  // namespace mahler

#endif  // MAHLER_INTPOLY_HPP
