#ifndef MAHLER_SPECIAL_HPP
#define MAHLER_SPECIAL_HPP

#include "mahler/real.hpp"

namespace mahler {

// Minimal complex arithmetic over Real (std::complex is only specified for
// the builtin floating types).
struct Complex {
  Real re{0}, im{0};

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}

  Complex operator+(const Complex& o) const { return {re + o.re, im + o.im}; }
  Complex operator-(const Complex& o) const { return {re - o.re, im - o.im}; }
  Complex operator-() const { return {-re, -im}; }
  Complex operator*(const Complex& o) const {
    return {re * o.re - im * o.im, re * o.im + im * o.re};
  }
  Complex operator/(const Complex& o) const {
    Real n = o.re * o.re + o.im * o.im;
    return {(re * o.re + im * o.im) / n, (im * o.re - re * o.im) / n};
  }
  Complex conj() const { return {re, -im}; }
  Real abs2() const { return re * re + im * im; }
};

Complex complex_log(const Complex& z);  // principal branch

// Clausen function Cl_2(theta) = sum sin(n theta)/n^2, any real theta,
// at the ambient working precision.
BigReal clausen(const Real& theta);

// Spec-facing wrapper: evaluate at the requested precision (decimal digits).
BigReal clausen_at(const Real& theta, unsigned digits);

// Dilogarithm, principal branch, any complex argument.
Complex li2(const Complex& z);

// Bloch-Wigner D(z) = Im Li2(z) + arg(1 - z) log|z|.
BigReal bloch_wigner(const Complex& z);

}  // namespace mahler

#endif  // MAHLER_SPECIAL_HPP
