#pragma once

#include <ostream>

#include "bioct/rational.hpp"

namespace bioct {

/// Element of the field Q(i).
struct ComplexRational {
  Rational re;
  Rational im;

  ComplexRational() = default;
  ComplexRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  ComplexRational(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  ComplexRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }

  friend ComplexRational operator+(const ComplexRational& a, const ComplexRational& b) {
    return {a.re + b.re, a.im + b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a, const ComplexRational& b) {
    return {a.re - b.re, a.im - b.im};
  }
  friend ComplexRational operator-(const ComplexRational& a) { return {-a.re, -a.im}; }
  friend ComplexRational operator*(const ComplexRational& a, const ComplexRational& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend ComplexRational operator/(const ComplexRational& a, const ComplexRational& b) {
    const Rational m = b.re * b.re + b.im * b.im;
    const ComplexRational num = a * ComplexRational(b.re, -b.im);
    return {num.re / m, num.im / m};
  }
  ComplexRational& operator+=(const ComplexRational& o) { return *this = *this + o; }
  ComplexRational& operator-=(const ComplexRational& o) { return *this = *this - o; }
  friend bool operator==(const ComplexRational&, const ComplexRational&) = default;
  friend std::ostream& operator<<(std::ostream& os, const ComplexRational& z) {
    return os << '(' << z.re << ',' << z.im << ')';
  }
};

}  // namespace bioct
