#pragma once

#include <string>
#include <string_view>

#include "bioct/rational.hpp"

namespace bioct {

/// Commutative scalar ring adjoined to the octonions: R, C (i^2 = -1) or C_s (j^2 = +1).
enum class ScalarKind { Real, Complex, Split };

std::string_view to_string(ScalarKind kind);
/// Accepts "R", "C", "Cs".
ScalarKind parse_scalar_kind(std::string_view text);

/// re + im * u with u^2 = -1 (Complex), +1 (Split); im == 0 for Real.
struct Scalar {
  Rational re;
  Rational im;

  Scalar() = default;
  Scalar(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  Scalar(long r) : re(r) {}                 // NOLINT(google-explicit-constructor)
  Scalar(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  friend bool operator==(const Scalar&, const Scalar&) = default;
};

inline Scalar operator+(const Scalar& a, const Scalar& b) { return {a.re + b.re, a.im + b.im}; }
inline Scalar operator-(const Scalar& a, const Scalar& b) { return {a.re - b.re, a.im - b.im}; }
inline Scalar operator-(const Scalar& a) { return {-a.re, -a.im}; }
inline Scalar scale(const Rational& s, const Scalar& a) { return {s * a.re, s * a.im}; }

/// Ring product; the kind fixes the square of the imaginary unit.
Scalar mul(ScalarKind kind, const Scalar& a, const Scalar& b);
/// a * b accumulated into acc.
void mul_add(ScalarKind kind, Scalar& acc, const Scalar& a, const Scalar& b);
/// The ring involution: i -> -i (Complex), j -> -j (Split), identity on Real.
Scalar conj(const Scalar& a);
/// a * conj(a) as a rational: re^2 + im^2 (Complex), re^2 - im^2 (Split).
Rational modulus_sq(ScalarKind kind, const Scalar& a);
bool is_invertible(ScalarKind kind, const Scalar& a);
/// Throws std::domain_error for non-units.
Scalar inverse(ScalarKind kind, const Scalar& a);

std::string to_string(const Scalar& s);

}  // namespace bioct
