#include "bioct/scalar.hpp"

#include <stdexcept>

#include "bioct/errors.hpp"

namespace bioct {

std::string_view to_string(ScalarKind kind) {
  switch (kind) {
    case ScalarKind::Real: return "R";
    case ScalarKind::Complex: return "C";
    case ScalarKind::Split: return "Cs";
  }
  return "?";
}

ScalarKind parse_scalar_kind(std::string_view text) {
  if (text == "R") return ScalarKind::Real;
  if (text == "C") return ScalarKind::Complex;
  if (text == "Cs") return ScalarKind::Split;
  throw UsageError("unknown scalar ring '" + std::string(text) + "'");
}

Scalar mul(ScalarKind kind, const Scalar& a, const Scalar& b) {
  Scalar r;
  mul_add(kind, r, a, b);
  return r;
}

void mul_add(ScalarKind kind, Scalar& acc, const Scalar& a, const Scalar& b) {
  const bool ai = !a.im.is_zero();
  const bool bi = !b.im.is_zero();
  if (!a.re.is_zero() && !b.re.is_zero()) acc.re += a.re * b.re;
  if (ai && bi) {
    if (kind == ScalarKind::Split) {
      acc.re += a.im * b.im;
    } else {
      acc.re -= a.im * b.im;
    }
  }
  if (ai && !b.re.is_zero()) acc.im += a.im * b.re;
  if (bi && !a.re.is_zero()) acc.im += a.re * b.im;
}

Scalar conj(const Scalar& a) { return {a.re, -a.im}; }

Rational modulus_sq(ScalarKind kind, const Scalar& a) {
  if (kind == ScalarKind::Split) return a.re * a.re - a.im * a.im;
  return a.re * a.re + a.im * a.im;
}

bool is_invertible(ScalarKind kind, const Scalar& a) { return !modulus_sq(kind, a).is_zero(); }

Scalar inverse(ScalarKind kind, const Scalar& a) {
  const Rational m = modulus_sq(kind, a);
  if (m.is_zero()) throw std::domain_error("scalar is not invertible");
  const Scalar c = conj(a);
  return {c.re / m, c.im / m};
}

std::string to_string(const Scalar& s) {
  if (s.im.is_zero()) return s.re.str();
  return "(" + s.re.str() + "," + s.im.str() + ")";
}

}  // namespace bioct
