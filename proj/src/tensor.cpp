#include "bioct/tensor.hpp"

#include <sstream>

#include "bioct/errors.hpp"
#include "bioct/linalg/field_rref.hpp"

namespace bioct {

std::string TensorAlgebra::name() const {
  return std::string(to_string(scalar)) + "x" + std::string(to_string(oct));
}

TensorAlgebra TensorAlgebra::parse(std::string_view text) {
  const auto x = text.find('x');
  TensorAlgebra a;
  if (x == std::string_view::npos) {
    a.scalar = ScalarKind::Real;
    a.oct = parse_algebra_name(text);
  } else {
    a.scalar = parse_scalar_kind(text.substr(0, x));
    a.oct = parse_algebra_name(text.substr(x + 1));
  }
  if (a.oct != AlgebraName::O && a.oct != AlgebraName::Os) {
    throw UsageError("tensor algebras need an octonionic factor (O or Os), got '" +
                     std::string(text) + "'");
  }
  return a;
}

TensorElement TensorElement::scalar(TensorAlgebra a, Scalar s) {
  TensorElement e = zero(a);
  e.z[0] = std::move(s);
  return e;
}

TensorElement TensorElement::unit(TensorAlgebra a, int k) {
  if (k < 0 || k > 7) throw UsageError("octonion unit index out of range");
  TensorElement e = zero(a);
  e.z[static_cast<std::size_t>(k)] = Scalar(1);
  return e;
}

TensorElement TensorElement::imaginary_unit(TensorAlgebra a, int k) {
  if (a.scalar == ScalarKind::Real) throw UsageError("real scalars have no imaginary unit");
  TensorElement e = unit(a, k);
  e.z[static_cast<std::size_t>(k)] = Scalar(0, 1);
  return e;
}

TensorElement TensorElement::random(TensorAlgebra a, RandomStream& rng) {
  TensorElement e = zero(a);
  for (auto& s : e.z) {
    s.re = rng.next_coefficient();
    if (a.scalar != ScalarKind::Real) s.im = rng.next_coefficient();
  }
  return e;
}

TensorElement TensorElement::random_real(TensorAlgebra a, RandomStream& rng) {
  TensorElement e = zero(a);
  for (auto& s : e.z) s.re = rng.next_coefficient();
  return e;
}

bool TensorElement::is_zero() const {
  for (const auto& s : z) {
    if (!s.is_zero()) return false;
  }
  return true;
}

bool TensorElement::is_scalar() const {
  for (std::size_t k = 1; k < 8; ++k) {
    if (!z[k].is_zero()) return false;
  }
  return true;
}

std::array<Rational, 16> TensorElement::real_coords() const {
  std::array<Rational, 16> c;
  for (std::size_t k = 0; k < 8; ++k) {
    c[k] = z[k].re;
    c[k + 8] = z[k].im;
  }
  return c;
}

TensorElement TensorElement::from_real_coords(TensorAlgebra a, const std::array<Rational, 16>& c) {
  TensorElement e = zero(a);
  for (std::size_t k = 0; k < 8; ++k) {
    e.z[k].re = c[k];
    e.z[k].im = c[k + 8];
  }
  if (a.scalar == ScalarKind::Real) {
    for (std::size_t k = 0; k < 8; ++k) {
      if (!e.z[k].im.is_zero()) throw UsageError("real-scalar element with imaginary part");
    }
  }
  return e;
}

namespace {

void require_same(const TensorElement& a, const TensorElement& b) {
  if (!(a.algebra == b.algebra)) {
    throw UsageError("tensor elements from different algebras: " + a.algebra.name() + " vs " +
                     b.algebra.name());
  }
}

}  // namespace

TensorElement operator+(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  TensorElement r = a;
  for (std::size_t k = 0; k < 8; ++k) r.z[k] = r.z[k] + b.z[k];
  return r;
}

TensorElement operator-(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  TensorElement r = a;
  for (std::size_t k = 0; k < 8; ++k) r.z[k] = r.z[k] - b.z[k];
  return r;
}

TensorElement operator-(const TensorElement& a) {
  TensorElement r = a;
  for (auto& s : r.z) s = -s;
  return r;
}

TensorElement scale(const Scalar& s, const TensorElement& b) {
  TensorElement r = TensorElement::zero(b.algebra);
  for (std::size_t k = 0; k < 8; ++k) r.z[k] = mul(b.algebra.scalar, s, b.z[k]);
  return r;
}

TensorElement mul(const TensorElement& a, const TensorElement& b) {
  require_same(a, b);
  const CompositionTable& t = a.algebra.table();
  const ScalarKind kind = a.algebra.scalar;
  TensorElement r = TensorElement::zero(a.algebra);
  for (int i = 0; i < 8; ++i) {
    const Scalar& ai = a.z[static_cast<std::size_t>(i)];
    if (ai.is_zero()) continue;
    for (int j = 0; j < 8; ++j) {
      const Scalar& bj = b.z[static_cast<std::size_t>(j)];
      if (bj.is_zero()) continue;
      Scalar& slot = r.z[static_cast<std::size_t>(i ^ j)];
      if (t.sign(i, j) > 0) {
        mul_add(kind, slot, ai, bj);
      } else {
        mul_add(kind, slot, -ai, bj);
      }
    }
  }
  return r;
}

TensorElement conjugate(const TensorElement& b, Conjugation kind) {
  TensorElement r = b;
  for (std::size_t k = 0; k < 8; ++k) {
    if (kind == Conjugation::Full) r.z[k] = conj(r.z[k]);
    if (k > 0) r.z[k] = -r.z[k];
  }
  return r;
}

Scalar inner(const TensorElement& a, const TensorElement& b, InnerKind kind) {
  require_same(a, b);
  const CompositionTable& t = a.algebra.table();
  const ScalarKind sk = a.algebra.scalar;
  Scalar s;
  for (int k = 0; k < 8; ++k) {
    const auto idx = static_cast<std::size_t>(k);
    const Scalar left = kind == InnerKind::HermitianSesquilinear ? conj(a.z[idx]) : a.z[idx];
    if (t.norm_sign(k) > 0) {
      mul_add(sk, s, left, b.z[idx]);
    } else {
      mul_add(sk, s, -left, b.z[idx]);
    }
  }
  return s;
}

Scalar norm(const TensorElement& b, NormKind kind) {
  return inner(b, b,
               kind == NormKind::ComplexN ? InnerKind::OctonionicBilinear
                                          : InnerKind::HermitianSesquilinear);
}

std::optional<TensorElement> zero_divisor_witness(const TensorElement& b) {
  if (b.is_zero()) throw UsageError("zero_divisor_witness needs a nonzero element");
  if (!norm(b, NormKind::ComplexN).is_zero()) return std::nullopt;
  return conjugate(b, Conjugation::Octonionic);
}

std::size_t left_multiplication_rank(const TensorElement& b) {
  const std::size_t n = b.algebra.scalar == ScalarKind::Real ? 8 : 16;
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::array<Rational, 16> e;
    e[j] = 1;
    const auto col = mul(b, TensorElement::from_real_coords(b.algebra, e)).real_coords();
    for (std::size_t i = 0; i < n; ++i) m[i][j] = col[i];
  }
  return linalg::rank(std::move(m), n);
}

TensorElement inverse(const TensorElement& b) {
  const Scalar n = norm(b, NormKind::ComplexN);
  const Scalar inv = bioct::inverse(b.algebra.scalar, n);
  return scale(inv, conjugate(b, Conjugation::Octonionic));
}

std::string to_string(const TensorElement& b) {
  std::ostringstream os;
  os << b.algebra.name() << '[';
  for (std::size_t k = 0; k < 8; ++k) os << (k ? ", " : "") << to_string(b.z[k]);
  os << ']';
  return os.str();
}

CompositionReport composition_check(TensorAlgebra algebra, NormKind kind, int samples,
                                    std::uint64_t seed) {
  if (samples <= 0) throw UsageError("composition_check needs samples > 0");
  CompositionReport rep;
  rep.algebra = algebra;
  rep.kind = kind;
  const ScalarKind sk = algebra.scalar;

  auto test = [&](const TensorElement& a, const TensorElement& b) {
    ++rep.evaluated;
    const Scalar lhs = norm(mul(a, b), kind);
    const Scalar rhs = mul(sk, norm(a, kind), norm(b, kind));
    if (lhs == rhs) return true;
    ++rep.failures;
    if (rep.passed) {
      rep.passed = false;
      rep.witness = std::make_pair(a, b);
      rep.witness_lhs = lhs;
      rep.witness_rhs = rhs;
    }
    return false;
  };

  if (sk != ScalarKind::Real) {
    const TensorElement one = TensorElement::unit(algebra, 0);
    const TensorElement ui1 = TensorElement::imaginary_unit(algebra, 1);
    test(one + ui1, one - ui1);
  }
  RandomStream rng(seed);
  for (int s = 0; s < samples; ++s) {
    const TensorElement a = TensorElement::random(algebra, rng);
    const TensorElement b = TensorElement::random(algebra, rng);
    if (!test(a, b) && !rep.first_random_failure) rep.first_random_failure = s;
  }
  return rep;
}

IdentityReport tensor_identity_suite(TensorAlgebra algebra, int samples, std::uint64_t seed) {
  if (samples <= 0) throw UsageError("identity suite needs samples > 0");
  RandomStream rng(seed);
  const ScalarKind sk = algebra.scalar;
  return run_identity_suite(
      algebra.name(), samples, [&] { return TensorElement::random(algebra, rng); },
      [](const TensorElement& a, const TensorElement& b) { return mul(a, b); },
      [sk](const TensorElement& a, const TensorElement& b) {
        return norm(mul(a, b), NormKind::ComplexN) ==
               mul(sk, norm(a, NormKind::ComplexN), norm(b, NormKind::ComplexN));
      },
      [](const TensorElement& a) { return to_string(a); });
}

}  // namespace bioct
