#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>

#include "bioct/composition.hpp"
#include "bioct/identities.hpp"
#include "bioct/scalar.hpp"

namespace bioct {

/// (R, C or C_s) tensor (O or O_s). The scalar commutes with every octonion unit.
struct TensorAlgebra {
  ScalarKind scalar = ScalarKind::Complex;
  AlgebraName oct = AlgebraName::O;

  const CompositionTable& table() const { return standard_table(oct); }
  /// e.g. "CxO", "CsxOs", "RxO".
  std::string name() const;
  /// Parses names such as "CxO", "CsxOs", "O" (= RxO), "Os".
  static TensorAlgebra parse(std::string_view text);
  friend bool operator==(const TensorAlgebra&, const TensorAlgebra&) = default;
};

enum class Conjugation {
  Octonionic,  ///< negates the units i_1..i_7 only: b*
  Full,        ///< additionally conjugates every scalar coefficient
};

enum class NormKind {
  ComplexN,  ///< sum_a s_a (z^a)^2 in the scalar ring; s_a are the norm signs of O or O_s
  RealSq,    ///< sum_a s_a z^a conj(z^a), a rational
};

enum class InnerKind { OctonionicBilinear, HermitianSesquilinear };

/// b = sum_a z^a i_a with z^a in the scalar ring. Real view: z^a = x^a + u y^a.
struct TensorElement {
  TensorAlgebra algebra;
  std::array<Scalar, 8> z;

  static TensorElement zero(TensorAlgebra a) { return TensorElement{a, {}}; }
  static TensorElement scalar(TensorAlgebra a, Scalar s);
  static TensorElement unit(TensorAlgebra a, int k);
  /// u * i_k, where u is the imaginary unit of the scalar ring.
  static TensorElement imaginary_unit(TensorAlgebra a, int k);
  static TensorElement random(TensorAlgebra a, RandomStream& rng);
  /// Real-coefficient element (all y^a = 0).
  static TensorElement random_real(TensorAlgebra a, RandomStream& rng);

  bool is_zero() const;
  /// True iff z^a = 0 for a >= 1.
  bool is_scalar() const;
  /// x^0..x^7, y^0..y^7.
  std::array<Rational, 16> real_coords() const;
  static TensorElement from_real_coords(TensorAlgebra a, const std::array<Rational, 16>& c);

  friend bool operator==(const TensorElement&, const TensorElement&) = default;
};

TensorElement operator+(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a, const TensorElement& b);
TensorElement operator-(const TensorElement& a);
TensorElement scale(const Scalar& s, const TensorElement& b);
/// Throws UsageError on algebra mismatch.
TensorElement mul(const TensorElement& a, const TensorElement& b);
TensorElement conjugate(const TensorElement& b, Conjugation kind);
/// RealSq returns its rational value in the real part.
Scalar norm(const TensorElement& b, NormKind kind);
/// Bilinear, or sesquilinear (conjugate-linear in the first slot).
Scalar inner(const TensorElement& a, const TensorElement& b, InnerKind kind);

/// For N(b) == 0 returns conjugate(b, Octonionic), which satisfies b * c = 0.
/// Returns nothing when N(b) != 0. Throws UsageError for b == 0.
std::optional<TensorElement> zero_divisor_witness(const TensorElement& b);
/// Rank of x -> b x as a real linear map (16 for an invertible b over C or C_s).
std::size_t left_multiplication_rank(const TensorElement& b);
/// b* / N(b); throws std::domain_error when N(b) is not a unit of the scalar ring.
TensorElement inverse(const TensorElement& b);

std::string to_string(const TensorElement& b);

struct CompositionReport {
  TensorAlgebra algebra;
  NormKind kind = NormKind::ComplexN;
  int evaluated = 0;
  int failures = 0;
  bool passed = true;
  /// First failing pair and the two sides norm(ab), norm(a)norm(b).
  std::optional<std::pair<TensorElement, TensorElement>> witness;
  Scalar witness_lhs;
  Scalar witness_rhs;
  /// First failure among the random pairs alone (excludes the canonical pair).
  std::optional<int> first_random_failure;
};

/// Tests norm(ab) == norm(a)norm(b), first on the canonical pair
/// (1 + u i_1, 1 - u i_1) and then on `samples` seeded random pairs.
CompositionReport composition_check(TensorAlgebra algebra, NormKind kind, int samples,
                                    std::uint64_t seed);

/// Alternativity / Moufang / complex-norm composition battery on random triples.
IdentityReport tensor_identity_suite(TensorAlgebra algebra, int samples, std::uint64_t seed);

}  // namespace bioct
