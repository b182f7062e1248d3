#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bioct/random_stream.hpp"
#include "bioct/tensor.hpp"
#include "bioct/veronese.hpp"

namespace bioct {

/// Diagonal sign matrix eta. (+,+,+) gives J_3, (+,+,-) gives J_{2,1}.
struct Metric {
  std::array<int, 3> signs{1, 1, 1};

  static Metric definite() { return {{1, 1, 1}}; }
  static Metric lorentzian() { return {{1, 1, -1}}; }
  bool is_definite() const { return signs[0] > 0 && signs[1] > 0 && signs[2] > 0; }
  std::string tag() const;
  friend bool operator==(const Metric&, const Metric&) = default;
};

/// True iff b sigma(b) is a scalar for every b: the octonionic conjugation
/// always, the full conjugation only over real scalars.
bool is_central(TensorAlgebra algebra, Conjugation conj);

/// Full 3x3 matrix over the coordinate algebra, row-major.
using Matrix3 = std::array<std::array<TensorElement, 3>, 3>;

/// 3x3 matrix with entry(j, i) = eta_i eta_j sigma(entry(i, j)).
///
/// Layout: (1,2) = b3, (2,3) = b1, (3,1) = b2. The diagonal entries are
/// sigma-fixed algebra elements; for a central conjugation these are the
/// scalars lambda_nu, for the full conjugation they have real scalar part and
/// imaginary octonionic part.
struct HermMatrix3 {
  TensorAlgebra algebra;
  Conjugation conj = Conjugation::Octonionic;
  Metric metric;
  std::array<TensorElement, 3> diag;
  std::array<TensorElement, 3> b;

  static HermMatrix3 zero(TensorAlgebra a, Conjugation c = Conjugation::Octonionic, Metric m = {});
  static HermMatrix3 identity(TensorAlgebra a, Conjugation c = Conjugation::Octonionic, Metric m = {});
  static HermMatrix3 diagonal(TensorAlgebra a, Scalar l1, Scalar l2, Scalar l3,
                              Conjugation c = Conjugation::Octonionic, Metric m = {});
  /// Random element of the space (diagonals sigma-fixed).
  static HermMatrix3 random(TensorAlgebra a, Conjugation c, Metric m, RandomStream& rng);
  /// Reads diagonal and upper entries; throws UsageError if m is not Hermitian.
  static HermMatrix3 from_full(const Matrix3& m, TensorAlgebra a, Conjugation c, Metric metric);

  bool central() const { return is_central(algebra, conj); }
  /// Scalar diagonal entry; throws UnsupportedOperation when it is not a scalar.
  Scalar lambda(int nu) const;
  Matrix3 full() const;
  bool is_zero() const;
  friend bool operator==(const HermMatrix3&, const HermMatrix3&) = default;
};

HermMatrix3 operator+(const HermMatrix3& a, const HermMatrix3& b);
HermMatrix3 operator-(const HermMatrix3& a, const HermMatrix3& b);
HermMatrix3 scale(const Scalar& s, const HermMatrix3& a);
std::string to_string(const HermMatrix3& a);
/// Three-row rendering of the matrix layout.
std::string pretty(const HermMatrix3& a);

/// Plain matrix product, each entry a sum of binary products.
Matrix3 matmul(const Matrix3& a, const Matrix3& b);
bool is_hermitian(const Matrix3& m, Conjugation c, const Metric& metric);

/// A_omega: diagonal lambdas, b1 at (2,3), b2 at (3,1), b3 at (1,2).
/// Octonionic conjugation for the complex plane, full for the real plane.
HermMatrix3 from_veronese(const VeroneseTriple& v);

/// (AB + BA) / 2. Throws UsageError for mismatched carriers.
HermMatrix3 jordan_mul(const HermMatrix3& a, const HermMatrix3& b);
/// Sum of the diagonal, as an algebra element.
TensorElement trace_element(const HermMatrix3& a);
/// Scalar trace; throws UnsupportedOperation when the diagonal is not scalar.
Scalar trace(const HermMatrix3& a);

/// Cubic norm. For a metric eta it equals det(eta) det(A eta):
///   l1 l2 l3 - e2 e3 l1 N(b1) - e3 e1 l2 N(b2) - e1 e2 l3 N(b3) + 2 Re((b1 b2) b3).
/// Throws UnsupportedOperation for non-central conjugations.
Scalar det(const HermMatrix3& a);
/// Adjoint map: the entrywise formula for the definite metric, and
/// A^2 - tr(A) A + (tr(A)^2 - tr(A^2))/2 I in general.
HermMatrix3 sharp(const HermMatrix3& a);
/// A^2 - tr(A) A + (tr(A)^2 - tr(A^2))/2 I, for comparison with the entrywise formula.
HermMatrix3 sharp_polynomial(const HermMatrix3& a);
/// A o A^2 - tr(A) A^2 + (tr(A)^2 - tr(A^2))/2 A - det(A) I.
HermMatrix3 hamilton_cayley_residual(const HermMatrix3& a);
/// 0 iff A = 0, 1 iff sharp(A) = 0, 2 iff det(A) = 0, else 3.
int rank(const HermMatrix3& a);
/// Full polarization of det, normalized so that Ntri(A, A, A) = det(A).
Scalar ntri(const HermMatrix3& a, const HermMatrix3& b, const HermMatrix3& c);
/// trace(A o B).
Scalar trace_form(const HermMatrix3& a, const HermMatrix3& b);

struct CentralityReport {
  TensorAlgebra algebra;
  Conjugation conj = Conjugation::Octonionic;
  bool central = true;
  int samples = 0;
  std::optional<TensorElement> witness;          ///< b with b sigma(b) not scalar
  std::optional<TensorElement> witness_product;  ///< b sigma(b)
  /// Jordan identity (A^2 o B) o A = A^2 o (B o A) on random Hermitian pairs.
  int jordan_samples = 0;
  bool jordan_identity = true;
  /// Smallest scalar part of trace(A o A) seen over random nonzero A and
  /// over the basis; a value <= 0 is a witness against formal reality.
  Rational min_trace_square;
  bool nonpositive_trace_square = false;
};

CentralityReport centrality_check(TensorAlgebra algebra, Conjugation conj, int samples,
                                  std::uint64_t seed = 0);

/// Real coordinates of the Jordan carriers used by the Lie computations:
/// [l1, l2, l3, b1 (8 or 16), b2, b3] for a central conjugation.
std::size_t real_dim(TensorAlgebra a);
std::vector<Rational> to_real_coords(const HermMatrix3& a);
HermMatrix3 from_real_coords(const std::vector<Rational>& c, TensorAlgebra a, Metric m);

}  // namespace bioct
