#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "bioct/composition.hpp"
#include "bioct/jordan.hpp"
#include "bioct/linalg/nullspace.hpp"
#include "bioct/linalg/signature.hpp"
#include "bioct/rational.hpp"
#include "bioct/tensor.hpp"

namespace bioct {

using SparseVec = std::vector<std::pair<std::size_t, Rational>>;

/// Bilinear product on Q^dim given by structure constants e_a e_b = sum_c m_ab^c e_c.
struct FiniteAlgebra {
  std::string name;
  std::size_t dim = 0;
  bool commutative = false;
  std::vector<SparseVec> mult;  ///< index a * dim + b
  /// Linear trace functional (Jordan carriers only; empty otherwise).
  std::vector<Rational> trace;
  /// Complex structure (re index, im index) for carriers with complex scalars.
  std::vector<std::pair<std::size_t, std::size_t>> complex_pairs;

  const SparseVec& product(std::size_t a, std::size_t b) const { return mult[a * dim + b]; }
  std::vector<Rational> multiply(const std::vector<Rational>& x, const std::vector<Rational>& y) const;
};

/// R, C, Cs, H, Hs, O or Os on its unit basis.
FiniteAlgebra composition_carrier(AlgebraName name);
/// (R, C or C_s) tensor (O or O_s) as a real algebra on x^0..x^7, y^0..y^7.
FiniteAlgebra tensor_carrier(TensorAlgebra a);
/// Hermitian 3x3 matrices over O or O_s with metric eta and the Jordan
/// product, on coordinates [l1, l2, l3, b1, b2, b3] (27 dims).
FiniteAlgebra jordan_carrier(AlgebraName oct, Metric metric = {});
/// The same over C tensor (O or O_s) with the octonionic conjugation (54 real dims).
FiniteAlgebra complexified_jordan_carrier(AlgebraName oct);
/// One-dimensional algebra R with x y = xy and trace 1.
FiniteAlgebra real_line_carrier();

/// Dense square rational matrix, row-major.
struct RatMatrix {
  std::size_t n = 0;
  std::vector<Rational> a;

  RatMatrix() = default;
  explicit RatMatrix(std::size_t size) : n(size), a(size * size) {}
  Rational& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
  const Rational& at(std::size_t i, std::size_t j) const { return a[i * n + j]; }
  bool is_zero() const;
  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;
};

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y);
RatMatrix operator*(const RatMatrix& x, const RatMatrix& y);

/// Operators spanning a candidate Lie algebra.
struct OperatorBasis {
  std::string name;
  std::size_t carrier_dim = 0;
  std::vector<RatMatrix> ops;
  bool closed = false;
  /// Optional coordinate chart: flat entry positions p_k with ops[j].a[p_k] = delta_jk.
  std::vector<std::size_t> chart;
  /// Exact solver record when the basis came from a nullspace computation.
  std::optional<linalg::NullspaceResult> solve;

  std::size_t dim() const { return ops.size(); }
};

/// [X_a, X_b] = sum_c c_ab^c X_c, stored for a < b (antisymmetry gives the rest).
struct StructureConstants {
  std::size_t dim = 0;
  std::vector<SparseVec> c;  ///< index a * dim + b, all a, b

  const SparseVec& bracket(std::size_t a, std::size_t b) const { return c[a * dim + b]; }
};

/// Expresses every commutator in the basis and checks it exactly.
/// Throws ClosureError(a, b) when [X_a, X_b] leaves the span, and UsageError
/// when the operators are linearly dependent.
StructureConstants lie_structure(const OperatorBasis& basis);
/// Exact Jacobi identity check on all triples a < b < c.
bool jacobi_holds(const StructureConstants& sc);

struct KillingReport {
  std::size_t dim = 0;
  std::size_t p = 0;  ///< positive Killing directions (non-compact)
  std::size_t q = 0;  ///< negative (compact)
  std::size_t degenerate = 0;
  std::optional<long> character;  ///< p - q when nondegenerate
  std::string label;
  bool exact = false;  ///< signature from exact congruence
  bool float_run = false;
  linalg::Inertia float_inertia;
  bool paths_agree = true;
};

struct KillingOptions {
  bool exact = true;
  bool floating = true;
  double tolerance = 1e-8;
};

/// K_ab = tr(ad_a ad_b) from the structure constants.
std::vector<std::vector<Rational>> killing_form(const StructureConstants& sc);
KillingReport killing_character(const OperatorBasis& basis, const KillingOptions& opts = {});
KillingReport killing_character(const StructureConstants& sc, const KillingOptions& opts = {});
/// Real-form name for (dim, character), e.g. "F4(-52)"; empty if unknown.
std::string real_form_label(std::size_t dim, long character);

/// Exact kernel of D(xy) = D(x) y + x D(y) over all basis pairs; closure verified.
OperatorBasis derivation_basis(const FiniteAlgebra& a, const linalg::NullspaceOptions& opts = {});
/// Derivations commuting with multiplication by the scalar imaginary unit
/// (carrier from tensor_carrier with complex or split scalars).
OperatorBasis scalar_linear_derivations(const FiniteAlgebra& a, const linalg::NullspaceOptions& opts = {});
/// der(J) together with L_a for traceless a. Throws UsageError for carriers
/// without a trace functional or with a non-commutative product.
OperatorBasis reduced_structure_basis(const FiniteAlgebra& j, const linalg::NullspaceOptions& opts = {});

/// C-linear derivations of a carrier with a complex structure, parametrized by
/// D e_r = sum (P e_r' + Q i e_r') on the complex basis. Returns the nullspace
/// result; its nullity is the real dimension (twice the complex one).
linalg::NullspaceResult complex_linear_derivations(const FiniteAlgebra& a,
                                                   const linalg::NullspaceOptions& opts = {});

/// Symmetric trilinear form on J3 (real coordinates), Ntri(e_a, e_b, e_c).
struct CubicForm {
  std::size_t n = 0;
  std::vector<Rational> t;  ///< n^3, fully symmetric
  const Rational& at(std::size_t a, std::size_t b, std::size_t c) const { return t[(a * n + b) * n + c]; }
};

CubicForm jordan_cubic_form(AlgebraName oct);
/// T(e_a, e_b) Gram matrix of the trace form for the definite carrier.
std::vector<std::vector<Rational>> jordan_trace_gram(AlgebraName oct);
/// Sign flip of the b1, b2 coordinates: conjugation A -> eta A eta for eta = (+,+,-).
std::vector<std::vector<Rational>> metric_twist(const Metric& metric);

/// Real operators X with Ntri(Xa, b, c) + Ntri(a, Xb, c) + Ntri(a, b, Xc) = 0.
OperatorBasis cubic_invariance_basis(const CubicForm& n, const linalg::NullspaceOptions& opts = {});

/// Complex-linear X = P + iQ on the complexified carrier preserving the
/// cubic form and anti-Hermitian for h = T( . , theta_eta . ), returned as
/// 2n x 2n real operators [[P, -Q], [Q, P]].
OperatorBasis unitary_real_form(const CubicForm& n, const std::vector<std::vector<Rational>>& h,
                                const linalg::NullspaceOptions& opts = {});
OperatorBasis unitary_real_form(AlgebraName oct, const Metric& metric,
                                const linalg::NullspaceOptions& opts = {});

/// Cubic form and Hermitian Gram matrix after the change of basis e'_j = sum_i s_ij e_i.
std::pair<CubicForm, std::vector<std::vector<Rational>>> change_basis(
    const CubicForm& n, const std::vector<std::vector<Rational>>& h,
    const std::vector<std::vector<Rational>>& s);
/// Random monomial matrix with rational scalings, followed by n/4 random column shears.
std::vector<std::vector<Rational>> random_basis_change(std::size_t n, std::uint64_t seed);

enum class MatrixModel { A3, SA3 };

/// Free real parameters of traceless (a3) or sigma-anti-Hermitian traceless
/// (sa3) 3x3 matrices over the algebra, from the rank of the constraints.
std::size_t matrix_model_dimension(MatrixModel model, TensorAlgebra algebra, Conjugation conj);

}  // namespace bioct
