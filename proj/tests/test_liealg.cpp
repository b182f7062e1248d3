#include <gtest/gtest.h>

#include "bioct/errors.hpp"
#include "bioct/liealg.hpp"

using namespace bioct;

namespace {

std::vector<Rational> apply_op(const RatMatrix& d, const std::vector<Rational>& x) {
  std::vector<Rational> y(d.n);
  for (std::size_t i = 0; i < d.n; ++i)
    for (std::size_t j = 0; j < d.n; ++j) y[i] += d.at(i, j) * x[j];
  return y;
}

std::vector<Rational> random_vec(std::size_t n, RandomStream& rng) {
  std::vector<Rational> v(n);
  for (auto& x : v) x = rng.next_coefficient();
  return v;
}

std::vector<Rational> add(std::vector<Rational> a, const std::vector<Rational>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

const OperatorBasis& der_j3o() {
  static const OperatorBasis b = derivation_basis(jordan_carrier(AlgebraName::O));
  return b;
}

}  // namespace

TEST(Derivations, G2Compact) {
  const auto d = derivation_basis(composition_carrier(AlgebraName::O));
  EXPECT_EQ(d.dim(), 14u);
  EXPECT_TRUE(d.closed);
  const auto k = killing_character(d);
  EXPECT_EQ(k.p, 0u);
  EXPECT_EQ(k.q, 14u);
  EXPECT_EQ(k.character, -14);
  EXPECT_EQ(k.label, "G2(-14)");
  EXPECT_TRUE(k.paths_agree);
}

TEST(Derivations, SmallCarriers) {
  EXPECT_EQ(derivation_basis(composition_carrier(AlgebraName::R)).dim(), 0u);
  EXPECT_EQ(derivation_basis(composition_carrier(AlgebraName::C)).dim(), 0u);
  // der(H) = so(3), der(Hs) = sl(2, R).
  EXPECT_EQ(killing_character(derivation_basis(composition_carrier(AlgebraName::H))).character, -3);
  EXPECT_EQ(killing_character(derivation_basis(composition_carrier(AlgebraName::Hs))).character, 1);
  EXPECT_EQ(killing_character(derivation_basis(composition_carrier(AlgebraName::Os))).character, 2);
}

TEST(Derivations, LeibnizRuleOnRandomVectors) {
  const auto j = jordan_carrier(AlgebraName::O);
  RandomStream rng(1);
  for (std::size_t k = 0; k < der_j3o().dim(); k += 7) {
    const auto& d = der_j3o().ops[k];
    const auto x = random_vec(27, rng), y = random_vec(27, rng);
    EXPECT_EQ(apply_op(d, j.multiply(x, y)), add(j.multiply(apply_op(d, x), y), j.multiply(x, apply_op(d, y))));
  }
}

TEST(Derivations, KillUnitAndPreserveTrace) {
  const auto t = jordan_trace_gram(AlgebraName::O);
  std::vector<Rational> one(27);
  one[0] = one[1] = one[2] = 1;
  for (const auto& d : der_j3o().ops) {
    for (const auto& x : apply_op(d, one)) EXPECT_TRUE(x.is_zero());
    for (std::size_t a = 0; a < 27; ++a) {
      for (std::size_t b = 0; b < 27; ++b) {
        Rational s;
        for (std::size_t c = 0; c < 27; ++c) s += d.at(c, a) * t[c][b] + t[a][c] * d.at(c, b);
        ASSERT_TRUE(s.is_zero());
      }
    }
  }
}

TEST(Derivations, F4RealForms) {
  const auto k = killing_character(der_j3o());
  EXPECT_EQ(der_j3o().dim(), 52u);
  EXPECT_EQ(k.character, -52);
  EXPECT_TRUE(k.exact && k.float_run && k.paths_agree);
  const auto split = killing_character(derivation_basis(jordan_carrier(AlgebraName::Os)));
  EXPECT_EQ(split.character, 4);
  EXPECT_TRUE(split.paths_agree);
  const auto lor = killing_character(derivation_basis(jordan_carrier(AlgebraName::O, Metric::lorentzian())));
  EXPECT_EQ(lor.character, -20);
  EXPECT_TRUE(lor.paths_agree);
}

TEST(Derivations, SerialKernelGivesSameBasis) {
  linalg::NullspaceOptions serial;
  serial.kernel = linalg::Kernel::Serial;
  const auto b = derivation_basis(jordan_carrier(AlgebraName::O), serial);
  EXPECT_EQ(b.ops, der_j3o().ops);
  EXPECT_TRUE(der_j3o().solve->certified);
  EXPECT_TRUE(der_j3o().solve->crosscheck_agrees());
}

TEST(Derivations, BioctonionsBothCounts) {
  const auto c = tensor_carrier(TensorAlgebra{});
  const auto all = derivation_basis(c);
  const auto lin = scalar_linear_derivations(c);
  EXPECT_EQ(all.dim(), 28u);
  EXPECT_EQ(lin.dim(), 28u);
  // The realification of a complex simple algebra has character 0.
  EXPECT_EQ(killing_character(lin).character, 0);
  EXPECT_THROW(scalar_linear_derivations(composition_carrier(AlgebraName::O)), UsageError);
}

TEST(Derivations, ComplexifiedAlbertAlgebra) {
  const auto r = complex_linear_derivations(complexified_jordan_carrier(AlgebraName::O));
  EXPECT_EQ(r.nullity(), 104u);
  EXPECT_TRUE(r.certified);
}

TEST(LieStructure, AbelianDiagonalPair) {
  OperatorBasis b;
  RatMatrix x(3), y(3);
  x.at(0, 0) = 1;
  y.at(1, 1) = 2;
  y.at(2, 2) = -1;
  b.ops = {x, y};
  const auto sc = lie_structure(b);
  for (const auto& c : sc.c) EXPECT_TRUE(c.empty());
}

TEST(LieStructure, G2ConstantsAreAntisymmetricAndJacobi) {
  const auto d = derivation_basis(composition_carrier(AlgebraName::O));
  const auto sc = lie_structure(d);
  for (std::size_t a = 0; a < 14; ++a) {
    EXPECT_TRUE(sc.bracket(a, a).empty());
    for (std::size_t b = 0; b < 14; ++b) {
      auto neg = sc.bracket(b, a);
      for (auto& [i, v] : neg) v = -v;
      EXPECT_EQ(sc.bracket(a, b), neg);
    }
  }
  EXPECT_TRUE(jacobi_holds(sc));
  EXPECT_TRUE(jacobi_holds(lie_structure(der_j3o())));
}

TEST(LieStructure, ChartAndEliminationAgree) {
  auto d = derivation_basis(composition_carrier(AlgebraName::O));
  const auto with_chart = lie_structure(d);
  d.chart.clear();
  const auto without = lie_structure(d);
  EXPECT_EQ(with_chart.c, without.c);
}

TEST(LieStructure, TruncatedBasisFailsToClose) {
  auto d = derivation_basis(composition_carrier(AlgebraName::O));
  d.ops.pop_back();
  d.chart.clear();
  EXPECT_THROW(lie_structure(d), ClosureError);
  try {
    lie_structure(d);
  } catch (const ClosureError& e) {
    EXPECT_LT(e.first, e.second);
  }
}

TEST(LieStructure, DependentOperatorsRejected) {
  auto d = derivation_basis(composition_carrier(AlgebraName::O));
  d.ops.push_back(d.ops[0]);
  d.chart.clear();
  EXPECT_THROW(lie_structure(d), UsageError);
}

TEST(ReducedStructure, DimensionFormula) {
  for (const auto& j : {jordan_carrier(AlgebraName::O), jordan_carrier(AlgebraName::Os),
                        jordan_carrier(AlgebraName::O, Metric::lorentzian())}) {
    const auto der = derivation_basis(j);
    const auto s = reduced_structure_basis(j);
    EXPECT_EQ(s.dim(), der.dim() + j.dim - 1) << j.name;
    EXPECT_EQ(s.dim(), 78u);
  }
  EXPECT_EQ(reduced_structure_basis(real_line_carrier()).dim(), 0u);
  EXPECT_THROW(reduced_structure_basis(composition_carrier(AlgebraName::O)), UsageError);
}

TEST(ReducedStructure, CharactersAndCubicInvarianceRoute) {
  const auto s = reduced_structure_basis(jordan_carrier(AlgebraName::O));
  EXPECT_EQ(killing_character(s).character, -26);
  const auto inv = cubic_invariance_basis(jordan_cubic_form(AlgebraName::O));
  EXPECT_EQ(inv.dim(), 78u);
  EXPECT_EQ(killing_character(inv).character, -26);
  const auto split = reduced_structure_basis(jordan_carrier(AlgebraName::Os));
  EXPECT_EQ(killing_character(split).character, 6);
}

TEST(Unitary, CompactE6) {
  const auto u = unitary_real_form(AlgebraName::O, Metric::definite());
  EXPECT_EQ(u.dim(), 78u);
  EXPECT_EQ(u.carrier_dim, 54u);
  const auto k = killing_character(u);
  EXPECT_EQ(k.character, -78);
  EXPECT_TRUE(k.paths_agree);
  // Every operator commutes with the complex structure [[0, -1], [1, 0]].
  for (const auto& x : u.ops) {
    for (std::size_t i = 0; i < 27; ++i) {
      for (std::size_t j = 0; j < 27; ++j) {
        ASSERT_EQ(x.at(i, j), x.at(i + 27, j + 27));
        ASSERT_EQ(x.at(i + 27, j), -x.at(i, j + 27));
      }
    }
  }
}

TEST(Unitary, OtherRealForms) {
  EXPECT_EQ(killing_character(unitary_real_form(AlgebraName::O, Metric::lorentzian())).character, -14);
  EXPECT_EQ(killing_character(unitary_real_form(AlgebraName::Os, Metric::definite())).character, 2);
}

TEST(Unitary, BasisInvariance) {
  const auto f = jordan_cubic_form(AlgebraName::O);
  const auto t = jordan_trace_gram(AlgebraName::O);
  const auto theta = metric_twist(Metric::lorentzian());
  std::vector<std::vector<Rational>> h(27, std::vector<Rational>(27));
  for (std::size_t a = 0; a < 27; ++a)
    for (std::size_t b = 0; b < 27; ++b) h[a][b] = t[a][b] * theta[b][b];
  const auto [f2, h2] = change_basis(f, h, random_basis_change(27, 99));
  const auto u = unitary_real_form(f2, h2);
  EXPECT_EQ(u.dim(), 78u);
  EXPECT_EQ(killing_character(u).character, -14);
}

TEST(Unitary, CubicFormIsDeterminant) {
  const auto f = jordan_cubic_form(AlgebraName::O);
  RandomStream rng(3);
  const TensorAlgebra ta{ScalarKind::Real, AlgebraName::O};
  for (int i = 0; i < 5; ++i) {
    const auto a = HermMatrix3::random(ta, Conjugation::Octonionic, Metric::definite(), rng);
    const auto x = to_real_coords(a);
    Rational s;
    for (std::size_t p = 0; p < 27; ++p)
      for (std::size_t q = 0; q < 27; ++q)
        for (std::size_t r = 0; r < 27; ++r) s += f.at(p, q, r) * x[p] * x[q] * x[r];
    EXPECT_EQ(s, det(a).re);
  }
}

TEST(MatrixModels, ParameterCounts) {
  const TensorAlgebra o{ScalarKind::Real, AlgebraName::O};
  const std::size_t g2 = derivation_basis(composition_carrier(AlgebraName::O)).dim();
  EXPECT_EQ(matrix_model_dimension(MatrixModel::A3, o, Conjugation::Octonionic) + g2, 78u);
  EXPECT_EQ(matrix_model_dimension(MatrixModel::SA3, o, Conjugation::Octonionic) + g2, 52u);
  EXPECT_EQ(matrix_model_dimension(MatrixModel::SA3, TensorAlgebra{}, Conjugation::Full) + g2, 78u);
  EXPECT_EQ(matrix_model_dimension(MatrixModel::A3, TensorAlgebra{}, Conjugation::Octonionic), 128u);
}

TEST(Labels, KnownForms) {
  EXPECT_EQ(real_form_label(52, 4), "F4(4)");
  EXPECT_EQ(real_form_label(78, -14), "E6(-14)");
  EXPECT_EQ(real_form_label(78, 0), "");
}
