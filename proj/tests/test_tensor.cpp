#include <gtest/gtest.h>

#include "bioct/errors.hpp"
#include "bioct/tensor.hpp"

using namespace bioct;

namespace {

const TensorAlgebra kCxO{ScalarKind::Complex, AlgebraName::O};

TensorElement isotropic(TensorAlgebra a, RandomStream& rng) {
  const auto x = TensorElement::random_real(a, rng);
  const int k = 1 + static_cast<int>(rng.uniform(7));
  return x + mul(TensorElement::imaginary_unit(a, 0), mul(x, TensorElement::unit(a, k)));
}

}  // namespace

TEST(Tensor, ComplexNormComposes) {
  const auto r = composition_check(kCxO, NormKind::ComplexN, 1000, 1);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.evaluated, 1001);
}

TEST(Tensor, RealNormFailsOnCanonicalPair) {
  const auto r = composition_check(kCxO, NormKind::RealSq, 100, 1);
  EXPECT_FALSE(r.passed);
  ASSERT_TRUE(r.witness.has_value());
  EXPECT_EQ(r.witness_lhs.re, Rational(0));
  EXPECT_EQ(r.witness_rhs.re, Rational(4));
  // The random pairs alone also find a failure.
  EXPECT_TRUE(r.first_random_failure.has_value());
  EXPECT_LT(*r.first_random_failure, 100);
}

TEST(Tensor, InvertibleIffNormNonzero) {
  RandomStream rng(2);
  int null = 0;
  for (int i = 0; i < 500; ++i) {
    const auto b = i % 2 ? isotropic(kCxO, rng) : TensorElement::random(kCxO, rng);
    if (b.is_zero()) continue;
    const bool n0 = norm(b, NormKind::ComplexN).is_zero();
    null += n0 ? 1 : 0;
    EXPECT_EQ(left_multiplication_rank(b) == 16, !n0) << to_string(b);
    if (n0) {
      const auto w = zero_divisor_witness(b);
      ASSERT_TRUE(w.has_value());
      EXPECT_TRUE(mul(b, *w).is_zero());
      EXPECT_THROW(inverse(b), std::domain_error);
    } else {
      EXPECT_EQ(mul(b, inverse(b)), TensorElement::scalar(kCxO, {1, 0}));
    }
  }
  EXPECT_GE(null, 250);
}

TEST(Tensor, IdentitySuites) {
  for (auto s : {ScalarKind::Complex, ScalarKind::Split}) {
    for (auto o : {AlgebraName::O, AlgebraName::Os}) {
      const TensorAlgebra a{s, o};
      const auto r = tensor_identity_suite(a, 500, 4);
      EXPECT_TRUE(r.all_passed()) << a.name();
    }
  }
}

TEST(Tensor, ConjugationsAreInvolutions) {
  RandomStream rng(8);
  for (int i = 0; i < 100; ++i) {
    const auto a = TensorElement::random(kCxO, rng), b = TensorElement::random(kCxO, rng);
    for (auto c : {Conjugation::Octonionic, Conjugation::Full}) {
      EXPECT_EQ(conjugate(conjugate(a, c), c), a);
      EXPECT_EQ(conjugate(mul(a, b), c), mul(conjugate(b, c), conjugate(a, c)));
    }
    // b b* is a scalar; b b-bar* in general is not.
    EXPECT_TRUE(mul(a, conjugate(a, Conjugation::Octonionic)).is_scalar());
  }
  const auto w = TensorElement::scalar(kCxO, {1, 0}) + TensorElement::imaginary_unit(kCxO, 1);
  EXPECT_FALSE(mul(w, conjugate(w, Conjugation::Full)).is_scalar());
}

TEST(Tensor, ParseNames) {
  EXPECT_EQ(TensorAlgebra::parse("CsxOs"), (TensorAlgebra{ScalarKind::Split, AlgebraName::Os}));
  EXPECT_EQ(TensorAlgebra::parse("O"), (TensorAlgebra{ScalarKind::Real, AlgebraName::O}));
  EXPECT_THROW(TensorAlgebra::parse("CxH"), UsageError);
  EXPECT_THROW(mul(TensorElement::zero(kCxO), TensorElement::zero(TensorAlgebra{ScalarKind::Split, AlgebraName::O})),
               UsageError);
}
