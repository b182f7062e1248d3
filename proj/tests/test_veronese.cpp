#include <gtest/gtest.h>

#include "bioct/errors.hpp"
#include "bioct/veronese.hpp"

using namespace bioct;

namespace {

const TensorAlgebra kCxO{};
const PlaneKind kComplex = PlaneKind::complex(kCxO);
const PlaneKind kReal = PlaneKind::real(kCxO);

AffinePoint point(const TensorElement& x, const TensorElement& y) { return {AffinePoint::Case::Point, x, y}; }

}  // namespace

TEST(Veronese, AffineEmbeddingAndInfinity) {
  RandomStream rng(1);
  for (int i = 0; i < 100; ++i) {
    const auto x = TensorElement::random(kCxO, rng), y = TensorElement::random(kCxO, rng);
    EXPECT_TRUE(is_veronese(affine_triple(kComplex, point(x, y))));
    EXPECT_TRUE(is_veronese(affine_triple(kComplex, {AffinePoint::Case::SlopePoint, x, {}})));
  }
  EXPECT_TRUE(is_veronese(affine_triple(kComplex, {AffinePoint::Case::Infinity, {}, {}})));
  EXPECT_THROW(affine_embed(kReal, point(TensorElement::zero(kCxO), TensorElement::zero(kCxO))), UnsupportedOperation);
}

TEST(Veronese, RandomTriplesAreNotVeronese) {
  RandomStream rng(2);
  for (int i = 0; i < 50; ++i) EXPECT_FALSE(is_veronese(random_triple(kComplex, rng)));
}

TEST(Veronese, RealPlaneSamplesSatisfyRealConditions) {
  RandomStream rng(3);
  for (int i = 0; i < 50; ++i) {
    const auto v = random_veronese(kReal, rng);
    EXPECT_TRUE(is_veronese(v));
    for (const auto& l : v.lambda) EXPECT_TRUE(l.im.is_zero());
  }
}

TEST(Veronese, CanonicalRepIsRayInvariant) {
  RandomStream rng(4);
  for (int i = 0; i < 50; ++i) {
    const auto v = random_veronese(kComplex, rng);
    const Scalar mu{rng.next_nonzero_coefficient(), rng.next_coefficient()};
    EXPECT_EQ(canonical_rep(v), canonical_rep(v.scaled(mu)));
  }
  EXPECT_THROW(canonical_rep(VeroneseTriple::zero(kComplex)), UsageError);
}

TEST(Incidence, PointOnLine) {
  RandomStream rng(5);
  for (int i = 0; i < 200; ++i) {
    const auto x = TensorElement::random(kCxO, rng), s = TensorElement::random(kCxO, rng),
               t = TensorElement::random(kCxO, rng);
    const auto p = affine_embed(kComplex, point(x, mul(s, x) + t));
    const auto l = line_embed(kComplex, {AffineLine::Case::Slope, s, t});
    EXPECT_TRUE(incident(p, l));
    // Moving y off the line breaks incidence for a generic shift.
    const auto q = affine_embed(kComplex, point(x, mul(s, x) + t + TensorElement::unit(kCxO, 0)));
    EXPECT_FALSE(incident(q, l));
  }
}

TEST(Incidence, PairingIsNormOfResidual) {
  RandomStream rng(6);
  for (int i = 0; i < 50; ++i) {
    const auto x = TensorElement::random(kCxO, rng), y = TensorElement::random(kCxO, rng),
               s = TensorElement::random(kCxO, rng), t = TensorElement::random(kCxO, rng);
    const auto v = affine_triple(kComplex, point(x, y));
    const auto l = line_embed(kComplex, {AffineLine::Case::Slope, s, t});
    EXPECT_EQ(pairing(v, l.polar, Polarity::Elliptic), norm(y - mul(s, x) - t, NormKind::ComplexN));
    const auto vert = line_embed(kComplex, {AffineLine::Case::Vertical, s, {}});
    EXPECT_EQ(pairing(v, vert.polar, Polarity::Elliptic), norm(x - s, NormKind::ComplexN));
  }
}

TEST(Incidence, VerticalAndInfinityLines) {
  RandomStream rng(7);
  const auto inf_line = line_embed(kComplex, {AffineLine::Case::Infinity, {}, {}});
  for (int i = 0; i < 20; ++i) {
    const auto c = TensorElement::random(kCxO, rng), y = TensorElement::random(kCxO, rng);
    EXPECT_TRUE(incident(affine_embed(kComplex, point(c, y)), line_embed(kComplex, {AffineLine::Case::Vertical, c, {}})));
    EXPECT_TRUE(incident(affine_embed(kComplex, {AffinePoint::Case::SlopePoint, c, {}}), inf_line));
  }
  EXPECT_TRUE(incident(affine_embed(kComplex, {AffinePoint::Case::Infinity, {}, {}}), inf_line));
}

TEST(Polarity, Involutive) {
  RandomStream rng(8);
  for (int i = 0; i < 50; ++i) {
    const auto p = ProjectivePoint::from(random_veronese(kComplex, rng));
    for (auto pol : {Polarity::Elliptic, Polarity::Hyperbolic}) EXPECT_EQ(polar_map(polar_map(p, pol)), p);
  }
}

TEST(Adjacency, TwoPointsTwoLines) {
  const auto d = adjacency_demo(kCxO);
  EXPECT_TRUE(d.verified);
  EXPECT_NE(d.points[0], d.points[1]);
  ASSERT_GE(d.lines.size(), 2u);
  EXPECT_NE(d.lines[0], d.lines[1]);
  for (const auto& l : d.lines) {
    EXPECT_TRUE(incident(d.points[0], l));
    EXPECT_TRUE(incident(d.points[1], l));
  }
  const auto v = d.affine_points[1].x;
  EXPECT_TRUE(norm(v, NormKind::ComplexN).is_zero());
  EXPECT_TRUE(mul(d.annihilator, v).is_zero());
}

TEST(Singularity, CommonAnnihilator) {
  const auto one = TensorElement::unit(kCxO, 0);
  const auto v = one + TensorElement::imaginary_unit(kCxO, 1);
  const auto a = singularity(v, scale({3, 0}, v));
  ASSERT_TRUE(a.has_value());
  EXPECT_TRUE(mul(*a, v).is_zero());
  EXPECT_FALSE(singularity(one, v).has_value());
}

TEST(Tangent, ComplexRankTenEverywhere) {
  const auto s = tangent_survey(kComplex, 20, 9);
  EXPECT_TRUE(s.constant);
  EXPECT_EQ(s.report.rank, 10u);
  EXPECT_EQ(s.report.ambient, 27u);
  EXPECT_EQ(s.report.dim_plane, 16u);
}

TEST(Tangent, RealifiedRankDoubles) {
  RandomStream rng(10);
  for (int i = 0; i < 5; ++i) {
    const auto v = random_veronese(kComplex, rng);
    EXPECT_EQ(realified_jacobian_rank(v), 2 * tangent_rank(v).rank);
  }
}

TEST(Tangent, RealPlaneRankIsConstant) {
  const auto s = tangent_survey(kReal, 20, 11);
  EXPECT_TRUE(s.constant);
  EXPECT_EQ(s.report.ambient, 51u);
  EXPECT_EQ(s.report.dim_plane + s.report.rank + 1, 51u);
}

TEST(Tangent, RejectsNonVeronese) {
  RandomStream rng(12);
  EXPECT_THROW(tangent_rank(random_triple(kComplex, rng)), UsageError);
  const PlaneKind split = PlaneKind::complex(TensorAlgebra{ScalarKind::Split, AlgebraName::O});
  EXPECT_THROW(tangent_rank(random_veronese(split, rng)), UnsupportedOperation);
}
