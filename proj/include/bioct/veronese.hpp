#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bioct/random_stream.hpp"
#include "bioct/tensor.hpp"

namespace bioct {

enum class PlaneVariant {
  ComplexHermitian,  ///< complex lambdas, octonionic conjugation, N, complex rays
  RealHermitian,     ///< real lambdas, full conjugation, real norm, real rays
};

struct PlaneKind {
  PlaneVariant variant = PlaneVariant::ComplexHermitian;
  TensorAlgebra algebra;

  static PlaneKind complex(TensorAlgebra a = {}) { return {PlaneVariant::ComplexHermitian, a}; }
  static PlaneKind real(TensorAlgebra a = {}) { return {PlaneVariant::RealHermitian, a}; }

  Conjugation conjugation() const {
    return variant == PlaneVariant::ComplexHermitian ? Conjugation::Octonionic : Conjugation::Full;
  }
  NormKind norm() const {
    return variant == PlaneVariant::ComplexHermitian ? NormKind::ComplexN : NormKind::RealSq;
  }
  /// "complex" or "real".
  std::string tag() const { return variant == PlaneVariant::ComplexHermitian ? "complex" : "real"; }
  friend bool operator==(const PlaneKind&, const PlaneKind&) = default;
};

/// (b1, b2, b3; l1, l2, l3). For RealHermitian the lambdas have zero imaginary part.
struct VeroneseTriple {
  PlaneKind kind;
  std::array<TensorElement, 3> b;
  std::array<Scalar, 3> lambda;

  static VeroneseTriple zero(PlaneKind kind);
  static VeroneseTriple from_lambdas(PlaneKind kind, Scalar l1, Scalar l2, Scalar l3);
  bool is_zero() const;
  /// Multiplies every coordinate by the scalar mu (a ray-field element for the kind).
  VeroneseTriple scaled(const Scalar& mu) const;
  friend bool operator==(const VeroneseTriple&, const VeroneseTriple&) = default;
};

std::string to_string(const VeroneseTriple& v);

/// Residuals of the six defining conditions, in order
/// l1 s(b1) - b2 b3, l2 s(b2) - b3 b1, l3 s(b3) - b1 b2,
/// n(b1) - l2 l3, n(b2) - l3 l1, n(b3) - l1 l2,
/// where s and n are the kind's conjugation and norm.
struct VeroneseResiduals {
  std::array<TensorElement, 3> products;
  std::array<Scalar, 3> norms;
  bool all_zero() const;
};

VeroneseResiduals veronese_residuals(const VeroneseTriple& v);
bool is_veronese(const VeroneseTriple& v);

/// Ray representative: the first nonzero coordinate in the order
/// l1, l2, l3, then the coefficients of b1, b2, b3 (for real rays the real
/// and imaginary parts count separately) is scaled to 1.
/// Throws UsageError for v == 0 or a non-invertible leading coordinate.
VeroneseTriple canonical_rep(const VeroneseTriple& v);

struct ProjectivePoint {
  VeroneseTriple rep;  ///< canonical
  /// Canonicalizes; throws UsageError unless v is a nonzero Veronese vector.
  static ProjectivePoint from(const VeroneseTriple& v);
  friend bool operator==(const ProjectivePoint&, const ProjectivePoint&) = default;
};

enum class Polarity { Elliptic, Hyperbolic };

struct Line {
  VeroneseTriple polar;
  Polarity polarity = Polarity::Elliptic;
  friend bool operator==(const Line&, const Line&) = default;
};

struct AffinePoint {
  enum class Case { Point, SlopePoint, Infinity } which = Case::Point;
  TensorElement x;
  TensorElement y;
};

struct AffineLine {
  enum class Case { Slope, Vertical, Infinity } which = Case::Slope;
  TensorElement s;  ///< slope, or c for vertical lines
  TensorElement t;
};

/// (x, y) -> (x, y*, y x*; N(y), N(x), 1); (x) -> (0, 0, x; N(x), 1, 0);
/// (inf) -> (0, 0, 0; 1, 0, 0). ComplexHermitian only: throws
/// UnsupportedOperation otherwise, since the real norm does not compose.
ProjectivePoint affine_embed(PlaneKind kind, const AffinePoint& p);
/// Raw (uncanonicalized) image triple of affine_embed.
VeroneseTriple affine_triple(PlaneKind kind, const AffinePoint& p);

/// [s, t] -> (s* t, -t*, -s; 1, N(s), N(t))^perp, [c] -> (-c, 0, 0; 0, 1, N(c))^perp,
/// [inf] -> (0, 0, 0; 0, 0, 1)^perp. Elliptic polarity; ComplexHermitian only.
Line line_embed(PlaneKind kind, const AffineLine& l);

/// sum_nu e_nu (2 <b1_nu, b2_nu> + l1_nu l2_nu) with e = (1, 1, +-1).
///
/// The b-part carries weight 2, the weight of the off-diagonal entries in the
/// trace form of the associated Hermitian matrices. With it, the affine point
/// (x, y) pairs with the line [s, t] to N(y - s x - t).
/// ComplexHermitian: bilinear octonionic product. RealHermitian: real part of
/// the Hermitian product. Throws UsageError on kind mismatch.
Scalar pairing(const VeroneseTriple& v, const VeroneseTriple& w, Polarity polarity);

bool incident(const ProjectivePoint& p, const Line& l);
Line polar_map(const ProjectivePoint& p, Polarity polarity);
ProjectivePoint polar_map(const Line& l);

/// Nonzero a with a v1 = a v2 = 0. Tries the octonionic conjugates of v1 and
/// v2 first, then solves the linear system for the common left annihilator.
std::optional<TensorElement> singularity(const TensorElement& v1, const TensorElement& v2);

struct AdjacencyDemo {
  std::array<ProjectivePoint, 2> points;
  std::array<AffinePoint, 2> affine_points;
  std::vector<Line> lines;
  std::vector<AffineLine> affine_lines;
  TensorElement annihilator;  ///< a with a v = 0 for the difference vector v
  bool verified = false;      ///< distinct points, distinct lines, all incidences hold
};

/// Points (0, 0) and (v, v) with v = 1 + i e1 isotropic; the lines [0, 0] and
/// [1, 0] both pass through both.
AdjacencyDemo adjacency_demo(TensorAlgebra algebra = {});

struct TangentReport {
  PlaneKind kind;
  std::size_t ambient = 0;  ///< 27 (complex) or 51 (real)
  std::size_t rank = 0;
  std::size_t dim_h = 0;
  std::size_t dim_plane = 0;
};

/// Exact rank of the Jacobian of the defining conditions at v (over Q(i) for
/// ComplexHermitian, over Q for RealHermitian). Throws UsageError unless v is
/// a nonzero Veronese vector; ComplexHermitian needs complex scalars.
TangentReport tangent_rank(const VeroneseTriple& v);

/// The same Jacobian for ComplexHermitian computed over Q from its 54 x 54
/// realification (rank is twice the complex rank). Independent route.
std::size_t realified_jacobian_rank(const VeroneseTriple& v);

struct TangentSurvey {
  PlaneKind kind;
  std::vector<std::size_t> ranks;
  bool constant = false;
  TangentReport report;  ///< at the first sample
};

/// Ranks at `samples` seeded generic Veronese points; constant iff all agree.
TangentSurvey tangent_survey(PlaneKind kind, int samples, std::uint64_t seed);

/// Generic Veronese triple: a random affine point (ComplexHermitian), or a
/// real-octonion affine point rotated by unit scalars u1, u2, u3 with
/// u1 u2 u3 = 1 (RealHermitian).
VeroneseTriple random_veronese(PlaneKind kind, RandomStream& rng);
/// Triple with random coordinates (not Veronese with overwhelming likelihood).
VeroneseTriple random_triple(PlaneKind kind, RandomStream& rng);

}  // namespace bioct
