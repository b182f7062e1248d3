#include "bioct/veronese.hpp"

#include <sstream>

#include "bioct/errors.hpp"
#include "bioct/linalg/complex_rational.hpp"
#include "bioct/linalg/field_rref.hpp"

namespace bioct {

namespace {

bool is_complex_plane(const PlaneKind& k) { return k.variant == PlaneVariant::ComplexHermitian; }

std::size_t b_real_dim(const PlaneKind& k) { return k.algebra.scalar == ScalarKind::Real ? 8 : 16; }

void require_real_lambdas(const VeroneseTriple& v) {
  if (is_complex_plane(v.kind)) return;
  for (const auto& l : v.lambda) {
    if (!l.is_real()) throw UsageError("real Veronese triples need real lambdas");
  }
}

}  // namespace

VeroneseTriple VeroneseTriple::zero(PlaneKind kind) {
  const TensorElement z = TensorElement::zero(kind.algebra);
  return VeroneseTriple{kind, {z, z, z}, {}};
}

VeroneseTriple VeroneseTriple::from_lambdas(PlaneKind kind, Scalar l1, Scalar l2, Scalar l3) {
  VeroneseTriple v = zero(kind);
  v.lambda = {std::move(l1), std::move(l2), std::move(l3)};
  return v;
}

bool VeroneseTriple::is_zero() const {
  for (const auto& l : lambda) {
    if (!l.is_zero()) return false;
  }
  for (const auto& x : b) {
    if (!x.is_zero()) return false;
  }
  return true;
}

VeroneseTriple VeroneseTriple::scaled(const Scalar& mu) const {
  if (!is_complex_plane(kind) && !mu.is_real()) {
    throw UsageError("real Veronese rays only admit real multiples");
  }
  VeroneseTriple r = *this;
  for (auto& x : r.b) x = scale(mu, x);
  for (auto& l : r.lambda) l = mul(kind.algebra.scalar, mu, l);
  return r;
}

std::string to_string(const VeroneseTriple& v) {
  std::ostringstream os;
  os << '(' << to_string(v.b[0]) << ", " << to_string(v.b[1]) << ", " << to_string(v.b[2]) << "; "
     << to_string(v.lambda[0]) << ", " << to_string(v.lambda[1]) << ", " << to_string(v.lambda[2])
     << ')';
  return os.str();
}

bool VeroneseResiduals::all_zero() const {
  for (const auto& p : products) {
    if (!p.is_zero()) return false;
  }
  for (const auto& n : norms) {
    if (!n.is_zero()) return false;
  }
  return true;
}

VeroneseResiduals veronese_residuals(const VeroneseTriple& v) {
  require_real_lambdas(v);
  const ScalarKind sk = v.kind.algebra.scalar;
  const Conjugation c = v.kind.conjugation();
  const NormKind nk = v.kind.norm();
  VeroneseResiduals r;
  for (int nu = 0; nu < 3; ++nu) {
    const auto i = static_cast<std::size_t>(nu);
    const auto j = static_cast<std::size_t>((nu + 1) % 3);
    const auto k = static_cast<std::size_t>((nu + 2) % 3);
    r.products[i] = scale(v.lambda[i], conjugate(v.b[i], c)) - mul(v.b[j], v.b[k]);
    r.norms[i] = norm(v.b[i], nk) - mul(sk, v.lambda[j], v.lambda[k]);
  }
  return r;
}

bool is_veronese(const VeroneseTriple& v) { return veronese_residuals(v).all_zero(); }

VeroneseTriple canonical_rep(const VeroneseTriple& v) {
  if (v.is_zero()) throw UsageError("canonical_rep of the zero triple");
  const ScalarKind sk = v.kind.algebra.scalar;
  if (is_complex_plane(v.kind)) {
    const Scalar* lead = nullptr;
    for (const auto& l : v.lambda) {
      if (!lead && !l.is_zero()) lead = &l;
    }
    for (const auto& x : v.b) {
      for (const auto& z : x.z) {
        if (!lead && !z.is_zero()) lead = &z;
      }
    }
    if (!is_invertible(sk, *lead)) {
      throw UsageError("leading coordinate is a zero divisor of the scalar ring");
    }
    return v.scaled(inverse(sk, *lead));
  }
  const Rational* lead = nullptr;
  for (const auto& l : v.lambda) {
    if (!lead && !l.re.is_zero()) lead = &l.re;
  }
  for (const auto& x : v.b) {
    for (const auto& z : x.z) {
      if (!lead && !z.re.is_zero()) lead = &z.re;
      if (!lead && !z.im.is_zero()) lead = &z.im;
    }
  }
  return v.scaled(Scalar(Rational(1) / *lead));
}

ProjectivePoint ProjectivePoint::from(const VeroneseTriple& v) {
  if (v.is_zero() || !is_veronese(v)) throw UsageError("points need a nonzero Veronese triple");
  return ProjectivePoint{canonical_rep(v)};
}

namespace {

void require_affine(const PlaneKind& kind) {
  if (!is_complex_plane(kind)) {
    throw UnsupportedOperation(
        "the real-norm plane has no affine chart: the real norm is not multiplicative, so the "
        "affine map does not land in Veronese vectors");
  }
}

}  // namespace

VeroneseTriple affine_triple(PlaneKind kind, const AffinePoint& p) {
  require_affine(kind);
  const TensorAlgebra a = kind.algebra;
  const TensorElement z = TensorElement::zero(a);
  const auto oct = Conjugation::Octonionic;
  switch (p.which) {
    case AffinePoint::Case::Point:
      return VeroneseTriple{kind,
                            {p.x, conjugate(p.y, oct), mul(p.y, conjugate(p.x, oct))},
                            {norm(p.y, NormKind::ComplexN), norm(p.x, NormKind::ComplexN), Scalar(1)}};
    case AffinePoint::Case::SlopePoint:
      return VeroneseTriple{kind, {z, z, p.x}, {norm(p.x, NormKind::ComplexN), Scalar(1), Scalar()}};
    case AffinePoint::Case::Infinity:
      return VeroneseTriple::from_lambdas(kind, 1, 0, 0);
  }
  throw UsageError("unknown affine point case");
}

ProjectivePoint affine_embed(PlaneKind kind, const AffinePoint& p) {
  return ProjectivePoint{canonical_rep(affine_triple(kind, p))};
}

Line line_embed(PlaneKind kind, const AffineLine& l) {
  require_affine(kind);
  const TensorAlgebra a = kind.algebra;
  const TensorElement z = TensorElement::zero(a);
  const auto oct = Conjugation::Octonionic;
  switch (l.which) {
    case AffineLine::Case::Slope:
      return Line{VeroneseTriple{kind,
                                 {mul(conjugate(l.s, oct), l.t), -conjugate(l.t, oct), -l.s},
                                 {Scalar(1), norm(l.s, NormKind::ComplexN),
                                  norm(l.t, NormKind::ComplexN)}},
                  Polarity::Elliptic};
    case AffineLine::Case::Vertical:
      return Line{VeroneseTriple{kind, {-l.s, z, z}, {Scalar(), Scalar(1), norm(l.s, NormKind::ComplexN)}},
                  Polarity::Elliptic};
    case AffineLine::Case::Infinity:
      return Line{VeroneseTriple::from_lambdas(kind, 0, 0, 1), Polarity::Elliptic};
  }
  throw UsageError("unknown affine line case");
}

Scalar pairing(const VeroneseTriple& v, const VeroneseTriple& w, Polarity polarity) {
  if (!(v.kind == w.kind)) throw UsageError("pairing of triples from different planes");
  const ScalarKind sk = v.kind.algebra.scalar;
  Scalar s;
  for (std::size_t nu = 0; nu < 3; ++nu) {
    Scalar term;
    if (is_complex_plane(v.kind)) {
      term = inner(v.b[nu], w.b[nu], InnerKind::OctonionicBilinear);
    } else {
      term = Scalar(inner(v.b[nu], w.b[nu], InnerKind::HermitianSesquilinear).re);
    }
    term = term + term + mul(sk, v.lambda[nu], w.lambda[nu]);
    s = (nu == 2 && polarity == Polarity::Hyperbolic) ? s - term : s + term;
  }
  return s;
}

bool incident(const ProjectivePoint& p, const Line& l) {
  return pairing(p.rep, l.polar, l.polarity).is_zero();
}

Line polar_map(const ProjectivePoint& p, Polarity polarity) { return Line{p.rep, polarity}; }

ProjectivePoint polar_map(const Line& l) { return ProjectivePoint{canonical_rep(l.polar)}; }

std::optional<TensorElement> singularity(const TensorElement& v1, const TensorElement& v2) {
  if (!(v1.algebra == v2.algebra)) throw UsageError("singularity of elements from different algebras");
  const TensorAlgebra alg = v1.algebra;
  for (const TensorElement* v : {&v1, &v2}) {
    const TensorElement a = conjugate(*v, Conjugation::Octonionic);
    if (!a.is_zero() && mul(a, v1).is_zero() && mul(a, v2).is_zero()) return a;
  }
  // a -> (a v1, a v2) is real-linear; its kernel is the common left annihilator.
  const std::size_t nin = alg.scalar == ScalarKind::Real ? 8 : 16;
  std::vector<TensorElement> basis;
  for (int k = 0; k < 8; ++k) basis.push_back(TensorElement::unit(alg, k));
  if (nin == 16) {
    for (int k = 0; k < 8; ++k) basis.push_back(TensorElement::imaginary_unit(alg, k));
  }
  std::vector<std::vector<Rational>> m(32, std::vector<Rational>(nin));
  for (std::size_t c = 0; c < nin; ++c) {
    const auto p1 = mul(basis[c], v1).real_coords();
    const auto p2 = mul(basis[c], v2).real_coords();
    for (std::size_t r = 0; r < 16; ++r) {
      m[r][c] = p1[r];
      m[r + 16][c] = p2[r];
    }
  }
  const auto ker = linalg::nullspace(std::move(m), nin);
  if (ker.empty()) return std::nullopt;
  TensorElement a = TensorElement::zero(alg);
  for (std::size_t c = 0; c < nin; ++c) {
    if (!ker[0][c].is_zero()) a = a + scale(Scalar(ker[0][c]), basis[c]);
  }
  return a;
}

AdjacencyDemo adjacency_demo(TensorAlgebra algebra) {
  if (algebra.scalar != ScalarKind::Complex) {
    throw UsageError("the adjacency demonstration uses the isotropic 1 + i e1 and needs complex scalars");
  }
  const PlaneKind kind = PlaneKind::complex(algebra);
  const TensorElement zero = TensorElement::zero(algebra);
  const TensorElement one = TensorElement::unit(algebra, 0);
  const TensorElement v = one + TensorElement::imaginary_unit(algebra, 1);

  AdjacencyDemo d;
  d.affine_points = {AffinePoint{AffinePoint::Case::Point, zero, zero},
                     AffinePoint{AffinePoint::Case::Point, v, v}};
  d.affine_lines = {AffineLine{AffineLine::Case::Slope, zero, zero},
                    AffineLine{AffineLine::Case::Slope, one, zero}};
  for (std::size_t i = 0; i < 2; ++i) d.points[i] = affine_embed(kind, d.affine_points[i]);
  for (const auto& l : d.affine_lines) d.lines.push_back(line_embed(kind, l));
  d.annihilator = singularity(v, v).value_or(zero);

  bool ok = !(d.points[0] == d.points[1]) &&
            !(canonical_rep(d.lines[0].polar) == canonical_rep(d.lines[1].polar)) &&
            !d.annihilator.is_zero() && mul(d.annihilator, v).is_zero();
  for (const auto& p : d.points) {
    for (const auto& l : d.lines) ok = ok && incident(p, l);
  }
  d.verified = ok;
  return d;
}

namespace {

// Coordinates of V as a flat vector: lambdas first, then b1, b2, b3.
// Complex plane: 27 entries of the scalar ring. Real plane: 3 + 3 * b_real_dim reals.
std::vector<Scalar> complex_coords(const VeroneseTriple& v) {
  std::vector<Scalar> c(v.lambda.begin(), v.lambda.end());
  for (const auto& x : v.b) c.insert(c.end(), x.z.begin(), x.z.end());
  return c;
}

VeroneseTriple from_complex_coords(PlaneKind kind, const std::vector<Scalar>& c) {
  VeroneseTriple v = VeroneseTriple::zero(kind);
  for (std::size_t i = 0; i < 3; ++i) v.lambda[i] = c[i];
  for (std::size_t nu = 0; nu < 3; ++nu) {
    for (std::size_t k = 0; k < 8; ++k) v.b[nu].z[k] = c[3 + 8 * nu + k];
  }
  return v;
}

std::vector<Scalar> complex_values(const VeroneseTriple& v) {
  const auto r = veronese_residuals(v);
  std::vector<Scalar> out;
  for (const auto& p : r.products) out.insert(out.end(), p.z.begin(), p.z.end());
  out.insert(out.end(), r.norms.begin(), r.norms.end());
  return out;
}

std::vector<Rational> real_coords(const VeroneseTriple& v) {
  const std::size_t bd = b_real_dim(v.kind);
  std::vector<Rational> c;
  for (const auto& l : v.lambda) c.push_back(l.re);
  for (const auto& x : v.b) {
    const auto rc = x.real_coords();
    c.insert(c.end(), rc.begin(), rc.begin() + static_cast<std::ptrdiff_t>(bd));
  }
  return c;
}

VeroneseTriple from_real_coords(PlaneKind kind, const std::vector<Rational>& c) {
  const std::size_t bd = b_real_dim(kind);
  VeroneseTriple v = VeroneseTriple::zero(kind);
  for (std::size_t i = 0; i < 3; ++i) v.lambda[i] = Scalar(c[i]);
  for (std::size_t nu = 0; nu < 3; ++nu) {
    std::array<Rational, 16> rc;
    for (std::size_t k = 0; k < bd; ++k) rc[k] = c[3 + bd * nu + k];
    v.b[nu] = TensorElement::from_real_coords(kind.algebra, rc);
  }
  return v;
}

std::vector<Rational> real_values(const VeroneseTriple& v) {
  const std::size_t bd = b_real_dim(v.kind);
  const auto r = veronese_residuals(v);
  std::vector<Rational> out;
  for (const auto& p : r.products) {
    const auto rc = p.real_coords();
    out.insert(out.end(), rc.begin(), rc.begin() + static_cast<std::ptrdiff_t>(bd));
  }
  for (const auto& n : r.norms) out.push_back(n.re);
  return out;
}

void require_tangent_input(const VeroneseTriple& v) {
  if (v.is_zero()) throw UsageError("tangent_rank at the cone vertex (zero triple) is not generic");
  if (!is_veronese(v)) throw UsageError("tangent_rank needs a Veronese triple");
}

}  // namespace

TangentReport tangent_rank(const VeroneseTriple& v) {
  require_tangent_input(v);
  TangentReport rep;
  rep.kind = v.kind;
  // Every defining condition F is homogeneous quadratic, so the Jacobian
  // column along d is F(v + d) - F(v) - F(d).
  if (is_complex_plane(v.kind)) {
    if (v.kind.algebra.scalar == ScalarKind::Split) {
      throw UnsupportedOperation("complex Jacobian rank needs a field of scalars; C_s is not one");
    }
    const auto base = complex_coords(v);
    const auto f0 = complex_values(v);
    const std::size_t n = base.size();
    std::vector<std::vector<ComplexRational>> jac(f0.size(), std::vector<ComplexRational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Scalar> d(n);
      d[j] = Scalar(1);
      auto shifted = base;
      shifted[j] = shifted[j] + Scalar(1);
      const auto f1 = complex_values(from_complex_coords(v.kind, shifted));
      const auto fd = complex_values(from_complex_coords(v.kind, d));
      for (std::size_t i = 0; i < f0.size(); ++i) {
        const Scalar e = f1[i] - f0[i] - fd[i];
        jac[i][j] = ComplexRational(e.re, e.im);
      }
    }
    rep.ambient = n;
    rep.rank = linalg::rank(std::move(jac), n);
  } else {
    const auto base = real_coords(v);
    const auto f0 = real_values(v);
    const std::size_t n = base.size();
    std::vector<std::vector<Rational>> jac(f0.size(), std::vector<Rational>(n));
    for (std::size_t j = 0; j < n; ++j) {
      std::vector<Rational> d(n);
      d[j] = Rational(1);
      auto shifted = base;
      shifted[j] += Rational(1);
      const auto f1 = real_values(from_real_coords(v.kind, shifted));
      const auto fd = real_values(from_real_coords(v.kind, d));
      for (std::size_t i = 0; i < f0.size(); ++i) jac[i][j] = f1[i] - f0[i] - fd[i];
    }
    rep.ambient = n;
    rep.rank = linalg::rank(std::move(jac), n);
  }
  rep.dim_h = rep.ambient - rep.rank;
  rep.dim_plane = rep.dim_h - 1;
  return rep;
}

std::size_t realified_jacobian_rank(const VeroneseTriple& v) {
  require_tangent_input(v);
  if (!is_complex_plane(v.kind) || v.kind.algebra.scalar != ScalarKind::Complex) {
    throw UsageError("realified Jacobian is defined for the complex plane over C");
  }
  const auto base = complex_coords(v);
  const auto f0 = complex_values(v);
  const std::size_t n = base.size();
  std::vector<std::vector<Rational>> jac(2 * f0.size(), std::vector<Rational>(2 * n));
  for (std::size_t j = 0; j < 2 * n; ++j) {
    const Scalar step = j < n ? Scalar(1) : Scalar(0, 1);
    std::vector<Scalar> d(n);
    d[j % n] = step;
    auto shifted = base;
    shifted[j % n] = shifted[j % n] + step;
    const auto f1 = complex_values(from_complex_coords(v.kind, shifted));
    const auto fd = complex_values(from_complex_coords(v.kind, d));
    for (std::size_t i = 0; i < f0.size(); ++i) {
      const Scalar e = f1[i] - f0[i] - fd[i];
      jac[i][j] = e.re;
      jac[i + f0.size()][j] = e.im;
    }
  }
  return linalg::rank(std::move(jac), 2 * n);
}

namespace {

// Point on the unit circle u conj(u) = 1 of the scalar ring, from a rational parameter.
Scalar unit_scalar(ScalarKind sk, const Rational& t) {
  if (sk == ScalarKind::Split) {
    const Rational d = Rational(1) - t * t;
    return Scalar((Rational(1) + t * t) / d, (t + t) / d);
  }
  const Rational d = Rational(1) + t * t;
  return Scalar((Rational(1) - t * t) / d, (t + t) / d);
}

Rational circle_parameter(RandomStream& rng) {
  // Avoid t = 0 (u = 1) and t = +-1 (pole of the split parametrization).
  for (;;) {
    const Rational t = rng.next_nonzero_coefficient();
    if (t != Rational(1) && t != Rational(-1)) return t;
  }
}

}  // namespace

VeroneseTriple random_veronese(PlaneKind kind, RandomStream& rng) {
  const TensorAlgebra a = kind.algebra;
  if (is_complex_plane(kind)) {
    const TensorElement x = TensorElement::random(a, rng);
    const TensorElement y = TensorElement::random(a, rng);
    return affine_triple(kind, AffinePoint{AffinePoint::Case::Point, x, y});
  }
  const TensorElement x = TensorElement::random_real(a, rng);
  const TensorElement y = TensorElement::random_real(a, rng);
  const auto oct = Conjugation::Octonionic;
  VeroneseTriple v{kind,
                   {x, conjugate(y, oct), mul(y, conjugate(x, oct))},
                   {norm(y, NormKind::ComplexN), norm(x, NormKind::ComplexN), Scalar(1)}};
  if (a.scalar == ScalarKind::Real) return v;
  const ScalarKind sk = a.scalar;
  const Scalar u1 = unit_scalar(sk, circle_parameter(rng));
  const Scalar u2 = unit_scalar(sk, circle_parameter(rng));
  const Scalar u3 = conj(mul(sk, u1, u2));
  v.b[0] = scale(u1, v.b[0]);
  v.b[1] = scale(u2, v.b[1]);
  v.b[2] = scale(u3, v.b[2]);
  return v;
}

VeroneseTriple random_triple(PlaneKind kind, RandomStream& rng) {
  VeroneseTriple v = VeroneseTriple::zero(kind);
  for (auto& x : v.b) x = TensorElement::random(kind.algebra, rng);
  for (auto& l : v.lambda) {
    l.re = rng.next_coefficient();
    if (is_complex_plane(kind) && kind.algebra.scalar != ScalarKind::Real) l.im = rng.next_coefficient();
  }
  return v;
}

TangentSurvey tangent_survey(PlaneKind kind, int samples, std::uint64_t seed) {
  if (samples <= 0) throw UsageError("tangent_survey needs samples > 0");
  TangentSurvey s;
  s.kind = kind;
  RandomStream rng(seed);
  for (int i = 0; i < samples; ++i) {
    const TangentReport r = tangent_rank(random_veronese(kind, rng));
    if (i == 0) s.report = r;
    s.ranks.push_back(r.rank);
  }
  s.constant = true;
  for (auto r : s.ranks) s.constant = s.constant && r == s.ranks.front();
  return s;
}

}  // namespace bioct
