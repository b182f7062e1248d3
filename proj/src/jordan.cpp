#include "bioct/jordan.hpp"

#include <sstream>

#include "bioct/errors.hpp"

namespace bioct {

std::string Metric::tag() const {
  std::string s;
  for (int e : signs) s += e > 0 ? '+' : '-';
  return s;
}

bool is_central(TensorAlgebra algebra, Conjugation conj) {
  return conj == Conjugation::Octonionic || algebra.scalar == ScalarKind::Real;
}

namespace {

TensorElement sigma(const TensorElement& x, Conjugation c) { return conjugate(x, c); }

TensorElement signed_elem(int s, const TensorElement& x) { return s > 0 ? x : -x; }

void require_same(const HermMatrix3& a, const HermMatrix3& b) {
  if (!(a.algebra == b.algebra) || a.conj != b.conj || !(a.metric == b.metric)) {
    throw UsageError("Hermitian matrices over different carriers");
  }
}

void require_central(const HermMatrix3& a, const char* op) {
  if (!a.central()) {
    throw UnsupportedOperation(std::string(op) +
                               " needs a central involution; N(b) is not a scalar under the full "
                               "conjugation of " + a.algebra.name());
  }
}

// Positions of b_nu: b1 at (1,2), b2 at (2,0), b3 at (0,1) (zero-based).
constexpr int kRow[3] = {1, 2, 0};
constexpr int kCol[3] = {2, 0, 1};

}  // namespace

HermMatrix3 HermMatrix3::zero(TensorAlgebra a, Conjugation c, Metric m) {
  const TensorElement z = TensorElement::zero(a);
  return HermMatrix3{a, c, m, {z, z, z}, {z, z, z}};
}

HermMatrix3 HermMatrix3::identity(TensorAlgebra a, Conjugation c, Metric m) {
  return diagonal(a, 1, 1, 1, c, m);
}

HermMatrix3 HermMatrix3::diagonal(TensorAlgebra a, Scalar l1, Scalar l2, Scalar l3, Conjugation c,
                                  Metric m) {
  HermMatrix3 h = zero(a, c, m);
  h.diag = {TensorElement::scalar(a, std::move(l1)), TensorElement::scalar(a, std::move(l2)),
            TensorElement::scalar(a, std::move(l3))};
  return h;
}

HermMatrix3 HermMatrix3::random(TensorAlgebra a, Conjugation c, Metric m, RandomStream& rng) {
  HermMatrix3 h = zero(a, c, m);
  const bool complex_scalars = a.scalar != ScalarKind::Real;
  for (auto& d : h.diag) {
    d.z[0].re = rng.next_coefficient();
    if (complex_scalars && c == Conjugation::Octonionic) d.z[0].im = rng.next_coefficient();
    if (complex_scalars && c == Conjugation::Full) {
      for (std::size_t k = 1; k < 8; ++k) d.z[k].im = rng.next_coefficient();
    }
  }
  for (auto& x : h.b) x = TensorElement::random(a, rng);
  return h;
}

Matrix3 HermMatrix3::full() const {
  const TensorElement z = TensorElement::zero(algebra);
  Matrix3 m{{{z, z, z}, {z, z, z}, {z, z, z}}};
  for (int i = 0; i < 3; ++i) m[i][i] = diag[static_cast<std::size_t>(i)];
  for (int nu = 0; nu < 3; ++nu) {
    const int r = kRow[nu], c = kCol[nu];
    const auto& x = b[static_cast<std::size_t>(nu)];
    m[r][c] = x;
    m[c][r] = signed_elem(metric.signs[r] * metric.signs[c], sigma(x, conj));
  }
  return m;
}

bool is_hermitian(const Matrix3& m, Conjugation c, const Metric& metric) {
  for (int i = 0; i < 3; ++i) {
    for (int j = i; j < 3; ++j) {
      if (!(m[j][i] == signed_elem(metric.signs[i] * metric.signs[j], sigma(m[i][j], c)))) return false;
    }
  }
  return true;
}

HermMatrix3 HermMatrix3::from_full(const Matrix3& m, TensorAlgebra a, Conjugation c, Metric metric) {
  if (!is_hermitian(m, c, metric)) throw UsageError("matrix is not Hermitian for this conjugation/metric");
  HermMatrix3 h = zero(a, c, metric);
  for (int i = 0; i < 3; ++i) h.diag[static_cast<std::size_t>(i)] = m[i][i];
  for (int nu = 0; nu < 3; ++nu) h.b[static_cast<std::size_t>(nu)] = m[kRow[nu]][kCol[nu]];
  return h;
}

Scalar HermMatrix3::lambda(int nu) const {
  const auto& d = diag.at(static_cast<std::size_t>(nu));
  if (!d.is_scalar()) throw UnsupportedOperation("diagonal entry is not a scalar");
  return d.z[0];
}

bool HermMatrix3::is_zero() const {
  for (int i = 0; i < 3; ++i) {
    if (!diag[static_cast<std::size_t>(i)].is_zero() || !b[static_cast<std::size_t>(i)].is_zero()) return false;
  }
  return true;
}

HermMatrix3 operator+(const HermMatrix3& a, const HermMatrix3& b) {
  require_same(a, b);
  HermMatrix3 r = a;
  for (std::size_t i = 0; i < 3; ++i) {
    r.diag[i] = r.diag[i] + b.diag[i];
    r.b[i] = r.b[i] + b.b[i];
  }
  return r;
}

HermMatrix3 operator-(const HermMatrix3& a, const HermMatrix3& b) {
  require_same(a, b);
  HermMatrix3 r = a;
  for (std::size_t i = 0; i < 3; ++i) {
    r.diag[i] = r.diag[i] - b.diag[i];
    r.b[i] = r.b[i] - b.b[i];
  }
  return r;
}

HermMatrix3 scale(const Scalar& s, const HermMatrix3& a) {
  HermMatrix3 r = a;
  for (std::size_t i = 0; i < 3; ++i) {
    r.diag[i] = scale(s, r.diag[i]);
    r.b[i] = scale(s, r.b[i]);
  }
  return r;
}

std::string to_string(const HermMatrix3& a) {
  std::ostringstream os;
  os << "H3[" << a.algebra.name() << ", " << (a.conj == Conjugation::Octonionic ? "oct" : "full")
     << ", " << a.metric.tag() << "](";
  for (std::size_t i = 0; i < 3; ++i) os << to_string(a.diag[i]) << "; ";
  for (std::size_t i = 0; i < 3; ++i) os << (i ? "; " : "") << to_string(a.b[i]);
  os << ')';
  return os.str();
}

std::string pretty(const HermMatrix3& a) {
  const Matrix3 m = a.full();
  std::ostringstream os;
  for (int i = 0; i < 3; ++i) {
    os << "| ";
    for (int j = 0; j < 3; ++j) os << (j ? "  " : "") << to_string(m[i][j]);
    os << " |\n";
  }
  return os.str();
}

Matrix3 matmul(const Matrix3& a, const Matrix3& b) {
  Matrix3 r;
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) {
      TensorElement s = mul(a[i][0], b[0][j]);
      s = s + mul(a[i][1], b[1][j]);
      s = s + mul(a[i][2], b[2][j]);
      r[i][j] = std::move(s);
    }
  }
  return r;
}

HermMatrix3 from_veronese(const VeroneseTriple& v) {
  HermMatrix3 h = HermMatrix3::zero(v.kind.algebra, v.kind.conjugation(), Metric::definite());
  for (std::size_t i = 0; i < 3; ++i) {
    h.diag[i] = TensorElement::scalar(v.kind.algebra, v.lambda[i]);
    h.b[i] = v.b[i];
  }
  return h;
}

HermMatrix3 jordan_mul(const HermMatrix3& a, const HermMatrix3& b) {
  require_same(a, b);
  const Matrix3 fa = a.full();
  const Matrix3 fb = b.full();
  const Matrix3 ab = matmul(fa, fb);
  const Matrix3 ba = matmul(fb, fa);
  Matrix3 s;
  const Scalar half(Rational(1, 2));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) s[i][j] = scale(half, ab[i][j] + ba[i][j]);
  }
  return HermMatrix3::from_full(s, a.algebra, a.conj, a.metric);
}

TensorElement trace_element(const HermMatrix3& a) { return a.diag[0] + a.diag[1] + a.diag[2]; }

Scalar trace(const HermMatrix3& a) {
  const TensorElement t = trace_element(a);
  if (!t.is_scalar()) throw UnsupportedOperation("trace is not a scalar for this conjugation");
  return t.z[0];
}

Scalar det(const HermMatrix3& a) {
  require_central(a, "det");
  const ScalarKind sk = a.algebra.scalar;
  const auto& e = a.metric.signs;
  const Scalar l1 = a.lambda(0), l2 = a.lambda(1), l3 = a.lambda(2);
  auto m = [sk](const Scalar& x, const Scalar& y) { return mul(sk, x, y); };
  auto sgn = [](int s, const Scalar& x) { return s > 0 ? x : -x; };
  Scalar d = m(m(l1, l2), l3);
  d = d - sgn(e[1] * e[2], m(l1, norm(a.b[0], NormKind::ComplexN)));
  d = d - sgn(e[2] * e[0], m(l2, norm(a.b[1], NormKind::ComplexN)));
  d = d - sgn(e[0] * e[1], m(l3, norm(a.b[2], NormKind::ComplexN)));
  const TensorElement t = mul(mul(a.b[0], a.b[1]), a.b[2]);
  const TensorElement two_re = t + sigma(t, a.conj);
  return d + two_re.z[0];
}

HermMatrix3 sharp_polynomial(const HermMatrix3& a) {
  require_central(a, "sharp");
  const ScalarKind sk = a.algebra.scalar;
  const HermMatrix3 a2 = jordan_mul(a, a);
  const Scalar t = trace(a);
  const Scalar t2 = trace(a2);
  const Scalar s = scale(Rational(1, 2), mul(sk, t, t) - t2);
  return a2 - scale(t, a) + scale(s, HermMatrix3::identity(a.algebra, a.conj, a.metric));
}

HermMatrix3 sharp(const HermMatrix3& a) {
  require_central(a, "sharp");
  if (!a.metric.is_definite()) return sharp_polynomial(a);
  const ScalarKind sk = a.algebra.scalar;
  const Scalar l1 = a.lambda(0), l2 = a.lambda(1), l3 = a.lambda(2);
  const auto& b = a.b;
  const Conjugation c = a.conj;
  HermMatrix3 r = HermMatrix3::zero(a.algebra, a.conj, a.metric);
  r.diag[0] = TensorElement::scalar(a.algebra, mul(sk, l2, l3) - norm(b[0], NormKind::ComplexN));
  r.diag[1] = TensorElement::scalar(a.algebra, mul(sk, l1, l3) - norm(b[1], NormKind::ComplexN));
  r.diag[2] = TensorElement::scalar(a.algebra, mul(sk, l1, l2) - norm(b[2], NormKind::ComplexN));
  r.b[0] = mul(sigma(b[2], c), sigma(b[1], c)) - scale(l1, b[0]);
  r.b[1] = mul(sigma(b[0], c), sigma(b[2], c)) - scale(l2, b[1]);
  r.b[2] = mul(sigma(b[1], c), sigma(b[0], c)) - scale(l3, b[2]);
  return r;
}

HermMatrix3 hamilton_cayley_residual(const HermMatrix3& a) {
  require_central(a, "Hamilton-Cayley");
  const ScalarKind sk = a.algebra.scalar;
  const HermMatrix3 a2 = jordan_mul(a, a);
  const Scalar t = trace(a);
  const Scalar s = scale(Rational(1, 2), mul(sk, t, t) - trace(a2));
  return jordan_mul(a, a2) - scale(t, a2) + scale(s, a) -
         scale(det(a), HermMatrix3::identity(a.algebra, a.conj, a.metric));
}

int rank(const HermMatrix3& a) {
  require_central(a, "rank");
  if (a.is_zero()) return 0;
  if (sharp(a).is_zero()) return 1;
  if (det(a).is_zero()) return 2;
  return 3;
}

Scalar ntri(const HermMatrix3& a, const HermMatrix3& b, const HermMatrix3& c) {
  require_central(a, "Ntri");
  const Scalar s = det(a + b + c) - det(a + b) - det(a + c) - det(b + c) + det(a) + det(b) + det(c);
  return scale(Rational(1, 6), s);
}

Scalar trace_form(const HermMatrix3& a, const HermMatrix3& b) {
  require_central(a, "trace form");
  return trace(jordan_mul(a, b));
}

CentralityReport centrality_check(TensorAlgebra algebra, Conjugation conj, int samples,
                                  std::uint64_t seed) {
  if (samples <= 0) throw UsageError("centrality_check needs samples > 0");
  CentralityReport rep;
  rep.algebra = algebra;
  rep.conj = conj;
  RandomStream rng(seed);

  auto probe = [&](const TensorElement& x) {
    ++rep.samples;
    const TensorElement p = mul(x, conjugate(x, conj));
    if (!p.is_scalar() && rep.central) {
      rep.central = false;
      rep.witness = x;
      rep.witness_product = p;
    }
  };
  if (algebra.scalar != ScalarKind::Real) {
    probe(TensorElement::unit(algebra, 0) + TensorElement::imaginary_unit(algebra, 1));
  }
  for (int s = 0; s < samples; ++s) probe(TensorElement::random(algebra, rng));

  const Metric m = Metric::definite();
  bool first = true;
  auto trace_square = [&](const HermMatrix3& a) {
    const Rational v = trace_element(jordan_mul(a, a)).z[0].re;
    if (first || v < rep.min_trace_square) rep.min_trace_square = v;
    first = false;
  };
  const int jordan_samples = std::min(samples, 100);
  for (int s = 0; s < jordan_samples; ++s) {
    const HermMatrix3 a = HermMatrix3::random(algebra, conj, m, rng);
    const HermMatrix3 b = HermMatrix3::random(algebra, conj, m, rng);
    const HermMatrix3 a2 = jordan_mul(a, a);
    ++rep.jordan_samples;
    if (!(jordan_mul(jordan_mul(a2, b), a) == jordan_mul(a2, jordan_mul(b, a)))) rep.jordan_identity = false;
    if (!a.is_zero()) trace_square(a);
  }
  // Basis of the space: diagonal units (and sigma-fixed imaginary diagonals),
  // off-diagonal units and their scalar-imaginary multiples.
  const bool cplx = algebra.scalar != ScalarKind::Real;
  for (int pos = 0; pos < 3; ++pos) {
    const auto p = static_cast<std::size_t>(pos);
    for (int k = 0; k < 8; ++k) {
      HermMatrix3 h = HermMatrix3::zero(algebra, conj, m);
      h.b[p] = TensorElement::unit(algebra, k);
      trace_square(h);
      if (cplx) {
        h.b[p] = TensorElement::imaginary_unit(algebra, k);
        trace_square(h);
        const bool fixed = conj == Conjugation::Full ? k > 0 : k == 0;
        HermMatrix3 d = HermMatrix3::zero(algebra, conj, m);
        d.diag[p] = TensorElement::imaginary_unit(algebra, k);
        if (fixed) trace_square(d);
      }
    }
    HermMatrix3 d = HermMatrix3::zero(algebra, conj, m);
    d.diag[p] = TensorElement::unit(algebra, 0);
    trace_square(d);
  }
  rep.nonpositive_trace_square = rep.min_trace_square.sign() <= 0;
  return rep;
}

std::size_t real_dim(TensorAlgebra a) { return a.scalar == ScalarKind::Real ? 27 : 54; }

std::vector<Rational> to_real_coords(const HermMatrix3& a) {
  if (!a.central()) throw UnsupportedOperation("real coordinates are defined for central carriers");
  const bool cplx = a.algebra.scalar != ScalarKind::Real;
  std::vector<Rational> c;
  for (int i = 0; i < 3; ++i) {
    const Scalar l = a.lambda(i);
    c.push_back(l.re);
    if (cplx) c.push_back(l.im);
  }
  const std::size_t bd = cplx ? 16 : 8;
  for (const auto& x : a.b) {
    const auto rc = x.real_coords();
    c.insert(c.end(), rc.begin(), rc.begin() + static_cast<std::ptrdiff_t>(bd));
  }
  return c;
}

HermMatrix3 from_real_coords(const std::vector<Rational>& c, TensorAlgebra a, Metric m) {
  if (c.size() != real_dim(a)) throw UsageError("wrong number of Jordan coordinates");
  const bool cplx = a.scalar != ScalarKind::Real;
  HermMatrix3 h = HermMatrix3::zero(a, Conjugation::Octonionic, m);
  std::size_t k = 0;
  for (auto& d : h.diag) {
    d.z[0].re = c[k++];
    if (cplx) d.z[0].im = c[k++];
  }
  const std::size_t bd = cplx ? 16 : 8;
  for (auto& x : h.b) {
    std::array<Rational, 16> rc;
    for (std::size_t j = 0; j < bd; ++j) rc[j] = c[k++];
    x = TensorElement::from_real_coords(a, rc);
  }
  return h;
}

}  // namespace bioct
