#include <gtest/gtest.h>

#include "bioct/linalg/complex_rational.hpp"
#include "bioct/linalg/field_rref.hpp"
#include "bioct/linalg/modular.hpp"
#include "bioct/linalg/nullspace.hpp"
#include "bioct/linalg/signature.hpp"
#include "bioct/random_stream.hpp"

using namespace bioct;
using namespace bioct::linalg;

namespace {

// Sparse random system with a planted kernel: rows are random combinations
// orthogonal to `hidden` vectors, so the nullity is known from below.
LinearSystem random_system(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  RandomStream rng(seed);
  LinearSystem s(cols);
  for (std::size_t r = 0; r < rows; ++r) {
    std::vector<LinearSystem::Entry> e;
    for (int k = 0; k < 4; ++k) e.emplace_back(rng.uniform(cols), rng.next_coefficient());
    s.add_row(std::move(e));
  }
  return s;
}

ModMatrix random_mod(std::size_t r, std::size_t c, const PrimeField& f, std::uint64_t seed) {
  RandomStream rng(seed);
  ModMatrix m(r, c);
  for (auto& x : m.a) x = rng.uniform(4) == 0 ? f.reduce(rng.next_u64() >> 2) : 0;
  return m;
}

}  // namespace

TEST(Modular, Primes) {
  EXPECT_TRUE(is_prime_u64(2147483647ULL));
  EXPECT_FALSE(is_prime_u64(2147483649ULL));
  const auto ps = primes_below(1ULL << 31, 5);
  ASSERT_EQ(ps.size(), 5u);
  for (std::size_t i = 1; i < ps.size(); ++i) EXPECT_GT(ps[i - 1], ps[i]);
  const PrimeField f(ps[0]);
  for (std::uint64_t a : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{12345}, ps[0] - 1}) EXPECT_EQ(f.mul(a, f.inv(a)), 1u);
  EXPECT_THROW(f.inv(0), std::domain_error);
  EXPECT_EQ(f.from_signed(-1), ps[0] - 1);
}

TEST(Modular, ParallelMatchesSerial) {
  const PrimeField f(primes_below(1ULL << 30, 1)[0]);
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    ModMatrix a = random_mod(60, 80, f, seed), b = a;
    const auto pa = rref_serial(a, f);
    const auto pb = rref_parallel(b, f, 4);
    EXPECT_EQ(pa, pb);
    EXPECT_EQ(a.a, b.a);
  }
}

TEST(Nullspace, MatchesRationalReference) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto sys = random_system(30 + 5 * seed, 45, seed);
    const auto ref = rref(sys.dense(), sys.cols());
    const auto res = solve_nullspace(sys);
    EXPECT_TRUE(res.certified);
    EXPECT_TRUE(res.crosscheck_agrees());
    EXPECT_EQ(res.rank, ref.rank());
    const auto ref_basis = nullspace(ref);
    EXPECT_EQ(res.basis, ref_basis);
  }
}

TEST(Nullspace, SerialKernelAgrees) {
  const auto sys = random_system(200, 120, 17);
  NullspaceOptions a, b;
  b.kernel = Kernel::Serial;
  EXPECT_EQ(solve_nullspace(sys, a).basis, solve_nullspace(sys, b).basis);
}

TEST(Nullspace, LargeDenominatorsNeedSeveralPrimes) {
  LinearSystem s(3);
  const Rational big(mpz_class("123456789012345678901"), mpz_class("98765432109876543"));
  s.add_row({{0, Rational(1)}, {1, -big}});
  s.add_row({{1, Rational(1)}, {2, -big}});
  const auto res = solve_nullspace(s);
  ASSERT_EQ(res.nullity(), 1u);
  EXPECT_EQ(res.basis[0][2], Rational(1));
  EXPECT_EQ(res.basis[0][0], big * big);
  EXPECT_GT(res.primes_used, 1u);
}

TEST(Nullspace, UntouchedColumnsAreFree) {
  LinearSystem s(4);
  s.add_row({{1, Rational(2)}});
  s.add_row({});
  EXPECT_EQ(s.rows(), 1u);
  const auto res = solve_nullspace(s);
  EXPECT_EQ(res.nullity(), 3u);
  EXPECT_EQ(res.free_cols, (std::vector<std::size_t>{0, 2, 3}));
}

TEST(Nullspace, RationalReconstruction) {
  const mpz_class m("1000000000000000000000007");
  Rational out;
  const mpz_class u = (mpz_class(3) * [&] {
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), mpz_class(7).get_mpz_t(), m.get_mpz_t());
    return inv;
  }()) % m;
  ASSERT_TRUE(rational_reconstruct(u, m, out));
  EXPECT_EQ(out, Rational(3, 7));
}

TEST(FieldRref, ComplexRationalRank) {
  using C = ComplexRational;
  // Rows (1, i) and (i, -1) are dependent over Q(i).
  std::vector<std::vector<C>> m = {{C{1, 0}, C{0, 1}}, {C{0, 1}, C{-1, 0}}};
  EXPECT_EQ(rank(m, 2), 1u);
  m[1][1] = C{1, 0};
  EXPECT_EQ(rank(m, 2), 2u);
}

TEST(Signature, ExactMatchesFloat) {
  RandomStream rng(3);
  for (int t = 0; t < 10; ++t) {
    const std::size_t n = 12;
    // Congruent to diag(1,..,1,-1,..,-1,0,..) by a random unimodular matrix.
    std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
    for (std::size_t i = 0; i < n; ++i) {
      s[i][i] = 1;
      for (std::size_t j = i + 1; j < n; ++j) s[i][j] = rng.uniform_int(-2, 2);
    }
    const std::size_t p = 1 + rng.uniform(6), q = rng.uniform(n - p);
    std::vector<Rational> d(n);
    for (std::size_t i = 0; i < n; ++i) d[i] = i < p ? 1 : (i < p + q ? -1 : 0);
    std::vector<std::vector<Rational>> m(n, std::vector<Rational>(n));
    std::vector<std::vector<double>> f(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) m[i][j] += s[k][i] * d[k] * s[k][j];
        f[i][j] = m[i][j].to_double();
      }
    }
    const Inertia want{p, q, n - p - q};
    EXPECT_EQ(exact_inertia(m), want);
    EXPECT_EQ(float_inertia(f), want);
  }
}

TEST(Signature, ZeroDiagonalNeedsPairing) {
  // [[0, 1], [1, 0]] has one positive and one negative direction.
  const Inertia in = exact_inertia({{Rational(0), Rational(1)}, {Rational(1), Rational(0)}});
  EXPECT_EQ(in, (Inertia{1, 1, 0}));
}
