#include "bioct/linalg/nullspace.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

#include "bioct/linalg/modular.hpp"
#include "bioct/random_stream.hpp"

namespace bioct::linalg {

void LinearSystem::add_row(std::vector<Entry> entries) {
  std::sort(entries.begin(), entries.end(),
            [](const Entry& a, const Entry& b) { return a.first < b.first; });
  std::vector<Entry> merged;
  for (auto& e : entries) {
    if (e.first >= cols_) throw std::out_of_range("LinearSystem column out of range");
    if (!merged.empty() && merged.back().first == e.first) {
      merged.back().second += e.second;
    } else {
      merged.push_back(std::move(e));
    }
  }
  std::erase_if(merged, [](const Entry& e) { return e.second.is_zero(); });
  if (!merged.empty()) rows_.push_back(std::move(merged));
}

std::vector<std::vector<Rational>> LinearSystem::dense() const {
  std::vector<std::vector<Rational>> m(rows_.size(), std::vector<Rational>(cols_));
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    for (const auto& [c, v] : rows_[i]) m[i][c] = v;
  }
  return m;
}

bool rational_reconstruct(const mpz_class& u, const mpz_class& m, Rational& out) {
  mpz_class bound = sqrt(mpz_class(m / 2));
  mpz_class r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  mpz_class t0 = 0, t1 = 1;
  while (r1 > bound) {
    const mpz_class q = r0 / r1;
    mpz_class tmp = r0 - q * r1;
    r0 = r1;
    r1 = tmp;
    tmp = t0 - q * t1;
    t0 = t1;
    t1 = tmp;
  }
  if (t1 == 0 || abs(t1) > bound) return false;
  if (gcd(r1, t1) != 1) return false;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  out = Rational(r1, t1);
  return true;
}

namespace {

constexpr std::size_t kSlack = 16;

struct IntRow {
  std::vector<std::size_t> cols;  // block-local
  std::vector<mpz_class> vals;
};

IntRow integer_row(const std::vector<LinearSystem::Entry>& row,
                   const std::vector<std::size_t>& local) {
  mpz_class l = 1;
  for (const auto& e : row) l = lcm(l, e.second.den());
  IntRow r;
  mpz_class g = 0;
  for (const auto& [c, v] : row) {
    r.cols.push_back(local[c]);
    r.vals.push_back(v.num() * (l / v.den()));
    g = gcd(g, r.vals.back());
  }
  if (g > 1) {
    for (auto& v : r.vals) v /= g;
  }
  return r;
}

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

std::uint64_t mix(std::uint64_t a, std::uint64_t b) {
  RandomStream s(a ^ (b * 0x9e3779b97f4a7c15ULL));
  return s.next_u64();
}

// Row combination matrix mod p: identity when the block is not taller than
// cols + slack, random dense combinations otherwise.
ModMatrix reduced_block(const std::vector<IntRow>& rows, std::size_t n, const PrimeField& f,
                        std::uint64_t seed) {
  std::vector<std::vector<std::uint64_t>> res(rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    res[i].reserve(rows[i].vals.size());
    for (const auto& v : rows[i].vals) res[i].push_back(f.from_mpz(v));
  }
  if (rows.size() <= n + kSlack) {
    ModMatrix m(rows.size(), n);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      for (std::size_t k = 0; k < rows[i].cols.size(); ++k) m.at(i, rows[i].cols[k]) = res[i][k];
    }
    return m;
  }
  const std::size_t target = n + kSlack;
  ModMatrix m(target, n);
  const auto t = static_cast<std::int64_t>(target);
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t k = 0; k < t; ++k) {
    RandomStream rs(mix(seed, static_cast<std::uint64_t>(k)));
    std::uint64_t* out = m.row(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const std::uint64_t r = rs.uniform(f.modulus());
      if (r == 0) continue;
      const auto& cols = rows[i].cols;
      for (std::size_t e = 0; e < cols.size(); ++e) {
        out[cols[e]] = f.reduce(out[cols[e]] + r * res[i][e]);
      }
    }
  }
  return m;
}

std::vector<std::size_t> reduce(ModMatrix& m, const PrimeField& f, const NullspaceOptions& o) {
  return o.kernel == Kernel::Parallel ? rref_parallel(m, f, o.threads) : rref_serial(m, f);
}

struct BlockSolution {
  std::vector<std::size_t> free_cols;           // local
  std::vector<std::vector<Rational>> basis;     // local, length n
  std::size_t rank = 0;
  std::size_t primes = 0;
};

bool verify(const std::vector<IntRow>& rows, const std::vector<Rational>& v) {
  mpz_class l = 1;
  for (const auto& x : v) {
    if (!x.is_zero()) l = lcm(l, x.den());
  }
  std::vector<mpz_class> w(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) w[i] = v[i].num() * (l / v[i].den());
  }
  mpz_class acc;
  for (const auto& r : rows) {
    acc = 0;
    for (std::size_t e = 0; e < r.cols.size(); ++e) {
      const auto& x = w[r.cols[e]];
      if (x != 0) mpz_addmul(acc.get_mpz_t(), r.vals[e].get_mpz_t(), x.get_mpz_t());
    }
    if (acc != 0) return false;
  }
  return true;
}

BlockSolution solve_block(const std::vector<IntRow>& rows, std::size_t n,
                          const std::vector<std::uint64_t>& primes, std::uint64_t seed,
                          const NullspaceOptions& o) {
  std::vector<std::size_t> best_pivots;
  bool have = false;
  std::vector<std::vector<mpz_class>> acc;  // rank x nfree residues
  mpz_class modulus = 1;
  std::size_t used = 0;

  for (const std::uint64_t p : primes) {
    ++used;
    const PrimeField f(p);
    ModMatrix m = reduced_block(rows, n, f, mix(seed, p));
    const auto pivots = reduce(m, f, o);
    if (have) {
      if (pivots.size() < best_pivots.size()) continue;
      if (pivots.size() == best_pivots.size() && pivots != best_pivots) {
        if (!std::lexicographical_compare(pivots.begin(), pivots.end(), best_pivots.begin(),
                                          best_pivots.end())) {
          continue;
        }
        have = false;
      } else if (pivots.size() > best_pivots.size()) {
        have = false;
      }
    }
    std::vector<bool> is_pivot(n, false);
    for (auto c : pivots) is_pivot[c] = true;
    std::vector<std::size_t> free_cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (!is_pivot[c]) free_cols.push_back(c);
    }
    if (!have) {
      best_pivots = pivots;
      acc.assign(pivots.size(), std::vector<mpz_class>(free_cols.size(), 0));
      modulus = 1;
      have = true;
    }
    // CRT: x <- x + M * ((e - x) * M^-1 mod p)
    const std::uint64_t minv = f.inv(f.from_mpz(modulus));
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      for (std::size_t j = 0; j < free_cols.size(); ++j) {
        const std::uint64_t e = m.at(i, free_cols[j]);
        auto& x = acc[i][j];
        const std::uint64_t t = f.mul(f.sub(e, f.from_mpz(x)), minv);
        if (t) x += modulus * t;
      }
    }
    modulus *= p;

    BlockSolution sol;
    sol.rank = pivots.size();
    sol.free_cols = free_cols;
    sol.primes = used;
    bool ok = true;
    for (std::size_t j = 0; j < free_cols.size() && ok; ++j) {
      std::vector<Rational> v(n);
      v[free_cols[j]] = Rational(1);
      for (std::size_t i = 0; i < pivots.size() && ok; ++i) {
        Rational r;
        ok = rational_reconstruct(acc[i][j], modulus, r);
        v[pivots[i]] = -r;
      }
      if (ok) ok = verify(rows, v);
      sol.basis.push_back(std::move(v));
    }
    if (ok) return sol;
  }
  throw std::runtime_error("nullspace lifting did not converge within the prime budget");
}

}  // namespace

std::size_t rank_mod_p(const LinearSystem& system, std::uint64_t p) {
  const PrimeField f(p);
  ModMatrix m(system.rows(), system.cols());
  for (std::size_t i = 0; i < system.rows(); ++i) {
    for (const auto& [c, v] : system.row(i)) {
      m.at(i, c) = f.mul(f.from_mpz(v.num()), f.inv(f.from_mpz(v.den())));
    }
  }
  return rref_serial(m, f).size();
}

NullspaceResult solve_nullspace(const LinearSystem& system, const NullspaceOptions& opts) {
  const std::size_t ncols = system.cols();
  UnionFind uf(ncols);
  for (std::size_t i = 0; i < system.rows(); ++i) {
    const auto& r = system.row(i);
    for (std::size_t e = 1; e < r.size(); ++e) uf.unite(r[0].first, r[e].first);
  }
  std::map<std::size_t, std::vector<std::size_t>> block_rows;
  for (std::size_t i = 0; i < system.rows(); ++i) block_rows[uf.find(system.row(i)[0].first)].push_back(i);
  std::map<std::size_t, std::vector<std::size_t>> block_cols;
  std::vector<bool> touched(ncols, false);
  for (std::size_t i = 0; i < system.rows(); ++i) {
    for (const auto& e : system.row(i)) touched[e.first] = true;
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (touched[c]) block_cols[uf.find(c)].push_back(c);
  }

  const auto primes = primes_below(1ULL << 31, opts.max_primes);
  const auto check_prime = primes_below(1ULL << 30, 1).front();

  NullspaceResult res;
  res.cols = ncols;
  res.blocks = block_rows.size();
  std::vector<std::size_t> local(ncols, 0);
  std::vector<std::pair<std::size_t, std::vector<Rational>>> vectors;

  for (const auto& [root, rids] : block_rows) {
    const auto& gcols = block_cols[root];
    for (std::size_t k = 0; k < gcols.size(); ++k) local[gcols[k]] = k;
    std::vector<IntRow> rows;
    rows.reserve(rids.size());
    for (auto i : rids) rows.push_back(integer_row(system.row(i), local));
    const std::uint64_t bseed = mix(opts.seed, root);

    BlockSolution sol = solve_block(rows, gcols.size(), primes, bseed, opts);
    res.rank += sol.rank;
    res.primes_used = std::max(res.primes_used, sol.primes);
    for (std::size_t j = 0; j < sol.free_cols.size(); ++j) {
      std::vector<Rational> v(ncols);
      for (std::size_t k = 0; k < gcols.size(); ++k) v[gcols[k]] = std::move(sol.basis[j][k]);
      vectors.emplace_back(gcols[sol.free_cols[j]], std::move(v));
    }
    if (opts.crosscheck) {
      const PrimeField f(check_prime);
      ModMatrix m = reduced_block(rows, gcols.size(), f, mix(bseed, 0xc0ffee));
      res.crosscheck_rank += reduce(m, f, opts).size();
    }
  }
  for (std::size_t c = 0; c < ncols; ++c) {
    if (touched[c]) continue;
    std::vector<Rational> v(ncols);
    v[c] = Rational(1);
    vectors.emplace_back(c, std::move(v));
  }
  std::sort(vectors.begin(), vectors.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  for (auto& [c, v] : vectors) {
    res.free_cols.push_back(c);
    res.basis.push_back(std::move(v));
  }
  res.crosscheck_prime = opts.crosscheck ? check_prime : 0;
  if (!opts.crosscheck) res.crosscheck_rank = res.rank;
  res.certified = true;
  return res;
}

}  // namespace bioct::linalg
