#include "bioct/linalg/modular.hpp"

#include <omp.h>

#include <stdexcept>

namespace bioct::linalg {

PrimeField::PrimeField(std::uint64_t p) : p_(p) {
  if (p < 3 || p >= (1ULL << 31)) throw std::invalid_argument("PrimeField needs 3 <= p < 2^31");
  barrett_ = static_cast<std::uint64_t>((static_cast<unsigned __int128>(1) << 64) / p);
}

std::uint64_t PrimeField::pow(std::uint64_t a, std::uint64_t e) const {
  std::uint64_t r = 1;
  a = reduce(a);
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

std::uint64_t PrimeField::inv(std::uint64_t a) const {
  if (reduce(a) == 0) throw std::domain_error("zero has no inverse mod p");
  return pow(a, p_ - 2);
}

std::uint64_t PrimeField::from_signed(std::int64_t v) const {
  const auto m = static_cast<std::int64_t>(p_);
  std::int64_t r = v % m;
  if (r < 0) r += m;
  return static_cast<std::uint64_t>(r);
}

std::uint64_t PrimeField::from_mpz(const mpz_class& v) const {
  return mpz_fdiv_ui(v.get_mpz_t(), static_cast<unsigned long>(p_));
}

namespace {

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic witness set for 64-bit inputs.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_below(std::uint64_t bound, std::size_t count) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t n = bound - 1; out.size() < count && n > 2; --n) {
    if (is_prime_u64(n)) out.push_back(n);
  }
  return out;
}

namespace {

void scale_row(std::uint64_t* r, std::size_t from, std::size_t cols, std::uint64_t s,
               const PrimeField& f) {
  for (std::size_t j = from; j < cols; ++j) r[j] = f.mul(r[j], s);
}

// r -= c * p on columns [from, cols)
void axpy_row(std::uint64_t* r, const std::uint64_t* p, std::size_t from, std::size_t cols,
              std::uint64_t c, const PrimeField& f) {
  const std::uint64_t nc = f.neg(c);
  for (std::size_t j = from; j < cols; ++j) {
    if (p[j]) r[j] = f.reduce(r[j] + nc * p[j]);
  }
}

std::size_t find_pivot(const ModMatrix& m, std::size_t from, std::size_t col) {
  for (std::size_t i = from; i < m.rows; ++i) {
    if (m.at(i, col)) return i;
  }
  return m.rows;
}

void swap_rows(ModMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(a, j), m.at(b, j));
}

}  // namespace

std::vector<std::size_t> rref_serial(ModMatrix& m, const PrimeField& f) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t p = find_pivot(m, rank, c);
    if (p == m.rows) continue;
    swap_rows(m, p, rank);
    scale_row(m.row(rank), c, m.cols, f.inv(m.at(rank, c)), f);
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == rank) continue;
      const std::uint64_t x = m.at(i, c);
      if (x) axpy_row(m.row(i), m.row(rank), c, m.cols, x, f);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

std::vector<std::size_t> rref_parallel(ModMatrix& m, const PrimeField& f, int threads) {
  if (threads > 0) omp_set_num_threads(threads);
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  const auto nrows = static_cast<std::int64_t>(m.rows);
  for (std::size_t c = 0; c < m.cols && rank < m.rows; ++c) {
    const std::size_t p = find_pivot(m, rank, c);
    if (p == m.rows) continue;
    swap_rows(m, p, rank);
    scale_row(m.row(rank), c, m.cols, f.inv(m.at(rank, c)), f);
    const std::uint64_t* prow = m.row(rank);
    const auto r0 = static_cast<std::int64_t>(rank);
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < nrows; ++i) {
      if (i == r0) continue;
      std::uint64_t* r = m.row(static_cast<std::size_t>(i));
      const std::uint64_t x = r[c];
      if (x) axpy_row(r, prow, c, m.cols, x, f);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace bioct::linalg
