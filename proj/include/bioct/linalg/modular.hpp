#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include <gmpxx.h>

namespace bioct::linalg {

/// Arithmetic modulo a prime p < 2^31. Products fit in 62 bits and are
/// reduced with a precomputed Barrett constant.
class PrimeField {
 public:
  explicit PrimeField(std::uint64_t p);

  std::uint64_t modulus() const { return p_; }
  std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
    const std::uint64_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint64_t sub(std::uint64_t a, std::uint64_t b) const { return a >= b ? a - b : a + p_ - b; }
  std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint64_t reduce(std::uint64_t x) const {
    const auto q = static_cast<std::uint64_t>((static_cast<unsigned __int128>(x) * barrett_) >> 64);
    std::uint64_t r = x - q * p_;
    while (r >= p_) r -= p_;
    return r;
  }
  std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return reduce(a * b); }
  std::uint64_t pow(std::uint64_t a, std::uint64_t e) const;
  /// Throws std::domain_error for 0.
  std::uint64_t inv(std::uint64_t a) const;
  std::uint64_t from_signed(std::int64_t v) const;
  std::uint64_t from_mpz(const mpz_class& v) const;

 private:
  std::uint64_t p_;
  std::uint64_t barrett_;
};

bool is_prime_u64(std::uint64_t n);
/// The `count` largest primes below `bound` (descending).
std::vector<std::uint64_t> primes_below(std::uint64_t bound, std::size_t count);

/// Dense row-major matrix over Z/p.
struct ModMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::uint64_t> a;

  ModMatrix() = default;
  ModMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c, 0) {}
  std::uint64_t* row(std::size_t i) { return a.data() + i * cols; }
  const std::uint64_t* row(std::size_t i) const { return a.data() + i * cols; }
  std::uint64_t& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  std::uint64_t at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// In-place reduced row echelon form. Returns the pivot columns; rows
/// [0, rank) hold the reduced pivot rows, the rest are zero.
///
/// Serial reference: plain Gauss-Jordan, one column at a time.
std::vector<std::size_t> rref_serial(ModMatrix& m, const PrimeField& f);

/// Same result as rref_serial; the elimination of each pivot column is
/// distributed over rows with OpenMP. `threads <= 0` keeps the runtime default.
std::vector<std::size_t> rref_parallel(ModMatrix& m, const PrimeField& f, int threads = 0);

}  // namespace bioct::linalg
