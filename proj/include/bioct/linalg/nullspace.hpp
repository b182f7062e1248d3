#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include "bioct/rational.hpp"

namespace bioct::linalg {

/// Homogeneous linear system A x = 0 over Q, stored as sparse rows.
class LinearSystem {
 public:
  using Entry = std::pair<std::size_t, Rational>;

  explicit LinearSystem(std::size_t cols) : cols_(cols) {}

  /// Merges repeated columns and drops zeros; an all-zero row is discarded.
  void add_row(std::vector<Entry> entries);

  std::size_t cols() const { return cols_; }
  std::size_t rows() const { return rows_.size(); }
  const std::vector<Entry>& row(std::size_t i) const { return rows_[i]; }

  /// Dense copy, for the exact reference solver on small systems.
  std::vector<std::vector<Rational>> dense() const;

 private:
  std::size_t cols_;
  std::vector<std::vector<Entry>> rows_;
};

enum class Kernel { Parallel, Serial };

struct NullspaceOptions {
  std::uint64_t seed = 0x6a09e667f3bcc908ULL;
  int threads = 0;
  Kernel kernel = Kernel::Parallel;
  std::size_t max_primes = 24;
  bool crosscheck = true;
};

/// Kernel of a rational system, certified exact.
///
/// Each connected block of columns is solved separately: rows are compressed
/// by random combinations mod p, reduced, lifted over several primes by CRT
/// and rational reconstruction, and every lifted vector is checked against
/// the original rows over Q. k verified vectors plus rank_p = cols - k pin the
/// nullity exactly.
struct NullspaceResult {
  std::size_t cols = 0;
  std::size_t rank = 0;
  /// One vector per free column: 1 there, 0 at the other free columns.
  std::vector<std::vector<Rational>> basis;
  std::vector<std::size_t> free_cols;
  std::size_t blocks = 0;
  std::size_t primes_used = 0;
  /// Rank recomputed modulo an unrelated prime with a fresh compression.
  std::uint64_t crosscheck_prime = 0;
  std::size_t crosscheck_rank = 0;
  bool certified = false;

  std::size_t nullity() const { return basis.size(); }
  bool crosscheck_agrees() const { return crosscheck_rank == rank; }
};

NullspaceResult solve_nullspace(const LinearSystem& system, const NullspaceOptions& opts = {});

/// Rank of the system modulo p (uncompressed dense elimination, serial).
std::size_t rank_mod_p(const LinearSystem& system, std::uint64_t p);

/// Smallest-magnitude n/d with n/d = u mod m, |n|, d <= sqrt(m/2); false if none.
bool rational_reconstruct(const mpz_class& u, const mpz_class& m, Rational& out);

}  // namespace bioct::linalg
