#pragma once

#include <cstdint>

#include "bioct/rational.hpp"

namespace bioct {

/// Platform-independent deterministic generator (SplitMix64).
///
/// Only fixed-width integer arithmetic is used, so a given seed yields the
/// same stream on every platform and compiler. Random algebra elements are
/// built from `next_coefficient`, which draws p/q with |p| <= 10, 1 <= q <= 4.
class RandomStream {
 public:
  static constexpr long kMaxNumerator = 10;
  static constexpr long kMaxDenominator = 4;

  explicit RandomStream(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64();
  /// Uniform in [0, bound) by rejection sampling; bound > 0.
  std::uint64_t uniform(std::uint64_t bound);
  /// Uniform integer in [lo, hi].
  long uniform_int(long lo, long hi);
  Rational next_coefficient();
  /// Coefficient that is never zero.
  Rational next_nonzero_coefficient();

  /// Independent child stream; `tag` separates sibling substreams.
  RandomStream fork(std::uint64_t tag);

 private:
  std::uint64_t state_;
};

}  // namespace bioct
