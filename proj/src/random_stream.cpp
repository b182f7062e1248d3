#include "bioct/random_stream.hpp"

namespace bioct {

std::uint64_t RandomStream::next_u64() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t RandomStream::uniform(std::uint64_t bound) {
  const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
  std::uint64_t x = next_u64();
  while (x >= limit) x = next_u64();
  return x % bound;
}

long RandomStream::uniform_int(long lo, long hi) {
  return lo + static_cast<long>(uniform(static_cast<std::uint64_t>(hi - lo + 1)));
}

Rational RandomStream::next_coefficient() {
  const long p = uniform_int(-kMaxNumerator, kMaxNumerator);
  const long q = uniform_int(1, kMaxDenominator);
  return Rational(p, q);
}

Rational RandomStream::next_nonzero_coefficient() {
  long p = 0;
  while (p == 0) p = uniform_int(-kMaxNumerator, kMaxNumerator);
  return Rational(p, uniform_int(1, kMaxDenominator));
}

RandomStream RandomStream::fork(std::uint64_t tag) {
  RandomStream child(next_u64() ^ (tag * 0xD1B54A32D192ED03ULL));
  child.next_u64();
  return child;
}

}  // namespace bioct
