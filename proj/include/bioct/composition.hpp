#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bioct/identities.hpp"
#include "bioct/random_stream.hpp"
#include "bioct/rational.hpp"

namespace bioct {

enum class AlgebraName { R, C, Cs, H, Hs, O, Os };

std::string_view to_string(AlgebraName name);
/// Accepts "R", "C", "Cs", "H", "Hs", "O", "Os". Throws UsageError otherwise.
AlgebraName parse_algebra_name(std::string_view text);

/// Structure constants of a real composition algebra of dimension 1, 2, 4 or 8.
///
/// Built by iterated Cayley-Dickson doubling
///   (a, b)(c, d) = (ac + g * conj(d) b, d a + b conj(c)),
/// with g = -1 at every step for the division series and g = +1 at the final
/// step for the split series. Basis products are e_i e_j = sign(i, j) e_{i^j}.
class CompositionTable {
 public:
  AlgebraName name() const { return name_; }
  int dim() const { return dim_; }
  int sign(int i, int j) const { return signs_[static_cast<std::size_t>(i * dim_ + j)]; }
  static int product_index(int i, int j) { return i ^ j; }
  /// e_k^2 = unit_square(k) * e_0.
  int unit_square(int k) const { return sign(k, k); }
  /// N(e_k): +1 for e_0, -unit_square(k) otherwise. The norm form is diagonal.
  int norm_sign(int k) const { return k == 0 ? 1 : -unit_square(k); }
  /// Doubling parameters, one per step.
  const std::vector<int>& gammas() const { return gammas_; }
  /// (positive, negative) counts of the diagonal norm form.
  std::pair<int, int> norm_signature() const;

  static CompositionTable build(AlgebraName name);

 private:
  AlgebraName name_ = AlgebraName::R;
  int dim_ = 1;
  std::vector<int> signs_;
  std::vector<int> gammas_;
};

/// Cached table for a standard algebra; valid for the program lifetime.
const CompositionTable& standard_table(AlgebraName name);

/// Element of a composition algebra with exact rational coordinates.
struct AlgElement {
  const CompositionTable* table = nullptr;
  std::vector<Rational> coeffs;

  static AlgElement zero(const CompositionTable& t);
  static AlgElement one(const CompositionTable& t);
  static AlgElement unit(const CompositionTable& t, int k);
  static AlgElement random(const CompositionTable& t, RandomStream& rng);

  bool is_zero() const;
  friend bool operator==(const AlgElement& a, const AlgElement& b);
};

AlgElement operator+(const AlgElement& x, const AlgElement& y);
AlgElement operator-(const AlgElement& x, const AlgElement& y);
AlgElement operator*(const Rational& s, const AlgElement& x);
/// Bilinear product. Throws UsageError if the tables differ.
AlgElement mul(const AlgElement& x, const AlgElement& y);
AlgElement conj(const AlgElement& x);
/// Scalar part of x * conj(x).
Rational norm_form(const AlgElement& x);
/// Polarization of norm_form: (N(x+y) - N(x) - N(y)) / 2.
Rational bilinear_inner(const AlgElement& x, const AlgElement& y);
std::string to_string(const AlgElement& x);

/// Exact evaluation of alternativity, flexibility, Moufang and composition
/// identities on `samples` seeded random triples.
IdentityReport identity_suite(const CompositionTable& table, int samples, std::uint64_t seed);

/// Searches random triples (then basis triples) for (xy)z != x(yz).
std::optional<std::array<AlgElement, 3>> find_associativity_witness(const CompositionTable& table,
                                                                     int tries, std::uint64_t seed);

/// Nonzero pair (x, y) with x y = 0, found among x = e_0 + e_k with N(x) = 0 and
/// y = conj(x). Empty for division algebras.
std::optional<std::pair<AlgElement, AlgElement>> find_zero_divisor_pair(const CompositionTable& table);

}  // namespace bioct
