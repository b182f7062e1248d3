#pragma once

#include <cstddef>
#include <vector>

#include "bioct/rational.hpp"

namespace bioct::linalg {

/// Inertia of a real symmetric form: positive, negative and zero counts.
struct Inertia {
  std::size_t positive = 0;
  std::size_t negative = 0;
  std::size_t zero = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by symmetric Gaussian elimination (congruence LDL^T).
/// A zero diagonal with a nonzero off-diagonal m_ij is fixed by e_i <- e_i + e_j.
Inertia exact_inertia(std::vector<std::vector<Rational>> m);

/// Eigenvalue sign count; eigenvalues with |x| <= tol * max|x| count as zero.
Inertia float_inertia(const std::vector<std::vector<double>>& m, double tol = 1e-8);

}  // namespace bioct::linalg
