#pragma once

#include <cstddef>
#include <vector>

namespace bioct::linalg {

/// Dense reduced row echelon form over an exact field F (Rational, ComplexRational).
///
/// Plain serial Gauss-Jordan. This is the reference path: small systems are
/// solved with it directly, and tests use it to check the modular pipeline.
template <class F>
struct Rref {
  std::size_t cols = 0;
  std::vector<std::vector<F>> rows;  ///< nonzero rows only, each with a leading 1
  std::vector<std::size_t> pivots;   ///< pivot column of each row
  std::size_t rank() const { return pivots.size(); }
};

template <class F>
Rref<F> rref(std::vector<std::vector<F>> m, std::size_t cols) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;
  for (std::size_t c = 0; c < cols && rank < m.size(); ++c) {
    std::size_t p = rank;
    while (p < m.size() && m[p][c].is_zero()) ++p;
    if (p == m.size()) continue;
    std::swap(m[p], m[rank]);
    auto& prow = m[rank];
    const F inv = F(1) / prow[c];
    for (std::size_t j = c; j < cols; ++j) {
      if (!prow[j].is_zero()) prow[j] = prow[j] * inv;
    }
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == rank || m[r][c].is_zero()) continue;
      const F f = m[r][c];
      for (std::size_t j = c; j < cols; ++j) {
        if (!prow[j].is_zero()) m[r][j] -= f * prow[j];
      }
    }
    pivots.push_back(c);
    ++rank;
  }
  m.resize(rank);
  return Rref<F>{cols, std::move(m), std::move(pivots)};
}

template <class F>
std::size_t rank(std::vector<std::vector<F>> m, std::size_t cols) {
  return rref(std::move(m), cols).rank();
}

/// Kernel basis: one vector per free column f, with 1 at f and 0 at other free columns.
template <class F>
std::vector<std::vector<F>> nullspace(const Rref<F>& r) {
  std::vector<bool> is_pivot(r.cols, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < r.cols; ++f) {
    if (is_pivot[f]) continue;
    std::vector<F> v(r.cols);
    v[f] = F(1);
    for (std::size_t i = 0; i < r.rows.size(); ++i) v[r.pivots[i]] = -r.rows[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::vector<std::vector<F>> nullspace(std::vector<std::vector<F>> m, std::size_t cols) {
  return nullspace(rref(std::move(m), cols));
}

}  // namespace bioct::linalg
