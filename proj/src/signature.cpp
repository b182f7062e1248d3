#include "bioct/linalg/signature.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace bioct::linalg {

Inertia exact_inertia(std::vector<std::vector<Rational>> m) {
  const std::size_t n = m.size();
  for (const auto& r : m) {
    if (r.size() != n) throw std::invalid_argument("exact_inertia needs a square matrix");
  }
  Inertia in;
  std::size_t k = 0;
  while (k < n) {
    std::size_t piv = n;
    for (std::size_t i = k; i < n && piv == n; ++i) {
      if (!m[i][i].is_zero()) piv = i;
    }
    if (piv == n) {
      std::size_t a = n, b = n;
      for (std::size_t i = k; i < n && a == n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
          if (!m[i][j].is_zero()) {
            a = i;
            b = j;
            break;
          }
        }
      }
      if (a == n) break;  // the remaining block is zero
      // row/col a += row/col b
      for (std::size_t j = k; j < n; ++j) m[a][j] += m[b][j];
      for (std::size_t i = k; i < n; ++i) m[i][a] += m[i][b];
      piv = a;
    }
    if (piv != k) {
      std::swap(m[piv], m[k]);
      for (auto& r : m) std::swap(r[piv], r[k]);
    }
    const Rational d = m[k][k];
    (d.sign() > 0 ? in.positive : in.negative)++;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      const Rational f = m[i][k] / d;
      for (std::size_t j = k + 1; j < n; ++j) {
        if (!m[k][j].is_zero()) m[i][j] -= f * m[k][j];
      }
    }
    ++k;
  }
  in.zero = n - in.positive - in.negative;
  return in;
}

Inertia float_inertia(const std::vector<std::vector<double>>& m, double tol) {
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd a(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) a(i, j) = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a, Eigen::EigenvaluesOnly);
  const auto& ev = es.eigenvalues();
  double scale = 0;
  for (Eigen::Index i = 0; i < n; ++i) scale = std::max(scale, std::abs(ev(i)));
  Inertia in;
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(ev(i)) <= tol * std::max(scale, 1.0)) {
      ++in.zero;
    } else if (ev(i) > 0) {
      ++in.positive;
    } else {
      ++in.negative;
    }
  }
  return in;
}

}  // namespace bioct::linalg
