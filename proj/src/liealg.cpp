#include "bioct/liealg.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <tuple>

#include "bioct/errors.hpp"
#include "bioct/linalg/field_rref.hpp"

namespace bioct {

namespace {

using Entry = linalg::LinearSystem::Entry;

SparseVec sparse_of(const std::vector<Rational>& v) {
  SparseVec s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) s.emplace_back(i, v[i]);
  }
  return s;
}

template <class Product>
FiniteAlgebra build_carrier(std::string name, std::size_t dim, bool commutative, Product&& prod) {
  FiniteAlgebra alg;
  alg.name = std::move(name);
  alg.dim = dim;
  alg.commutative = commutative;
  alg.mult.resize(dim * dim);
  for (std::size_t a = 0; a < dim; ++a) {
    for (std::size_t b = 0; b < dim; ++b) {
      if (commutative && b < a) {
        alg.mult[a * dim + b] = alg.mult[b * dim + a];
        continue;
      }
      alg.mult[a * dim + b] = sparse_of(prod(a, b));
    }
  }
  return alg;
}

std::vector<Rational> unit_vector(std::size_t n, std::size_t k) {
  std::vector<Rational> v(n);
  v[k] = 1;
  return v;
}

using SparseRows = std::vector<SparseVec>;

SparseRows rows_of(const RatMatrix& m) {
  SparseRows r(m.n);
  for (std::size_t i = 0; i < m.n; ++i) {
    for (std::size_t j = 0; j < m.n; ++j) {
      if (!m.at(i, j).is_zero()) r[i].emplace_back(j, m.at(i, j));
    }
  }
  return r;
}

// Dense accumulator that remembers which slots it touched.
struct Accumulator {
  std::vector<Rational> v;
  std::vector<char> mark;
  std::vector<std::size_t> touched;

  explicit Accumulator(std::size_t n) : v(n), mark(n, 0) {}
  void add(std::size_t i, const Rational& x) {
    if (!mark[i]) {
      mark[i] = 1;
      touched.push_back(i);
    }
    v[i] += x;
  }
  void clear() {
    for (auto i : touched) {
      v[i] = Rational();
      mark[i] = 0;
    }
    touched.clear();
  }
  bool all_zero() const {
    return std::all_of(touched.begin(), touched.end(), [&](std::size_t i) { return v[i].is_zero(); });
  }
};

// acc += sign * x y, on flat n x n indices.
void add_product(Accumulator& acc, const SparseRows& x, const SparseRows& y, const Rational& sign) {
  const std::size_t n = x.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& [k, xv] : x[i]) {
      const Rational s = sign * xv;
      for (const auto& [j, yv] : y[k]) acc.add(i * n + j, s * yv);
    }
  }
}

// One column of a linear operator with unknown entries: D e_j = sum (coeff * x_col) e_c.
struct DTerm {
  std::size_t component;
  std::size_t col;
  Rational coeff;
};
using DColumns = std::vector<std::vector<DTerm>>;

// Rows of D(e_a e_b) - D(e_a) e_b - e_a D(e_b) = 0 for the given basis pairs.
void add_derivation_rows(const FiniteAlgebra& alg, const DColumns& d,
                         const std::vector<std::pair<std::size_t, std::size_t>>& pairs,
                         linalg::LinearSystem& sys) {
  const std::size_t n = alg.dim;
  for (const auto& [a, b] : pairs) {
    std::vector<std::vector<Entry>> eq(n);
    for (const auto& [k, m] : alg.product(a, b)) {
      for (const auto& t : d[k]) eq[t.component].emplace_back(t.col, m * t.coeff);
    }
    for (const auto& t : d[a]) {
      for (const auto& [c, m] : alg.product(t.component, b)) eq[c].emplace_back(t.col, -(m * t.coeff));
    }
    for (const auto& t : d[b]) {
      for (const auto& [c, m] : alg.product(a, t.component)) eq[c].emplace_back(t.col, -(m * t.coeff));
    }
    for (auto& row : eq) sys.add_row(std::move(row));
  }
}

std::vector<std::pair<std::size_t, std::size_t>> basis_pairs(const std::vector<std::size_t>& idx,
                                                              bool commutative) {
  std::vector<std::pair<std::size_t, std::size_t>> p;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    for (std::size_t j = commutative ? i : 0; j < idx.size(); ++j) p.emplace_back(idx[i], idx[j]);
  }
  return p;
}

DColumns generic_columns(std::size_t n) {
  DColumns d(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < n; ++i) d[j].push_back({i, i * n + j, Rational(1)});
  }
  return d;
}

linalg::LinearSystem derivation_system(const FiniteAlgebra& a) {
  linalg::LinearSystem sys(a.dim * a.dim);
  std::vector<std::size_t> all(a.dim);
  std::iota(all.begin(), all.end(), 0);
  add_derivation_rows(a, generic_columns(a.dim), basis_pairs(all, a.commutative), sys);
  return sys;
}

OperatorBasis basis_from_solve(std::string name, std::size_t n, linalg::NullspaceResult res) {
  OperatorBasis out;
  out.name = std::move(name);
  out.carrier_dim = n;
  for (const auto& v : res.basis) {
    RatMatrix m(n);
    m.a = v;
    out.ops.push_back(std::move(m));
  }
  out.chart = res.free_cols;
  out.solve = std::move(res);
  lie_structure(out);
  out.closed = true;
  return out;
}

std::string jordan_name(AlgebraName oct, const Metric& m, bool complexified) {
  std::string s = m.is_definite() ? "J3(" : "J2,1(";
  s += complexified ? "Cx" : "";
  s += to_string(oct);
  s += ")";
  return s;
}

}  // namespace

std::vector<Rational> FiniteAlgebra::multiply(const std::vector<Rational>& x,
                                              const std::vector<Rational>& y) const {
  if (x.size() != dim || y.size() != dim) throw UsageError("vector length does not match the carrier");
  std::vector<Rational> out(dim);
  for (std::size_t a = 0; a < dim; ++a) {
    if (x[a].is_zero()) continue;
    for (std::size_t b = 0; b < dim; ++b) {
      if (y[b].is_zero()) continue;
      const Rational s = x[a] * y[b];
      for (const auto& [c, m] : product(a, b)) out[c] += s * m;
    }
  }
  return out;
}

FiniteAlgebra composition_carrier(AlgebraName name) {
  const auto& t = standard_table(name);
  const auto n = static_cast<std::size_t>(t.dim());
  return build_carrier(std::string(to_string(name)), n, n <= 2, [&](std::size_t a, std::size_t b) {
    std::vector<Rational> v(n);
    const int i = static_cast<int>(a), j = static_cast<int>(b);
    v[static_cast<std::size_t>(CompositionTable::product_index(i, j))] = t.sign(i, j);
    return v;
  });
}

FiniteAlgebra tensor_carrier(TensorAlgebra a) {
  const std::size_t n = a.scalar == ScalarKind::Real ? 8 : 16;
  auto elem = [&](std::size_t k) {
    std::array<Rational, 16> c;
    c[k] = 1;
    return TensorElement::from_real_coords(a, c);
  };
  auto alg = build_carrier(a.name(), n, false, [&](std::size_t i, std::size_t j) {
    const auto rc = mul(elem(i), elem(j)).real_coords();
    return std::vector<Rational>(rc.begin(), rc.begin() + static_cast<std::ptrdiff_t>(n));
  });
  if (n == 16) {
    for (std::size_t k = 0; k < 8; ++k) alg.complex_pairs.emplace_back(k, k + 8);
  }
  return alg;
}

FiniteAlgebra jordan_carrier(AlgebraName oct, Metric metric) {
  const TensorAlgebra ta{ScalarKind::Real, oct};
  const std::size_t n = real_dim(ta);
  std::vector<HermMatrix3> basis;
  for (std::size_t k = 0; k < n; ++k) basis.push_back(from_real_coords(unit_vector(n, k), ta, metric));
  auto alg = build_carrier(jordan_name(oct, metric, false), n, true, [&](std::size_t a, std::size_t b) {
    return to_real_coords(jordan_mul(basis[a], basis[b]));
  });
  alg.trace.assign(n, Rational());
  for (std::size_t k = 0; k < 3; ++k) alg.trace[k] = 1;
  return alg;
}

FiniteAlgebra complexified_jordan_carrier(AlgebraName oct) {
  const TensorAlgebra ta{ScalarKind::Complex, oct};
  const std::size_t n = real_dim(ta);
  std::vector<HermMatrix3> basis;
  for (std::size_t k = 0; k < n; ++k) basis.push_back(from_real_coords(unit_vector(n, k), ta, Metric{}));
  auto alg = build_carrier(jordan_name(oct, Metric{}, true), n, true, [&](std::size_t a, std::size_t b) {
    return to_real_coords(jordan_mul(basis[a], basis[b]));
  });
  for (std::size_t k = 0; k < 3; ++k) alg.complex_pairs.emplace_back(2 * k, 2 * k + 1);
  for (std::size_t e = 0; e < 3; ++e) {
    const std::size_t off = 6 + 16 * e;
    for (std::size_t j = 0; j < 8; ++j) alg.complex_pairs.emplace_back(off + j, off + 8 + j);
  }
  alg.trace.assign(n, Rational());
  for (std::size_t k = 0; k < 3; ++k) alg.trace[2 * k] = 1;
  return alg;
}

FiniteAlgebra real_line_carrier() {
  auto alg = build_carrier("R", 1, true, [](std::size_t, std::size_t) { return std::vector<Rational>{1}; });
  alg.trace = {Rational(1)};
  return alg;
}

bool RatMatrix::is_zero() const {
  return std::all_of(a.begin(), a.end(), [](const Rational& x) { return x.is_zero(); });
}

RatMatrix operator*(const RatMatrix& x, const RatMatrix& y) {
  if (x.n != y.n) throw UsageError("matrix size mismatch");
  Accumulator acc(x.n * x.n);
  add_product(acc, rows_of(x), rows_of(y), Rational(1));
  RatMatrix out(x.n);
  for (auto i : acc.touched) out.a[i] = acc.v[i];
  return out;
}

RatMatrix commutator(const RatMatrix& x, const RatMatrix& y) {
  if (x.n != y.n) throw UsageError("matrix size mismatch");
  const auto xr = rows_of(x), yr = rows_of(y);
  Accumulator acc(x.n * x.n);
  add_product(acc, xr, yr, Rational(1));
  add_product(acc, yr, xr, Rational(-1));
  RatMatrix out(x.n);
  for (auto i : acc.touched) out.a[i] = acc.v[i];
  return out;
}

StructureConstants lie_structure(const OperatorBasis& basis) {
  const std::size_t d = basis.dim();
  StructureConstants sc;
  sc.dim = d;
  sc.c.assign(d * d, {});
  if (d == 0) return sc;
  const std::size_t n = basis.ops.front().n;
  const std::size_t flat = n * n;
  for (const auto& op : basis.ops) {
    if (op.n != n) throw UsageError("operators of different sizes");
  }

  // R: a basis with R_i[chart_j] = delta_ij; T: coordinates of R in the given basis.
  std::vector<std::size_t> chart = basis.chart;
  std::vector<SparseRows> reduced;
  std::vector<std::vector<Rational>> to_given;
  bool chart_ok = chart.size() == d;
  for (std::size_t j = 0; chart_ok && j < d; ++j) {
    for (std::size_t k = 0; k < d; ++k) {
      if (chart[k] >= flat || basis.ops[j].a[chart[k]] != Rational(j == k ? 1 : 0)) {
        chart_ok = false;
        break;
      }
    }
  }
  if (chart_ok) {
    for (const auto& op : basis.ops) reduced.push_back(rows_of(op));
  } else {
    std::vector<std::vector<Rational>> m(d, std::vector<Rational>(flat + d));
    for (std::size_t j = 0; j < d; ++j) {
      std::copy(basis.ops[j].a.begin(), basis.ops[j].a.end(), m[j].begin());
      m[j][flat + j] = 1;
    }
    auto r = linalg::rref(std::move(m), flat + d);
    if (r.rank() < d || r.pivots[d - 1] >= flat) throw UsageError("operators are linearly dependent");
    chart = r.pivots;
    for (std::size_t i = 0; i < d; ++i) {
      RatMatrix op(n);
      std::copy(r.rows[i].begin(), r.rows[i].begin() + static_cast<std::ptrdiff_t>(flat), op.a.begin());
      reduced.push_back(rows_of(op));
      to_given.emplace_back(r.rows[i].begin() + static_cast<std::ptrdiff_t>(flat), r.rows[i].end());
    }
  }

  std::vector<SparseRows> given;
  for (const auto& op : basis.ops) given.push_back(rows_of(op));
  Accumulator acc(flat);
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      acc.clear();
      add_product(acc, given[a], given[b], Rational(1));
      add_product(acc, given[b], given[a], Rational(-1));
      std::vector<Rational> y(d);
      for (std::size_t k = 0; k < d; ++k) y[k] = acc.v[chart[k]];
      for (std::size_t k = 0; k < d; ++k) {
        if (y[k].is_zero()) continue;
        const auto& rk = reduced[k];
        for (std::size_t i = 0; i < n; ++i) {
          for (const auto& [j, v] : rk[i]) acc.add(i * n + j, -(y[k] * v));
        }
      }
      if (!acc.all_zero()) throw ClosureError("commutator leaves the span", a, b);
      std::vector<Rational> c(d);
      if (chart_ok) {
        c = y;
      } else {
        for (std::size_t k = 0; k < d; ++k) {
          if (y[k].is_zero()) continue;
          for (std::size_t e = 0; e < d; ++e) c[e] += y[k] * to_given[k][e];
        }
      }
      SparseVec s = sparse_of(c);
      SparseVec neg;
      for (const auto& [e, v] : s) neg.emplace_back(e, -v);
      sc.c[a * d + b] = std::move(s);
      sc.c[b * d + a] = std::move(neg);
    }
  }
  return sc;
}

bool jacobi_holds(const StructureConstants& sc) {
  const std::size_t d = sc.dim;
  std::vector<Rational> acc(d);
  // [[x, y], z] as a combination of basis elements.
  auto add_nested = [&](std::size_t x, std::size_t y, std::size_t z) {
    for (const auto& [e, v] : sc.bracket(x, y)) {
      for (const auto& [f, w] : sc.bracket(e, z)) acc[f] += v * w;
    }
  };
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a + 1; b < d; ++b) {
      for (std::size_t c = b + 1; c < d; ++c) {
        std::fill(acc.begin(), acc.end(), Rational());
        add_nested(a, b, c);
        add_nested(b, c, a);
        add_nested(c, a, b);
        if (!std::all_of(acc.begin(), acc.end(), [](const Rational& x) { return x.is_zero(); })) return false;
      }
    }
  }
  return true;
}

std::vector<std::vector<Rational>> killing_form(const StructureConstants& sc) {
  const std::size_t d = sc.dim;
  // ad_a e_b = [e_a, e_b] = sum_e c_ab^e e_e, so (ad_a)_{e b} = c_ab^e.
  std::vector<std::vector<std::tuple<std::size_t, std::size_t, Rational>>> ad(d);
  std::vector<std::vector<Rational>> dense(d, std::vector<Rational>(d * d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = 0; b < d; ++b) {
      for (const auto& [e, v] : sc.bracket(a, b)) {
        ad[a].emplace_back(e, b, v);
        dense[a][e * d + b] = v;
      }
    }
  }
  std::vector<std::vector<Rational>> k(d, std::vector<Rational>(d));
  for (std::size_t a = 0; a < d; ++a) {
    for (std::size_t b = a; b < d; ++b) {
      Rational s;
      for (const auto& [e, f, v] : ad[a]) {
        const auto& w = dense[b][f * d + e];
        if (!w.is_zero()) s += v * w;
      }
      k[a][b] = s;
      k[b][a] = s;
    }
  }
  return k;
}

std::string real_form_label(std::size_t dim, long character) {
  static const std::map<std::pair<std::size_t, long>, std::string> labels = {
      {{14, -14}, "G2(-14)"}, {{14, 2}, "G2(2)"},     {{52, -52}, "F4(-52)"}, {{52, -20}, "F4(-20)"},
      {{52, 4}, "F4(4)"},     {{78, -78}, "E6(-78)"}, {{78, -26}, "E6(-26)"}, {{78, -14}, "E6(-14)"},
      {{78, 2}, "E6(2)"},     {{78, 6}, "E6(6)"},
  };
  const auto it = labels.find({dim, character});
  return it == labels.end() ? std::string() : it->second;
}

KillingReport killing_character(const StructureConstants& sc, const KillingOptions& opts) {
  KillingReport r;
  r.dim = sc.dim;
  const auto k = killing_form(sc);
  std::optional<linalg::Inertia> exact;
  if (opts.exact) {
    exact = linalg::exact_inertia(k);
    r.exact = true;
  }
  if (opts.floating) {
    std::vector<std::vector<double>> f(sc.dim, std::vector<double>(sc.dim));
    for (std::size_t i = 0; i < sc.dim; ++i) {
      for (std::size_t j = 0; j < sc.dim; ++j) f[i][j] = k[i][j].to_double();
    }
    r.float_inertia = linalg::float_inertia(f, opts.tolerance);
    r.float_run = true;
  }
  const linalg::Inertia in = exact ? *exact : r.float_inertia;
  r.p = in.positive;
  r.q = in.negative;
  r.degenerate = in.zero;
  r.paths_agree = !(exact && r.float_run) || *exact == r.float_inertia;
  if (r.degenerate == 0) {
    r.character = static_cast<long>(r.p) - static_cast<long>(r.q);
    r.label = real_form_label(r.dim, *r.character);
  }
  return r;
}

KillingReport killing_character(const OperatorBasis& basis, const KillingOptions& opts) {
  return killing_character(lie_structure(basis), opts);
}

OperatorBasis derivation_basis(const FiniteAlgebra& a, const linalg::NullspaceOptions& opts) {
  return basis_from_solve("der(" + a.name + ")", a.dim, linalg::solve_nullspace(derivation_system(a), opts));
}

OperatorBasis scalar_linear_derivations(const FiniteAlgebra& a, const linalg::NullspaceOptions& opts) {
  if (a.complex_pairs.empty() || a.dim != 16) {
    throw UsageError("scalar-linear derivations need a tensor carrier with complex or split scalars");
  }
  const std::size_t n = a.dim;
  // J = left multiplication by u * 1, which sits at coordinate y^0.
  const std::size_t u = a.complex_pairs.front().second;
  RatMatrix j(n);
  for (std::size_t col = 0; col < n; ++col) {
    for (const auto& [c, m] : a.product(u, col)) j.at(c, col) = m;
  }
  auto sys = derivation_system(a);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<Entry> row;
      for (std::size_t k = 0; k < n; ++k) {
        if (!j.at(k, c).is_zero()) row.emplace_back(r * n + k, j.at(k, c));
        if (!j.at(r, k).is_zero()) row.emplace_back(k * n + c, -j.at(r, k));
      }
      sys.add_row(std::move(row));
    }
  }
  return basis_from_solve("der_lin(" + a.name + ")", n, linalg::solve_nullspace(sys, opts));
}

OperatorBasis reduced_structure_basis(const FiniteAlgebra& j, const linalg::NullspaceOptions& opts) {
  if (j.trace.size() != j.dim || !j.commutative) {
    throw UsageError("reduced structure algebra needs a commutative carrier with a trace");
  }
  const std::size_t n = j.dim;
  OperatorBasis der = derivation_basis(j, opts);
  OperatorBasis out;
  out.name = "str0(" + j.name + ")";
  out.carrier_dim = n;
  out.ops = der.ops;
  std::size_t p = 0;
  while (p < n && j.trace[p].is_zero()) ++p;
  if (p == n) throw UsageError("trace functional is zero");
  for (std::size_t a = 0; a < n; ++a) {
    if (a == p) continue;
    std::vector<Rational> x(n);
    x[a] = 1;
    x[p] = -(j.trace[a] / j.trace[p]);
    RatMatrix l(n);
    for (std::size_t b = 0; b < n; ++b) {
      if (x[b].is_zero()) continue;
      for (std::size_t col = 0; col < n; ++col) {
        for (const auto& [c, m] : j.product(b, col)) l.at(c, col) += x[b] * m;
      }
    }
    out.ops.push_back(std::move(l));
  }
  lie_structure(out);
  out.closed = true;
  return out;
}

linalg::NullspaceResult complex_linear_derivations(const FiniteAlgebra& a, const linalg::NullspaceOptions& opts) {
  const std::size_t m = a.complex_pairs.size();
  if (m == 0 || 2 * m != a.dim) throw UsageError("carrier has no complex structure");
  DColumns d(a.dim);
  std::vector<std::size_t> re;
  for (std::size_t r = 0; r < m; ++r) {
    const auto [rr, ri] = a.complex_pairs[r];
    re.push_back(rr);
    for (std::size_t s = 0; s < m; ++s) {
      const auto [sr, si] = a.complex_pairs[s];
      const std::size_t p = s * m + r, q = m * m + s * m + r;
      // D e_r = sum_s P_sr e_s + Q_sr i e_s and D (i e_r) = i D e_r.
      d[rr].push_back({sr, p, Rational(1)});
      d[rr].push_back({si, q, Rational(1)});
      d[ri].push_back({si, p, Rational(1)});
      d[ri].push_back({sr, q, Rational(-1)});
    }
  }
  linalg::LinearSystem sys(2 * m * m);
  add_derivation_rows(a, d, basis_pairs(re, a.commutative), sys);
  return linalg::solve_nullspace(sys, opts);
}

CubicForm jordan_cubic_form(AlgebraName oct) {
  const TensorAlgebra ta{ScalarKind::Real, oct};
  const std::size_t n = real_dim(ta);
  std::vector<HermMatrix3> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(from_real_coords(unit_vector(n, k), ta, Metric{}));
  CubicForm f;
  f.n = n;
  f.t.assign(n * n * n, Rational());
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        const Rational v = ntri(e[a], e[b], e[c]).re;
        if (v.is_zero()) continue;
        for (auto [i, j, k] : {std::tuple{a, b, c}, {a, c, b}, {b, a, c}, {b, c, a}, {c, a, b}, {c, b, a}}) {
          f.t[(i * n + j) * n + k] = v;
        }
      }
    }
  }
  return f;
}

std::vector<std::vector<Rational>> jordan_trace_gram(AlgebraName oct) {
  const TensorAlgebra ta{ScalarKind::Real, oct};
  const std::size_t n = real_dim(ta);
  std::vector<HermMatrix3> e;
  for (std::size_t k = 0; k < n; ++k) e.push_back(from_real_coords(unit_vector(n, k), ta, Metric{}));
  std::vector<std::vector<Rational>> g(n, std::vector<Rational>(n));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      g[a][b] = trace_form(e[a], e[b]).re;
      g[b][a] = g[a][b];
    }
  }
  return g;
}

std::vector<std::vector<Rational>> metric_twist(const Metric& metric) {
  const std::size_t n = 27;
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(n));
  const auto& s = metric.signs;
  // b1 sits at (2,3), b2 at (3,1), b3 at (1,2).
  const std::array<int, 3> sign{s[1] * s[2], s[2] * s[0], s[0] * s[1]};
  for (std::size_t k = 0; k < n; ++k) t[k][k] = k < 3 ? 1 : sign[(k - 3) / 8];
  return t;
}

OperatorBasis cubic_invariance_basis(const CubicForm& f, const linalg::NullspaceOptions& opts) {
  const std::size_t n = f.n;
  linalg::LinearSystem sys(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      for (std::size_t c = b; c < n; ++c) {
        std::vector<Entry> row;
        for (std::size_t m = 0; m < n; ++m) {
          if (const auto& v = f.at(m, b, c); !v.is_zero()) row.emplace_back(m * n + a, v);
          if (const auto& v = f.at(a, m, c); !v.is_zero()) row.emplace_back(m * n + b, v);
          if (const auto& v = f.at(a, b, m); !v.is_zero()) row.emplace_back(m * n + c, v);
        }
        sys.add_row(std::move(row));
      }
    }
  }
  return basis_from_solve("inv(Ntri)", n, linalg::solve_nullspace(sys, opts));
}

OperatorBasis unitary_real_form(const CubicForm& f, const std::vector<std::vector<Rational>>& h,
                                const linalg::NullspaceOptions& opts) {
  const std::size_t n = f.n;
  if (h.size() != n) throw UsageError("Hermitian form size does not match the cubic form");
  const std::size_t nn = n * n;
  linalg::LinearSystem sys(2 * nn);
  for (std::size_t off : {std::size_t{0}, nn}) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = a; b < n; ++b) {
        for (std::size_t c = b; c < n; ++c) {
          std::vector<Entry> row;
          for (std::size_t m = 0; m < n; ++m) {
            if (const auto& v = f.at(m, b, c); !v.is_zero()) row.emplace_back(off + m * n + a, v);
            if (const auto& v = f.at(a, m, c); !v.is_zero()) row.emplace_back(off + m * n + b, v);
            if (const auto& v = f.at(a, b, m); !v.is_zero()) row.emplace_back(off + m * n + c, v);
          }
          sys.add_row(std::move(row));
        }
      }
    }
  }
  // h(Xa, b) + h(a, Xb) = 0 with h sesquilinear: real part P, imaginary part Q.
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::vector<Entry> p, q;
      for (std::size_t m = 0; m < n; ++m) {
        if (!h[m][b].is_zero()) {
          p.emplace_back(m * n + a, h[m][b]);
          q.emplace_back(nn + m * n + a, -h[m][b]);
        }
        if (!h[a][m].is_zero()) {
          p.emplace_back(m * n + b, h[a][m]);
          q.emplace_back(nn + m * n + b, h[a][m]);
        }
      }
      sys.add_row(std::move(p));
      sys.add_row(std::move(q));
    }
  }
  auto res = linalg::solve_nullspace(sys, opts);
  OperatorBasis out;
  out.name = "unitary";
  out.carrier_dim = 2 * n;
  const std::size_t w = 2 * n;
  for (const auto& v : res.basis) {
    RatMatrix x(w);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        const auto& pv = v[i * n + j];
        const auto& qv = v[nn + i * n + j];
        x.at(i, j) = pv;
        x.at(i + n, j + n) = pv;
        x.at(i + n, j) = qv;
        x.at(i, j + n) = -qv;
      }
    }
    out.ops.push_back(std::move(x));
  }
  for (auto fc : res.free_cols) {
    out.chart.push_back(fc < nn ? (fc / n) * w + fc % n : (fc - nn) / n * w + n * w + (fc - nn) % n);
  }
  out.solve = std::move(res);
  lie_structure(out);
  out.closed = true;
  return out;
}

OperatorBasis unitary_real_form(AlgebraName oct, const Metric& metric, const linalg::NullspaceOptions& opts) {
  const auto f = jordan_cubic_form(oct);
  const auto t = jordan_trace_gram(oct);
  const auto theta = metric_twist(metric);
  std::vector<std::vector<Rational>> h(f.n, std::vector<Rational>(f.n));
  for (std::size_t a = 0; a < f.n; ++a) {
    for (std::size_t b = 0; b < f.n; ++b) h[a][b] = t[a][b] * theta[b][b];
  }
  auto out = unitary_real_form(f, h, opts);
  out.name = "su(" + std::string(metric.is_definite() ? "CxO" : "CxO,hyp") + ")";
  if (oct == AlgebraName::Os) out.name = "su(CxOs)";
  return out;
}

std::pair<CubicForm, std::vector<std::vector<Rational>>> change_basis(
    const CubicForm& f, const std::vector<std::vector<Rational>>& h, const std::vector<std::vector<Rational>>& s) {
  const std::size_t n = f.n;
  // Contract one slot at a time: t1(a', j, k) = sum_i s_ia' t(i, j, k), and so on.
  auto contract_first = [&](const std::vector<Rational>& t) {
    std::vector<Rational> out(n * n * n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t a = 0; a < n; ++a) {
        if (s[i][a].is_zero()) continue;
        for (std::size_t jk = 0; jk < n * n; ++jk) {
          const auto& v = t[i * n * n + jk];
          if (!v.is_zero()) out[a * n * n + jk] += s[i][a] * v;
        }
      }
    }
    return out;
  };
  // Cyclic rotation (i, j, k) -> (j, k, i) so each slot takes its turn in front.
  auto rotate = [&](const std::vector<Rational>& t) {
    std::vector<Rational> out(n * n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k) out[(j * n + k) * n + i] = t[(i * n + j) * n + k];
    return out;
  };
  auto t = f.t;
  for (int r = 0; r < 3; ++r) t = rotate(contract_first(t));
  CubicForm g{n, std::move(t)};
  std::vector<std::vector<Rational>> hs(n, std::vector<Rational>(n)), h2(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      for (std::size_t j = 0; j < n; ++j)
        if (!h[i][k].is_zero() && !s[k][j].is_zero()) hs[i][j] += h[i][k] * s[k][j];
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (!s[i][a].is_zero() && !hs[i][j].is_zero()) h2[a][j] += s[i][a] * hs[i][j];
  return {std::move(g), std::move(h2)};
}

std::vector<std::vector<Rational>> random_basis_change(std::size_t n, std::uint64_t seed) {
  RandomStream rng(seed);
  std::vector<std::size_t> perm(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  for (std::size_t i = n; i > 1; --i) std::swap(perm[i - 1], perm[rng.uniform(i)]);
  std::vector<std::vector<Rational>> s(n, std::vector<Rational>(n));
  for (std::size_t j = 0; j < n; ++j) {
    const long num = rng.uniform_int(1, 3) * (rng.uniform_int(0, 1) ? 1 : -1);
    s[perm[j]][j] = Rational(num, rng.uniform_int(1, 3));
  }
  // Column shears e'_j += c e'_k.
  for (std::size_t t = 0; t < n / 4; ++t) {
    const std::size_t j = rng.uniform(n), k = rng.uniform(n);
    if (j == k) continue;
    const Rational c(rng.uniform_int(-2, 2), 2);
    for (std::size_t i = 0; i < n; ++i) s[i][j] += c * s[i][k];
  }
  return s;
}

std::size_t matrix_model_dimension(MatrixModel model, TensorAlgebra algebra, Conjugation conj) {
  const std::size_t rd = algebra.scalar == ScalarKind::Real ? 8 : 16;
  const std::size_t cols = 9 * rd;
  auto col = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * 3 + j) * rd + k; };
  std::vector<int> sigma(rd);
  for (std::size_t k = 0; k < rd; ++k) {
    const bool unit = k % 8 == 0;
    const bool imag_scalar = k >= 8;
    int s = unit ? 1 : -1;
    if (imag_scalar && conj == Conjugation::Full) s = -s;
    sigma[k] = s;
  }
  std::vector<std::vector<Rational>> rows;
  for (std::size_t k = 0; k < rd; ++k) {
    std::vector<Rational> r(cols);
    for (std::size_t i = 0; i < 3; ++i) r[col(i, i, k)] = 1;
    rows.push_back(std::move(r));
  }
  if (model == MatrixModel::SA3) {
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = i; j < 3; ++j) {
        for (std::size_t k = 0; k < rd; ++k) {
          std::vector<Rational> r(cols);
          r[col(j, i, k)] += 1;
          r[col(i, j, k)] += sigma[k];
          rows.push_back(std::move(r));
        }
      }
    }
  }
  return cols - linalg::rank(std::move(rows), cols);
}

}  // namespace bioct
