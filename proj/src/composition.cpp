#include "bioct/composition.hpp"

#include <map>
#include <mutex>
#include <sstream>

#include "bioct/errors.hpp"

namespace bioct {

std::string_view to_string(AlgebraName name) {
  switch (name) {
    case AlgebraName::R: return "R";
    case AlgebraName::C: return "C";
    case AlgebraName::Cs: return "Cs";
    case AlgebraName::H: return "H";
    case AlgebraName::Hs: return "Hs";
    case AlgebraName::O: return "O";
    case AlgebraName::Os: return "Os";
  }
  return "?";
}

AlgebraName parse_algebra_name(std::string_view text) {
  for (AlgebraName n : {AlgebraName::R, AlgebraName::C, AlgebraName::Cs, AlgebraName::H,
                        AlgebraName::Hs, AlgebraName::O, AlgebraName::Os}) {
    if (text == to_string(n)) return n;
  }
  throw UsageError("unknown algebra '" + std::string(text) + "'");
}

namespace {

std::vector<int> doubling_parameters(AlgebraName name) {
  switch (name) {
    case AlgebraName::R: return {};
    case AlgebraName::C: return {-1};
    case AlgebraName::Cs: return {1};
    case AlgebraName::H: return {-1, -1};
    case AlgebraName::Hs: return {-1, 1};
    case AlgebraName::O: return {-1, -1, -1};
    case AlgebraName::Os: return {-1, -1, 1};
  }
  return {};
}

int conj_sign(int k) { return k == 0 ? 1 : -1; }

// Sign of e_i e_j in the algebra obtained after `steps` doublings.
int doubled_sign(int i, int j, int steps, const std::vector<int>& gammas) {
  if (steps == 0) return 1;
  const int half = 1 << (steps - 1);
  const int g = gammas[static_cast<std::size_t>(steps - 1)];
  const bool hi_i = i >= half;
  const bool hi_j = j >= half;
  const int x = i & (half - 1);
  const int y = j & (half - 1);
  if (!hi_i && !hi_j) return doubled_sign(x, y, steps - 1, gammas);   // (xy, 0)
  if (!hi_i && hi_j) return doubled_sign(y, x, steps - 1, gammas);    // (0, yx)
  if (hi_i && !hi_j) return conj_sign(y) * doubled_sign(x, y, steps - 1, gammas);  // (0, x conj(y))
  return g * conj_sign(y) * doubled_sign(y, x, steps - 1, gammas);   // (g conj(y) x, 0)
}

}  // namespace

CompositionTable CompositionTable::build(AlgebraName name) {
  CompositionTable t;
  t.name_ = name;
  t.gammas_ = doubling_parameters(name);
  const int steps = static_cast<int>(t.gammas_.size());
  t.dim_ = 1 << steps;
  t.signs_.resize(static_cast<std::size_t>(t.dim_ * t.dim_));
  for (int i = 0; i < t.dim_; ++i) {
    for (int j = 0; j < t.dim_; ++j) {
      t.signs_[static_cast<std::size_t>(i * t.dim_ + j)] = doubled_sign(i, j, steps, t.gammas_);
    }
  }
  return t;
}

std::pair<int, int> CompositionTable::norm_signature() const {
  int pos = 0;
  int neg = 0;
  for (int k = 0; k < dim_; ++k) (norm_sign(k) > 0 ? pos : neg)++;
  return {pos, neg};
}

const CompositionTable& standard_table(AlgebraName name) {
  static std::once_flag once;
  static std::map<AlgebraName, CompositionTable> tables;
  std::call_once(once, [] {
    for (AlgebraName n : {AlgebraName::R, AlgebraName::C, AlgebraName::Cs, AlgebraName::H,
                          AlgebraName::Hs, AlgebraName::O, AlgebraName::Os}) {
      tables.emplace(n, CompositionTable::build(n));
    }
  });
  return tables.at(name);
}

AlgElement AlgElement::zero(const CompositionTable& t) {
  return AlgElement{&t, std::vector<Rational>(static_cast<std::size_t>(t.dim()))};
}

AlgElement AlgElement::one(const CompositionTable& t) { return unit(t, 0); }

AlgElement AlgElement::unit(const CompositionTable& t, int k) {
  if (k < 0 || k >= t.dim()) throw UsageError("basis index out of range");
  AlgElement e = zero(t);
  e.coeffs[static_cast<std::size_t>(k)] = 1;
  return e;
}

AlgElement AlgElement::random(const CompositionTable& t, RandomStream& rng) {
  AlgElement e = zero(t);
  for (auto& c : e.coeffs) c = rng.next_coefficient();
  return e;
}

bool AlgElement::is_zero() const {
  for (const auto& c : coeffs) {
    if (!c.is_zero()) return false;
  }
  return true;
}

bool operator==(const AlgElement& a, const AlgElement& b) {
  return a.table == b.table && a.coeffs == b.coeffs;
}

namespace {

void require_same(const AlgElement& x, const AlgElement& y) {
  if (x.table != y.table) throw UsageError("elements belong to different composition tables");
}

}  // namespace

AlgElement operator+(const AlgElement& x, const AlgElement& y) {
  require_same(x, y);
  AlgElement r = x;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] += y.coeffs[k];
  return r;
}

AlgElement operator-(const AlgElement& x, const AlgElement& y) {
  require_same(x, y);
  AlgElement r = x;
  for (std::size_t k = 0; k < r.coeffs.size(); ++k) r.coeffs[k] -= y.coeffs[k];
  return r;
}

AlgElement operator*(const Rational& s, const AlgElement& x) {
  AlgElement r = x;
  for (auto& c : r.coeffs) c *= s;
  return r;
}

AlgElement mul(const AlgElement& x, const AlgElement& y) {
  require_same(x, y);
  const CompositionTable& t = *x.table;
  AlgElement r = AlgElement::zero(t);
  const int n = t.dim();
  for (int i = 0; i < n; ++i) {
    const Rational& xi = x.coeffs[static_cast<std::size_t>(i)];
    if (xi.is_zero()) continue;
    for (int j = 0; j < n; ++j) {
      const Rational& yj = y.coeffs[static_cast<std::size_t>(j)];
      if (yj.is_zero()) continue;
      Rational& slot = r.coeffs[static_cast<std::size_t>(i ^ j)];
      if (t.sign(i, j) > 0) {
        slot += xi * yj;
      } else {
        slot -= xi * yj;
      }
    }
  }
  return r;
}

AlgElement conj(const AlgElement& x) {
  AlgElement r = x;
  for (std::size_t k = 1; k < r.coeffs.size(); ++k) r.coeffs[k] = -r.coeffs[k];
  return r;
}

Rational norm_form(const AlgElement& x) {
  Rational n;
  for (int k = 0; k < x.table->dim(); ++k) {
    const Rational sq = x.coeffs[static_cast<std::size_t>(k)] * x.coeffs[static_cast<std::size_t>(k)];
    if (x.table->norm_sign(k) > 0) {
      n += sq;
    } else {
      n -= sq;
    }
  }
  return n;
}

Rational bilinear_inner(const AlgElement& x, const AlgElement& y) {
  require_same(x, y);
  Rational s;
  for (int k = 0; k < x.table->dim(); ++k) {
    const Rational p = x.coeffs[static_cast<std::size_t>(k)] * y.coeffs[static_cast<std::size_t>(k)];
    if (x.table->norm_sign(k) > 0) {
      s += p;
    } else {
      s -= p;
    }
  }
  return s;
}

std::string to_string(const AlgElement& x) {
  std::ostringstream os;
  os << '[';
  for (std::size_t k = 0; k < x.coeffs.size(); ++k) os << (k ? ", " : "") << x.coeffs[k];
  os << ']';
  return os.str();
}

IdentityReport identity_suite(const CompositionTable& table, int samples, std::uint64_t seed) {
  if (samples <= 0) throw UsageError("identity_suite needs samples > 0");
  RandomStream rng(seed);
  return run_identity_suite(
      std::string(to_string(table.name())), samples,
      [&] { return AlgElement::random(table, rng); },
      [](const AlgElement& a, const AlgElement& b) { return mul(a, b); },
      [](const AlgElement& a, const AlgElement& b) {
        return norm_form(mul(a, b)) == norm_form(a) * norm_form(b);
      },
      [](const AlgElement& a) { return to_string(a); });
}

std::optional<std::array<AlgElement, 3>> find_associativity_witness(const CompositionTable& table,
                                                                     int tries, std::uint64_t seed) {
  RandomStream rng(seed);
  for (int s = 0; s < tries; ++s) {
    std::array<AlgElement, 3> t{AlgElement::random(table, rng), AlgElement::random(table, rng),
                                AlgElement::random(table, rng)};
    if (mul(mul(t[0], t[1]), t[2]) != mul(t[0], mul(t[1], t[2]))) return t;
  }
  const int n = table.dim();
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        std::array<AlgElement, 3> t{AlgElement::unit(table, i), AlgElement::unit(table, j),
                                    AlgElement::unit(table, k)};
        if (mul(mul(t[0], t[1]), t[2]) != mul(t[0], mul(t[1], t[2]))) return t;
      }
    }
  }
  return std::nullopt;
}

std::optional<std::pair<AlgElement, AlgElement>> find_zero_divisor_pair(const CompositionTable& table) {
  for (int k = 1; k < table.dim(); ++k) {
    AlgElement x = AlgElement::one(table) + AlgElement::unit(table, k);
    if (!norm_form(x).is_zero()) continue;
    AlgElement y = conj(x);
    if (mul(x, y).is_zero()) return std::make_pair(std::move(x), std::move(y));
  }
  return std::nullopt;
}

}  // namespace bioct
