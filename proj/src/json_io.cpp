#include "bioct/json_io.hpp"

#include <fstream>
#include <sstream>

namespace bioct {

namespace {

std::string rational_str(const Rational& r) { return r.str(); }

Rational rational_of(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw UsageError("expected a rational string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument&) {
    throw UsageError("bad rational \"" + j.get<std::string>() + "\"");
  }
}

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw UsageError(std::string("missing field \"") + key + "\"");
  return j.at(key);
}

const Json& array_of(const Json& j, const char* key, std::size_t n) {
  const Json& a = field(j, key);
  if (!a.is_array() || a.size() != n) {
    throw UsageError(std::string("field \"") + key + "\" must be an array of " + std::to_string(n));
  }
  return a;
}

Json scalar_json(const Scalar& s) { return Json::array({rational_str(s.re), rational_str(s.im)}); }

Scalar scalar_of(const Json& j) {
  if (j.is_array() && j.size() == 2) return {rational_of(j[0]), rational_of(j[1])};
  return {rational_of(j), Rational()};
}

std::string conj_tag(Conjugation c) { return c == Conjugation::Octonionic ? "octonionic" : "full"; }

Conjugation conj_of(const std::string& s) {
  if (s == "octonionic") return Conjugation::Octonionic;
  if (s == "full") return Conjugation::Full;
  throw UsageError("unknown conjugation \"" + s + "\"");
}

TensorAlgebra algebra_of(const Json& j, const TensorAlgebra& fallback) {
  TensorAlgebra a = fallback;
  if (j.is_object() && j.contains("scalar")) a.scalar = parse_scalar_kind(j.at("scalar").get<std::string>());
  if (j.is_object() && j.contains("oct")) a.oct = parse_algebra_name(j.at("oct").get<std::string>());
  return a;
}

TensorElement element_in(const Json& j, const TensorAlgebra& fallback) {
  const TensorAlgebra a = algebra_of(j, fallback);
  const Json& z = j.is_array() ? j : array_of(j, "z", 8);
  if (z.size() != 8) throw UsageError("an element needs 8 coefficients");
  TensorElement b = TensorElement::zero(a);
  for (std::size_t k = 0; k < 8; ++k) b.z[k] = scalar_of(z[k]);
  if (a.scalar == ScalarKind::Real) {
    for (const auto& s : b.z) {
      if (!s.im.is_zero()) throw UsageError("real scalars cannot have an imaginary part");
    }
  }
  return b;
}

}  // namespace

Json parse_document(std::string_view text, std::string_view source) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte == 0 ? 0 : e.byte - 1, text.size());
    for (std::size_t i = 0; i < stop; ++i) {
      if (text[i] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string msg = e.what();
    if (auto p = msg.find("parse error"); p != std::string::npos) msg = msg.substr(p);
    throw InputError(std::string(source) + ":" + std::to_string(line) + ":" + std::to_string(column) + ": " + msg,
                     line, column);
  }
}

Json read_document(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_document(ss.str(), path);
}

Json to_json(const AlgElement& x) {
  Json c = Json::array();
  for (const auto& r : x.coeffs) c.push_back(rational_str(r));
  return Json{{"table", std::string(to_string(x.table->name()))}, {"coeffs", c}};
}

AlgElement alg_element_from_json(const Json& j) {
  const auto& t = standard_table(parse_algebra_name(field(j, "table").get<std::string>()));
  const Json& c = array_of(j, "coeffs", static_cast<std::size_t>(t.dim()));
  AlgElement x = AlgElement::zero(t);
  for (std::size_t k = 0; k < c.size(); ++k) x.coeffs[k] = rational_of(c[k]);
  return x;
}

Json to_json(const TensorElement& b) {
  Json z = Json::array();
  for (const auto& s : b.z) z.push_back(scalar_json(s));
  return Json{{"scalar", std::string(to_string(b.algebra.scalar))},
              {"oct", std::string(to_string(b.algebra.oct))},
              {"z", z}};
}

TensorElement tensor_from_json(const Json& j) {
  field(j, "z");
  return element_in(j, TensorAlgebra{});
}

Json to_json(const VeroneseTriple& v) {
  Json b = Json::array(), l = Json::array();
  for (const auto& x : v.b) b.push_back(to_json(x));
  for (const auto& s : v.lambda) l.push_back(scalar_json(s));
  return Json{{"kind", v.kind.tag()},
              {"scalar", std::string(to_string(v.kind.algebra.scalar))},
              {"oct", std::string(to_string(v.kind.algebra.oct))},
              {"b", b},
              {"lambda", l}};
}

VeroneseTriple triple_from_json(const Json& j) {
  const std::string kind = field(j, "kind").get<std::string>();
  const TensorAlgebra a = algebra_of(j, TensorAlgebra{});
  PlaneKind pk;
  if (kind == "complex") {
    pk = PlaneKind::complex(a);
  } else if (kind == "real") {
    pk = PlaneKind::real(a);
  } else {
    throw UsageError("kind must be \"complex\" or \"real\"");
  }
  VeroneseTriple v = VeroneseTriple::zero(pk);
  const Json& b = array_of(j, "b", 3);
  const Json& l = array_of(j, "lambda", 3);
  for (std::size_t k = 0; k < 3; ++k) {
    v.b[k] = element_in(b[k], a);
    if (!(v.b[k].algebra == a)) throw UsageError("element algebra differs from the triple's");
    v.lambda[k] = scalar_of(l[k]);
    if (pk.variant == PlaneVariant::RealHermitian && !v.lambda[k].im.is_zero()) {
      throw UsageError("the real plane needs real lambdas");
    }
  }
  return v;
}

Json to_json(const HermMatrix3& a) {
  Json d = Json::array(), b = Json::array();
  for (const auto& x : a.diag) d.push_back(to_json(x));
  for (const auto& x : a.b) b.push_back(to_json(x));
  return Json{{"scalar", std::string(to_string(a.algebra.scalar))},
              {"oct", std::string(to_string(a.algebra.oct))},
              {"conj", conj_tag(a.conj)},
              {"metric", Json::array({a.metric.signs[0], a.metric.signs[1], a.metric.signs[2]})},
              {"diag", d},
              {"b", b}};
}

HermMatrix3 matrix_from_json(const Json& j) {
  const TensorAlgebra a = algebra_of(j, TensorAlgebra{});
  const Conjugation c = j.contains("conj") ? conj_of(j.at("conj").get<std::string>()) : Conjugation::Octonionic;
  Metric m;
  if (j.contains("metric")) {
    const Json& s = array_of(j, "metric", 3);
    for (std::size_t k = 0; k < 3; ++k) {
      const int v = s[k].get<int>();
      if (v != 1 && v != -1) throw UsageError("metric signs must be 1 or -1");
      m.signs[k] = v;
    }
  }
  HermMatrix3 h = HermMatrix3::zero(a, c, m);
  const Json& d = array_of(j, "diag", 3);
  const Json& b = array_of(j, "b", 3);
  for (std::size_t k = 0; k < 3; ++k) {
    h.diag[k] = element_in(d[k], a);
    h.b[k] = element_in(b[k], a);
    if (!(conjugate(h.diag[k], c) == h.diag[k])) throw UsageError("diagonal entries must be fixed by the conjugation");
  }
  return h;
}

Json to_json(const TangentReport& r) {
  return Json{{"kind", r.kind.tag()},
              {"algebra", r.kind.algebra.name()},
              {"ambient", r.ambient},
              {"rank", r.rank},
              {"dim_H", r.dim_h},
              {"dim_plane", r.dim_plane}};
}

}  // namespace bioct
