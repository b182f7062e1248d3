#include <omp.h>

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"

#include "bioct/errors.hpp"
#include "bioct/jordan.hpp"
#include "bioct/json_io.hpp"
#include "bioct/liealg.hpp"
#include "bioct/report.hpp"
#include "bioct/tensor.hpp"
#include "bioct/veronese.hpp"

using namespace bioct;

namespace {

struct Options {
  std::uint64_t seed = 0;
  int samples = 200;
  int points = 20;
  int threads = 0;
  double tolerance = 1e-8;
  std::string format = "md";
  std::string input;
  std::string output;
  std::string kind = "complex";
  std::string algebra;
  std::string metric = "definite";
};

void progress(const std::string& s) { std::cerr << "[bioct] " << s << std::endl; }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

CheckResult check(std::string name, std::string expected, std::string computed, bool pass,
                  std::string counterexample = {}, std::string kind = "derived") {
  return {std::move(name), std::move(expected), std::move(computed), std::move(kind), pass, std::move(counterexample)};
}

std::string witness_text(const std::vector<std::string>& w) {
  std::string s;
  for (const auto& x : w) s += (s.empty() ? "" : " ; ") + x;
  return s;
}

Metric parse_metric(const std::string& m) {
  if (m == "definite") return Metric::definite();
  if (m == "lorentzian") return Metric::lorentzian();
  throw UsageError("metric must be definite or lorentzian");
}

PlaneKind parse_kind(const std::string& k, TensorAlgebra a) {
  if (k == "complex") return PlaneKind::complex(a);
  if (k == "real") return PlaneKind::real(a);
  throw UsageError("kind must be complex or real");
}

linalg::NullspaceOptions solver(const Options& o) {
  linalg::NullspaceOptions s;
  s.threads = o.threads;
  return s;
}

void add_identity_checks(RunReport& rep, const IdentityReport& ir) {
  for (const auto& c : ir.checks) {
    rep.add(check(ir.algebra + " " + c.name, "holds", c.passed ? "holds" : "fails", c.passed,
                  witness_text(c.witness)));
  }
}

RunReport cmd_identities(const Options& o) {
  RunReport rep;
  rep.command = "identities";
  std::vector<std::string> names = {"O", "Os", "CxO", "CxOs", "CsxO", "CsxOs"};
  if (!o.algebra.empty()) names = {o.algebra};
  for (const auto& n : names) {
    progress("identity suite on " + n);
    const auto ta = TensorAlgebra::parse(n);
    if (n.find('x') == std::string::npos) {
      add_identity_checks(rep, identity_suite(standard_table(ta.oct), o.samples, o.seed));
      if (ta.oct == AlgebraName::O || ta.oct == AlgebraName::Os) {
        const auto w = find_associativity_witness(standard_table(ta.oct), o.samples, o.seed);
        std::string shown;
        if (w) shown = to_string((*w)[0]) + " ; " + to_string((*w)[1]) + " ; " + to_string((*w)[2]);
        rep.add(check(n + " associativity", "fails (witness)", w ? "fails: " + shown : "no witness", w.has_value(),
                      w ? "" : "no non-associative triple found"));
      }
    } else {
      add_identity_checks(rep, tensor_identity_suite(ta, o.samples, o.seed));
    }
  }
  return rep;
}

RunReport cmd_norms(const Options& o) {
  RunReport rep;
  rep.command = "norms";
  const auto ta = TensorAlgebra::parse(o.algebra.empty() ? "CxO" : o.algebra);
  progress("composition checks on " + ta.name());
  const auto cn = composition_check(ta, NormKind::ComplexN, o.samples, o.seed);
  std::string cw;
  if (cn.witness) cw = to_string(cn.witness->first) + " ; " + to_string(cn.witness->second);
  rep.add(check(ta.name() + " N(ab) = N(a)N(b)", "composes", cn.passed ? "composes" : "fails", cn.passed, cw));
  const auto rs = composition_check(ta, NormKind::RealSq, o.samples, o.seed);
  std::string rw;
  if (rs.witness) {
    rw = to_string(rs.witness->first) + " ; " + to_string(rs.witness->second) + " : " + to_string(rs.witness_lhs) +
         " != " + to_string(rs.witness_rhs);
  }
  rep.add(check(ta.name() + " real norm composes", "fails (witness)", rs.passed ? "composes" : "fails: " + rw,
                !rs.passed && rs.witness.has_value(), rs.passed ? "no counterexample found" : ""));
  if (ta.scalar != ScalarKind::Real) {
    progress("zero-divisor criterion");
    RandomStream rng(o.seed ^ 0x5a5a5a5aULL);
    int agree = 0, isotropic = 0;
    std::string bad;
    for (int s = 0; s < o.samples; ++s) {
      TensorElement b = TensorElement::random(ta, rng);
      if (s % 2 == 1) {
        // a + u (a e_k) is isotropic: N(a e_k) = N(a) and <a, a e_k> = 0.
        const int k = 1 + static_cast<int>(rng.uniform(7));
        const auto a = TensorElement::random_real(ta, rng);
        b = a + mul(TensorElement::imaginary_unit(ta, 0), mul(a, TensorElement::unit(ta, k)));
      }
      const bool null_norm = !is_invertible(ta.scalar, norm(b, NormKind::ComplexN));
      const bool invertible = left_multiplication_rank(b) == 16;
      isotropic += null_norm ? 1 : 0;
      if (invertible == !null_norm) {
        ++agree;
      } else if (bad.empty()) {
        bad = to_string(b);
      }
    }
    rep.add(check("invertible iff N(b) is a unit", std::to_string(o.samples),
                  std::to_string(agree) + " (" + std::to_string(isotropic) + " isotropic)", agree == o.samples, bad));
  }
  return rep;
}

std::vector<VeroneseTriple> read_triples(const std::string& path) {
  const Json doc = read_document(path);
  std::vector<VeroneseTriple> out;
  if (doc.is_array()) {
    for (const auto& j : doc) out.push_back(triple_from_json(j));
  } else {
    out.push_back(triple_from_json(doc));
  }
  return out;
}

RunReport cmd_veronese_check(const Options& o) {
  RunReport rep;
  rep.command = "veronese-check";
  const auto ta = TensorAlgebra::parse(o.algebra.empty() ? "CxO" : o.algebra);
  std::vector<VeroneseTriple> triples;
  std::string expected = "Veronese";
  if (!o.input.empty()) {
    triples = read_triples(o.input);
  } else {
    RandomStream rng(o.seed);
    const auto kind = parse_kind(o.kind, ta);
    for (int i = 0; i < o.samples; ++i) triples.push_back(random_veronese(kind, rng));
  }
  int pass = 0, jordan_ok = 0, jordan_n = 0;
  std::string bad, jbad;
  for (const auto& v : triples) {
    const bool ok = is_veronese(v);
    if (ok) {
      ++pass;
    } else if (bad.empty()) {
      bad = to_json(v).dump();
    }
    if (v.kind.variant == PlaneVariant::ComplexHermitian) {
      const auto a = from_veronese(v);
      ++jordan_n;
      if ((sharp(a).is_zero() && det(a).is_zero()) == ok) {
        ++jordan_ok;
      } else if (jbad.empty()) {
        jbad = to_json(v).dump();
      }
    }
  }
  const std::string n = std::to_string(triples.size());
  rep.add(check("Veronese conditions", n + " of " + n, std::to_string(pass) + " of " + n,
                pass == static_cast<int>(triples.size()), bad, o.input.empty() ? "derived" : "trivial"));
  if (jordan_n > 0) {
    rep.add(check("Veronese iff sharp(A) = 0 and det(A) = 0", std::to_string(jordan_n),
                  std::to_string(jordan_ok), jordan_ok == jordan_n, jbad));
  }
  return rep;
}

RunReport cmd_veronese_dim(const Options& o) {
  RunReport rep;
  rep.command = "veronese-dim";
  const auto ta = TensorAlgebra::parse(o.algebra.empty() ? "CxO" : o.algebra);
  const auto kind = parse_kind(o.kind, ta);
  progress("Jacobian ranks at " + std::to_string(o.points) + " points (" + kind.tag() + ")");
  const auto s = tangent_survey(kind, o.points, o.seed);
  std::string ranks;
  for (auto r : s.ranks) ranks += (ranks.empty() ? "" : ",") + std::to_string(r);
  rep.add(check("rank constant over samples", "constant", s.constant ? "constant" : ranks, s.constant,
                s.constant ? "" : ranks));
  const auto& r = s.report;
  if (kind.variant == PlaneVariant::ComplexHermitian) {
    rep.add(check("Jacobian rank (complex)", "10", std::to_string(r.rank), r.rank == 10, to_json(r).dump(),
                  "reference"));
    rep.add(check("dim plane (complex)", "16", std::to_string(r.dim_plane), r.dim_plane == 16, to_json(r).dump(),
                  "reference"));
  } else {
    rep.add(check("Jacobian rank (real)", "-", std::to_string(r.rank) + " (conditions as counted: 19)", s.constant,
                  to_json(r).dump()));
    rep.add(check("dim plane (real) = ambient - rank - 1", "32", std::to_string(r.dim_plane), r.dim_plane == 32,
                  "ambient " + std::to_string(r.ambient) + ", rank " + std::to_string(r.rank) + ", dim " +
                      std::to_string(r.dim_plane) + "; 51 - 19 = 32 would need rank 18",
                  "reference"));
  }
  return rep;
}

RunReport cmd_jordan_rank(const Options& o) {
  RunReport rep;
  rep.command = "jordan-rank";
  std::vector<HermMatrix3> mats;
  if (!o.input.empty()) {
    const Json doc = read_document(o.input);
    if (doc.is_array()) {
      for (const auto& j : doc) mats.push_back(matrix_from_json(j));
    } else {
      mats.push_back(matrix_from_json(doc));
    }
    for (std::size_t i = 0; i < mats.size(); ++i) {
      const auto& a = mats[i];
      std::cout << pretty(a) << "\n";
      rep.add(check("matrix " + std::to_string(i) + " rank", "-", std::to_string(rank(a)), true, "", "trivial"));
    }
  } else {
    const auto ta = TensorAlgebra::parse(o.algebra.empty() ? "CxO" : o.algebra);
    RandomStream rng(o.seed);
    for (int i = 0; i < o.samples; ++i) {
      mats.push_back(HermMatrix3::random(ta, Conjugation::Octonionic, parse_metric(o.metric), rng));
    }
  }
  int hc = 0, sh = 0;
  std::string hbad, sbad;
  for (const auto& a : mats) {
    if (hamilton_cayley_residual(a).is_zero()) {
      ++hc;
    } else if (hbad.empty()) {
      hbad = to_json(a).dump();
    }
    if (sharp(a) == sharp_polynomial(a)) {
      ++sh;
    } else if (sbad.empty()) {
      sbad = to_json(a).dump();
    }
  }
  const std::string n = std::to_string(mats.size());
  rep.add(check("Hamilton-Cayley residual = 0", n, std::to_string(hc), hc == static_cast<int>(mats.size()), hbad));
  rep.add(check("sharp = A^2 - tr(A) A + ...", n, std::to_string(sh), sh == static_cast<int>(mats.size()), sbad));
  return rep;
}

RunReport cmd_adjacency(const Options& o) {
  RunReport rep;
  rep.command = "adjacency-demo";
  const auto d = adjacency_demo(TensorAlgebra::parse(o.algebra.empty() ? "CxO" : o.algebra));
  std::ostringstream detail;
  detail << "points " << to_json(d.points[0].rep).dump() << " " << to_json(d.points[1].rep).dump()
         << "; annihilator " << to_string(d.annihilator);
  progress(detail.str());
  const bool distinct = !(d.points[0] == d.points[1]);
  std::size_t lines = 0;
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j) fresh = fresh && !(d.lines[i] == d.lines[j]);
    if (fresh && incident(d.points[0], d.lines[i]) && incident(d.points[1], d.lines[i])) ++lines;
  }
  rep.add(check("points distinct", "yes", yes_no(distinct), distinct, distinct ? "" : detail.str(), "trivial"));
  rep.add(check("distinct common lines", ">= 2", std::to_string(lines), lines >= 2, lines >= 2 ? "" : detail.str(),
                "reference"));
  rep.add(check("demo verified", "yes", yes_no(d.verified), d.verified, d.verified ? "" : detail.str()));
  return rep;
}

struct LieTarget {
  std::string name;
  std::size_t dim;
  std::optional<long> chi;
  std::function<OperatorBasis(const linalg::NullspaceOptions&)> build;
};

std::vector<LieTarget> lie_targets() {
  return {
      {"der(O)", 14, -14, [](auto& s) { return derivation_basis(composition_carrier(AlgebraName::O), s); }},
      {"der(Os)", 14, 2, [](auto& s) { return derivation_basis(composition_carrier(AlgebraName::Os), s); }},
      {"der(J3(O))", 52, -52, [](auto& s) { return derivation_basis(jordan_carrier(AlgebraName::O), s); }},
      {"der(J3(Os))", 52, 4, [](auto& s) { return derivation_basis(jordan_carrier(AlgebraName::Os), s); }},
      {"der(J2,1(O))", 52, -20,
       [](auto& s) { return derivation_basis(jordan_carrier(AlgebraName::O, Metric::lorentzian()), s); }},
      {"str0(J3(O))", 78, -26, [](auto& s) { return reduced_structure_basis(jordan_carrier(AlgebraName::O), s); }},
      {"str0(J3(Os))", 78, 6, [](auto& s) { return reduced_structure_basis(jordan_carrier(AlgebraName::Os), s); }},
      {"su(CxO)", 78, -78, [](auto& s) { return unitary_real_form(AlgebraName::O, Metric::definite(), s); }},
      {"su(CxO,hyp)", 78, -14, [](auto& s) { return unitary_real_form(AlgebraName::O, Metric::lorentzian(), s); }},
      {"su(CxOs)", 78, 2, [](auto& s) { return unitary_real_form(AlgebraName::Os, Metric::definite(), s); }},
  };
}

FiniteAlgebra carrier_by_name(const std::string& n) {
  if (n == "J3(O)") return jordan_carrier(AlgebraName::O);
  if (n == "J3(Os)") return jordan_carrier(AlgebraName::Os);
  if (n == "J2,1(O)") return jordan_carrier(AlgebraName::O, Metric::lorentzian());
  if (n == "J2,1(Os)") return jordan_carrier(AlgebraName::Os, Metric::lorentzian());
  if (n.find('x') != std::string::npos) return tensor_carrier(TensorAlgebra::parse(n));
  return composition_carrier(parse_algebra_name(n));
}

RunReport cmd_lie_der(const Options& o) {
  RunReport rep;
  rep.command = "lie-der";
  const std::string name = o.algebra.empty() ? "O" : o.algebra;
  const auto carrier = carrier_by_name(name);
  progress("derivations of " + carrier.name);
  const auto der = derivation_basis(carrier, solver(o));
  const auto sc = lie_structure(der);
  const bool certified = der.solve && der.solve->certified && der.solve->crosscheck_agrees();
  rep.add(check("der(" + carrier.name + ") dimension", "-", std::to_string(der.dim()), certified,
                certified ? "" : "prime-field cross-check disagrees"));
  rep.add(check("closed under commutator", "yes", yes_no(der.closed), der.closed));
  const bool jac = jacobi_holds(sc);
  rep.add(check("Jacobi identity", "holds", jac ? "holds" : "fails", jac));
  if (!carrier.complex_pairs.empty() && carrier.dim == 16) {
    const auto lin = scalar_linear_derivations(carrier, solver(o));
    rep.add(check("scalar-linear derivations (real dim)", "-",
                  std::to_string(lin.dim()) + " (complex dim " + std::to_string(lin.dim() / 2) + ")", true));
  }
  if (der.dim() > 0) {
    KillingOptions ko;
    ko.tolerance = o.tolerance;
    const auto k = killing_character(sc, ko);
    rep.add(check("Killing signature (p, q, zero)", "-",
                  "(" + std::to_string(k.p) + ", " + std::to_string(k.q) + ", " + std::to_string(k.degenerate) +
                      ") " + k.label,
                  k.paths_agree, k.paths_agree ? "" : "exact and float signatures disagree"));
  }
  return rep;
}

RunReport cmd_lie_char(const Options& o) {
  RunReport rep;
  rep.command = "lie-char";
  KillingOptions ko;
  ko.tolerance = o.tolerance;
  bool any = false;
  for (const auto& t : lie_targets()) {
    if (!o.algebra.empty() && o.algebra != t.name) continue;
    any = true;
    progress(t.name);
    try {
      const auto b = t.build(solver(o));
      const auto k = killing_character(b, ko);
      const std::string exp = std::to_string(t.dim) + ", " + std::to_string(*t.chi);
      const std::string got = std::to_string(b.dim()) + ", " + (k.character ? std::to_string(*k.character) : "none");
      const bool ok = b.dim() == t.dim && k.character == t.chi && k.paths_agree &&
                      (!b.solve || (b.solve->certified && b.solve->crosscheck_agrees()));
      rep.add(check(t.name + " (dim, chi)", exp, got + " " + k.label, ok, ok ? "" : got, "reference"));
    } catch (const ClosureError& e) {
      rep.partial = true;
      rep.add(check(t.name + " (dim, chi)", std::to_string(t.dim), "error", false,
                    std::string(e.what()) + " at (" + std::to_string(e.first) + ", " + std::to_string(e.second) + ")"));
    }
  }
  if (!any) throw UsageError("unknown construction \"" + o.algebra + "\"");
  return rep;
}

void emit(const std::string& text, const Options& o) {
  std::cout << text;
  if (!o.output.empty()) {
    std::ofstream out(o.output, std::ios::binary);
    if (!out) throw UsageError("cannot write " + o.output);
    out << text;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks for bioctonionic planes, their Jordan algebras and isometry Lie algebras"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "random samples per check")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--format", o.format, "md, json or csv")->capture_default_str()->check(CLI::IsMember({"md", "json", "csv"}));
  app.add_option("--threads", o.threads, "solver threads (0 = OpenMP default)")->capture_default_str();
  app.add_option("--tolerance", o.tolerance, "float signature tolerance")->capture_default_str();
  app.add_option("--input", o.input, "JSON input document");
  app.add_option("--output", o.output, "also write the report here");
  app.add_option("--kind", o.kind, "plane kind: complex or real")->capture_default_str();
  app.add_option("--algebra", o.algebra, "algebra, carrier or construction name");
  app.add_option("--metric", o.metric, "definite or lorentzian")->capture_default_str();
  app.add_option("--points", o.points, "sample points for veronese-dim")->capture_default_str()->check(CLI::PositiveNumber);

  const std::vector<std::pair<std::string, std::string>> subs = {
      {"identities", "alternative and Moufang identities"},
      {"norms", "composition of the complex and real norms, zero divisors"},
      {"veronese-check", "Veronese conditions on input or random triples"},
      {"veronese-dim", "Jacobian rank and plane dimension"},
      {"jordan-rank", "rank, Hamilton-Cayley and sharp checks"},
      {"adjacency-demo", "two points joined by two lines"},
      {"lie-der", "derivation algebra of a carrier"},
      {"lie-char", "dimension and Killing character of the isometry algebras"},
      {"tables", "isometry tables with computed (dim, chi)"},
  };
  for (const auto& [name, help] : subs) app.add_subcommand(name, help);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }
  if (o.threads > 0) omp_set_num_threads(o.threads);
  const std::string cmd = app.get_subcommands().front()->get_name();
  const auto start = std::chrono::steady_clock::now();
  try {
    const OutputFormat fmt = parse_format(o.format);
    int code = 0;
    if (cmd == "tables") {
      TableOptions to;
      to.solver = solver(o);
      to.killing.tolerance = o.tolerance;
      to.progress = progress;
      const auto doc = table_report(to);
      emit(render(doc, fmt), o);
      code = doc.passed() ? 0 : 1;
    } else {
      RunReport rep;
      if (cmd == "identities") rep = cmd_identities(o);
      if (cmd == "norms") rep = cmd_norms(o);
      if (cmd == "veronese-check") rep = cmd_veronese_check(o);
      if (cmd == "veronese-dim") rep = cmd_veronese_dim(o);
      if (cmd == "jordan-rank") rep = cmd_jordan_rank(o);
      if (cmd == "adjacency-demo") rep = cmd_adjacency(o);
      if (cmd == "lie-der") rep = cmd_lie_der(o);
      if (cmd == "lie-char") rep = cmd_lie_char(o);
      emit(render(rep, fmt), o);
      code = rep.exit_code();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    progress(cmd + " finished in " + std::to_string(secs) + " s");
    return code;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const UnsupportedOperation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
