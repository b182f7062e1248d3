#include "bioct/report.hpp"

#include <sstream>

#include "bioct/errors.hpp"
#include "bioct/json_io.hpp"

namespace bioct {

namespace {

std::string group_name(int table) { return table == 1 ? "F4" : "E6"; }

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string md_cell(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '|') {
      out += "\\|";
    } else if (c == '\n') {
      out += ' ';
    } else {
      out += c;
    }
  }
  return out;
}

std::string opt_str(const std::optional<long>& v) { return v ? std::to_string(*v) : std::string(); }

Json opt_json(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

struct Stabilizer {
  std::string name;
  std::vector<std::pair<long, long>> factors;  ///< so(p, q) summands
};

struct Orbit {
  std::string plane;
  std::string group;
  long group_dim;
  long group_chi;
  Stabilizer h;
  long expected_dim;
  long stated_chi;
};

const std::vector<Orbit>& orbits() {
  static const std::vector<Orbit> list = {
      {"OP2", "F4(-52)", 52, -52, {"Spin9", {{9, 0}}}, 16, -16},
      {"OH2", "F4(-20)", 52, -20, {"Spin9", {{9, 0}}}, 16, 16},
      {"OH~2", "F4(-20)", 52, -20, {"Spin8,1", {{8, 1}}}, 16, 0},
      {"OsP2", "F4(4)", 52, 4, {"Spin5,4", {{5, 4}}}, 16, 0},
      {"(CxO)P2", "E6(-78)", 78, -78, {"Spin10xU1", {{10, 0}, {2, 0}}}, 32, -32},
      {"(CxO)H2", "E6(-14)", 78, -14, {"Spin10xU1", {{10, 0}, {2, 0}}}, 32, 32},
      {"(CxO)H~2", "E6(-14)", 78, -14, {"Spin8,2xU1", {{8, 2}, {2, 0}}}, 32, 0},
      {"(CxOs)P2", "E6(2)", 78, 2, {"Spin6,4xU1", {{6, 4}, {2, 0}}}, 32, 0},
      {"(CsxO)P2", "E6(-26)", 78, -26, {"Spin5,5xSO1,1", {{5, 5}, {1, 1}}}, 32, 0},
      {"(CsxOs)P2", "E6(6)", 78, 6, {"Spin5,5xSO1,1", {{5, 5}, {1, 1}}}, 32, 0},
  };
  return list;
}

void finish_lie_row(TableRow& row, const OperatorBasis& basis, const KillingOptions& kopts) {
  const auto k = killing_character(basis, kopts);
  row.dim = basis.dim();
  row.chi = k.character;
  row.computed_label = k.label;
  row.paths_agree = k.paths_agree;
  row.certified = !basis.solve || (basis.solve->certified && basis.solve->crosscheck_agrees());
  row.pass = row.dim == row.expected_dim && row.chi == row.expected_chi && row.certified && row.paths_agree;
}

// str0 = der + traceless multiplications; certify through the derivation solve.
void finish_str0_row(TableRow& row, const FiniteAlgebra& j, const TableOptions& o) {
  const auto der = derivation_basis(j, o.solver);
  const auto basis = reduced_structure_basis(j, o.solver);
  finish_lie_row(row, basis, o.killing);
  row.certified = der.solve && der.solve->certified && der.solve->crosscheck_agrees();
  row.pass = row.pass && row.certified;
}

}  // namespace

OutputFormat parse_format(std::string_view text) {
  if (text == "md") return OutputFormat::Markdown;
  if (text == "json") return OutputFormat::Json;
  if (text == "csv") return OutputFormat::Csv;
  throw UsageError("unknown format \"" + std::string(text) + "\" (md, json, csv)");
}

bool RunReport::passed() const {
  if (partial) return false;
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

std::string RunReport::status() const {
  if (partial) return "partial";
  return passed() ? "pass" : "fail";
}

std::string render(const RunReport& r, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json: {
      Json checks = Json::array();
      for (const auto& c : r.checks) {
        Json j{{"name", c.name}, {"expected", c.expected}, {"computed", c.computed}, {"kind", c.kind},
               {"result", c.pass ? "pass" : "fail"}};
        if (!c.pass && !c.counterexample.empty()) j["counterexample"] = c.counterexample;
        checks.push_back(std::move(j));
      }
      os << Json{{"command", r.command}, {"status", r.status()}, {"checks", checks}}.dump(2) << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << "name,expected,computed,kind,result,counterexample\n";
      for (const auto& c : r.checks) {
        os << csv_field(c.name) << ',' << csv_field(c.expected) << ',' << csv_field(c.computed) << ','
           << c.kind << ',' << (c.pass ? "pass" : "fail") << ',' << csv_field(c.counterexample) << "\n";
      }
      break;
    case OutputFormat::Markdown:
      os << "## " << r.command << ": " << r.status() << "\n\n";
      os << "| check | expected | computed | kind | result |\n|---|---|---|---|---|\n";
      for (const auto& c : r.checks) {
        os << "| " << md_cell(c.name) << " | " << md_cell(c.expected) << " | " << md_cell(c.computed) << " | "
           << c.kind << " | " << (c.pass ? "PASS" : "FAIL") << " |\n";
      }
      for (const auto& c : r.checks) {
        if (!c.pass && !c.counterexample.empty()) os << "\n- " << c.name << " counterexample: `" << c.counterexample << "`";
      }
      os << "\n";
      break;
  }
  return os.str();
}

long orthogonal_dim(long p, long q) { return (p + q) * (p + q - 1) / 2; }

long orthogonal_character(long p, long q) { return p * q - (p * (p - 1) + q * (q - 1)) / 2; }

std::vector<CosetRow> coset_checks() {
  std::vector<CosetRow> out;
  for (const auto& o : orbits()) {
    CosetRow c;
    c.plane = o.plane;
    c.group = o.group;
    c.stabilizer = o.h.name;
    c.group_dim = o.group_dim;
    long hchi = 0;
    for (const auto& [p, q] : o.h.factors) {
      c.stabilizer_dim += orthogonal_dim(p, q);
      hchi += orthogonal_character(p, q);
    }
    c.dim = c.group_dim - c.stabilizer_dim;
    c.expected_dim = o.expected_dim;
    c.chi = o.group_chi - hchi;
    c.stated_chi = o.stated_chi;
    c.pass = c.dim == c.expected_dim;
    out.push_back(c);
  }
  return out;
}

bool TableDocument::passed() const {
  for (const auto& r : rows) {
    if (!r.pass) return false;
  }
  for (const auto& c : cosets) {
    if (!c.pass) return false;
  }
  return true;
}

TableDocument table_report(const TableOptions& o) {
  auto say = [&](const std::string& s) {
    if (o.progress) o.progress(s);
  };
  TableDocument doc;
  auto run = [&](TableRow row, const std::function<void(TableRow&)>& body) {
    say(row.plane + ": " + row.route);
    try {
      body(row);
    } catch (const std::exception& e) {
      row.pass = false;
      row.error = e.what();
    }
    doc.rows.push_back(std::move(row));
  };

  run({.table = 1, .plane = "OP2(C)", .label = "F4(C)", .expected_dim = 52, .complex_dim = true,
       .route = "C-linear der(J3(CxO))"},
      [&](TableRow& r) {
        const auto res = complex_linear_derivations(complexified_jordan_carrier(AlgebraName::O), o.solver);
        r.dim = res.nullity() / 2;
        r.certified = res.certified && res.crosscheck_agrees();
        r.computed_label = r.dim == 52 && res.nullity() % 2 == 0 ? "F4(C)" : "";
        r.pass = r.dim == 52 && res.nullity() % 2 == 0 && r.certified;
      });
  run({.table = 1, .plane = "OP2", .label = "F4(-52)", .expected_dim = 52, .expected_chi = -52,
       .route = "der(J3(O))"},
      [&](TableRow& r) { finish_lie_row(r, derivation_basis(jordan_carrier(AlgebraName::O), o.solver), o.killing); });
  run({.table = 1, .plane = "OsP2", .label = "F4(4)", .expected_dim = 52, .expected_chi = 4,
       .route = "der(J3(Os))"},
      [&](TableRow& r) { finish_lie_row(r, derivation_basis(jordan_carrier(AlgebraName::Os), o.solver), o.killing); });
  run({.table = 1, .plane = "OH2", .label = "F4(-20)", .expected_dim = 52, .expected_chi = -20,
       .route = "der(J2,1(O))"},
      [&](TableRow& r) {
        finish_lie_row(r, derivation_basis(jordan_carrier(AlgebraName::O, Metric::lorentzian()), o.solver),
                       o.killing);
      });

  run({.table = 2, .plane = "(CxO)P2", .label = "E6(-78)", .expected_dim = 78, .expected_chi = -78,
       .route = "unitary, CxO, definite"},
      [&](TableRow& r) {
        finish_lie_row(r, unitary_real_form(AlgebraName::O, Metric::definite(), o.solver), o.killing);
      });
  run({.table = 2, .plane = "(CsxOs)P2", .label = "E6(6)", .expected_dim = 78, .expected_chi = 6,
       .route = "str0(J3(Os))"},
      [&](TableRow& r) { finish_str0_row(r, jordan_carrier(AlgebraName::Os), o); });
  run({.table = 2, .plane = "(CxOs)P2", .label = "E6(2)", .expected_dim = 78, .expected_chi = 2,
       .route = "unitary, CxOs, definite"},
      [&](TableRow& r) {
        finish_lie_row(r, unitary_real_form(AlgebraName::Os, Metric::definite(), o.solver), o.killing);
      });
  run({.table = 2, .plane = "(CsxO)P2", .label = "E6(-26)", .expected_dim = 78, .expected_chi = -26,
       .route = "str0(J3(O))"},
      [&](TableRow& r) { finish_str0_row(r, jordan_carrier(AlgebraName::O), o); });
  run({.table = 2, .plane = "(CxO)H2", .label = "E6(-14)", .expected_dim = 78, .expected_chi = -14,
       .route = "unitary, CxO, (+,+,-)"},
      [&](TableRow& r) {
        finish_lie_row(r, unitary_real_form(AlgebraName::O, Metric::lorentzian(), o.solver), o.killing);
      });

  doc.cosets = coset_checks();
  for (auto& c : doc.cosets) {
    for (const auto& r : doc.rows) {
      if (r.label == c.group && r.error.empty() && !r.complex_dim) {
        c.group_dim = static_cast<long>(r.dim);
        c.dim = c.group_dim - c.stabilizer_dim;
        c.pass = c.dim == c.expected_dim;
        break;
      }
    }
  }
  return doc;
}

RunReport to_run_report(const TableDocument& doc) {
  RunReport rep;
  rep.command = "tables";
  for (const auto& r : doc.rows) {
    CheckResult c;
    c.name = group_name(r.table) + " " + r.plane;
    c.kind = "reference";
    c.expected = r.label + " dim " + std::to_string(r.expected_dim) + (r.complex_dim ? " (complex)" : "") +
                 (r.expected_chi ? " chi " + std::to_string(*r.expected_chi) : "");
    if (r.error.empty()) {
      c.computed = r.computed_label + " dim " + std::to_string(r.dim) + (r.chi ? " chi " + std::to_string(*r.chi) : "");
    } else {
      c.computed = "error";
      rep.partial = true;
    }
    c.pass = r.pass;
    if (!r.pass) {
      c.counterexample = !r.error.empty() ? r.error
                         : !r.certified   ? std::string("prime-field cross-check disagrees")
                         : !r.paths_agree ? std::string("exact and float signatures disagree")
                                          : c.computed;
    }
    rep.add(std::move(c));
  }
  for (const auto& s : doc.cosets) {
    CheckResult c;
    c.name = "coset " + s.plane;
    c.kind = "reference";
    c.expected = std::to_string(s.expected_dim);
    c.computed = std::to_string(s.group_dim) + " - " + std::to_string(s.stabilizer_dim) + " = " + std::to_string(s.dim);
    c.pass = s.pass;
    if (!c.pass) c.counterexample = c.computed;
    rep.add(std::move(c));
  }
  return rep;
}

std::string render(const TableDocument& doc, OutputFormat f) {
  std::ostringstream os;
  switch (f) {
    case OutputFormat::Json: {
      Json tables = Json::array();
      for (int t = 1; t <= 2; ++t) {
        Json rows = Json::array();
        for (const auto& r : doc.rows) {
          if (r.table != t) continue;
          Json j{{"plane", r.plane},
                 {"isometry", r.label},
                 {"expected_dim", r.expected_dim},
                 {"expected_chi", opt_json(r.expected_chi)},
                 {"dim_field", r.complex_dim ? "C" : "R"},
                 {"route", r.route},
                 {"dim", r.dim},
                 {"chi", opt_json(r.chi)},
                 {"computed_label", r.computed_label},
                 {"certified", r.certified},
                 {"signature_paths_agree", r.paths_agree},
                 {"result", r.pass ? "pass" : "fail"}};
          if (!r.error.empty()) j["error"] = r.error;
          rows.push_back(std::move(j));
        }
        tables.push_back(Json{{"group", group_name(t)}, {"rows", rows}});
      }
      Json cosets = Json::array();
      for (const auto& c : doc.cosets) {
        cosets.push_back(Json{{"plane", c.plane},
                              {"group", c.group},
                              {"stabilizer", c.stabilizer},
                              {"group_dim", c.group_dim},
                              {"stabilizer_dim", c.stabilizer_dim},
                              {"dim", c.dim},
                              {"expected_dim", c.expected_dim},
                              {"chi", c.chi},
                              {"stated_chi", c.stated_chi},
                              {"result", c.pass ? "pass" : "fail"}});
      }
      os << Json{{"status", doc.passed() ? "pass" : "fail"}, {"tables", tables}, {"cosets", cosets}}.dump(2)
         << "\n";
      break;
    }
    case OutputFormat::Csv:
      os << "group,plane,isometry,expected_dim,expected_chi,dim,chi,computed_label,route,result\n";
      for (const auto& r : doc.rows) {
        os << group_name(r.table) << ',' << csv_field(r.plane) << ',' << csv_field(r.label) << ',' << r.expected_dim
           << (r.complex_dim ? "C" : "") << ',' << opt_str(r.expected_chi) << ',' << r.dim << ','
           << opt_str(r.chi) << ',' << csv_field(r.computed_label) << ',' << csv_field(r.route) << ','
           << (r.pass ? "pass" : "fail") << "\n";
      }
      os << "\ncoset,group,stabilizer,group_dim,stabilizer_dim,dim,expected_dim,chi,stated_chi,result\n";
      for (const auto& c : doc.cosets) {
        os << csv_field(c.plane) << ',' << csv_field(c.group) << ',' << csv_field(c.stabilizer) << ','
           << c.group_dim << ',' << c.stabilizer_dim << ',' << c.dim << ',' << c.expected_dim << ',' << c.chi
           << ',' << c.stated_chi << ',' << (c.pass ? "pass" : "fail") << "\n";
      }
      break;
    case OutputFormat::Markdown:
      for (int t = 1; t <= 2; ++t) {
        os << "### " << group_name(t) << " planes\n\n";
        os << "| Plane | Isometry | computed dim | computed chi | computed form | route | result |\n";
        os << "|---|---|---|---|---|---|---|\n";
        for (const auto& r : doc.rows) {
          if (r.table != t) continue;
          os << "| " << r.plane << " | " << r.label << " | " << r.dim << (r.complex_dim ? " (over C)" : "")
             << " | " << opt_str(r.chi) << " | " << r.computed_label << " | " << r.route << " | "
             << (r.pass ? "PASS" : "FAIL" + (r.error.empty() ? std::string() : ": " + md_cell(r.error))) << " |\n";
        }
        os << "\n";
      }
      os << "### Cosets\n\n| Plane | G / H | dim G - dim H | expected | chi(G) - chi(H) | stated chi | result |\n";
      os << "|---|---|---|---|---|---|---|\n";
      for (const auto& c : doc.cosets) {
        os << "| " << c.plane << " | " << c.group << " / " << c.stabilizer << " | " << c.group_dim << " - "
           << c.stabilizer_dim << " = " << c.dim << " | " << c.expected_dim << " | " << c.chi << " | "
           << c.stated_chi << " | " << (c.pass ? "PASS" : "FAIL") << " |\n";
      }
      break;
  }
  return os.str();
}

}  // namespace bioct
