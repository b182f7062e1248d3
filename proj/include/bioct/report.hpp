#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bioct/liealg.hpp"

namespace bioct {

enum class OutputFormat { Markdown, Json, Csv };

/// "md", "json" or "csv"; throws UsageError otherwise.
OutputFormat parse_format(std::string_view text);

/// kind is "reference" (a value stated by the source tables), "derived"
/// (from an independent computation) or "trivial".
struct CheckResult {
  std::string name;
  std::string expected;
  std::string computed;
  std::string kind = "derived";
  bool pass = false;
  std::string counterexample;  ///< serialized witness, required when pass is false
};

struct RunReport {
  std::string command;
  std::vector<CheckResult> checks;
  /// Some constituent computation threw; its checks carry the error.
  bool partial = false;

  void add(CheckResult c) { checks.push_back(std::move(c)); }
  bool passed() const;
  /// "pass", "fail" or "partial".
  std::string status() const;
  /// 0 iff every check passed, 1 otherwise.
  int exit_code() const { return passed() ? 0 : 1; }
};

std::string render(const RunReport& r, OutputFormat f);

struct TableRow {
  int table = 1;  ///< 1: F4 planes, 2: E6 planes
  std::string plane;
  std::string label;           ///< expected isometry algebra
  std::size_t expected_dim = 0;
  std::optional<long> expected_chi;
  bool complex_dim = false;    ///< dimension counted over C, no character
  std::string route;
  std::size_t dim = 0;
  std::optional<long> chi;
  std::string computed_label;
  bool certified = false;      ///< prime-field cross-check agreed
  bool paths_agree = true;     ///< exact and float signatures agree
  bool pass = false;
  std::string error;
};

/// dim(G/H) = dim G - dim H with dim so(p, q) = n(n - 1)/2, n = p + q.
struct CosetRow {
  std::string plane;
  std::string group;
  std::string stabilizer;
  long group_dim = 0;
  long stabilizer_dim = 0;
  long dim = 0;
  long expected_dim = 0;
  /// Character of the tangent space, chi(G) - chi(H), and the value implied by
  /// the stated (non-compact, compact) type. Informational only.
  long chi = 0;
  long stated_chi = 0;
  bool pass = false;
};

struct TableDocument {
  std::vector<TableRow> rows;
  std::vector<CosetRow> cosets;
  bool passed() const;
};

struct TableOptions {
  linalg::NullspaceOptions solver;
  KillingOptions killing;
  /// Receives one line before each constituent computation.
  std::function<void(const std::string&)> progress;
};

/// Dimension of so(p, q).
long orthogonal_dim(long p, long q);
/// p q - (p(p-1) + q(q-1))/2, the character of so(p, q).
long orthogonal_character(long p, long q);

std::vector<CosetRow> coset_checks();
TableDocument table_report(const TableOptions& opts = {});
RunReport to_run_report(const TableDocument& doc);
std::string render(const TableDocument& doc, OutputFormat f);

}  // namespace bioct
