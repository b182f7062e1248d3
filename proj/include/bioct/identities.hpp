#pragma once

#include <string>
#include <vector>

namespace bioct {

struct IdentityCheck {
  std::string name;
  bool passed = true;
  int evaluated = 0;
  /// Rendered (x, y, z) of the first counterexample, empty when passed.
  std::vector<std::string> witness;
};

struct IdentityReport {
  std::string algebra;
  std::vector<IdentityCheck> checks;

  bool all_passed() const {
    for (const auto& c : checks) {
      if (!c.passed) return false;
    }
    return true;
  }
  const IdentityCheck* find(const std::string& name) const {
    for (const auto& c : checks) {
      if (c.name == name) return &c;
    }
    return nullptr;
  }
};

/// Shared driver for the alternative-algebra identity battery.
///
/// `gen()` draws an element, `mul(x, y)` multiplies, `composes(x, y)` reports
/// whether N(xy) == N(x)N(y), `show(x)` renders an element for witnesses.
/// Element type must provide operator==.
template <class Gen, class Mul, class Composes, class Show>
IdentityReport run_identity_suite(std::string algebra, int samples, Gen gen, Mul mul,
                                  Composes composes, Show show) {
  IdentityReport report{std::move(algebra), {}};
  const char* names[] = {"left_alternative", "right_alternative", "flexible", "moufang_left",
                         "moufang_right",    "moufang_middle",    "composition"};
  for (const char* n : names) report.checks.push_back({n, true, 0, {}});

  auto record = [&](std::size_t idx, bool ok, const auto& x, const auto& y, const auto& z) {
    IdentityCheck& c = report.checks[idx];
    ++c.evaluated;
    if (!ok && c.passed) {
      c.passed = false;
      c.witness = {show(x), show(y), show(z)};
    }
  };

  for (int s = 0; s < samples; ++s) {
    const auto x = gen();
    const auto y = gen();
    const auto z = gen();
    const auto xx = mul(x, x);
    const auto xy = mul(x, y);
    const auto yx = mul(y, x);
    record(0, mul(x, xy) == mul(xx, y), x, y, z);
    record(1, mul(yx, x) == mul(y, xx), x, y, z);
    record(2, mul(xy, x) == mul(x, yx), x, y, z);
    // z(x(zy)) = ((zx)z)y
    const auto zx = mul(z, x);
    record(3, mul(z, mul(x, mul(z, y))) == mul(mul(zx, z), y), x, y, z);
    // x(z(yz)) = ((xz)y)z
    record(4, mul(x, mul(z, mul(y, z))) == mul(mul(mul(x, z), y), z), x, y, z);
    // (zx)(yz) = (z(xy))z
    record(5, mul(zx, mul(y, z)) == mul(mul(z, xy), z), x, y, z);
    record(6, composes(x, y), x, y, z);
  }
  return report;
}

}  // namespace bioct
