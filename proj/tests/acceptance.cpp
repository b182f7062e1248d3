#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "bioct/composition.hpp"
#include "bioct/jordan.hpp"
#include "bioct/liealg.hpp"
#include "bioct/report.hpp"
#include "bioct/tensor.hpp"
#include "bioct/veronese.hpp"

using namespace bioct;

namespace {

constexpr double kFloatTolerance = 1e-8;
constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int id, const std::string& name, double budget_s, const std::function<Outcome()>& body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome r;
  try {
    r = body();
  } catch (const std::exception& e) {
    r = {false, std::string("exception: ") + e.what()};
  }
  const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  const bool in_time = dt <= budget_s;
  const bool ok = r.pass && in_time;
  if (!ok) ++failures;
  std::printf("%s %2d %s: %s (%.2fs of %.0fs)%s\n", ok ? "PASS" : "FAIL", id, name.c_str(), r.detail.c_str(), dt,
              budget_s, in_time ? "" : " over budget");
  std::fflush(stdout);
}

std::string n(std::size_t x) { return std::to_string(x); }

const TensorAlgebra kCxO{};

Outcome composition_dichotomy() {
  const auto c = composition_check(kCxO, NormKind::ComplexN, 1000, kSeed);
  const auto r = composition_check(kCxO, NormKind::RealSq, 100, kSeed);
  const auto one = TensorElement::unit(kCxO, 0);
  const auto ie1 = TensorElement::imaginary_unit(kCxO, 1);
  const Scalar lhs = norm(mul(one + ie1, one - ie1), NormKind::RealSq);
  const Scalar rhs = mul(ScalarKind::Complex, norm(one + ie1, NormKind::RealSq), norm(one - ie1, NormKind::RealSq));
  const bool canonical = lhs == Scalar(0) && rhs == Scalar(4);
  const bool random_found = r.first_random_failure.has_value();
  return {c.passed && c.evaluated == 1001 && random_found && canonical,
          "complex norm composes on " + std::to_string(c.evaluated) + " pairs; real norm fails at random pair " +
              (random_found ? std::to_string(*r.first_random_failure) : "none") + "; 1+-i e1 gives " +
              to_string(lhs) + " vs " + to_string(rhs)};
}

Outcome zero_divisors() {
  RandomStream rng(kSeed);
  int agree = 0, isotropic = 0;
  for (int s = 0; s < 500; ++s) {
    TensorElement b = TensorElement::random(kCxO, rng);
    if (s % 2 == 1) {
      const auto a = TensorElement::random_real(kCxO, rng);
      const int k = 1 + static_cast<int>(rng.uniform(7));
      b = a + mul(TensorElement::imaginary_unit(kCxO, 0), mul(a, TensorElement::unit(kCxO, k)));
    }
    const bool null_norm = norm(b, NormKind::ComplexN).is_zero();
    isotropic += null_norm ? 1 : 0;
    if ((left_multiplication_rank(b) == 16) == !null_norm) ++agree;
  }
  return {agree == 500 && isotropic > 0,
          std::to_string(agree) + "/500 agree, " + std::to_string(isotropic) + " with N = 0"};
}

Outcome identity_suites() {
  int suites = 0, passed = 0;
  for (auto a : {AlgebraName::O, AlgebraName::Os}) {
    ++suites;
    passed += identity_suite(standard_table(a), 500, kSeed).all_passed() ? 1 : 0;
  }
  for (auto s : {ScalarKind::Complex, ScalarKind::Split}) {
    for (auto o : {AlgebraName::O, AlgebraName::Os}) {
      ++suites;
      passed += tensor_identity_suite({s, o}, 500, kSeed).all_passed() ? 1 : 0;
    }
  }
  const auto w = find_associativity_witness(standard_table(AlgebraName::O), 500, kSeed);
  std::string shown = "none";
  if (w) shown = to_string((*w)[0]) + ", " + to_string((*w)[1]) + ", " + to_string((*w)[2]);
  return {passed == suites && w.has_value(),
          std::to_string(passed) + "/" + std::to_string(suites) + " suites pass; associativity witness on O: " + shown};
}

Outcome veronese_jordan() {
  const PlaneKind kind = PlaneKind::complex(kCxO);
  RandomStream rng(kSeed);
  int rank_one = 0;
  for (int i = 0; i < 300; ++i) {
    AffinePoint p{AffinePoint::Case::Point, TensorElement::random(kCxO, rng), TensorElement::random(kCxO, rng)};
    if (i % 10 == 7) p = {AffinePoint::Case::SlopePoint, TensorElement::random(kCxO, rng), {}};
    if (i % 10 == 8) p = {AffinePoint::Case::Infinity, {}, {}};
    auto v = affine_triple(kind, p);
    if (i % 10 == 9) v = v.scaled(Scalar(rng.next_coefficient(), rng.next_coefficient() + Rational(1)));
    const auto a = from_veronese(v);
    if (is_veronese(v) && sharp(a).is_zero() && det(a).is_zero()) ++rank_one;
  }
  int generic = 0;
  for (int i = 0; i < 300; ++i) {
    const auto v = random_triple(kind, rng);
    if (!is_veronese(v) && !sharp(from_veronese(v)).is_zero()) ++generic;
  }
  int hc = 0;
  for (auto a : {TensorAlgebra{ScalarKind::Real, AlgebraName::O}, TensorAlgebra{ScalarKind::Real, AlgebraName::Os},
                 kCxO}) {
    for (int i = 0; i < 300; ++i) {
      const auto m = HermMatrix3::random(a, Conjugation::Octonionic, Metric::definite(), rng);
      if (hamilton_cayley_residual(m).is_zero()) ++hc;
    }
  }
  return {rank_one == 300 && generic == 300 && hc == 900,
          "Veronese with sharp = det = 0: " + std::to_string(rank_one) + "/300; generic sharp != 0: " +
              std::to_string(generic) + "/300; Hamilton-Cayley: " + std::to_string(hc) + "/900"};
}

Outcome incidence_and_completion() {
  const PlaneKind kind = PlaneKind::complex(kCxO);
  RandomStream rng(kSeed);
  int inc = 0, invol = 0;
  for (int i = 0; i < 200; ++i) {
    const auto x = TensorElement::random(kCxO, rng);
    const auto s = TensorElement::random(kCxO, rng);
    const auto t = TensorElement::random(kCxO, rng);
    const auto p = affine_embed(kind, {AffinePoint::Case::Point, x, mul(s, x) + t});
    if (incident(p, line_embed(kind, {AffineLine::Case::Slope, s, t}))) ++inc;
    const auto pol = i % 2 ? Polarity::Hyperbolic : Polarity::Elliptic;
    if (polar_map(polar_map(p, pol)) == p) ++invol;
  }
  const auto d = adjacency_demo(kCxO);
  std::size_t common = 0;
  for (std::size_t i = 0; i < d.lines.size(); ++i) {
    bool fresh = true;
    for (std::size_t j = 0; j < i; ++j) fresh = fresh && !(d.lines[i] == d.lines[j]);
    if (fresh && incident(d.points[0], d.lines[i]) && incident(d.points[1], d.lines[i])) ++common;
  }
  const bool adjacent = !(d.points[0] == d.points[1]) && common >= 2;
  return {inc == 200 && invol == 200 && adjacent,
          "incident " + std::to_string(inc) + "/200; polarity involutive " + std::to_string(invol) +
              "/200; adjacent points share " + n(common) + " lines"};
}

Outcome dimension_counts() {
  const auto c = tangent_survey(PlaneKind::complex(kCxO), 20, kSeed);
  const auto r = tangent_survey(PlaneKind::real(kCxO), 20, kSeed);
  const bool complex_ok = c.constant && c.report.rank == 10 && c.report.dim_plane == 16;
  const bool real_ok = r.constant && r.report.dim_plane == 32;
  return {complex_ok && real_ok,
          "complex rank " + n(c.report.rank) + ", dim " + n(c.report.dim_plane) + " (want 10, 16); real ambient " +
              n(r.report.ambient) + ", measured rank " + n(r.report.rank) + " vs 19 conditions as counted, dim " +
              n(r.report.dim_plane) + " (want 32)"};
}

KillingOptions killing_opts() {
  KillingOptions k;
  k.tolerance = kFloatTolerance;
  return k;
}

struct LieCase {
  std::string name;
  std::function<OperatorBasis()> build;
  std::size_t dim;
  long chi;
};

Outcome lie_cases(const std::vector<LieCase>& cases, bool float_tolerance_only) {
  bool ok = true;
  std::string detail;
  for (const auto& c : cases) {
    const auto b = c.build();
    const auto k = killing_character(b, killing_opts());
    const bool certified = !b.solve || (b.solve->certified && b.solve->crosscheck_agrees());
    const bool chi_ok = float_tolerance_only
                            ? k.float_run && k.float_inertia.positive - k.float_inertia.negative == c.chi &&
                                  k.float_inertia.zero == 0
                            : k.character == c.chi && k.paths_agree;
    const bool row = b.dim() == c.dim && b.closed && certified && chi_ok;
    ok = ok && row;
    detail += (detail.empty() ? "" : "; ") + c.name + " " + n(b.dim()) + "/" +
              (k.character ? std::to_string(*k.character) : std::string("degenerate")) + (row ? "" : " (mismatch)");
  }
  return {ok, detail};
}

Outcome table_one() {
  const auto der = [](FiniteAlgebra a) { return [a] { return derivation_basis(a); }; };
  return lie_cases({{"der J3(O)", der(jordan_carrier(AlgebraName::O)), 52, -52},
                    {"der J3(Os)", der(jordan_carrier(AlgebraName::Os)), 52, 4},
                    {"der J2,1(O)", der(jordan_carrier(AlgebraName::O, Metric::lorentzian())), 52, -20},
                    {"der O", der(composition_carrier(AlgebraName::O)), 14, -14}},
                   false);
}

Outcome table_two() {
  return lie_cases(
      {{"str0 J3(O)", [] { return reduced_structure_basis(jordan_carrier(AlgebraName::O)); }, 78, -26},
       {"str0 J3(Os)", [] { return reduced_structure_basis(jordan_carrier(AlgebraName::Os)); }, 78, 6},
       {"su(CxO)", [] { return unitary_real_form(AlgebraName::O, Metric::definite()); }, 78, -78},
       {"su(CxO, hyperbolic)", [] { return unitary_real_form(AlgebraName::O, Metric::lorentzian()); }, 78, -14},
       {"su(CxOs)", [] { return unitary_real_form(AlgebraName::Os, Metric::definite()); }, 78, 2}},
      true);
}

Outcome matrix_models() {
  const TensorAlgebra o{ScalarKind::Real, AlgebraName::O};
  const std::size_t a3 = matrix_model_dimension(MatrixModel::A3, o, Conjugation::Octonionic);
  const std::size_t sa3 = matrix_model_dimension(MatrixModel::SA3, o, Conjugation::Octonionic);
  const std::size_t sa3c = matrix_model_dimension(MatrixModel::SA3, kCxO, Conjugation::Full);
  const std::size_t g2 = 14;
  return {a3 == 64 && sa3 == 38 && sa3c == 64 && a3 + g2 == 78 && sa3 + g2 == 52 && sa3c + g2 == 78,
          n(a3) + "+14=" + n(a3 + g2) + ", " + n(sa3) + "+14=" + n(sa3 + g2) + ", " + n(sa3c) + "+14=" +
              n(sa3c + g2)};
}

Outcome cosets() {
  bool f4 = false, e6 = false, all = true;
  for (const auto& c : coset_checks()) {
    all = all && c.pass;
    f4 = f4 || (c.group_dim == 52 && c.stabilizer_dim == 36 && c.dim == 16);
    e6 = e6 || (c.group_dim == 78 && c.stabilizer_dim == 46 && c.dim == 32);
  }
  return {all && f4 && e6, "52 - 36 = 16 and 78 - 45 - 1 = 32 present; all coset rows match"};
}

}  // namespace

int main() {
  criterion(1, "composition dichotomy", 5, composition_dichotomy);
  criterion(2, "zero-divisor criterion", 5, zero_divisors);
  criterion(3, "identity suites", 10, identity_suites);
  criterion(4, "Veronese/Jordan equivalence", 30, veronese_jordan);
  criterion(5, "incidence and completion", 10, incidence_and_completion);
  criterion(6, "dimension counts via Jacobian rank", 20, dimension_counts);
  criterion(7, "derivation algebras", 600, table_one);
  criterion(8, "reduced structure and unitary forms", 1200, table_two);
  criterion(9, "matrix-model parameter counts", 1, matrix_models);
  criterion(10, "coset arithmetic", 1, cosets);
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
