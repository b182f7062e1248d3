#include <gtest/gtest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "bioct/json_io.hpp"
#include "bioct/report.hpp"

using namespace bioct;

namespace {

struct Run {
  int code;
  std::string out;
};

Run run_cli(const std::string& args) {
  const std::string cmd = std::string(BIOCT_CLI) + " " + args + " 2>/dev/null";
  FILE* p = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  while (std::size_t n = fread(buf, 1, sizeof buf, p)) out.append(buf, n);
  const int status = pclose(p);
  return {WEXITSTATUS(status), out};
}

std::string temp_file(const std::string& name, const std::string& text) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST(Json, ElementRoundTrips) {
  RandomStream rng(1);
  const auto x = AlgElement::random(standard_table(AlgebraName::Os), rng);
  EXPECT_EQ(alg_element_from_json(to_json(x)), x);
  const auto b = TensorElement::random(TensorAlgebra{}, rng);
  EXPECT_EQ(tensor_from_json(to_json(b)), b);
  const auto v = random_veronese(PlaneKind::complex(), rng);
  EXPECT_EQ(triple_from_json(to_json(v)), v);
  const auto a = HermMatrix3::random(TensorAlgebra{}, Conjugation::Octonionic, Metric::lorentzian(), rng);
  EXPECT_EQ(matrix_from_json(to_json(a)), a);
}

TEST(Json, ElementFormat) {
  const auto j = parse_document(R"({"table":"C","coeffs":["1/2","-3"]})");
  const auto x = alg_element_from_json(j);
  EXPECT_EQ(x.coeffs[0], Rational(1, 2));
  EXPECT_EQ(to_json(x).dump(), R"({"table":"C","coeffs":["1/2","-3"]})");
  EXPECT_THROW(alg_element_from_json(parse_document(R"({"table":"C","coeffs":["1"]})")), UsageError);
  EXPECT_THROW(alg_element_from_json(parse_document(R"({"table":"C","coeffs":["1/0","1"]})")), UsageError);
}

TEST(Json, SyntaxErrorsCarryLineAndColumn) {
  try {
    parse_document("{\n  \"kind\": \"complex\",\n  \"b\": [1,,2]\n}", "t.json");
    FAIL();
  } catch (const InputError& e) {
    EXPECT_EQ(e.line, 3u);
    EXPECT_EQ(e.column, 11u);
    EXPECT_NE(std::string(e.what()).find("t.json:3:11"), std::string::npos);
  }
}

TEST(Report, CosetArithmetic) {
  EXPECT_EQ(orthogonal_dim(9, 0), 36);
  EXPECT_EQ(orthogonal_dim(10, 0), 45);
  EXPECT_EQ(orthogonal_character(8, 1), -20);
  for (const auto& c : coset_checks()) {
    EXPECT_TRUE(c.pass) << c.plane;
    EXPECT_EQ(c.dim, c.group_dim == 52 ? 16 : 32);
  }
}

TEST(Report, RendersEveryFormat) {
  RunReport r;
  r.command = "demo";
  r.add({"a", "1", "1", "derived", true, ""});
  r.add({"b, quoted \"x\"", "1", "2", "derived", false, "w"});
  EXPECT_EQ(r.status(), "fail");
  EXPECT_EQ(r.exit_code(), 1);
  EXPECT_NE(render(r, OutputFormat::Markdown).find("| b, quoted \"x\" | 1 | 2 | derived | FAIL |"), std::string::npos);
  EXPECT_NE(render(r, OutputFormat::Csv).find("\"b, quoted \"\"x\"\"\",1,2,derived,fail,w"), std::string::npos);
  const auto j = parse_document(render(r, OutputFormat::Json));
  EXPECT_EQ(j["checks"][1]["counterexample"], "w");
  EXPECT_FALSE(j["checks"][0].contains("counterexample"));
  EXPECT_THROW(parse_format("xml"), UsageError);
}

TEST(Cli, VeroneseCheckOnInfinityPoint) {
  const std::string zero = R"({"scalar":"C","oct":"O","z":[["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"]]})";
  const auto path = temp_file("inf.json", R"({"kind":"complex","b":[)" + zero + "," + zero + "," + zero +
                                              R"(],"lambda":[["0","0"],["1","0"],["0","0"]]})");
  const auto r = run_cli("veronese-check --kind complex --input " + path);
  EXPECT_EQ(r.code, 0) << r.out;
  EXPECT_NE(r.out.find("PASS"), std::string::npos);
}

TEST(Cli, NonVeroneseInputFails) {
  const std::string one = R"({"z":[["1","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"],["0","0"]]})";
  const auto path = temp_file("bad.json", R"({"kind":"complex","b":[)" + one + "," + one + "," + one +
                                              R"(],"lambda":[["0","0"],["1","0"],["0","0"]]})");
  const auto r = run_cli("veronese-check --input " + path + " --format json");
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(parse_document(r.out)["status"], "fail");
}

TEST(Cli, MalformedInputExitsTwo) {
  const auto path = temp_file("broken.json", "{\"kind\": \"complex\",\n \"b\": [}");
  EXPECT_EQ(run_cli("veronese-check --input " + path).code, 2);
  EXPECT_EQ(run_cli("no-such-command").code, 2);
  EXPECT_EQ(run_cli("norms --format xml").code, 2);
}

TEST(Cli, NormsReportWitness) {
  const auto r = run_cli("norms --algebra CxO --samples 100 --format json");
  EXPECT_EQ(r.code, 0);
  const auto j = parse_document(r.out);
  EXPECT_EQ(j["checks"][0]["result"], "pass");
  EXPECT_NE(j["checks"][1]["computed"].get<std::string>().find("0 != 4"), std::string::npos);
}

TEST(Cli, DeterministicOutput) {
  const auto a = run_cli("identities --seed 5 --samples 20 --format csv");
  const auto b = run_cli("identities --seed 5 --samples 20 --format csv --threads 1");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_NE(a.out, run_cli("jordan-rank --seed 6 --samples 5 --format csv").out);
}
