#include <gtest/gtest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "cli_app.hpp"
#include "test_support.hpp"

namespace zetasums {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

TEST(ComplexText, ParsesForms) {
  EXPECT_EQ(parse_complex("2.5"), cplx(2.5));
  EXPECT_EQ(parse_complex("-1e-3"), cplx(-1e-3));
  EXPECT_EQ(parse_complex("0.5+1i"), cplx(0.5, 1.0));
  EXPECT_EQ(parse_complex("0.5-2.25i"), cplx(0.5, -2.25));
  EXPECT_EQ(parse_complex("1e-3-2e+2i"), cplx(1e-3, -200.0));
  EXPECT_EQ(parse_complex("3i"), cplx(0.0, 3.0));
  EXPECT_EQ(parse_complex("-i"), cplx(0.0, -1.0));
  for (const char* bad : {"", "abc", "1+", "0.5+1x", "1..2", "i2"}) EXPECT_THROW(parse_complex(bad), error) << bad;
}

TEST(ComplexText, FormatsWithSeventeenDigits) {
  EXPECT_EQ(format_complex(cplx(0.1, -2.0)), "0.10000000000000001-2i");
  EXPECT_EQ(format_complex(cplx(3.0)), "3");
}

TEST(Evaluate, PreferredRoutes) {
  EvaluationRequest r;
  r.quantity = "I";
  r.a = 2.3;
  r.b = 3.7;
  const EvaluationReport rep = evaluate(r);
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].representation, "I_ZETA");
  EXPECT_LT(testing::rel(rep.results[0].value.value, I_via_zeta(ParameterPair::make(2.3, 3.7)).value), 1e-15);

  r = {};
  r.quantity = "S2";
  r.a = 0.3;
  r.b = -0.3;
  EXPECT_EQ(evaluate(r).status, ReportStatus::degenerate_routed);

  r = {};
  r.quantity = "H";
  r.n = 3;
  r.a = 2.0;
  const double h32 = 1.5 * constants::log_two_pi - constants::euler_gamma - 6.0 * constants::log_glaisher;
  EXPECT_NEAR(evaluate(r).results[0].value.value.real(), h32, 1e-12);
}

TEST(Evaluate, MissingParameterIsADomainError) {
  EvaluationRequest r;
  r.quantity = "J";
  r.a = 2.5;
  try {
    evaluate(r);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::domain);
  }
}

TEST(Compare, JHasThreeRepresentationsAndOracle) {
  EvaluationRequest r;
  r.quantity = "J";
  r.a = 2.5;
  r.b = 3.5;
  const EvaluationReport rep = compare(r);
  EXPECT_EQ(rep.results.size(), 3u);
  EXPECT_TRUE(rep.oracle.has_value());
  EXPECT_EQ(rep.status, ReportStatus::ok);
  EXPECT_LE(rep.max_pairwise_disagreement, 1e-8);
}

TEST(Compare, IAtIntegersSkipsZetaForm) {
  EvaluationRequest r;
  r.quantity = "I";
  r.a = 2.0;
  r.b = 2.0;
  const EvaluationReport rep = compare(r);
  ASSERT_EQ(rep.results.size(), 1u);
  EXPECT_EQ(rep.results[0].representation, "I_2F1");
  EXPECT_TRUE(rep.oracle.has_value());
  EXPECT_EQ(rep.status, ReportStatus::ok);
}

TEST(Compare, S1AtOrigin) {
  EvaluationRequest r;
  r.quantity = "S1";
  r.a = 0.0;
  r.b = 0.0;
  const EvaluationReport rep = compare(r);
  EXPECT_EQ(rep.results.size(), 3u);
  for (const auto& x : rep.results) EXPECT_NEAR(x.value.value.real(), -1.0 / 12.0, 1e-14) << x.representation;
  EXPECT_EQ(rep.status, ReportStatus::ok);
}

TEST(Compare, OkImpliesWithinTolerance) {
  for (const char* q : {"I", "J", "S1", "S2", "zeta", "hurwitz", "zeta1"}) {
    EvaluationRequest r;
    r.quantity = q;
    r.a = cplx(0.3, 0.2);
    r.b = 0.25;
    r.x = 0.4;
    if (std::string(q) == "I" || std::string(q) == "J") r.a = cplx(2.4, 0.2);
    const EvaluationReport rep = compare(r);
    if (rep.status == ReportStatus::ok) {
      EXPECT_LE(rep.max_pairwise_disagreement, rep.tolerance) << q;
    }
  }
}

TEST(Reports, CsvAndJsonCarryTheSameRows) {
  EvaluationRequest r;
  r.quantity = "J";
  r.a = 2.5;
  r.b = 3.5;
  const EvaluationReport rep = compare(r);
  const std::string csv = to_csv(rep);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), kCsvHeader);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 5);
  const auto j = nlohmann::json::parse(to_json(rep));
  EXPECT_EQ(j["results"].size(), 3u);
  EXPECT_EQ(j["status"], "ok");
  EXPECT_EQ(j["params"]["b"], "3.5");
}

TEST(Cli, EvalPrintsValue) {
  const CliRun r = run_cli({"eval", "I", "--a", "2.3", "--b", "3.7"});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("representation: I_ZETA"), std::string::npos);
  EXPECT_NE(r.out.find("value_re: 0.354463140751"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run_cli({"eval", "I", "--a", "1", "--b", "2"}).code, cli::kDomainError);
  EXPECT_EQ(run_cli({"eval", "I", "--a", "0.5+1x", "--b", "2"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"eval", "Q", "--a", "1"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"eval", "I", "--bogus", "1"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"suite", "--only", "nowhere"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"eval", "H", "--n", "2.5", "--a", "1"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"--help"}).code, cli::kPass);
  // an impossible comparison tolerance turns every disagreement into a failure
  EXPECT_EQ(run_cli({"compare", "J", "--a", "2.5", "--b", "3.5", "--tol", "1e-300"}).code, cli::kToleranceFailure);
}

TEST(Cli, DeterministicOutput) {
  for (const char* format : {"text", "csv", "json"}) {
    const std::vector<std::string> args = {"compare", "S2", "--a", "0.2", "--b", "0.3+0.1i", "--format", format};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out) << format;
  }
}

TEST(Cli, WritesReportFile) {
  const std::string path = ::testing::TempDir() + "zetasums_report.json";
  const CliRun r = run_cli({"eval", "zeta", "--a", "2", "--format", "json", "--out", path});
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  const auto j = nlohmann::json::parse(in);
  EXPECT_NEAR(j["results"][0]["value_re"].get<double>(), constants::pi * constants::pi / 6.0, 1e-15);
  std::remove(path.c_str());
}

TEST(Cli, SuiteSubsetAndLooserTolerance) {
  const CliRun subset = run_cli({"suite", "--only", "moments"});
  EXPECT_EQ(subset.code, 0);
  EXPECT_NE(subset.out.find("suite: 4/4 criteria passed"), std::string::npos);
  const CliRun loose = run_cli({"suite", "--only", "double_sums", "--tol", "1e-6", "--format", "json"});
  EXPECT_EQ(loose.code, 0);
  const auto j = nlohmann::json::parse(loose.out);
  EXPECT_EQ(j["tolerance_floor"], 1e-6);
  for (const auto& c : j["criteria"]) {
    for (const auto& check : c["checks"]) {
      // exact checks keep a zero threshold; every other one is raised to the floor
      const double t = check["threshold"].get<double>();
      if (t != 0.0) {
        EXPECT_GE(t, 1e-6);
      }
    }
  }
}

}  // namespace
}  // namespace zetasums
