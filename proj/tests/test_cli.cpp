#include <cmath>
#include <cstdio>
#include <filesystem>
#include <numbers>
#include <string>

#include <gtest/gtest.h>
#include <json.hpp>

#include "support.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

const std::string cli = VANGLE_CLI_PATH;

support::RunResult vangle(const std::string& args) { return support::run(cli + " " + args + " 2>/dev/null"); }

fs::path scratch() {
  const fs::path p = fs::temp_directory_path() / ("vangle_cli_test_" + std::to_string(::getpid()));
  fs::create_directories(p);
  return p;
}

}  // namespace

TEST(Cli, MetricDiskExample) {
  const auto r = vangle("metric --domain disk --metric v --x 0,0 --y 0.5,0");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_NEAR(j["value"].get<double>(), std::numbers::pi / 6, 1e-12);
}

TEST(Cli, MetricOracleAndJsonDomain) {
  const auto r = vangle(
      "metric --domain '{\"variant\":\"polygon\",\"vertices\":[[0,0],[2,0],[0,2]]}' --metric s --x 0.3,0.4 --y 0.9,0.2 "
      "--oracle");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  EXPECT_LT(std::abs(j["difference"].get<double>()), 1e-6);
  EXPECT_EQ(j["method"], "per-edge-analytic");
}

TEST(Cli, MetricRhoAndJ) {
  const json a = json::parse(vangle("metric --domain halfplane --metric rho --x 0,1 --y 0,4").out);
  EXPECT_NEAR(a["value"].get<double>(), std::log(4.0), 1e-14);
  const json b = json::parse(vangle("metric --domain disk --metric j --x 0,0 --y 0.5,0").out);
  EXPECT_NEAR(b["value"].get<double>(), std::log(2.0), 1e-14);
}

TEST(Cli, UsageErrorsExitTwo) {
  EXPECT_EQ(vangle("metric --domain disk --metric v --x 0,0").exit_code, 2);
  EXPECT_EQ(vangle("metric --bogus").exit_code, 2);
  EXPECT_EQ(vangle("frobnicate").exit_code, 2);
  EXPECT_EQ(vangle("metric --domain disk --metric q --x 0,0 --y 0.5,0").exit_code, 2);
  EXPECT_EQ(vangle("metric --domain disk --metric v --x '0;0' --y 0.5,0").exit_code, 2);
  EXPECT_EQ(vangle("metric --domain '{\"variant\":\"polygon\"}' --metric v --x 0,0 --y 0.5,0").exit_code, 2);
  EXPECT_EQ(vangle("metric --domain disk --metric v --x 2,0 --y 0.5,0").exit_code, 2);
  EXPECT_EQ(vangle("verify --tolerance -1").exit_code, 2);
  EXPECT_EQ(vangle("verify --suite nonsense").exit_code, 2);
}

TEST(Cli, VerifySpecfunExitsZero) { EXPECT_EQ(vangle("verify --suite specfun").exit_code, 0); }

TEST(Cli, VerifyViolationsExitOne) {
  // At this tolerance the last-bit rounding in the tight bound
  // phi_1(r) <= r counts as a violation.
  EXPECT_EQ(vangle("verify --suite specfun --tolerance 1e-300").exit_code, 1);
}

TEST(Cli, VerifySeedFlagBeatsEnvironment) {
  const fs::path dir = scratch();
  const std::string a = (dir / "a.json").string(), b = (dir / "b.json").string();
  ASSERT_EQ(support::run("ANGLES_SEED=5 " + cli + " verify --suite disk-chain --samples 50 --json " + a + " >/dev/null")
                .exit_code,
            0);
  ASSERT_EQ(support::run("ANGLES_SEED=9 " + cli + " verify --suite disk-chain --samples 50 --seed 5 --json " + b +
                         " >/dev/null")
                .exit_code,
            0);
  EXPECT_EQ(json::parse(support::slurp(a))["seed"], 5);
  EXPECT_EQ(support::slurp(a), support::slurp(b));
  fs::remove_all(dir);
}

TEST(Cli, ExtremalSvg) {
  const fs::path dir = scratch();
  for (const std::string args : {"--model halfplane --x 0,1 --y 3,2", "--model disk --x 0.3,0.1 --y -0.2,0.4",
                                 "--model halfplane --x -1,1 --y 1,1", "--model disk --x 0.5,0 --y -0.5,0"}) {
    const std::string f = (dir / "c.svg").string();
    const auto r = vangle("extremal " + args + " --svg " + f);
    ASSERT_EQ(r.exit_code, 0) << args;
    const json j = json::parse(r.out);
    EXPECT_LT(j["certificate"].get<double>(), 1e-8);
    const std::string doc = support::slurp(f);
    EXPECT_TRUE(support::well_formed_xml(doc)) << args;
    EXPECT_LT(support::svg_tangency_defect(doc), 1e-6) << args;
    EXPECT_NE(doc.find("viewBox=\"0 0 800 800\""), std::string::npos);
    EXPECT_NE(doc.find("id=\"segment\""), std::string::npos);
    EXPECT_NE(doc.find("id=\"bisector\""), std::string::npos);
  }
  fs::remove_all(dir);
}

TEST(Cli, ConstantsTable) {
  const auto r = vangle("constants --K 1,2 --n 2 --json");
  ASSERT_EQ(r.exit_code, 0);
  const json j = json::parse(r.out);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_NEAR(j[0]["C2"].get<double>(), 64 * std::numbers::pi, 1e-12);
  EXPECT_NEAR(j[1]["t0"].get<double>(), 1.0 / 256, 1e-15);
}

TEST(Cli, CounterexampleTables) {
  const json p = json::parse(vangle("counterexample punctured --kmax 5 --json").out);
  ASSERT_EQ(p.size(), 4u);
  EXPECT_EQ(p[0]["k"], 2);
  EXPECT_NEAR(p[0]["s"].get<double>(), 1.0 / 3, 1e-12);
  EXPECT_NEAR(p[0]["v"].get<double>(), std::atan(2 / (3 * std::sqrt(5.0))), 1e-12);
  const json a = json::parse(vangle("counterexample analytic --kmax 3 --json").out);
  ASSERT_EQ(a.size(), 3u);
  EXPECT_NEAR(a[2]["s_after"].get<double>(), (std::numbers::e - 1) / (std::numbers::e + 1), 1e-10);
  EXPECT_EQ(vangle("counterexample punctured --kmax 1").exit_code, 2);
}
