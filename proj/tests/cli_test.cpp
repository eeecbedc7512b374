#include "sat3ce/cli.hpp"
#include "sat3ce/json_io.hpp"
#include "test_support.hpp"

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace sat3ce;
using namespace sat3ce::testing;
namespace fs = std::filesystem;

namespace {

struct CliRun {
  int code = 0;
  std::string out, err;
  std::vector<std::string> artifacts;
};

CliRun run(std::vector<std::string> args, const std::string &stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const CommandOutcome o = run_cli(args, in, out, err);
  return {o.exit_code, out.str(), err.str(), o.artifacts};
}

class CliTest : public ::testing::Test {
protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("sat3ce_cli_" +
            std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::create_directories(dir_);
    write("two_clause.cnf", "c example\np cnf 4 2\n-1 2 4 0\n1 -3 4 0\n");
    write("unsat.cnf", to_dimacs(all_patterns_formula()));
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string &name, const std::string &text) {
    const auto p = dir_ / name;
    std::ofstream(p) << text;
    return p.string();
  }
  std::string path(const std::string &name) const {
    return (dir_ / name).string();
  }
  static std::string slurp(const std::string &p) {
    std::ifstream in(p);
    return {std::istreambuf_iterator<char>(in), {}};
  }

  fs::path dir_;
};

} // namespace

TEST_F(CliTest, Ce3SolveReferencePoint) {
  const CliRun r = run({"ce3-solve", "--b", "0.3", "--f", "1.0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  ASSERT_EQ(j["solutions"].size(), 1u);
  EXPECT_NEAR(j["best"]["e"].get<double>(), kRefE, 1e-9);
  EXPECT_NEAR(j["best"]["a"].get<double>(), kRefA, 1e-9);
  EXPECT_NEAR(j["best"]["gap"].get<double>(), kRefGap, 1e-9);
  EXPECT_NEAR(j["best"]["gap_over_d"].get<double>(), kRefGap, 1e-9);
}

TEST_F(CliTest, Ce3SolveRescalesWithD) {
  const CliRun r = run({"ce3-solve", "--b", "0.6", "--f", "2", "--d", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_NEAR(j["best"]["e"].get<double>(), 2 * kRefE, 1e-8);
  EXPECT_NEAR(j["best"]["e_over_d"].get<double>(), kRefE, 1e-9);
}

TEST_F(CliTest, Ce3SolveInfeasible) {
  const CliRun r = run({"ce3-solve", "--b", "0.7", "--f", "1.0"});
  EXPECT_EQ(r.code, 3);
  EXPECT_EQ(r.err.rfind("error: no_solution: ", 0), 0u) << r.err;
  EXPECT_EQ(std::count(r.err.begin(), r.err.end(), '\n'), 1);
}

TEST_F(CliTest, VerifyTwoClause) {
  const CliRun r = run({"verify", path("two_clause.cnf"), "--b", "0.3", "--f", "1.0"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_TRUE(j["ok"].get<bool>());
  EXPECT_EQ(j["ground_degeneracy"], 12);
  EXPECT_EQ(j["sat_count"], 12);
}

TEST_F(CliTest, ValidateAndErrors) {
  CliRun r = run({"validate", path("two_clause.cnf")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out)["n"], 2);

  r = run({"validate", write("bad.cnf", "p cnf 3 1\n1 1 2 0\n")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: not_three_sat: ", 0), 0u) << r.err;

  r = run({"validate", path("missing.cnf")});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: io_error: ", 0), 0u) << r.err;

  r = run({"validate", write("dup.cnf", "p cnf 3 2\n1 2 3 0\n1 2 3 0\n")});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.err.find("warning: duplicate clause 2"), std::string::npos);
}

TEST_F(CliTest, UsageErrors) {
  EXPECT_EQ(run({}).code, 1);
  EXPECT_EQ(run({"frobnicate"}).code, 1);
  EXPECT_EQ(run({"ce3-solve", "--b", "abc"}).code, 1);
  const CliRun r = run({"anneal", path("two_clause.cnf"), "--schedule", "warm:1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.err.rfind("error: invalid_argument: ", 0), 0u) << r.err;
  EXPECT_EQ(run({"--help"}).code, 0);
}

TEST_F(CliTest, GenThenValidateViaStdin) {
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    const CliRun g = run({"gen", "--m", "15", "--n", "60", "--seed",
                       std::to_string(seed)});
    ASSERT_EQ(g.code, 0);
    EXPECT_EQ(g.out, to_dimacs(gen_random(15, 60, seed)));
    const CliRun v = run({"validate", "-"}, g.out);
    EXPECT_EQ(v.code, 0) << v.err;
  }
  EXPECT_EQ(run({"gen", "--m", "4", "--n", "57"}).code, 2);
}

TEST_F(CliTest, BinaryPipeline) {
  const std::string cmd = std::string(SAT3CE_CLI_PATH) +
                          " gen --m 12 --n 40 --seed 3 | " + SAT3CE_CLI_PATH +
                          " validate > " + path("v.json");
  EXPECT_EQ(std::system(cmd.c_str()), 0);
  EXPECT_EQ(Json::parse(slurp(path("v.json")))["m"], 12);
}

TEST_F(CliTest, EnergyCommand) {
  CliRun r = run({"energy", path("two_clause.cnf"), "--assignment", "1000"});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["unsat_count"], 1);
  EXPECT_NEAR(j["energy"].get<double>(), 2 * kRefUSat + kRefGap, 1e-9);
  r = run({"energy", path("two_clause.cnf"), "--assignment", "10"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: length_mismatch: ", 0), 0u) << r.err;
}

TEST_F(CliTest, CompileNetlist) {
  const CliRun r = run({"compile", path("two_clause.cnf"), "--b", "0.3", "--f", "1"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = Json::parse(r.out);
  EXPECT_EQ(j["branches"].size(), 6u);
  EXPECT_EQ(j["fanout"], Json::parse("[2,1,1,2]"));
  EXPECT_EQ(run({"compile", path("two_clause.cnf"), "--b", "0.7"}).code, 3);
}

TEST_F(CliTest, SpectrumCommand) {
  CliRun r = run({"spectrum", path("two_clause.cnf")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["levels"].size(), 2u);
  EXPECT_EQ(j["ground_degeneracy"], 12);
  r = run({"spectrum", path("two_clause.cnf"), "--limit", "3"});
  EXPECT_EQ(r.code, 2);
  EXPECT_EQ(r.err.rfind("error: too_large: ", 0), 0u) << r.err;
}

TEST_F(CliTest, ScanWritesArtifacts) {
  const CliRun r = run({"ce3-scan", "--b-range", "0.05,1", "--f-range", "0.1,3",
                     "--nb", "20", "--nf", "30", "--csv", path("g.csv"),
                     "--pgm", path("g.pgm"), "--threads", "2"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.artifacts.size(), 2u);
  const std::string pgm = slurp(path("g.pgm"));
  EXPECT_EQ(pgm.rfind("P2\n30 20\n255\n", 0), 0u);
  const std::string csv = slurp(path("g.csv"));
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 1 + 20 * 30);
  const auto j = Json::parse(r.out);
  EXPECT_GT(j["feasible_cells"].get<int>(), 0);
  EXPECT_EQ(run({"ce3-scan", "--nb", "1"}).code, 1);
}

TEST_F(CliTest, AnnealOutcomes) {
  CliRun r = run({"anneal", path("two_clause.cnf"), "--seed", "4", "--restarts", "5",
               "--steps", "10000", "--trace", path("t.csv")});
  ASSERT_EQ(r.code, 0) << r.err;
  auto j = Json::parse(r.out);
  EXPECT_EQ(j["success_rate"].get<double>(), 1.0);
  EXPECT_EQ(j["runs"].size(), 5u);
  EXPECT_EQ(j["runs"][2]["seed"], 6);
  EXPECT_EQ(slurp(path("t.csv")).rfind("step,energy\n0,", 0), 0u);

  r = run({"anneal", path("unsat.cnf"), "--steps", "2000", "--restarts", "2"});
  EXPECT_EQ(r.code, 4);
  EXPECT_EQ(r.err.rfind("error: budget_exhausted: ", 0), 0u) << r.err;

  r = run({"anneal", path("unsat.cnf"), "--steps", "2000", "--target",
           "ground"});
  EXPECT_EQ(r.code, 0) << r.err;
}

TEST_F(CliTest, ReproducibleOutputs) {
  const std::vector<std::string> args = {"anneal", path("two_clause.cnf"), "--seed",
                                         "11", "--restarts", "4", "--steps",
                                         "5000", "--schedule", "geo:1,0.9,50"};
  EXPECT_EQ(run(args).out, run(args).out);
  const std::vector<std::string> scan = {"ce3-scan", "--nb", "10", "--nf",
                                         "10", "--csv", path("a.csv")};
  run(scan);
  const std::string first = slurp(path("a.csv"));
  run(scan);
  EXPECT_EQ(slurp(path("a.csv")), first);
}
