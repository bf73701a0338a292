#include <gtest/gtest.h>

#include <filesystem>
#include <sstream>

#include "json.hpp"
#include "reconf/cli.hpp"
#include "support.hpp"

namespace reconf {
namespace {

namespace fs = std::filesystem;
using testing::data_path;

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / ("reconf_cli_" + name);
  fs::remove_all(dir);
  fs::create_directories(dir);
  return dir;
}

TEST(Cli, SolveHouse) {
  const CliRun r = run({"solve", "-i", data_path("instance.facts"), "-c", data_path("config_costs.facts")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("% status optimal"), std::string::npos);
  EXPECT_NE(r.out.find("% cost 32"), std::string::npos);
  EXPECT_NE(r.out.find("personTOroom(2,16)."), std::string::npos) << r.out;
}

TEST(Cli, ReconfigureHouse) {
  const CliRun r = run({"reconfigure", "-i", data_path("reconf_instance.facts"), "-l", data_path("legacy.facts"), "-c",
                     data_path("costs_a.facts")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("cabinetHigh(9)."), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("cabinetHigh(10)."), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("reuse(cabinet(9))."), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("% cost 11"), std::string::npos);
}

TEST(Cli, JsonOutput) {
  const CliRun r = run({"reconfigure", "-i", data_path("reconf_instance.facts"), "-l", data_path("legacy.facts"), "-c",
                     data_path("costs_b.facts"), "--format", "json"});
  ASSERT_EQ(r.code, kExitOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["status"], "optimal");
  EXPECT_EQ(j["cost"]["total"], 4);
  EXPECT_TRUE(j["configuration"].contains("cabinetHigh"));
  EXPECT_TRUE(j["actions"]["reuse"].is_array());
  EXPECT_TRUE(j["stats"]["nodes"].is_number());
}

TEST(Cli, ValidateStaleState) {
  const CliRun r = run({"validate", "-i", data_path("reconf_instance.facts"), "-s", data_path("stale_state.facts")});
  EXPECT_EQ(r.code, kExitInvalid);
  EXPECT_NE(r.err.find("C1"), std::string::npos) << r.err;
  EXPECT_NE(r.err.find("C9"), std::string::npos) << r.err;
  EXPECT_NE(r.out.find("invalid"), std::string::npos);
}

TEST(Cli, ValidateHandSolution) {
  const CliRun r = run({"validate", "-i", data_path("instance.facts"), "-s", data_path("house_solution.facts")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
}

TEST(Cli, SolverOutputValidates) {
  const fs::path dir = scratch("roundtrip");
  const CliRun solved = run({"reconfigure", "-i", data_path("reconf_instance.facts"), "-l", data_path("legacy.facts"),
                          "-c", data_path("costs_a.facts")});
  ASSERT_EQ(solved.code, kExitOk);
  std::ofstream(dir / "out.facts") << solved.out;
  const std::vector<std::string> common{"-i", data_path("reconf_instance.facts"), "-s", (dir / "out.facts").string(),
                                        "-l", data_path("legacy.facts")};
  std::vector<std::string> v{"validate"};
  v.insert(v.end(), common.begin(), common.end());
  const CliRun checked = run(v);
  EXPECT_EQ(checked.code, kExitOk) << checked.err;

  std::vector<std::string> c{"cost", "-c", data_path("costs_a.facts")};
  c.insert(c.end(), common.begin(), common.end());
  const CliRun priced = run(c);
  EXPECT_EQ(priced.code, kExitOk) << priced.err;
  EXPECT_NE(priced.out.find("total\t11"), std::string::npos) << priced.out;
}

TEST(Cli, GenerateSwap) {
  const fs::path dir = scratch("swap");
  const CliRun g = run({"generate", "--scenario", "swap", "-o", dir.string()});
  ASSERT_EQ(g.code, kExitOk) << g.err;
  for (const char* f : {"instance.facts", "legacy.facts", "old_instance.facts", "costs.facts"}) {
    EXPECT_TRUE(fs::exists(dir / f)) << f;
  }
  // The legacy configuration is fine for the requirements it was built for.
  fs::path plain = dir / "legacy_plain.facts";
  {
    const auto legacy = legacy_from_facts(facts::parse(testing::read_text((dir / "legacy.facts").string())));
    std::ofstream(plain) << facts::serialize(to_facts(legacy.config));
  }
  const CliRun old = run({"validate", "-i", (dir / "old_instance.facts").string(), "-s", plain.string()});
  EXPECT_EQ(old.code, kExitOk) << old.err;

  const CliRun solved = run({"reconfigure", "-i", (dir / "instance.facts").string(), "-l",
                          (dir / "legacy.facts").string(), "-c", (dir / "costs.facts").string()});
  EXPECT_EQ(solved.code, kExitOk) << solved.err;
}

TEST(Cli, Oracle) {
  const CliRun r = run({"oracle", "-i", data_path("reconf_instance.facts"), "-l", data_path("legacy.facts"), "-c",
                     data_path("costs_b.facts")});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  EXPECT_NE(r.out.find("% cost 4"), std::string::npos) << r.out;
}

TEST(Cli, Infeasible) {
  const fs::path dir = scratch("infeasible");
  // Fifteen long things need three high cabinets, six slots, but only one room is allowed.
  std::ofstream(dir / "in.facts") << "person(1). thing(2..16). personTOthing(1,2..16). thingLong(2..16). roomUpper(1).\n";
  const CliRun r = run({"solve", "-i", (dir / "in.facts").string(), "-c", data_path("config_costs.facts")});
  EXPECT_EQ(r.code, kExitInfeasible);
  EXPECT_NE(r.out.find("infeasible"), std::string::npos);
  std::ofstream(dir / "bounds.facts") << "person(1). thing(2). personTOthing(1,2). cabinetUpper(0).\n";
  EXPECT_EQ(run({"solve", "-i", (dir / "bounds.facts").string(), "-c", data_path("config_costs.facts")}).code,
            kExitUsage);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-i", data_path("instance.facts")}).code, kExitUsage);
  EXPECT_EQ(run({"solve", "-i", "/nonexistent.facts", "-c", data_path("config_costs.facts")}).code, kExitUsage);
  EXPECT_EQ(run({"generate", "--scenario", "empty", "--things", "7", "-o", scratch("bad").string()}).code, kExitUsage);
  const fs::path dir = scratch("parse");
  std::ofstream(dir / "bad.facts") << "person(1\n";
  const CliRun r = run({"solve", "-i", (dir / "bad.facts").string(), "-c", data_path("config_costs.facts")});
  EXPECT_EQ(r.code, kExitUsage);
  EXPECT_FALSE(r.err.empty());
}

TEST(Cli, BudgetWithoutSolution) {
  const fs::path dir = scratch("budget");
  ASSERT_EQ(run({"generate", "--scenario", "empty", "--things", "25", "-o", dir.string()}).code, kExitOk);
  const CliRun r = run({"reconfigure", "-i", (dir / "instance.facts").string(), "-l", (dir / "legacy.facts").string(),
                     "-c", (dir / "costs.facts").string(), "--node-limit", "1"});
  EXPECT_TRUE(r.code == kExitBudget || r.code == kExitOk) << r.err;
  if (r.code == kExitOk) EXPECT_NE(r.out.find("% status feasible"), std::string::npos);
}

}  // namespace
}  // namespace reconf
