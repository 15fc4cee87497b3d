#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>

#include <json.hpp>

#include "flexcolor/cli/run.hpp"
#include "flexcolor/graph/catalog.hpp"
#include "flexcolor/graph/graph_io.hpp"

namespace flexcolor {
namespace {

namespace fs = std::filesystem;
using cli::Command;
using cli::RunConfig;

class Cli : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("flexcolor_cli_" + std::to_string(::getpid()));
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string write(const std::string& name, const std::string& text) {
    const auto path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  RunConfig c5(Command command) {
    RunConfig cfg;
    cfg.command = command;
    cfg.graph_path = write("c5.txt", format_graph(catalog::cycle(5)));
    cfg.lists_path = write("c5.lists", "0: 1,2,3\n1: 1,2,3\n2: 1,2,3\n3: 1,2,3\n4: 1,2,3\n");
    cfg.request_path = write("c5.req", "0 1 1\n1 1 1\n2 1 1\n3 1 1\n4 1 1\n");
    cfg.seed = 7;
    return cfg;
  }

  fs::path dir_;
};

nlohmann::json as_json(RunConfig cfg) {
  cfg.output = cli::OutputFormat::Json;
  return nlohmann::json::parse(cli::run(cfg).report);
}

TEST_F(Cli, ColorFiveCycleGolden) {
  const auto cfg = c5(Command::Color);
  const auto r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_NE(r.report.find("epsilon: 4/3486784401"), std::string::npos);
  EXPECT_NE(r.report.find("alpha: 1/19683"), std::string::npos);
  EXPECT_NE(r.report.find("epsilon > 2^-30: true"), std::string::npos);
  const auto j = as_json(cfg);
  EXPECT_EQ(j["result"]["coloring"], nlohmann::json::parse("[1, 2, 1, 2, 3]"));
  EXPECT_EQ(j["result"]["fraction"], "2/5");
  EXPECT_EQ(j["result"]["met epsilon"], true);
  EXPECT_EQ(j["result"]["verification"]["passed"], true);
}

TEST_F(Cli, SampleModeMeetsEpsilon) {
  auto cfg = c5(Command::Color);
  cfg.mode = BuildMode::Sample;
  cfg.samples = 20;
  const auto j = as_json(cfg);
  EXPECT_EQ(j["result"]["met epsilon"], true);
  EXPECT_EQ(j["result"]["mode"], "sample");
}

TEST_F(Cli, ReportsAreByteIdentical) {
  for (Command command : {Command::Analyze, Command::Color, Command::FindConfig, Command::Discharge}) {
    const auto cfg = c5(command);
    EXPECT_EQ(cli::run(cfg).report, cli::run(cfg).report);
  }
}

TEST_F(Cli, CompleteFourAnalyzedButNotColored) {
  RunConfig cfg;
  cfg.graph_path = write("k4.txt", format_graph(catalog::complete(4)));
  cfg.command = Command::Analyze;
  auto r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, 0);
  EXPECT_EQ(as_json(cfg)["result"]["mad"]["value"], "3");
  cfg.command = Command::Color;
  r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, cli::kExitPrecondition);
  EXPECT_NE(r.report.find("mad = 3"), std::string::npos);
}

TEST_F(Cli, DischargePrismIsFlat) {
  RunConfig cfg;
  cfg.command = Command::Discharge;
  cfg.graph_path = write("prism.txt", format_graph(catalog::prism()));
  const auto j = as_json(cfg);
  for (const auto& c : j["result"]["charges"]) EXPECT_EQ(c["final"], "0");
  EXPECT_EQ(j["result"]["conserved"], true);
}

TEST_F(Cli, ParseErrorsExitOne) {
  RunConfig cfg;
  cfg.command = Command::Analyze;
  cfg.graph_path = write("dup.txt", "3 2\n0 1\n0 1\n");
  auto r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, cli::kExitUsage);
  EXPECT_NE(r.report.find("line 3"), std::string::npos);
  cfg.graph_path = (dir_ / "missing.txt").string();
  EXPECT_EQ(cli::run(cfg).exit_code, cli::kExitUsage);

  cfg = c5(Command::Color);
  cfg.lists_path = write("two.lists", "0: 1,2\n1: 1,2,3\n2: 1,2,3\n3: 1,2,3\n4: 1,2,3\n");
  EXPECT_EQ(cli::run(cfg).exit_code, cli::kExitUsage);
}

TEST_F(Cli, ExactModeCap) {
  RunConfig cfg;
  cfg.command = Command::Color;
  cfg.graph_path = write("p13.txt", format_graph(catalog::path(13)));
  const auto r = cli::run(cfg);
  EXPECT_EQ(r.exit_code, cli::kExitPrecondition);
  EXPECT_NE(r.report.find("limited to 12 vertices"), std::string::npos);
  cfg.mode = BuildMode::Sample;
  EXPECT_EQ(cli::run(cfg).exit_code, 0);
}

TEST_F(Cli, VerifyDumpedDistribution) {
  const Graph g = catalog::cycle(5);
  const auto lists = ListAssignment::uniform(5, 3);
  const auto built = build_distribution(g, lists, BuildMode::Exact);
  const std::string dump = built.distribution->dump();
  EXPECT_EQ(parse_distribution(dump, 5), *built.distribution);
  auto cfg = c5(Command::Verify);
  cfg.dist_path = write("c5.dist", dump);
  auto j = as_json(cfg);
  EXPECT_EQ(j["result"]["source"], "file");
  EXPECT_EQ(j["result"]["verification"]["passed"], true);

  // A point mass misses every other color.
  cfg.dist_path = write("bad.dist", "1: 0->1 1->2 2->1 3->2 4->3\n");
  j = as_json(cfg);
  EXPECT_EQ(j["result"]["verification"]["passed"], false);
  EXPECT_GT(j["result"]["verification"]["violation count"].get<int>(), 0);
}

TEST_F(Cli, FindConfigTrace) {
  const auto j = as_json(c5(Command::FindConfig));
  const auto& trace = j["result"]["trace"];
  ASSERT_EQ(trace.size(), 4u);
  EXPECT_EQ(trace[0]["kind"], "ConductivePath");
  EXPECT_EQ(trace[0]["reduction set"], nlohmann::json::parse("[0, 1]"));
}

TEST_F(Cli, OracleVerdicts) {
  RunConfig cfg;
  cfg.command = Command::Oracle;
  cfg.graph_path = write("p2.txt", format_graph(catalog::path(2)));
  cfg.f = std::vector<int>{2, 2};
  cfg.alpha = make_rational(1, 3);
  auto j = as_json(cfg);
  EXPECT_EQ(j["result"]["reductive"], true);
  EXPECT_EQ(j["result"]["worst value"], "1/2");
  cfg.alpha = make_rational(2, 3);
  j = as_json(cfg);
  EXPECT_EQ(j["result"]["reductive"], false);
  EXPECT_TRUE(j["result"].contains("witness"));
}

TEST_F(Cli, ListsRoundTrip) {
  const std::string text = "0: 1,2,3\n1: 2,5,9\n2: 4,6,7\n";
  EXPECT_EQ(format_lists(parse_lists(text, 3)), text);
  const std::string graph = format_graph(catalog::prism());
  EXPECT_EQ(format_graph(parse_graph(graph)), graph);
}

}  // namespace
}  // namespace flexcolor
