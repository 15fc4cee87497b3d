#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "flexcolor/cli/run.hpp"

using namespace flexcolor;

int main(int argc, char** argv) {
  CLI::App app{"Weighted flexible 3-list-coloring of graphs with maximum average degree below 3"};
  app.require_subcommand(1);
  cli::RunConfig cfg;
  std::string mode = "exact";
  std::string f_text, alpha_text;
  bool json = false;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--graph", cfg.graph_path, "graph file: `n m` then one `u v` per edge")->required();
    sub->add_option("--seed", cfg.seed, "64-bit seed");
    sub->add_flag("--json", json, "emit JSON instead of text");
  };
  auto with_lists = [&](CLI::App* sub) {
    sub->add_option("--lists", cfg.lists_path, "list file: `v: c1,c2,...` per vertex");
  };
  struct Entry {
    cli::Command command;
    const char* help;
  };
  const Entry entries[] = {
      {cli::Command::Analyze, "mad, degeneracy, blocks, conductivity, degree-2 classes"},
      {cli::Command::Color, "build the distribution and satisfy a weighted request"},
      {cli::Command::Verify, "check (3, epsilon, alpha) on a dumped or freshly built distribution"},
      {cli::Command::FindConfig, "trace of reducible configurations"},
      {cli::Command::Discharge, "discharging ledger"},
      {cli::Command::Oracle, "LP check of the reductive property"},
  };
  for (const auto& entry : entries) {
    auto* sub = app.add_subcommand(std::string(cli::command_name(entry.command)), entry.help);
    common(sub);
    const cli::Command command = entry.command;
    sub->callback([&cfg, command] { cfg.command = command; });
    switch (command) {
      case cli::Command::Color:
        with_lists(sub);
        sub->add_option("--request", cfg.request_path, "request file: `v c weight` per line");
        sub->add_option("--mode", mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
        sub->add_option("--samples", cfg.samples, "draws in sample mode")->check(CLI::PositiveNumber);
        break;
      case cli::Command::Verify:
        with_lists(sub);
        sub->add_option("--dist", cfg.dist_path, "distribution dump: `p/q: v->c ...` per line");
        break;
      case cli::Command::Oracle:
        with_lists(sub);
        sub->add_option("--f", f_text, "comma-separated list sizes (default: sizes from --lists, else 3)");
        sub->add_option("--alpha", alpha_text, "level as p/q (default 1/19683)");
        sub->add_option("--samples", cfg.samples, "random assignments above the exhaustive cap");
        break;
      default:
        break;
    }
  }

  try {
    app.parse(argc, argv);
    cfg.mode = mode == "sample" ? BuildMode::Sample : BuildMode::Exact;
    cfg.output = json ? cli::OutputFormat::Json : cli::OutputFormat::Text;
    if (!f_text.empty()) {
      std::vector<int> f;
      std::istringstream in(f_text);
      for (std::string item; std::getline(in, item, ',');) f.push_back(std::stoi(item));
      cfg.f = std::move(f);
    }
    if (!alpha_text.empty()) cfg.alpha = parse_rational(alpha_text);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? cli::kExitOk : cli::kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "invalid argument: " << e.what() << '\n';
    return cli::kExitUsage;
  }

  const auto result = cli::run(cfg);
  std::cout << result.report;
  return result.exit_code;
}
