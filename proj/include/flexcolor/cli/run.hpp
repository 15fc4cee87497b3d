#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/engine/build.hpp"

namespace flexcolor::cli {

enum class Command { Analyze, Color, Verify, FindConfig, Discharge, Oracle };
enum class OutputFormat { Text, Json };

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitPrecondition = 2;
inline constexpr int kExitCitation = 3;

std::optional<Command> parse_command(std::string_view name);
std::string_view command_name(Command command);

struct RunConfig {
  Command command = Command::Analyze;
  std::string graph_path;
  std::optional<std::string> lists_path;    // default: {1,2,3} everywhere
  std::optional<std::string> request_path;  // default: the zero request
  std::optional<std::string> dist_path;     // verify: dumped distribution
  std::uint64_t seed = 0;
  BuildMode mode = BuildMode::Exact;
  std::size_t samples = 1000;
  OutputFormat output = OutputFormat::Text;
  std::optional<std::vector<int>> f;        // oracle: default |L(v)|, or 3
  std::optional<Rational> alpha;            // oracle: default 3^-9
};

struct RunResult {
  int exit_code = kExitOk;
  std::string report;
};

// Never throws for bad input: parse errors, precondition failures and
// citation failures become exit codes 1, 2, 3 with the error in the report.
RunResult run(const RunConfig& cfg);

// JSON with 2-space indentation, or `key: value` lines with nested objects
// indented. Field order is the insertion order.
std::string emit_report(const nlohmann::ordered_json& report, OutputFormat format);

}  // namespace flexcolor::cli
