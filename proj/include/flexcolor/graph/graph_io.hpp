#pragma once

#include <istream>
#include <string>
#include <string_view>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

// Text format: first line `n m`, then m lines `u v` with 0 <= u < v < n.
// Blank lines are ignored. Throws ParseError with the offending line number.
Graph read_graph(std::istream& in);
Graph parse_graph(std::string_view text);
Graph load_graph(const std::string& path);

std::string format_graph(const Graph& g);

}  // namespace flexcolor
