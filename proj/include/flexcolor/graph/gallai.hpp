#pragma once

#include <optional>
#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices);
bool is_odd_cycle_block(const Graph& g, const std::vector<Vertex>& block);

// Connected graph whose blocks are all cliques or odd cycles. Throws
// PreconditionError on disconnected input.
bool is_gallai_tree(const Graph& g);

// Smallest (then lexicographically least) vertex set inducing an even cycle or
// a cycle with exactly one chord. Exhaustive; throws CapExceededError above
// kInducedSearchCap vertices.
inline constexpr int kInducedSearchCap = 16;
std::optional<std::vector<Vertex>> find_induced_even_cycle_or_theta(const Graph& g);

}  // namespace flexcolor
