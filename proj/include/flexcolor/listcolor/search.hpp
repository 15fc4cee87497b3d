#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

inline constexpr int kDefaultExactCap = 12;

// All proper L-colorings in lexicographic order (vertex 0 most significant,
// colors ascending). Throws CapExceededError above `cap` vertices.
std::vector<Coloring> enumerate_L_colorings(const Graph& g, const ListAssignment& lists,
                                            int cap = kDefaultExactCap);

std::size_t count_L_colorings(const Graph& g, const ListAssignment& lists, int cap = kDefaultExactCap);

// Lexicographically least proper L-coloring agreeing with `partial` on its
// colored vertices; nullopt when none exists (or partial is itself improper).
std::optional<Coloring> extend_coloring(const Graph& g, const ListAssignment& lists, const Coloring& partial);

std::optional<Coloring> find_L_coloring(const Graph& g, const ListAssignment& lists);

}  // namespace flexcolor
