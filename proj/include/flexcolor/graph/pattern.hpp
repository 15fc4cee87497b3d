#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

enum class PatternKind { Diamond, K4, H5, H7 };

std::string_view pattern_name(PatternKind kind);

// Role indices. Diamond: a, b are the degree-3 pair, c, d the degree-2 pair.
namespace diamond_role { enum : int { a, b, c, d }; }
// H5: diamond on {v, w, y, z} missing wy, plus x adjacent to w and y.
namespace h5_role { enum : int { v, w, y, z, x }; }
// H7: triangles {a, b, w} and {x, y, z}, edge wy, v adjacent to a, b, z.
namespace h7_role { enum : int { v, w, y, z, x, a, b }; }

// The pattern with vertex i playing role i.
const Graph& pattern_graph(PatternKind kind);

// If g[vertices] is isomorphic to the pattern, returns role -> host vertex.
// Throws PreconditionError when |vertices| differs from the pattern order.
std::optional<std::vector<Vertex>> embed_pattern(const Graph& g, std::span<const Vertex> vertices,
                                                 PatternKind kind);

bool match_pattern(const Graph& g, std::span<const Vertex> vertices, PatternKind kind);

// Convenience: does the whole graph match?
std::optional<std::vector<Vertex>> embed_pattern(const Graph& g, PatternKind kind);

}  // namespace flexcolor
