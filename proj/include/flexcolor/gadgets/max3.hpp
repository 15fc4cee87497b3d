#pragma once

#include <optional>
#include <vector>

#include "flexcolor/core/random.hpp"
#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

inline constexpr int kMax3ClassBound = 766;      // 3 * (2^8 - 1) + 1
inline constexpr int kMax3ClassDistance = 8;

// First-fit classes in vertex order; vertices within distance 8 get distinct
// classes. Throws CitationError above kMax3ClassBound.
std::vector<int> max3_classes(const Graph& h);

// Throws PreconditionError unless h is 2-connected with maximum degree 3, is
// none of diamond, K4, H5, H7, and x (if given) has degree 2.
void check_max3_graph(const Graph& h, std::optional<Vertex> x);

// One run of the class-removal procedure. Lists have size 3, except size 2
// at x. Each structural claim the procedure relies on is checked and a
// CitationError with a witness is thrown if one fails.
Coloring max3_procedure(const Graph& h, const std::vector<int>& classes, std::optional<Vertex> x,
                        const ListAssignment& lists, RandomSource& source);

// Guarantee (3, 3^-8, 3^-8).
Sampler max3_sampler(const Graph& h, const ListAssignment& lists, std::optional<Vertex> x);
Provider max3_provider(const Graph& h, std::optional<Vertex> x);

}  // namespace flexcolor
