#pragma once

#include <vector>

#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

// Six proper L-colorings (with repetition) of a diamond in which every
// (v, c in L(v)) occurs exactly twice. Lists must have size 3. First solution
// of a lexicographic exact-cover search. Throws CitationError if none exists.
std::vector<Coloring> diamond_cover(const Graph& d, const ListAssignment& lists);

// Uniform law over the six cover colorings: every marginal is exactly 1/3.
ExactDistribution diamond_six_colorings(const Graph& d, const ListAssignment& lists);

}  // namespace flexcolor
