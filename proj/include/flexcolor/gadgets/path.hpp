#pragma once

#include <utility>
#include <vector>

#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

// Vertices of a path graph from its lower-id end. Throws PreconditionError
// when p is not a path.
std::vector<Vertex> path_sequence(const Graph& p);

// Two proper colorings covering each (v, c in L2(v)) exactly once. Lists must
// all have size 2. Throws CitationError if no such pair exists.
std::pair<Coloring, Coloring> path_pair_colorings(const Graph& p, const ListAssignment& lists);

// Uniform 2-subset of each list, then one of the two pair colorings
// uniformly. Lists of size 2 or 3. Guarantee (3, 1/3, 1/3).
Sampler path_sampler(const Graph& p, const ListAssignment& lists);
Provider path_provider(const Graph& p);

}  // namespace flexcolor
