#pragma once

#include <optional>
#include <vector>

#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

// Construction for a 2-connected block b colored from f-lists (b's own ids):
// the six-coloring cover for a diamond and the exceptional procedure for H5 /
// H7, both with f = 3 everywhere; the class-removal procedure when b has
// maximum degree 3, f = 3 except at most one degree-2 vertex with f = 2. No
// provider otherwise.
std::optional<Provider> block_provider(const Graph& b, const std::vector<int>& f);

// Spine vertex colored uniformly from its list, then each piece (a set of
// h's vertices containing the spine, sorted) from its own provider
// conditioned on the spine's color. Alpha is 1/3 times the least piece alpha.
struct CutPiece {
  std::vector<Vertex> vertices;
  Provider provider;
};
Provider cut_provider(const Graph& h, Vertex spine, std::vector<CutPiece> pieces);

}  // namespace flexcolor
