#pragma once

#include <span>
#include <vector>

#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

// Colors the induced subgraph H = G[h_vertices] from its environment:
// L'(z) = L(z) minus the colors of z's neighbors outside H, pruned to a
// uniformly random ell(z)-subset with ell(z) = k - deg_G(z) + deg_H(z), then
// `inner` colors H from the pruned lists (in H's local ids, i.e. the order of
// h_vertices). Throws PreconditionError when some ell(z) < 2 or a list of L
// is shorter than k.
ExtensionStep reductive_step(const Graph& g, std::vector<Vertex> h_vertices, int k, const ListAssignment& lists,
                             Provider inner, const Rational& env_alpha);

Sampler reductive_extend(const Graph& g, std::span<const Vertex> h_vertices, int k, const ListAssignment& lists,
                         const Sampler& environment, Provider inner);

// Terminal diamond B of G with cut vertex `cut` (or -1 when B is a whole
// component): colors B - cut from the six-coloring cover conditioned on the
// cut vertex's color. Marginal and avoidance levels of the environment carry
// over to B.
ExtensionStep diamond_block_step(const Graph& g, std::vector<Vertex> block, Vertex cut, const ListAssignment& lists,
                                 const Rational& env_eps, const Rational& env_alpha);

}  // namespace flexcolor
