#pragma once

#include <optional>
#include <vector>

#include "flexcolor/core/random.hpp"
#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/graph/pattern.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

// An H5 or H7 copy inside a host graph. roles[i] is the host vertex playing
// role i (h5_role / h7_role). Every gadget vertex other than x has host
// degree 3 and no outside neighbor; x has at most one outside neighbor x'.
struct GadgetContext {
  Graph host;
  PatternKind kind = PatternKind::H5;
  std::vector<Vertex> roles;
};

// Throws PreconditionError unless ctx is a valid H5/H7 context.
void check_context(const GadgetContext& ctx);
// x' or -1 when x has no outside neighbor.
Vertex external_neighbor(const GadgetContext& ctx);

// The randomized extension on the pattern itself (vertex i = role i), given
// 3-lists in role order and the color of x' (nullopt: x has no outside
// neighbor). Throws CitationError if the arbitrary extension fails.
Coloring exceptional_procedure(PatternKind kind, const ListAssignment& lists, std::optional<Color> external,
                               RandomSource& source);

// L'' lists of the procedure, for inspection.
std::vector<std::vector<Color>> exceptional_reduced_lists(PatternKind kind, const ListAssignment& lists,
                                                          std::optional<Color> external);

// Reduction set = the gadget; reads phi(x'). Guarantee fix = env_alpha / 15
// (H5) or env_alpha / 21 (H7); forb = 1/10 or 1/14.
ExtensionStep exceptional_step(const GadgetContext& ctx, const ListAssignment& lists, const Rational& env_alpha);

Sampler h5_sampler(const GadgetContext& ctx, const ListAssignment& lists, const Sampler& environment);
Sampler h7_sampler(const GadgetContext& ctx, const ListAssignment& lists, const Sampler& environment);

// The pattern graph colored from 3-lists with no external neighbor, vertices
// in role order. Alpha is 1/15 (H5) or 1/21 (H7).
Provider exceptional_provider(PatternKind kind);

}  // namespace flexcolor
