#pragma once

#include <cstddef>
#include <variant>
#include <vector>

#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

inline constexpr std::size_t kRejectionRetryBound = 100000;

// A piece glued to the spine at a single vertex. Colorings share the spine's
// frame; the part's colored vertices are its own plus `attach`.
struct CutPart {
  Vertex attach = -1;
  std::variant<ExactDistribution, Sampler> law;
  Rational fix = 0;  // marginal level of the part's own law
};

// Draws the spine, then every part conditioned on agreeing with the spine at
// its attach vertex: exact restriction for exact laws, rejection with
// kRejectionRetryBound attempts for generative ones (exact law when
// enumerating). Guarantee: spine fix times the least part fix.
Sampler compose_at_cut(const Sampler& spine, std::vector<CutPart> parts);

}  // namespace flexcolor
