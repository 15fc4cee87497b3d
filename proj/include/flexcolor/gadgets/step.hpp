#pragma once

#include <functional>
#include <string>
#include <vector>

#include "flexcolor/core/random.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

// Colors a fixed graph H from any admissible list assignment on it, in H's
// own vertex ids. `alpha` is the (FIX)/(FORB) level it guarantees.
struct Provider {
  std::string name;
  Rational alpha;
  std::function<Coloring(const ListAssignment&, RandomSource&)> draw;
};

// One reduction: given a coloring of G - S (host ids, S uncolored), colors S.
// `extend` may read only the colors of `boundary`.
struct ExtensionStep {
  std::string name;
  std::vector<Vertex> reduction_set;  // S, sorted
  std::vector<Vertex> boundary;       // outside S, sorted
  std::function<Coloring(const Coloring&, RandomSource&)> extend;
  // Bounds for vertices of S, given an environment meeting the engine's
  // (3, eps, alpha): fix bounds Pr(phi(v) = c), forb bounds Pr(phi(v) != c).
  Guarantee guarantee;
};

// Draws the environment, then extends it.
Sampler apply_step(const Sampler& environment, const ExtensionStep& step);

// Exact law of the extended coloring. The step's branches are enumerated once
// per distinct boundary pattern of the environment.
ExactDistribution apply_step_exact(const ExactDistribution& environment, const ExtensionStep& step);

// Color of `v` drawn from the part law restricted to colorings with
// coloring[v] == c, renormalized. Throws PreconditionError naming (v, c) when
// that event has zero mass.
const Coloring& draw_conditioned(const ExactDistribution& part, Vertex v, Color c, RandomSource& source);

}  // namespace flexcolor
