#pragma once

#include <cstddef>
#include <vector>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

struct LpResult {
  bool feasible = false;        // false when there is no outcome at all
  Rational value = 0;           // max over distributions of min event probability
  std::vector<Rational> weights;  // an optimal distribution over the outcomes
  std::size_t pivots = 0;
};

// Outcomes 0..outcomes-1; each event is the list of outcomes in it. Solves
//   max t  s.t.  Pr(E_j) >= t for all j,  x a distribution on outcomes
// exactly, through the packing dual  max 1'y  s.t.  sum_{j : i in E_j} y_j <= 1
// for every outcome i, y >= 0, whose optimum is 1/t. Bland's rule.
LpResult lp_max_min_events(std::size_t outcomes, const std::vector<std::vector<std::size_t>>& events);

// max over distributions on proper L-colorings of min_{v, c in L(v)} Pr(phi(v) = c).
// `colorings` receives the enumerated support when non-null.
LpResult lp_max_min_fix(const Graph& g, const ListAssignment& lists, int cap = kDefaultExactCap,
                        std::vector<Coloring>* colorings = nullptr);

}  // namespace flexcolor
