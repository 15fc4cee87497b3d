#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flexcolor/engine/config.hpp"
#include "flexcolor/engine/constants.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/sampler.hpp"

namespace flexcolor {

enum class BuildMode { Exact, Sample };

inline constexpr int kExactVertexCap = 12;

// One reduction, in host vertex ids. `graph_order` is |V| of the graph the
// configuration was found in; `guarantee` bounds the vertices of S.
struct TraceStep {
  ReducibleConfig config;
  int graph_order = 0;
  std::string construction;
  Guarantee guarantee;
};

// Reductions in the order they are found: each one is located in the graph
// left after removing the earlier reduction sets. Throws PreconditionError
// when mad(g) >= 3 and CitationError (certificate: the stuck subgraph) when
// no configuration is found.
std::vector<TraceStep> plan_reductions(const Graph& g);

struct BuildResult {
  std::vector<TraceStep> trace;
  Sampler sampler;                                 // both modes
  std::optional<ExactDistribution> distribution;   // exact mode
  Guarantee guarantee;                             // (3, epsilon, alpha)
};

// Throws PreconditionError unless lists is a 3-assignment on g and mad(g) < 3
// (the message carries the densest subgraph and its density), and
// CapExceededError for exact mode above kExactVertexCap vertices.
BuildResult build_distribution(const Graph& g, const ListAssignment& lists, BuildMode mode);

struct RequestResult {
  Coloring coloring;
  Rational fraction;
  std::optional<Rational> expected_fraction;  // exact mode
  bool met = false;                            // fraction >= epsilon
  std::size_t draws = 0;                       // sample mode
  BuildResult build;
};

// Exact mode: a support coloring of largest request value (at least the
// expectation). Sample mode: the best of `budget` draws from a SeededRandom
// stream started at `seed`.
RequestResult satisfy_request(const Graph& g, const ListAssignment& lists, const WeightedRequest& w, BuildMode mode,
                              std::size_t budget = 1000, std::uint64_t seed = 0);

// Throws PreconditionError with the witness unless mad(g) < 3.
void require_mad_below_three(const Graph& g);

}  // namespace flexcolor
