#pragma once

#include <vector>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

struct MadResult {
  Rational value;               // max over nonempty H of 2|E(H)|/|V(H)|
  std::vector<Vertex> witness;  // a vertex set attaining it
};

// Exact, via max-flow feasibility tests over the finite candidate set
// {2m'/n'}. Throws PreconditionError on the empty graph.
MadResult max_average_degree_with_witness(const Graph& g);
Rational max_average_degree(const Graph& g);

struct DegeneracyResult {
  int degeneracy = 0;
  // Each vertex has at most `degeneracy` neighbors earlier in the ordering.
  std::vector<Vertex> ordering;
};

DegeneracyResult degeneracy(const Graph& g);

}  // namespace flexcolor
