#pragma once

#include <map>
#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

// A conductive path is a path whose internal vertices all have degree 3.
struct ConductivityReport {
  Vertex source = -1;
  std::vector<Vertex> reachable;  // sorted, always contains source
  // Shortest conductive path source..v, lexicographically least among
  // shortest ones.
  std::map<Vertex, std::vector<Vertex>> witness_paths;

  bool reaches(Vertex v) const { return witness_paths.count(v) > 0; }
};

ConductivityReport conductively_connected(const Graph& g, Vertex u);

// Vertices of degree >= 4 conductively connected with u.
std::vector<Vertex> conductive_high_degree(const Graph& g, Vertex u);

}  // namespace flexcolor
