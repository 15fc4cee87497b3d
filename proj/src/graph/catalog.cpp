#include "flexcolor/graph/catalog.hpp"

#include <vector>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/pattern.hpp"

namespace flexcolor::catalog {

Graph path(int n) {
  if (n < 0) throw PreconditionError("negative path length");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges);
}

Graph cycle(int n) {
  if (n < 3) throw PreconditionError("a cycle needs at least 3 vertices");
  std::vector<Edge> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(0, n - 1);
  return Graph(n, edges);
}

Graph complete(int n) {
  if (n < 0) throw PreconditionError("negative order");
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Graph(n, edges);
}

Graph diamond() { return pattern_graph(PatternKind::Diamond); }

Graph prism() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}, {0, 3}, {1, 4}, {2, 5}};
  return Graph(6, edges);
}

Graph cube() {
  std::vector<Edge> edges;
  for (int i = 0; i < 8; ++i)
    for (int bit = 1; bit < 8; bit <<= 1)
      if ((i & bit) == 0) edges.emplace_back(i, i | bit);
  return Graph(8, edges);
}

Graph h5() { return pattern_graph(PatternKind::H5); }
Graph h7() { return pattern_graph(PatternKind::H7); }

}  // namespace flexcolor::catalog
