#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor::testing {

// Graph on n vertices whose edge set is the bit pattern `mask` over pairs
// (i, j), i < j, in lexicographic order.
inline Graph graph_from_mask(int n, std::uint64_t mask) {
  std::vector<Edge> edges;
  int bit = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j, ++bit)
      if (mask >> bit & 1) edges.emplace_back(i, j);
  return Graph(n, edges);
}

inline Graph random_graph(std::mt19937_64& rng, int n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) edges.emplace_back(i, j);
  return Graph(n, edges);
}

// Random connected graph: a random spanning tree plus `extra` random edges.
inline Graph random_connected_graph(std::mt19937_64& rng, int n, int extra) {
  std::vector<Edge> edges;
  std::vector<std::vector<char>> has(n, std::vector<char>(n, 0));
  auto add = [&](int a, int b) {
    if (a > b) std::swap(a, b);
    if (a == b || has[a][b]) return false;
    has[a][b] = 1;
    edges.emplace_back(a, b);
    return true;
  };
  for (int v = 1; v < n; ++v) add(static_cast<int>(rng() % v), v);
  const int room = n * (n - 1) / 2 - (n - 1);
  extra = std::min(extra, room);
  while (extra > 0)
    if (add(static_cast<int>(rng() % n), static_cast<int>(rng() % n))) --extra;
  return Graph(n, edges);
}

}  // namespace flexcolor::testing
