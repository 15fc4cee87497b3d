#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "flexcolor/graph/density.hpp"
#include "flexcolor/graph/graph.hpp"

namespace flexcolor::testing {

// Connected graphs with mad < 3 on 1..max_n vertices: a random spanning tree,
// then random edges kept only while mad stays below 3. Every other graph also
// gets its degree-1 vertices joined to further vertices where the density
// allows, so the corpus is not dominated by pendant vertices.
inline std::vector<Graph> mad_corpus(std::uint64_t seed, int count, int max_n) {
  std::mt19937_64 rng(seed);
  std::vector<Graph> out;
  for (int index = 0; index < count; ++index) {
    const int n = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(max_n));
    std::vector<Edge> edges;
    auto has = [&](int a, int b) {
      for (const auto& e : edges)
        if (e == Edge{std::min(a, b), std::max(a, b)}) return true;
      return false;
    };
    auto try_add = [&](int a, int b) {
      if (a == b || has(a, b)) return false;
      edges.emplace_back(std::min(a, b), std::max(a, b));
      if (max_average_degree(Graph(n, edges)) < 3) return true;
      edges.pop_back();
      return false;
    };
    for (int v = 1; v < n; ++v) edges.emplace_back(static_cast<int>(rng() % static_cast<std::uint64_t>(v)), v);
    const int target = n - 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(n / 2 + 2));
    for (int attempt = 0; attempt < 8 * n && static_cast<int>(edges.size()) < target; ++attempt)
      try_add(static_cast<int>(rng() % n), static_cast<int>(rng() % n));
    if (index % 2 == 1) {
      for (int v = 0; v < n; ++v) {
        for (int attempt = 0; attempt < 4 * n; ++attempt) {
          const Graph g(n, edges);
          if (g.degree(v) != 1) break;
          try_add(v, static_cast<int>(rng() % n));
        }
      }
    }
    out.emplace_back(n, edges);
  }
  return out;
}

}  // namespace flexcolor::testing
