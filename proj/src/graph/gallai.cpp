#include "flexcolor/graph/gallai.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/blocks.hpp"

namespace flexcolor {

bool is_clique(const Graph& g, const std::vector<Vertex>& vertices) {
  const std::size_t k = vertices.size();
  return induced_edge_count(g, vertices) == k * (k - 1) / 2;
}

bool is_odd_cycle_block(const Graph& g, const std::vector<Vertex>& block) {
  if (block.size() < 3 || block.size() % 2 == 0) return false;
  // A 2-connected block with |E| = |V| is a cycle.
  return induced_edge_count(g, block) == block.size();
}

bool is_gallai_tree(const Graph& g) {
  const auto tree = block_cut_tree(g);
  for (const auto& block : tree.blocks)
    if (!is_clique(g, block) && !is_odd_cycle_block(g, block)) return false;
  return true;
}

namespace {

using Mask = std::uint32_t;

bool connected_within(const std::vector<Mask>& adj, Mask set) {
  if (set == 0) return true;
  Mask seen = set & (~set + 1);
  Mask frontier = seen;
  while (frontier) {
    Mask grow = 0;
    for (Mask f = frontier; f; f &= f - 1) grow |= adj[std::countr_zero(f)];
    grow &= set & ~seen;
    seen |= grow;
    frontier = grow;
  }
  return seen == set;
}

bool even_cycle_or_theta(const std::vector<Mask>& adj, Mask set) {
  const int k = std::popcount(set);
  if (k < 4) return false;
  int edges2 = 0;
  std::vector<int> heavy;
  for (Mask s = set; s; s &= s - 1) {
    const int v = std::countr_zero(s);
    const int d = std::popcount(adj[v] & set);
    edges2 += d;
    if (d == 3) heavy.push_back(v);
    else if (d != 2) return false;
  }
  if (!connected_within(adj, set)) return false;
  if (heavy.empty()) return k % 2 == 0;  // connected 2-regular: a cycle
  if (heavy.size() != 2 || edges2 != 2 * (k + 1)) return false;
  // The chord must join the two degree-3 vertices and leave a cycle behind.
  const int a = heavy[0], b = heavy[1];
  if (!(adj[a] >> b & 1)) return false;
  std::vector<Mask> rest(adj);
  rest[a] &= ~(Mask{1} << b);
  rest[b] &= ~(Mask{1} << a);
  return connected_within(rest, set);
}

}  // namespace

std::optional<std::vector<Vertex>> find_induced_even_cycle_or_theta(const Graph& g) {
  const int n = g.order();
  if (n > kInducedSearchCap)
    throw CapExceededError("induced even cycle / theta search is exhaustive and capped at " +
                           std::to_string(kInducedSearchCap) + " vertices");
  std::vector<Mask> adj(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v)
    for (Vertex w : g.neighbors(v)) adj[v] |= Mask{1} << w;
  std::optional<std::vector<Vertex>> best;
  for (int size = 4; size <= n && !best; ++size) {
    for (Mask set = 0; set < (Mask{1} << n); ++set) {
      if (std::popcount(set) != size || !even_cycle_or_theta(adj, set)) continue;
      std::vector<Vertex> out;
      for (Mask s = set; s; s &= s - 1) out.push_back(std::countr_zero(s));
      if (!best || out < *best) best = std::move(out);
    }
  }
  return best;
}

}  // namespace flexcolor
