#include "flexcolor/graph/blocks.hpp"

#include <algorithm>
#include <string>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

std::vector<int> BlockCutTree::terminal_blocks() const {
  std::vector<int> out;
  for (int b = 0; b < static_cast<int>(blocks.size()); ++b)
    if (is_terminal(b)) out.push_back(b);
  return out;
}

BlockCutTree block_cut_tree(const Graph& g) {
  const auto components = connected_components(g);
  if (components.size() > 1)
    throw PreconditionError("graph is disconnected: components containing " +
                            std::to_string(components[0].front()) + " and " +
                            std::to_string(components[1].front()));
  BlockCutTree tree;
  const int n = g.order();
  tree.blocks_of.resize(static_cast<std::size_t>(n));
  if (n == 0) return tree;
  if (n == 1) {
    tree.blocks.push_back({0});
  } else {
    // Iterative Hopcroft-Tarjan with an edge stack.
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::size_t> next(n, 0);
    std::vector<Vertex> parent(n, -1);
    std::vector<Edge> edge_stack;
    std::vector<Vertex> stack{0};
    int clock = 0;
    disc[0] = low[0] = clock++;
    while (!stack.empty()) {
      const Vertex u = stack.back();
      const auto nbrs = g.neighbors(u);
      if (next[u] < nbrs.size()) {
        const Vertex w = nbrs[next[u]++];
        if (disc[w] < 0) {
          parent[w] = u;
          disc[w] = low[w] = clock++;
          edge_stack.emplace_back(u, w);
          stack.push_back(w);
        } else if (w != parent[u] && disc[w] < disc[u]) {
          edge_stack.emplace_back(u, w);
          low[u] = std::min(low[u], disc[w]);
        }
        continue;
      }
      stack.pop_back();
      const Vertex p = parent[u];
      if (p < 0) continue;
      low[p] = std::min(low[p], low[u]);
      if (low[u] >= disc[p]) {
        std::vector<Vertex> block;
        while (true) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{p, u}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        tree.blocks.push_back(std::move(block));
      }
    }
  }
  std::sort(tree.blocks.begin(), tree.blocks.end());
  for (int b = 0; b < static_cast<int>(tree.blocks.size()); ++b)
    for (Vertex v : tree.blocks[b]) tree.blocks_of[v].push_back(b);
  for (Vertex v = 0; v < n; ++v)
    if (tree.blocks_of[v].size() > 1) tree.cut_vertices.push_back(v);
  tree.block_cuts.resize(tree.blocks.size());
  for (Vertex v : tree.cut_vertices)
    for (int b : tree.blocks_of[v]) tree.block_cuts[b].push_back(v);
  return tree;
}

bool is_two_connected(const Graph& g) {
  if (g.order() < 3 || !is_connected(g)) return false;
  return block_cut_tree(g).blocks.size() == 1;
}

}  // namespace flexcolor
