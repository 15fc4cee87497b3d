#pragma once

#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

// Blocks (maximal 2-connected subgraphs or bridges) of a connected graph and
// their incidence with cut vertices. Blocks are sorted vertex lists, ordered
// by their smallest vertex, then lexicographically.
struct BlockCutTree {
  std::vector<std::vector<Vertex>> blocks;
  std::vector<Vertex> cut_vertices;               // sorted
  std::vector<std::vector<Vertex>> block_cuts;    // cut vertices of each block
  std::vector<std::vector<int>> blocks_of;        // per vertex, indices of its blocks

  bool is_cut_vertex(Vertex v) const { return blocks_of.at(v).size() > 1; }
  // A block is terminal when it contains at most one cut vertex.
  bool is_terminal(int block) const { return block_cuts.at(block).size() <= 1; }
  std::vector<int> terminal_blocks() const;
};

// Requires a connected graph; throws PreconditionError naming two components
// otherwise. An isolated vertex forms a single trivial block.
BlockCutTree block_cut_tree(const Graph& g);

bool is_two_connected(const Graph& g);

}  // namespace flexcolor
