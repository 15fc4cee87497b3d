#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace flexcolor {

// Vertices are dense integers 0..order()-1.
using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

// Immutable simple undirected graph. Neighbor lists are sorted.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int order);
  // Throws PreconditionError on loops, parallel edges or out-of-range ends.
  Graph(int order, std::span<const Edge> edges);

  int order() const noexcept { return static_cast<int>(adjacency_.size()); }
  std::size_t size() const noexcept { return edge_count_; }
  bool empty() const noexcept { return adjacency_.empty(); }

  std::span<const Vertex> neighbors(Vertex v) const { return adjacency_[check(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[check(v)].size()); }
  bool adjacent(Vertex u, Vertex v) const;
  int max_degree() const noexcept;

  // Edges as (u, v) with u < v, in lexicographic order.
  std::vector<Edge> edges() const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  std::size_t check(Vertex v) const;

  std::vector<std::vector<Vertex>> adjacency_;
  std::size_t edge_count_ = 0;
};

// The subgraph induced by a vertex set, relabelled 0..k-1 in increasing host
// order. to_host[local] gives the host vertex.
struct InducedSubgraph {
  Graph graph;
  std::vector<Vertex> to_host;

  // Local id of a host vertex, or -1 when it is not in the subgraph.
  Vertex local(Vertex host) const;
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Host vertices not in `removed`, as an induced subgraph.
InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed);

// Components as sorted vertex lists, ordered by their smallest vertex.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

// Breadth-first distances from `source`; -1 for unreachable vertices or
// vertices beyond `limit` (when limit >= 0).
std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit = -1);

// Number of edges of g with both ends in `vertices`.
std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices);

}  // namespace flexcolor
