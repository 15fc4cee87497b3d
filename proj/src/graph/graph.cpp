#include "flexcolor/graph/graph.hpp"

#include <algorithm>
#include <deque>
#include <string>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

Graph::Graph(int order) {
  if (order < 0) throw PreconditionError("negative vertex count");
  adjacency_.resize(static_cast<std::size_t>(order));
}

Graph::Graph(int order, std::span<const Edge> edges) : Graph(order) {
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= order || v >= order)
      throw PreconditionError("edge " + std::to_string(u) + "-" + std::to_string(v) + " is out of range");
    if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
    adjacency_[u].push_back(v);
    adjacency_[v].push_back(u);
  }
  for (std::size_t v = 0; v < adjacency_.size(); ++v) {
    auto& list = adjacency_[v];
    std::sort(list.begin(), list.end());
    auto dup = std::adjacent_find(list.begin(), list.end());
    if (dup != list.end())
      throw PreconditionError("parallel edge " + std::to_string(v) + "-" + std::to_string(*dup));
  }
  edge_count_ = edges.size();
}

std::size_t Graph::check(Vertex v) const {
  if (v < 0 || static_cast<std::size_t>(v) >= adjacency_.size())
    throw PreconditionError("vertex " + std::to_string(v) + " is out of range");
  return static_cast<std::size_t>(v);
}

bool Graph::adjacent(Vertex u, Vertex v) const {
  const auto& list = adjacency_[check(u)];
  return std::binary_search(list.begin(), list.end(), v);
}

int Graph::max_degree() const noexcept {
  std::size_t best = 0;
  for (const auto& list : adjacency_) best = std::max(best, list.size());
  return static_cast<int>(best);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < order(); ++u)
    for (Vertex v : adjacency_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

Vertex InducedSubgraph::local(Vertex host) const {
  auto it = std::lower_bound(to_host.begin(), to_host.end(), host);
  if (it == to_host.end() || *it != host) return -1;
  return static_cast<Vertex>(it - to_host.begin());
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
  InducedSubgraph sub;
  sub.to_host.assign(vertices.begin(), vertices.end());
  std::sort(sub.to_host.begin(), sub.to_host.end());
  sub.to_host.erase(std::unique(sub.to_host.begin(), sub.to_host.end()), sub.to_host.end());
  for (Vertex v : sub.to_host)
    if (v < 0 || v >= g.order()) throw PreconditionError("vertex " + std::to_string(v) + " is out of range");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < sub.to_host.size(); ++i) {
    for (Vertex w : g.neighbors(sub.to_host[i])) {
      const Vertex j = sub.local(w);
      if (j > static_cast<Vertex>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
    }
  }
  sub.graph = Graph(static_cast<int>(sub.to_host.size()), edges);
  return sub;
}

InducedSubgraph remove_vertices(const Graph& g, std::span<const Vertex> removed) {
  std::vector<char> gone(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : removed) gone.at(static_cast<std::size_t>(v)) = 1;
  std::vector<Vertex> keep;
  for (Vertex v = 0; v < g.order(); ++v)
    if (!gone[v]) keep.push_back(v);
  return induced_subgraph(g, keep);
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
  std::vector<std::vector<Vertex>> components;
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  for (Vertex s = 0; s < g.order(); ++s) {
    if (seen[s]) continue;
    std::vector<Vertex> component{s};
    seen[s] = 1;
    for (std::size_t i = 0; i < component.size(); ++i)
      for (Vertex w : g.neighbors(component[i]))
        if (!seen[w]) {
          seen[w] = 1;
          component.push_back(w);
        }
    std::sort(component.begin(), component.end());
    components.push_back(std::move(component));
  }
  return components;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

std::vector<int> bfs_distances(const Graph& g, Vertex source, int limit) {
  std::vector<int> dist(static_cast<std::size_t>(g.order()), -1);
  std::deque<Vertex> queue{source};
  dist.at(static_cast<std::size_t>(source)) = 0;
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    if (limit >= 0 && dist[x] >= limit) continue;
    for (Vertex w : g.neighbors(x))
      if (dist[w] < 0) {
        dist[w] = dist[x] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

std::size_t induced_edge_count(const Graph& g, std::span<const Vertex> vertices) {
  std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : vertices) in.at(static_cast<std::size_t>(v)) = 1;
  std::size_t count = 0;
  for (Vertex v : vertices)
    for (Vertex w : g.neighbors(v))
      if (in[w] && v < w) ++count;
  return count;
}

}  // namespace flexcolor
