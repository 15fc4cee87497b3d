#include "flexcolor/graph/conductive.hpp"

#include <algorithm>
#include <deque>

namespace flexcolor {

ConductivityReport conductively_connected(const Graph& g, Vertex u) {
  ConductivityReport report;
  report.source = u;
  std::vector<Vertex> parent(static_cast<std::size_t>(g.order()), -1);
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::deque<Vertex> queue{u};
  seen.at(u) = 1;
  // FIFO order over sorted neighbor lists makes each first discovery the
  // lexicographically least shortest path.
  while (!queue.empty()) {
    const Vertex x = queue.front();
    queue.pop_front();
    report.reachable.push_back(x);
    if (x != u && g.degree(x) != 3) continue;  // cannot be an internal vertex
    for (Vertex w : g.neighbors(x))
      if (!seen[w]) {
        seen[w] = 1;
        parent[w] = x;
        queue.push_back(w);
      }
  }
  std::sort(report.reachable.begin(), report.reachable.end());
  for (Vertex v : report.reachable) {
    std::vector<Vertex> path;
    for (Vertex x = v; x != -1; x = parent[x]) path.push_back(x);
    std::reverse(path.begin(), path.end());
    report.witness_paths.emplace(v, std::move(path));
  }
  return report;
}

std::vector<Vertex> conductive_high_degree(const Graph& g, Vertex u) {
  std::vector<Vertex> out;
  for (Vertex v : conductively_connected(g, u).reachable)
    if (v != u && g.degree(v) >= 4) out.push_back(v);
  return out;
}

}  // namespace flexcolor
