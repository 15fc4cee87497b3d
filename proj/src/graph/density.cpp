#include "flexcolor/graph/density.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <limits>
#include <numeric>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {
namespace {

using Cap = std::int64_t;
constexpr Cap kInfinite = std::numeric_limits<Cap>::max() / 4;

class Dinic {
 public:
  explicit Dinic(int n) : head_(n, -1), level_(n), it_(n) {}

  void add(int u, int v, Cap c) {
    arcs_.push_back({v, head_[u], c});
    head_[u] = static_cast<int>(arcs_.size()) - 1;
    arcs_.push_back({u, head_[v], 0});
    head_[v] = static_cast<int>(arcs_.size()) - 1;
  }

  Cap flow(int s, int t) {
    Cap total = 0;
    while (bfs(s, t)) {
      std::copy(head_.begin(), head_.end(), it_.begin());
      while (Cap pushed = dfs(s, t, kInfinite)) total += pushed;
    }
    return total;
  }

  // After flow(): vertices reachable from s in the residual graph.
  std::vector<char> source_side(int s) const {
    std::vector<char> seen(head_.size(), 0);
    std::deque<int> queue{s};
    seen[s] = 1;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && !seen[arcs_[a].to]) {
          seen[arcs_[a].to] = 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return seen;
  }

 private:
  struct Arc {
    int to;
    int next;
    Cap cap;
  };

  bool bfs(int s, int t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::deque<int> queue{s};
    level_[s] = 0;
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int a = head_[u]; a >= 0; a = arcs_[a].next)
        if (arcs_[a].cap > 0 && level_[arcs_[a].to] < 0) {
          level_[arcs_[a].to] = level_[u] + 1;
          queue.push_back(arcs_[a].to);
        }
    }
    return level_[t] >= 0;
  }

  // Recursion depth is bounded by the level graph depth (at most 4 here).
  Cap dfs(int u, int t, Cap limit) {
    if (u == t) return limit;
    for (int& a = it_[u]; a >= 0; a = arcs_[a].next) {
      Arc& arc = arcs_[a];
      if (arc.cap <= 0 || level_[arc.to] != level_[u] + 1) continue;
      if (Cap pushed = dfs(arc.to, t, std::min(limit, arc.cap))) {
        arc.cap -= pushed;
        arcs_[a ^ 1].cap += pushed;
        return pushed;
      }
    }
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_, level_, it_;
};

// Is there a nonempty H with q|E(H)| - p|V(H)| > 0? If so, returns such an H
// (the source side of a minimum cut of the closure network).
bool denser_than(const Graph& g, Cap p, Cap q, std::vector<Vertex>* witness) {
  const auto edges = g.edges();
  const int m = static_cast<int>(edges.size());
  const int n = g.order();
  const int s = m + n, t = m + n + 1;
  Dinic net(m + n + 2);
  for (int i = 0; i < m; ++i) {
    net.add(s, i, q);
    net.add(i, m + edges[i].first, kInfinite);
    net.add(i, m + edges[i].second, kInfinite);
  }
  for (int v = 0; v < n; ++v) net.add(m + v, t, p);
  const Cap cut = net.flow(s, t);
  if (cut >= q * static_cast<Cap>(m)) return false;
  if (witness) {
    const auto side = net.source_side(s);
    witness->clear();
    for (int v = 0; v < n; ++v)
      if (side[m + v]) witness->push_back(v);
  }
  return true;
}

}  // namespace

MadResult max_average_degree_with_witness(const Graph& g) {
  const int n = g.order();
  if (n == 0) throw PreconditionError("maximum average degree of the empty graph is undefined");
  const Cap m = static_cast<Cap>(g.size());
  // Candidate edge densities m'/n' (half the average degree), sorted, distinct.
  std::vector<std::pair<Cap, Cap>> candidates;
  for (Cap nn = 1; nn <= n; ++nn) {
    const Cap top = std::min(m, nn * (nn - 1) / 2);
    for (Cap mm = 0; mm <= top; ++mm) {
      const Cap d = std::gcd(mm, nn);
      candidates.emplace_back(mm / d, nn / d);
    }
  }
  std::sort(candidates.begin(), candidates.end(), [](const auto& a, const auto& b) {
    return a.first * b.second < b.first * a.second;
  });
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  // denser_than is true on a prefix of candidates; the answer is the first
  // candidate where it fails.
  std::size_t lo = 0, hi = candidates.size() - 1;
  while (lo < hi) {
    const std::size_t mid = (lo + hi) / 2;
    if (denser_than(g, candidates[mid].first, candidates[mid].second, nullptr))
      lo = mid + 1;
    else
      hi = mid;
  }
  MadResult result;
  result.value = Rational(2 * candidates[lo].first, candidates[lo].second);
  result.value.canonicalize();
  if (lo == 0) {
    result.witness = {0};
  } else {
    denser_than(g, candidates[lo - 1].first, candidates[lo - 1].second, &result.witness);
  }
  return result;
}

Rational max_average_degree(const Graph& g) { return max_average_degree_with_witness(g).value; }

DegeneracyResult degeneracy(const Graph& g) {
  const int n = g.order();
  DegeneracyResult result;
  std::vector<int> deg(n);
  int max_deg = 0;
  for (Vertex v = 0; v < n; ++v) max_deg = std::max(max_deg, deg[v] = g.degree(v));
  std::vector<std::vector<Vertex>> buckets(static_cast<std::size_t>(max_deg) + 1);
  for (Vertex v = 0; v < n; ++v) buckets[deg[v]].push_back(v);
  std::vector<char> removed(n, 0);
  std::vector<Vertex> removal;
  int d = 0;
  std::size_t b = 0;
  while (static_cast<int>(removal.size()) < n) {
    b = std::min<std::size_t>(b, buckets.size() - 1);
    while (buckets[b].empty()) ++b;
    const Vertex v = buckets[b].back();
    buckets[b].pop_back();
    if (removed[v] || deg[v] != static_cast<int>(b)) continue;  // stale entry
    removed[v] = 1;
    removal.push_back(v);
    d = std::max(d, deg[v]);
    for (Vertex w : g.neighbors(v))
      if (!removed[w]) {
        --deg[w];
        buckets[deg[w]].push_back(w);
        if (static_cast<std::size_t>(deg[w]) < b) b = deg[w];
      }
  }
  result.degeneracy = d;
  result.ordering.assign(removal.rbegin(), removal.rend());
  return result;
}

}  // namespace flexcolor
