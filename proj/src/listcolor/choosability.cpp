#include "flexcolor/listcolor/choosability.hpp"

#include <algorithm>
#include <numeric>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/blocks.hpp"
#include "flexcolor/graph/gallai.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {
namespace {

struct CanonicalWalk {
  std::span<const int> f;
  int palette;
  const std::function<bool(const ListAssignment&)>& visit;
  std::vector<std::vector<Color>> lists;
  std::size_t visited = 0;
  bool stopped = false;

  void vertex(std::size_t i, int used) {
    if (stopped) return;
    if (i == f.size()) {
      ++visited;
      if (!visit(ListAssignment(lists))) stopped = true;
      return;
    }
    const int size = f[i];
    // `fresh` new colors used+1..used+fresh, the rest drawn from 1..used.
    for (int fresh = 0; fresh <= size && !stopped; ++fresh) {
      const int old = size - fresh;
      if (old > used || used + fresh > palette) continue;
      std::vector<Color> chosen;
      choose_old(i, used, fresh, old, 1, chosen);
    }
  }

  void choose_old(std::size_t i, int used, int fresh, int remaining, Color from, std::vector<Color>& chosen) {
    if (stopped) return;
    if (remaining == 0) {
      std::vector<Color> list = chosen;
      for (int j = 1; j <= fresh; ++j) list.push_back(used + j);
      lists[i] = std::move(list);
      vertex(i + 1, used + fresh);
      return;
    }
    for (Color c = from; c + remaining - 1 <= used && !stopped; ++c) {
      chosen.push_back(c);
      choose_old(i, used, fresh, remaining - 1, c + 1, chosen);
      chosen.pop_back();
    }
  }
};

std::size_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::size_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::size_t>(n - k + i) / static_cast<std::size_t>(i);
  return r;
}

}  // namespace

std::vector<int> degrees(const Graph& g) {
  std::vector<int> out(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) out[v] = g.degree(v);
  return out;
}

std::size_t for_each_canonical_assignment(std::span<const int> f, int palette,
                                          const std::function<bool(const ListAssignment&)>& visit) {
  for (int size : f)
    if (size < 1) throw PreconditionError("list sizes must be positive");
  CanonicalWalk walk{f, palette, visit, std::vector<std::vector<Color>>(f.size())};
  walk.vertex(0, 0);
  return walk.visited;
}

std::size_t count_canonical_assignments(std::span<const int> f, int palette) {
  // ways[u] = number of partial assignments using colors 1..u so far
  std::vector<std::size_t> ways(static_cast<std::size_t>(palette) + 1, 0);
  ways[0] = 1;
  for (int size : f) {
    std::vector<std::size_t> next(ways.size(), 0);
    for (int used = 0; used <= palette; ++used) {
      if (!ways[used]) continue;
      for (int fresh = 0; fresh <= size && used + fresh <= palette; ++fresh)
        next[used + fresh] += ways[used] * binomial(used, size - fresh);
    }
    ways = std::move(next);
  }
  return std::accumulate(ways.begin(), ways.end(), std::size_t{0});
}

bool is_f_choosable_ERT(const Graph& g, std::span<const int> f) {
  if (static_cast<int>(f.size()) != g.order()) throw PreconditionError("f does not match the graph");
  if (!is_connected(g)) throw PreconditionError("degree-choosability test needs a connected graph");
  bool surplus = false;
  for (Vertex v = 0; v < g.order(); ++v) {
    if (f[v] < g.degree(v)) throw PreconditionError("f(v) < deg(v) at vertex " + std::to_string(v));
    surplus |= f[v] > g.degree(v);
  }
  if (surplus) return true;
  if (!is_gallai_tree(g)) return true;
  if (g.order() <= kErtWitnessOrder && find_induced_even_cycle_or_theta(g)) return true;
  return false;
}

bool is_f_choosable_exhaustive(const Graph& g, std::span<const int> f, ListAssignment* witness) {
  if (static_cast<int>(f.size()) != g.order()) throw PreconditionError("f does not match the graph");
  const int palette = std::accumulate(f.begin(), f.end(), 0);
  bool all = true;
  for_each_canonical_assignment(f, palette, [&](const ListAssignment& lists) {
    if (find_L_coloring(g, lists)) return true;
    all = false;
    if (witness) *witness = lists;
    return false;
  });
  return all;
}

bool gallai_list_colorable(const Graph& g, const ListAssignment& lists) {
  if (lists.order() != g.order()) throw PreconditionError("lists do not match the graph");
  for (Vertex v = 0; v < g.order(); ++v)
    if (lists.size(v) != g.degree(v)) throw PreconditionError("|L(v)| != deg(v) at vertex " + std::to_string(v));
  if (!is_gallai_tree(g)) throw PreconditionError("graph is not a Gallai tree");
  const auto tree = block_cut_tree(g);
  for (int b : tree.terminal_blocks()) {
    const auto& block = tree.blocks[b];
    for (std::size_t i = 0; i < block.size(); ++i)
      for (std::size_t j = i + 1; j < block.size(); ++j) {
        const Vertex u = block[i], w = block[j];
        if (g.degree(u) == g.degree(w) && !std::ranges::equal(lists[u], lists[w])) return true;
      }
  }
  return find_L_coloring(g, lists).has_value();
}

}  // namespace flexcolor
