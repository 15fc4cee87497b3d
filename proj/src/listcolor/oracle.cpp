#include "flexcolor/listcolor/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/core/random.hpp"
#include "flexcolor/listcolor/choosability.hpp"
#include "flexcolor/listcolor/lp.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

Rational reductive_value(const Graph& h, const ListAssignment& lists, int k) {
  const auto support = enumerate_L_colorings(h, lists);
  if (support.empty()) return 0;
  std::vector<std::vector<std::size_t>> events;
  for (Vertex v = 0; v < h.order(); ++v)
    for (Color c : lists[v]) {
      std::vector<std::size_t> event;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i][v] == c) event.push_back(i);
      events.push_back(std::move(event));
    }
  std::vector<Vertex> U;
  auto forb = [&](auto&& self, Vertex from) -> void {
    if (!U.empty()) {
      std::set<Color> colors;
      for (Vertex u : U) colors.insert(lists[u].begin(), lists[u].end());
      for (Color c : colors) {
        std::vector<std::size_t> event;
        for (std::size_t i = 0; i < support.size(); ++i)
          if (std::none_of(U.begin(), U.end(), [&](Vertex u) { return support[i][u] == c; })) event.push_back(i);
        events.push_back(std::move(event));
      }
    }
    if (static_cast<int>(U.size()) == k - 2) return;
    for (Vertex v = from; v < h.order(); ++v) {
      U.push_back(v);
      self(self, v + 1);
      U.pop_back();
    }
  };
  forb(forb, 0);
  return lp_max_min_events(support.size(), events).value;
}

OracleVerdict reductive_oracle(const Graph& h, std::span<const int> f, int k, const Rational& alpha,
                               const OracleOptions& options) {
  if (static_cast<int>(f.size()) != h.order()) throw PreconditionError("f does not match the graph");
  if (k < 2) throw PreconditionError("k must be at least 2");
  const int palette = std::min(options.palette_cap, std::accumulate(f.begin(), f.end(), 0));
  for (int size : f)
    if (size < 1 || size > palette) throw PreconditionError("list sizes must lie in [1, palette]");
  OracleVerdict verdict;
  auto check = [&](const ListAssignment& lists) {
    ++verdict.assignments;
    const Rational value = reductive_value(h, lists, k);
    verdict.worst_value = std::min(verdict.worst_value, value);
    if (value < alpha) {
      verdict.reductive = false;
      verdict.witness = lists;
      return false;
    }
    return true;
  };
  if (h.order() <= kExhaustiveOracleCap) {
    for_each_canonical_assignment(f, palette, check);
    return verdict;
  }
  verdict.sampled = true;
  SeededRandom rng(options.seed);
  for (std::size_t s = 0; s < options.samples; ++s) {
    std::vector<std::vector<Color>> lists;
    for (int size : f) {
      std::vector<Color> pool(static_cast<std::size_t>(palette));
      std::iota(pool.begin(), pool.end(), 1);
      for (int i = 0; i < size; ++i) std::swap(pool[i], pool[i + rng.uniform(pool.size() - i)]);
      lists.emplace_back(pool.begin(), pool.begin() + size);
    }
    if (!check(ListAssignment(std::move(lists)))) break;
  }
  return verdict;
}

}  // namespace flexcolor
