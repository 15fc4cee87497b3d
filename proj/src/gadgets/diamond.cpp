#include "flexcolor/gadgets/diamond.hpp"

#include <map>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/pattern.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

namespace {

struct CoverSearch {
  const ListAssignment& lists;
  std::vector<Coloring> colorings;
  std::vector<std::vector<int>> uses;  // uses[v][slot]
  std::vector<Coloring> chosen;
  std::vector<int> taken;  // per coloring
  int max_repeat = 1;

  int slot(Vertex v, Color c) const {
    const auto l = lists[v];
    return static_cast<int>(std::lower_bound(l.begin(), l.end(), c) - l.begin());
  }

  bool fits(const Coloring& phi) const {
    for (Vertex v = 0; v < static_cast<Vertex>(phi.size()); ++v)
      if (uses[v][slot(v, phi[v])] >= 2) return false;
    return true;
  }

  void add(const Coloring& phi, int delta) {
    for (Vertex v = 0; v < static_cast<Vertex>(phi.size()); ++v) uses[v][slot(v, phi[v])] += delta;
  }

  bool run() {
    if (chosen.size() == 6) return true;
    // the first uncovered (v, c) must be covered by the next coloring
    Vertex bv = -1;
    int bs = 0;
    for (Vertex v = 0; v < static_cast<Vertex>(uses.size()) && bv < 0; ++v)
      for (int s = 0; s < 3; ++s)
        if (uses[v][s] < 2) {
          bv = v;
          bs = s;
          break;
        }
    for (std::size_t i = 0; i < colorings.size(); ++i) {
      const Coloring& phi = colorings[i];
      if (phi[bv] != lists[bv][bs] || taken[i] >= max_repeat || !fits(phi)) continue;
      add(phi, 1);
      ++taken[i];
      chosen.push_back(phi);
      if (run()) return true;
      chosen.pop_back();
      --taken[i];
      add(phi, -1);
    }
    return false;
  }
};

}  // namespace

std::vector<Coloring> diamond_cover(const Graph& d, const ListAssignment& lists) {
  if (!embed_pattern(d, PatternKind::Diamond)) throw PreconditionError("graph is not a diamond");
  for (Vertex v = 0; v < d.order(); ++v)
    if (lists.size(v) != 3) throw PreconditionError("diamond cover needs lists of size 3");
  // Distinct colorings first, repeats only if that fails.
  for (int repeat = 1; repeat <= 2; ++repeat) {
    CoverSearch search{lists, enumerate_L_colorings(d, lists, d.order()), {}, {}, {}, repeat};
    search.uses.assign(static_cast<std::size_t>(d.order()), std::vector<int>(3, 0));
    search.taken.assign(search.colorings.size(), 0);
    if (search.run()) return search.chosen;
  }
  throw CitationError("diamond has no six-coloring cover", format_lists(lists));
}

ExactDistribution diamond_six_colorings(const Graph& d, const ListAssignment& lists) {
  std::vector<WeightedColoring> atoms;
  for (auto& phi : diamond_cover(d, lists)) atoms.push_back({std::move(phi), make_rational(1, 6)});
  return ExactDistribution(d, lists, std::move(atoms));
}

}  // namespace flexcolor
