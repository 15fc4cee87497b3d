#include "flexcolor/gadgets/path.hpp"

#include <array>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

std::vector<Vertex> path_sequence(const Graph& p) {
  const int n = p.order();
  if (n == 0) return {};
  if (p.size() != static_cast<std::size_t>(n - 1) || !is_connected(p) || p.max_degree() > 2)
    throw PreconditionError("graph is not a path");
  Vertex start = 0;
  while (p.degree(start) > 1) ++start;
  std::vector<Vertex> seq{start};
  Vertex previous = -1;
  while (static_cast<int>(seq.size()) < n) {
    const Vertex cur = seq.back();
    for (Vertex w : p.neighbors(cur))
      if (w != previous) {
        previous = cur;
        seq.push_back(w);
        break;
      }
  }
  return seq;
}

std::pair<Coloring, Coloring> path_pair_colorings(const Graph& p, const ListAssignment& lists) {
  const auto seq = path_sequence(p);
  const std::size_t n = seq.size();
  for (Vertex v : seq)
    if (lists.size(v) != 2) throw PreconditionError("path pair needs lists of size 2");
  // state s at position i: phi1 takes lists[seq[i]][s], phi2 the other one.
  auto pick = [&](std::size_t i, int s, int which) { return lists[seq[i]][which == 0 ? s : 1 - s]; };
  std::vector<std::array<int, 2>> from(n, {-1, -1});
  std::vector<std::array<bool, 2>> ok(n, {true, true});
  for (std::size_t i = 1; i < n; ++i)
    for (int s = 0; s < 2; ++s) {
      ok[i][s] = false;
      for (int t = 0; t < 2; ++t)
        if (ok[i - 1][t] && pick(i - 1, t, 0) != pick(i, s, 0) && pick(i - 1, t, 1) != pick(i, s, 1)) {
          ok[i][s] = true;
          from[i][s] = t;
          break;
        }
    }
  Coloring phi1(n, kNoColor), phi2(n, kNoColor);
  if (n == 0) return {phi1, phi2};
  int s = ok[n - 1][0] ? 0 : ok[n - 1][1] ? 1 : -1;
  if (s < 0) throw CitationError("no covering pair of path colorings", format_lists(lists));
  for (std::size_t i = n; i-- > 0;) {
    phi1[seq[i]] = pick(i, s, 0);
    phi2[seq[i]] = pick(i, s, 1);
    if (i > 0) s = from[i][s];
  }
  if (phi2 < phi1) std::swap(phi1, phi2);
  return {phi1, phi2};
}

namespace {

Coloring draw_path(const Graph& p, const ListAssignment& lists, RandomSource& source) {
  std::vector<std::vector<Color>> pairs;
  for (Vertex v = 0; v < p.order(); ++v) {
    std::vector<Color> list(lists[v].begin(), lists[v].end());
    if (list.size() == 3) list.erase(list.begin() + static_cast<long>(source.uniform(3)));
    else if (list.size() != 2) throw PreconditionError("path sampler needs lists of size 2 or 3");
    pairs.push_back(std::move(list));
  }
  auto [phi1, phi2] = path_pair_colorings(p, ListAssignment(std::move(pairs)));
  return source.uniform(2) == 0 ? phi1 : phi2;
}

}  // namespace

Sampler path_sampler(const Graph& p, const ListAssignment& lists) {
  path_sequence(p);
  for (Vertex v = 0; v < p.order(); ++v)
    if (lists.size(v) < 2 || lists.size(v) > 3) throw PreconditionError("path sampler needs lists of size 2 or 3");
  Sampler s;
  s.name = "path";
  s.frame_order = p.order();
  for (Vertex v = 0; v < p.order(); ++v) s.domain.push_back(v);
  s.draw = [p, lists](RandomSource& source) { return draw_path(p, lists, source); };
  s.guarantee = {3, make_rational(1, 3), make_rational(1, 3)};
  return s;
}

Provider path_provider(const Graph& p) {
  path_sequence(p);
  return {"path", make_rational(1, 3),
          [p](const ListAssignment& lists, RandomSource& source) { return draw_path(p, lists, source); }};
}

}  // namespace flexcolor
