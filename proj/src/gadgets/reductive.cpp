#include "flexcolor/gadgets/reductive.hpp"

#include <algorithm>
#include <set>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/gadgets/diamond.hpp"

namespace flexcolor {

namespace {

std::size_t binomial(std::size_t n, std::size_t r) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < r; ++i) c = c * (n - i) / (i + 1);
  return c;
}

// The index-th ell-subset of `items` in lexicographic order of positions.
std::vector<Color> nth_subset(const std::vector<Color>& items, std::size_t ell, std::size_t index) {
  std::vector<Color> out;
  std::size_t start = 0;
  for (std::size_t need = ell; need > 0; --need) {
    for (std::size_t i = start;; ++i) {
      const std::size_t rest = binomial(items.size() - i - 1, need - 1);
      if (index < rest) {
        out.push_back(items[i]);
        start = i + 1;
        break;
      }
      index -= rest;
    }
  }
  return out;
}

std::vector<Vertex> outside_neighbors(const Graph& g, const std::vector<Vertex>& inside) {
  std::set<Vertex> out;
  for (Vertex v : inside)
    for (Vertex w : g.neighbors(v))
      if (!std::binary_search(inside.begin(), inside.end(), w)) out.insert(w);
  return {out.begin(), out.end()};
}

}  // namespace

ExtensionStep reductive_step(const Graph& g, std::vector<Vertex> h_vertices, int k, const ListAssignment& lists,
                             Provider inner, const Rational& env_alpha) {
  std::sort(h_vertices.begin(), h_vertices.end());
  const auto sub = induced_subgraph(g, h_vertices);
  std::vector<int> ell;
  for (std::size_t i = 0; i < h_vertices.size(); ++i) {
    const Vertex z = h_vertices[i];
    const int l = k - g.degree(z) + sub.graph.degree(static_cast<Vertex>(i));
    if (l < 2)
      throw PreconditionError("ell(" + std::to_string(z) + ") = " + std::to_string(l) + " is below 2");
    if (lists.size(z) < k)
      throw PreconditionError("list of vertex " + std::to_string(z) + " is shorter than k");
    ell.push_back(l);
  }
  ExtensionStep step;
  step.name = inner.name;
  step.reduction_set = h_vertices;
  step.boundary = outside_neighbors(g, h_vertices);
  step.guarantee = {k, power(env_alpha, static_cast<unsigned>(k - 2)) * make_rational(2, k) * inner.alpha, inner.alpha};
  step.extend = [g, h = h_vertices, ell, lists, draw = inner.draw](const Coloring& outside, RandomSource& source) {
    std::vector<std::vector<Color>> pruned;
    pruned.reserve(h.size());
    for (std::size_t i = 0; i < h.size(); ++i) {
      std::vector<Color> avail;
      for (Color c : lists[h[i]]) {
        bool taken = false;
        for (Vertex w : g.neighbors(h[i]))
          if (!std::binary_search(h.begin(), h.end(), w) && outside.at(w) == c) taken = true;
        if (!taken) avail.push_back(c);
      }
      const auto want = static_cast<std::size_t>(ell[i]);
      if (avail.size() < want) throw CitationError("pruned list below ell at vertex " + std::to_string(h[i]));
      if (avail.size() > want) avail = nth_subset(avail, want, source.uniform(binomial(avail.size(), want)));
      pruned.push_back(std::move(avail));
    }
    const Coloring local = draw(ListAssignment(std::move(pruned)), source);
    Coloring phi = outside;
    for (std::size_t i = 0; i < h.size(); ++i) phi[h[i]] = local.at(i);
    return phi;
  };
  return step;
}

Sampler reductive_extend(const Graph& g, std::span<const Vertex> h_vertices, int k, const ListAssignment& lists,
                         const Sampler& environment, Provider inner) {
  const Rational env_alpha = environment.guarantee.forb;
  return apply_step(environment,
                    reductive_step(g, {h_vertices.begin(), h_vertices.end()}, k, lists, std::move(inner), env_alpha));
}

ExtensionStep diamond_block_step(const Graph& g, std::vector<Vertex> block, Vertex cut, const ListAssignment& lists,
                                 const Rational& env_eps, const Rational& env_alpha) {
  std::sort(block.begin(), block.end());
  const auto sub = induced_subgraph(g, block);
  const ExactDistribution law = diamond_six_colorings(sub.graph, lists.restrict(block));
  ExtensionStep step;
  step.name = "terminal diamond";
  for (Vertex v : block)
    if (v != cut) step.reduction_set.push_back(v);
  Vertex local_cut = -1;
  if (cut >= 0) {
    step.boundary = {cut};
    local_cut = sub.local(cut);
    step.guarantee = {3, env_eps, env_alpha};
  } else {
    step.guarantee = {3, make_rational(1, 3), make_rational(1, 3)};
  }
  step.extend = [block, cut, local_cut, law](const Coloring& outside, RandomSource& source) {
    const Coloring* chosen = nullptr;
    if (local_cut >= 0) {
      chosen = &draw_conditioned(law, local_cut, outside.at(cut), source);
    } else {
      chosen = &law.atoms()[source.uniform(law.support_size())].coloring;
    }
    Coloring phi = outside;
    for (std::size_t i = 0; i < block.size(); ++i) phi[block[i]] = chosen->at(i);
    return phi;
  };
  return step;
}

}  // namespace flexcolor
