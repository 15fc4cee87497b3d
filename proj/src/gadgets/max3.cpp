#include "flexcolor/gadgets/max3.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/blocks.hpp"
#include "flexcolor/graph/graph_io.hpp"
#include "flexcolor/graph/pattern.hpp"
#include "flexcolor/listcolor/choosability.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

namespace {

std::string witness(const Graph& h, const ListAssignment& lists, const std::vector<Vertex>& removed) {
  std::ostringstream out;
  out << format_graph(h) << format_lists(lists) << "removed:";
  for (Vertex r : removed) out << ' ' << r;
  out << '\n';
  return out.str();
}

// Every component of h - removed is choosable from lists shrunk by one at
// each vertex with a removed neighbor.
struct Components {
  InducedSubgraph rest;
  std::vector<std::vector<Vertex>> parts;  // local ids of rest.graph
  std::vector<int> budget;                 // per local vertex
};

Components split(const Graph& h, const std::vector<Vertex>& removed, const ListAssignment& lists,
                 const std::string& claim, const std::function<std::string()>& cert) {
  Components out{remove_vertices(h, removed), {}, {}};
  std::vector<char> gone(static_cast<std::size_t>(h.order()), 0);
  for (Vertex r : removed) gone[r] = 1;
  for (Vertex i = 0; i < out.rest.graph.order(); ++i) {
    const Vertex v = out.rest.to_host[i];
    int hits = 0;
    for (Vertex w : h.neighbors(v)) hits += gone[w];
    if (hits > 1) throw CitationError(claim + ": vertex " + std::to_string(v) + " has two removed neighbors", cert());
    out.budget.push_back(lists.size(v) - hits);
    if (out.budget.back() < out.rest.graph.degree(i))
      throw CitationError(claim + ": budget below degree at vertex " + std::to_string(v), cert());
  }
  out.parts = connected_components(out.rest.graph);
  return out;
}

bool part_good(const Components& c, const std::vector<Vertex>& part, InducedSubgraph& sub, std::vector<int>& f) {
  sub = induced_subgraph(c.rest.graph, part);
  f.clear();
  for (Vertex v : part) f.push_back(c.budget[v]);
  return is_f_choosable_ERT(sub.graph, f);
}

}  // namespace

std::vector<int> max3_classes(const Graph& h) {
  const int n = h.order();
  std::vector<int> cls(static_cast<std::size_t>(n), -1);
  int count = 0;
  for (Vertex v = 0; v < n; ++v) {
    const auto dist = bfs_distances(h, v, kMax3ClassDistance);
    std::vector<char> used(static_cast<std::size_t>(count) + 1, 0);
    for (Vertex u = 0; u < v; ++u)
      if (dist[u] >= 1) used[cls[u]] = 1;
    int c = 0;
    while (used[c]) ++c;
    cls[v] = c;
    count = std::max(count, c + 1);
  }
  if (count > kMax3ClassBound)
    throw CitationError("distance-8 first-fit used " + std::to_string(count) + " classes", format_graph(h));
  return cls;
}

void check_max3_graph(const Graph& h, std::optional<Vertex> x) {
  if (!is_two_connected(h)) throw PreconditionError("graph is not 2-connected");
  if (h.max_degree() > 3) throw PreconditionError("graph has a vertex of degree above 3");
  for (PatternKind kind : {PatternKind::Diamond, PatternKind::K4, PatternKind::H5, PatternKind::H7})
    if (h.order() == pattern_graph(kind).order() && embed_pattern(h, kind))
      throw PreconditionError("graph is isomorphic to " + std::string(pattern_name(kind)));
  if (x && (*x < 0 || *x >= h.order() || h.degree(*x) != 2))
    throw PreconditionError("exceptional vertex must have degree 2");
}

Coloring max3_procedure(const Graph& h, const std::vector<int>& classes, std::optional<Vertex> x,
                        const ListAssignment& lists, RandomSource& source) {
  const int count = *std::max_element(classes.begin(), classes.end()) + 1;
  const int chosen = static_cast<int>(source.uniform(static_cast<std::size_t>(count)));
  std::vector<Vertex> R;
  for (Vertex v = 0; v < h.order(); ++v)
    if (classes[v] == chosen) R.push_back(v);
  auto cert_R = [&] { return witness(h, lists, R); };

  const Components first = split(h, R, lists, "class separation", cert_R);
  std::vector<Vertex> kept = R;  // R'
  std::map<Vertex, std::pair<std::size_t, int>> owner;  // r -> (component, block) of its nice block
  InducedSubgraph sub;
  std::vector<int> f;
  for (std::size_t ci = 0; ci < first.parts.size(); ++ci) {
    if (part_good(first, first.parts[ci], sub, f)) continue;
    const auto tree = block_cut_tree(sub.graph);
    const auto terminal = tree.terminal_blocks();
    if (terminal.size() < 3)
      throw CitationError("bad component with " + std::to_string(terminal.size()) + " terminal blocks", cert_R());
    std::vector<std::pair<int, Vertex>> nice;  // (block, r)
    for (int b : terminal) {
      std::vector<Vertex> host;
      for (Vertex v : tree.blocks[b]) host.push_back(first.rest.to_host[sub.to_host[v]]);
      if (x && std::find(host.begin(), host.end(), *x) != host.end()) continue;
      std::vector<Vertex> touching;
      for (Vertex v : host)
        for (Vertex w : h.neighbors(v))
          if (std::binary_search(R.begin(), R.end(), w)) touching.push_back(w);
      std::sort(touching.begin(), touching.end());
      touching.erase(std::unique(touching.begin(), touching.end()), touching.end());
      if (touching.size() != 1)
        throw CitationError("nice terminal block with " + std::to_string(touching.size()) + " neighbors in R",
                            cert_R());
      const auto [it, fresh] = owner.emplace(touching[0], std::pair{ci, b});
      if (!fresh && it->second != std::pair{ci, b})
        throw CitationError("vertex " + std::to_string(touching[0]) + " touches two nice terminal blocks", cert_R());
      nice.emplace_back(b, touching[0]);
    }
    if (nice.size() < 2)
      throw CitationError("bad component with fewer than two nice terminal blocks", cert_R());
    const Vertex r = nice[source.uniform(nice.size())].second;
    kept.erase(std::remove(kept.begin(), kept.end(), r), kept.end());
  }

  auto cert_kept = [&] { return witness(h, lists, kept); };
  const Components second = split(h, kept, lists, "reduced class separation", cert_kept);
  for (const auto& part : second.parts)
    if (!part_good(second, part, sub, f)) throw CitationError("component stays bad after removal", cert_kept());

  Coloring partial(static_cast<std::size_t>(h.order()), kNoColor);
  for (Vertex r : kept) partial[r] = lists[r][source.uniform(static_cast<std::size_t>(lists.size(r)))];
  auto phi = extend_coloring(h, lists, partial);
  if (!phi) throw CitationError("good components failed to extend", cert_kept());
  return *phi;
}

namespace {

void check_lists(const Graph& h, const ListAssignment& lists, std::optional<Vertex> x) {
  if (lists.order() != h.order()) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < h.order(); ++v)
    if (lists.size(v) != (x && *x == v ? 2 : 3))
      throw PreconditionError("vertex " + std::to_string(v) + " has the wrong list size");
}

}  // namespace

Sampler max3_sampler(const Graph& h, const ListAssignment& lists, std::optional<Vertex> x) {
  check_max3_graph(h, x);
  check_lists(h, lists, x);
  Sampler s;
  s.name = "max3";
  s.frame_order = h.order();
  for (Vertex v = 0; v < h.order(); ++v) s.domain.push_back(v);
  s.guarantee = {3, power(make_rational(1, 3), 8), power(make_rational(1, 3), 8)};
  s.draw = [h, x, lists, classes = max3_classes(h)](RandomSource& source) {
    return max3_procedure(h, classes, x, lists, source);
  };
  return s;
}

Provider max3_provider(const Graph& h, std::optional<Vertex> x) {
  check_max3_graph(h, x);
  return {"max3", power(make_rational(1, 3), 8),
          [h, x, classes = max3_classes(h)](const ListAssignment& lists, RandomSource& source) {
            check_lists(h, lists, x);
            return max3_procedure(h, classes, x, lists, source);
          }};
}

}  // namespace flexcolor
