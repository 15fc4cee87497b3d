#include "flexcolor/engine/config.hpp"

#include <algorithm>
#include <set>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/engine/discharge.hpp"
#include "flexcolor/gadgets/block.hpp"
#include "flexcolor/gadgets/exceptional.hpp"
#include "flexcolor/gadgets/max3.hpp"
#include "flexcolor/gadgets/path.hpp"
#include "flexcolor/graph/blocks.hpp"
#include "flexcolor/graph/conductive.hpp"
#include "flexcolor/graph/pattern.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

std::string_view config_kind_name(ConfigKind kind) {
  switch (kind) {
    case ConfigKind::LowDegreeVertex: return "LowDegreeVertex";
    case ConfigKind::ConductivePath: return "ConductivePath";
    case ConfigKind::TerminalDiamond: return "TerminalDiamond";
    case ConfigKind::TerminalH5: return "TerminalH5";
    case ConfigKind::TerminalH7: return "TerminalH7";
    case ConfigKind::TerminalBlockMax3: return "TerminalBlockMax3";
    case ConfigKind::CutComposite: return "CutComposite";
    case ConfigKind::WholeGraphMax3: return "WholeGraphMax3";
  }
  return "?";
}

namespace {

std::vector<Vertex> sorted(std::vector<Vertex> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

bool contains(const std::vector<Vertex>& sorted_set, Vertex v) {
  return std::binary_search(sorted_set.begin(), sorted_set.end(), v);
}

// True when no vertex of `set` other than `except` has a neighbor outside it.
bool closed_apart_from(const Graph& g, const std::vector<Vertex>& set, Vertex except) {
  for (Vertex v : set) {
    if (v == except) continue;
    for (Vertex w : g.neighbors(v))
      if (!contains(set, w)) return false;
  }
  return true;
}

int outside_degree(const Graph& g, const std::vector<Vertex>& set, Vertex v) {
  int n = 0;
  for (Vertex w : g.neighbors(v)) n += !contains(set, w);
  return n;
}

bool is_path_graph(const Graph& p) {
  try {
    path_sequence(p);
    return true;
  } catch (const PreconditionError&) {
    return false;
  }
}

// Empty string when valid, otherwise the reason.
std::string composite_problem(const Graph& g, Vertex spine, const std::vector<ConfigPart>& parts,
                              const std::vector<Vertex>& h) {
  std::size_t edges = 0;
  std::size_t total = 1;
  for (const auto& part : parts) {
    if (!contains(part.vertices, spine)) return "part misses the spine vertex";
    const auto sub = induced_subgraph(g, part.vertices);
    edges += sub.graph.size();
    total += part.vertices.size() - 1;
    if (part.shape == ConfigPart::Shape::Path) {
      if (!is_path_graph(sub.graph)) return "path part is not an induced path";
      const Vertex end_local = sub.local(spine);
      if (sub.graph.degree(end_local) > 1) return "spine vertex is interior to a path part";
    } else if (!is_two_connected(sub.graph)) {
      return "block part is not 2-connected";
    }
  }
  if (total != h.size()) return "parts overlap away from the spine";
  if (induced_edge_count(g, h) != edges) return "union of parts is not induced";
  const auto ell = ell_bounds(g, h, 3);
  for (int l : ell.values)
    if (l < 2) return "ell below 2";
  for (const auto& part : parts) {
    if (part.shape != ConfigPart::Shape::Block) continue;
    std::vector<int> f;
    for (Vertex v : part.vertices) f.push_back(ell.at(v));
    if (!block_provider(induced_subgraph(g, part.vertices).graph, f)) return "block part has no construction";
  }
  return {};
}

ReducibleConfig make_config(ConfigKind kind, std::string clause, std::vector<Vertex> vertices,
                            std::vector<Vertex> reduction_set, Vertex cut = -1) {
  ReducibleConfig c;
  c.kind = kind;
  c.clause = std::move(clause);
  c.vertices = std::move(vertices);
  c.reduction_set = std::move(reduction_set);
  c.cut = cut;
  return c;
}

std::optional<ReducibleConfig> composite(const Graph& g, Vertex spine, std::vector<ConfigPart> parts,
                                         std::string clause) {
  std::vector<Vertex> h;
  for (const auto& part : parts) h.insert(h.end(), part.vertices.begin(), part.vertices.end());
  h = sorted(h);
  if (!composite_problem(g, spine, parts, h).empty()) return std::nullopt;
  ReducibleConfig c;
  c.kind = ConfigKind::CutComposite;
  c.clause = std::move(clause);
  c.vertices = h;
  c.reduction_set = h;
  c.spine = spine;
  c.parts = std::move(parts);
  return c;
}

std::optional<ConfigPart> block_arm(const Graph& g, Vertex v, Vertex expensive) {
  const auto closure = conductively_connected(g, expensive).reachable;
  if (!contains(closure, v) || !closed_apart_from(g, closure, v)) return std::nullopt;
  return ConfigPart{ConfigPart::Shape::Block, closure};
}

ConfigPart path_arm(const Graph& g, Vertex v, Vertex cheap) {
  return {ConfigPart::Shape::Path, sorted(conductively_connected(g, v).witness_paths.at(cheap))};
}

std::optional<ReducibleConfig> low_degree(const Graph& g) {
  for (Vertex v = 0; v < g.order(); ++v)
    if (g.degree(v) <= 1) return make_config(ConfigKind::LowDegreeVertex, "vertex of degree at most 1", {v}, {v});
  return std::nullopt;
}

std::optional<ReducibleConfig> conductive_pair(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (g.degree(u) != 2) continue;
    const auto report = conductively_connected(g, u);
    for (Vertex w : report.reachable)
      if (w != u && g.degree(w) == 2) {
        const auto path = sorted(report.witness_paths.at(w));
        return make_config(ConfigKind::ConductivePath, "two conductively connected degree-2 vertices", path, path);
      }
  }
  return std::nullopt;
}

struct TerminalBlock {
  std::vector<Vertex> vertices;  // host ids, sorted
  Vertex cut = -1;
};

std::vector<TerminalBlock> terminal_blocks(const Graph& g) {
  std::vector<TerminalBlock> out;
  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const auto tree = block_cut_tree(sub.graph);
    for (int b : tree.terminal_blocks()) {
      TerminalBlock t;
      for (Vertex v : tree.blocks[b]) t.vertices.push_back(sub.to_host[v]);
      t.vertices = sorted(t.vertices);
      if (!tree.block_cuts[b].empty()) t.cut = sub.to_host[tree.block_cuts[b].front()];
      out.push_back(std::move(t));
    }
  }
  return out;
}

std::optional<ReducibleConfig> terminal_diamond(const Graph& g, const std::vector<TerminalBlock>& blocks) {
  for (const auto& t : blocks) {
    if (t.vertices.size() != 4 || !match_pattern(g, t.vertices, PatternKind::Diamond)) continue;
    auto c = make_config(ConfigKind::TerminalDiamond, "terminal diamond block", t.vertices, {}, t.cut);
    for (Vertex v : t.vertices)
      if (v != t.cut) c.reduction_set.push_back(v);
    return c;
  }
  return std::nullopt;
}

std::optional<ReducibleConfig> low_degree_block(const Graph& g, const std::vector<TerminalBlock>& blocks) {
  for (const auto& t : blocks) {
    if (t.vertices.size() < 3) continue;
    bool low = true;
    for (Vertex v : t.vertices) low &= g.degree(v) == 2 || g.degree(v) == 3;
    if (!low) continue;
    const auto sub = induced_subgraph(g, t.vertices);
    for (PatternKind kind : {PatternKind::H5, PatternKind::H7}) {
      if (sub.graph.order() != pattern_graph(kind).order()) continue;
      auto roles = embed_pattern(g, t.vertices, kind);
      if (!roles) continue;
      const Vertex x = (*roles)[kind == PatternKind::H5 ? int{h5_role::x} : int{h7_role::x}];
      if (t.cut >= 0 && t.cut != x) continue;
      auto c = make_config(kind == PatternKind::H5 ? ConfigKind::TerminalH5 : ConfigKind::TerminalH7,
                           "terminal block of degree-2 and degree-3 vertices", t.vertices, t.vertices, t.cut);
      c.roles = *roles;
      return c;
    }
    std::optional<Vertex> x;
    if (t.cut >= 0) x = sub.local(t.cut);
    try {
      check_max3_graph(sub.graph, x);
    } catch (const PreconditionError&) {
      continue;
    }
    const bool whole = t.cut < 0;
    return make_config(whole ? ConfigKind::WholeGraphMax3 : ConfigKind::TerminalBlockMax3,
                       whole ? "component of maximum degree 3" : "terminal block of degree-2 and degree-3 vertices",
                       t.vertices, t.vertices, t.cut);
  }
  return std::nullopt;
}

std::optional<ReducibleConfig> around_high_degree(const Graph& g) {
  const auto classes = classify_degree2(g);
  for (Vertex v = 0; v < g.order(); ++v) {
    const int d = g.degree(v);
    if (d < 4) continue;
    std::vector<Vertex> expensive, cheap;
    for (const auto& [u, info] : classes)
      if (std::binary_search(info.anchors.begin(), info.anchors.end(), v))
        (info.cls == Degree2Class::Expensive ? expensive : cheap).push_back(u);
    const auto s = expensive.size(), t = cheap.size();
    auto blocks = [&](std::size_t count) -> std::optional<std::vector<ConfigPart>> {
      std::vector<ConfigPart> parts;
      for (std::size_t i = 0; i < count; ++i) {
        auto arm = block_arm(g, v, expensive[i]);
        if (!arm) return std::nullopt;
        parts.push_back(std::move(*arm));
      }
      return parts;
    };
    auto paths = [&](std::vector<ConfigPart> parts, std::size_t count) {
      for (std::size_t i = 0; i < count; ++i) parts.push_back(path_arm(g, v, cheap[i]));
      return parts;
    };
    auto attempt = [&](std::size_t nb, std::size_t np, const char* clause) -> std::optional<ReducibleConfig> {
      auto parts = blocks(nb);
      if (!parts) return std::nullopt;
      return composite(g, v, paths(std::move(*parts), np), clause);
    };
    std::optional<ReducibleConfig> found;
    if (d == 4 && s >= 2) found = attempt(2, 0, "degree-4 vertex with two expensive vertices");
    if (!found && d == 4 && s >= 1 && t >= 1) found = attempt(1, 1, "degree-4 vertex with expensive and cheap vertices");
    if (!found && t + 1 >= static_cast<std::size_t>(d))
      found = attempt(0, static_cast<std::size_t>(d) - 1, "vertex of degree d with d-1 cheap vertices");
    if (!found && d == 5 && t >= 3 && s >= 1)
      found = attempt(1, 3, "degree-5 vertex with three cheap and one expensive vertex");
    if (!found && d == 5 && t >= 1 && s >= 2)
      found = attempt(2, 1, "degree-5 vertex with one cheap and two expensive vertices");
    if (found) return found;
    if (d >= 6 && 2 * s + t > static_cast<std::size_t>(d)) {
      // Two of the paths share an edge at v, so two degree-2 vertices are
      // conductively connected.
      std::vector<Vertex> partners = expensive;
      partners.insert(partners.end(), cheap.begin(), cheap.end());
      for (Vertex a : sorted(partners)) {
        const auto report = conductively_connected(g, a);
        for (Vertex b : partners)
          if (b != a && report.reaches(b)) {
            const auto path = sorted(report.witness_paths.at(b));
            return make_config(ConfigKind::ConductivePath, "2s + t above the degree", path, path);
          }
      }
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<ReducibleConfig> find_reducible_config(const Graph& g) {
  if (g.order() == 0) return std::nullopt;
  if (auto c = low_degree(g)) return c;
  if (auto c = conductive_pair(g)) return c;
  const auto blocks = terminal_blocks(g);
  if (auto c = terminal_diamond(g, blocks)) return c;
  if (auto c = low_degree_block(g, blocks)) return c;
  return around_high_degree(g);
}

void check_config(const Graph& g, const ReducibleConfig& c) {
  auto fail = [&](const std::string& why) {
    throw PreconditionError(std::string(config_kind_name(c.kind)) + ": " + why);
  };
  if (c.reduction_set.empty()) fail("empty reduction set");
  if (c.vertices != sorted(c.vertices) || c.reduction_set != sorted(c.reduction_set)) fail("vertex sets not sorted");
  for (Vertex v : c.vertices)
    if (v < 0 || v >= g.order()) fail("vertex out of range");
  for (Vertex v : c.reduction_set)
    if (!contains(c.vertices, v)) fail("reduction set leaves the gadget");
  const auto sub = induced_subgraph(g, c.vertices);
  switch (c.kind) {
    case ConfigKind::LowDegreeVertex:
      if (c.vertices.size() != 1 || g.degree(c.vertices[0]) > 1) fail("needs one vertex of degree at most 1");
      break;
    case ConfigKind::ConductivePath: {
      if (!is_path_graph(sub.graph)) fail("not an induced path");
      for (Vertex i = 0; i < sub.graph.order(); ++i) {
        const int want = sub.graph.degree(i) <= 1 ? 2 : 3;
        if (g.degree(sub.to_host[i]) != want) fail("endpoint or interior degree is wrong");
      }
      if (c.reduction_set != c.vertices) fail("reduction set must be the path");
      break;
    }
    case ConfigKind::TerminalDiamond:
      if (c.vertices.size() != 4 || !match_pattern(g, c.vertices, PatternKind::Diamond)) fail("not a diamond");
      if (!closed_apart_from(g, c.vertices, c.cut)) fail("not a terminal block");
      if (c.cut >= 0 && !contains(c.vertices, c.cut)) fail("cut vertex outside the block");
      break;
    case ConfigKind::TerminalH5:
    case ConfigKind::TerminalH7: {
      const PatternKind kind = c.kind == ConfigKind::TerminalH5 ? PatternKind::H5 : PatternKind::H7;
      check_context(GadgetContext{g, kind, c.roles});
      const Vertex x = c.roles[kind == PatternKind::H5 ? int{h5_role::x} : int{h7_role::x}];
      if (outside_degree(g, c.vertices, x) != (c.cut >= 0 ? 1 : 0) || (c.cut >= 0 && c.cut != x))
        fail("cut vertex must be x");
      if (c.reduction_set != c.vertices) fail("reduction set must be the gadget");
      break;
    }
    case ConfigKind::TerminalBlockMax3:
    case ConfigKind::WholeGraphMax3: {
      std::optional<Vertex> x;
      if (c.cut >= 0) {
        if (!contains(c.vertices, c.cut) || outside_degree(g, c.vertices, c.cut) != 1)
          fail("cut vertex must have exactly one outside neighbor");
        x = sub.local(c.cut);
      }
      if ((c.kind == ConfigKind::WholeGraphMax3) != (c.cut < 0)) fail("cut vertex inconsistent with kind");
      if (!closed_apart_from(g, c.vertices, c.cut)) fail("not a terminal block");
      check_max3_graph(sub.graph, x);
      if (c.reduction_set != c.vertices) fail("reduction set must be the block");
      break;
    }
    case ConfigKind::CutComposite: {
      const auto problem = composite_problem(g, c.spine, c.parts, c.vertices);
      if (!problem.empty()) fail(problem);
      if (c.reduction_set != c.vertices) fail("reduction set must be the union");
      break;
    }
  }
}

}  // namespace flexcolor
