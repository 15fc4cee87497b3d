#include "flexcolor/graph/pattern.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {
namespace {

Graph build(PatternKind kind) {
  using E = std::vector<Edge>;
  switch (kind) {
    case PatternKind::Diamond:
      return Graph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}});
    case PatternKind::K4:
      return Graph(4, E{{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    case PatternKind::H5: {
      using namespace h5_role;
      return Graph(5, E{{w, z}, {v, z}, {y, z}, {v, y}, {v, w}, {w, x}, {y, x}});
    }
    case PatternKind::H7: {
      using namespace h7_role;
      return Graph(7, E{{a, b}, {w, a}, {w, b}, {w, y}, {y, x}, {z, x}, {y, z}, {v, a}, {v, b}, {v, z}});
    }
  }
  throw std::logic_error("unknown pattern");
}

}  // namespace

std::string_view pattern_name(PatternKind kind) {
  switch (kind) {
    case PatternKind::Diamond: return "Diamond";
    case PatternKind::K4: return "K4";
    case PatternKind::H5: return "H5";
    case PatternKind::H7: return "H7";
  }
  return "?";
}

const Graph& pattern_graph(PatternKind kind) {
  static const Graph diamond = build(PatternKind::Diamond);
  static const Graph k4 = build(PatternKind::K4);
  static const Graph h5 = build(PatternKind::H5);
  static const Graph h7 = build(PatternKind::H7);
  switch (kind) {
    case PatternKind::Diamond: return diamond;
    case PatternKind::K4: return k4;
    case PatternKind::H5: return h5;
    case PatternKind::H7: return h7;
  }
  throw std::logic_error("unknown pattern");
}

std::optional<std::vector<Vertex>> embed_pattern(const Graph& g, std::span<const Vertex> vertices,
                                                 PatternKind kind) {
  const Graph& p = pattern_graph(kind);
  if (static_cast<int>(vertices.size()) != p.order())
    throw PreconditionError(std::string(pattern_name(kind)) + " needs exactly " +
                            std::to_string(p.order()) + " vertices");
  if (induced_edge_count(g, vertices) != p.size()) return std::nullopt;
  std::vector<Vertex> host(vertices.begin(), vertices.end());
  std::sort(host.begin(), host.end());
  if (std::adjacent_find(host.begin(), host.end()) != host.end())
    throw PreconditionError("vertex set has repeated vertices");
  // perm[role] indexes into host; first hit in lexicographic permutation order
  std::vector<int> perm(host.size());
  std::iota(perm.begin(), perm.end(), 0);
  const auto edges = p.edges();
  do {
    bool ok = true;
    for (auto [r, s] : edges)
      if (!g.adjacent(host[perm[r]], host[perm[s]])) {
        ok = false;
        break;
      }
    if (ok) {
      std::vector<Vertex> roles(host.size());
      for (std::size_t r = 0; r < host.size(); ++r) roles[r] = host[perm[r]];
      return roles;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

bool match_pattern(const Graph& g, std::span<const Vertex> vertices, PatternKind kind) {
  return embed_pattern(g, vertices, kind).has_value();
}

std::optional<std::vector<Vertex>> embed_pattern(const Graph& g, PatternKind kind) {
  if (g.order() != pattern_graph(kind).order()) return std::nullopt;
  std::vector<Vertex> all(static_cast<std::size_t>(g.order()));
  std::iota(all.begin(), all.end(), 0);
  return embed_pattern(g, all, kind);
}

}  // namespace flexcolor
