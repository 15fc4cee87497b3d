#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

enum class ConfigKind {
  LowDegreeVertex,
  ConductivePath,
  TerminalDiamond,
  TerminalH5,
  TerminalH7,
  TerminalBlockMax3,
  CutComposite,
  WholeGraphMax3,
};

std::string_view config_kind_name(ConfigKind kind);

// A path from the spine vertex, or a block containing it.
struct ConfigPart {
  enum class Shape { Path, Block };
  Shape shape = Shape::Path;
  std::vector<Vertex> vertices;  // sorted, includes the spine vertex
};

struct ReducibleConfig {
  ConfigKind kind = ConfigKind::LowDegreeVertex;
  std::string clause;                 // which structural rule produced it
  std::vector<Vertex> vertices;       // H, sorted
  std::vector<Vertex> reduction_set;  // S, sorted, nonempty
  Vertex cut = -1;                    // terminal kinds: the block's cut vertex
  std::vector<Vertex> roles;          // TerminalH5 / TerminalH7: role -> vertex
  Vertex spine = -1;                  // CutComposite
  std::vector<ConfigPart> parts;      // CutComposite
};

// Throws PreconditionError unless the configuration's structural
// requirements hold in g.
void check_config(const Graph& g, const ReducibleConfig& config);

// Fixed priority: a vertex of degree <= 1; a shortest conductive path between
// two degree-2 vertices; a terminal diamond; a terminal block all of whose
// vertices have degree 2 or 3; a whole component of maximum degree 3; then
// the cut compositions around a vertex of degree >= 4. Components are
// searched in order of their least vertex, and lower vertex ids win within a
// clause.
std::optional<ReducibleConfig> find_reducible_config(const Graph& g);

}  // namespace flexcolor
