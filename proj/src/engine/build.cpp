#include "flexcolor/engine/build.hpp"

#include <algorithm>
#include <sstream>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/gadgets/block.hpp"
#include "flexcolor/gadgets/exceptional.hpp"
#include "flexcolor/gadgets/max3.hpp"
#include "flexcolor/gadgets/path.hpp"
#include "flexcolor/gadgets/reductive.hpp"
#include "flexcolor/gadgets/step.hpp"
#include "flexcolor/graph/density.hpp"
#include "flexcolor/graph/graph_io.hpp"

namespace flexcolor {

namespace {

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

// Same vertex ids as g, edges only among `kept`.
Graph masked(const Graph& g, const std::vector<bool>& kept) {
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges())
    if (kept[u] && kept[v]) edges.emplace_back(u, v);
  return Graph(g.order(), edges);
}

ReducibleConfig to_host(ReducibleConfig c, const std::vector<Vertex>& host) {
  auto lift = [&](Vertex v) { return v < 0 ? v : host[v]; };
  auto lift_all = [&](std::vector<Vertex>& vs) {
    for (Vertex& v : vs) v = lift(v);
  };
  lift_all(c.vertices);
  lift_all(c.reduction_set);
  lift_all(c.roles);
  for (auto& part : c.parts) lift_all(part.vertices);
  c.cut = lift(c.cut);
  c.spine = lift(c.spine);
  return c;
}

Provider uniform_provider() {
  return {"uniform", make_rational(1, 3), [](const ListAssignment& lists, RandomSource& source) {
            Coloring phi(static_cast<std::size_t>(lists.order()), kNoColor);
            for (Vertex v = 0; v < lists.order(); ++v) phi[v] = lists[v][source.uniform(lists[v].size())];
            return phi;
          }};
}

std::vector<Vertex> local_ids(const InducedSubgraph& sub, const std::vector<Vertex>& host) {
  std::vector<Vertex> out;
  for (Vertex v : host) out.push_back(sub.local(v));
  return out;
}

Provider composite_provider(const Graph& m, const ReducibleConfig& c) {
  const auto sub = induced_subgraph(m, c.vertices);
  const auto ell = ell_bounds(m, c.vertices, 3);
  std::vector<CutPiece> pieces;
  for (const auto& part : c.parts) {
    const auto local = local_ids(sub, part.vertices);
    const Graph piece = induced_subgraph(sub.graph, local).graph;
    if (part.shape == ConfigPart::Shape::Path) {
      pieces.push_back({local, path_provider(piece)});
      continue;
    }
    std::vector<int> f;
    for (Vertex v : part.vertices) f.push_back(ell.at(v));
    auto provider = block_provider(piece, f);
    if (!provider) throw CitationError("composite block without a construction", format_graph(piece));
    pieces.push_back({local, std::move(*provider)});
  }
  return cut_provider(sub.graph, sub.local(c.spine), std::move(pieces));
}

ExtensionStep make_step(const Graph& m, const ReducibleConfig& c, const ListAssignment& lists) {
  const auto& k = engine_constants();
  switch (c.kind) {
    case ConfigKind::LowDegreeVertex:
      return reductive_step(m, c.vertices, 3, lists, uniform_provider(), k.alpha);
    case ConfigKind::ConductivePath:
      return reductive_step(m, c.vertices, 3, lists, path_provider(induced_subgraph(m, c.vertices).graph), k.alpha);
    case ConfigKind::TerminalDiamond:
      return diamond_block_step(m, c.vertices, c.cut, lists, k.epsilon, k.alpha);
    case ConfigKind::TerminalH5:
    case ConfigKind::TerminalH7:
      return exceptional_step(
          GadgetContext{m, c.kind == ConfigKind::TerminalH5 ? PatternKind::H5 : PatternKind::H7, c.roles}, lists,
          k.alpha);
    case ConfigKind::TerminalBlockMax3:
    case ConfigKind::WholeGraphMax3: {
      const auto sub = induced_subgraph(m, c.vertices);
      std::optional<Vertex> x;
      if (c.cut >= 0) x = sub.local(c.cut);
      return reductive_step(m, c.vertices, 3, lists, max3_provider(sub.graph, x), k.alpha);
    }
    case ConfigKind::CutComposite:
      return reductive_step(m, c.vertices, 3, lists, composite_provider(m, c), k.alpha);
  }
  throw PreconditionError("unknown configuration kind");
}

void require_three_assignment(const Graph& g, const ListAssignment& lists) {
  if (lists.order() != g.order()) throw PreconditionError("list assignment does not match the graph");
  for (Vertex v = 0; v < g.order(); ++v)
    if (lists.size(v) != 3)
      throw PreconditionError("vertex " + std::to_string(v) + " has " + std::to_string(lists.size(v)) +
                              " colors, expected 3");
}

}  // namespace

void require_mad_below_three(const Graph& g) {
  if (g.order() == 0) return;
  const auto mad = max_average_degree_with_witness(g);
  if (mad.value >= 3)
    throw PreconditionError("mad = " + to_string(mad.value) + ", not below 3; densest subgraph " +
                            vertex_list(mad.witness) + " has 2|E|/|V| = " + to_string(mad.value));
}

std::vector<TraceStep> plan_reductions(const Graph& g) {
  require_mad_below_three(g);
  std::vector<bool> kept(static_cast<std::size_t>(g.order()), true);
  std::vector<Vertex> remaining(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) remaining[v] = v;
  std::vector<TraceStep> trace;
  while (!remaining.empty()) {
    const auto sub = induced_subgraph(g, remaining);
    auto found = find_reducible_config(sub.graph);
    if (!found)
      throw CitationError("no reducible configuration in a graph with mad < 3",
                          "host vertices " + vertex_list(remaining) + "\n" + format_graph(sub.graph));
    check_config(sub.graph, *found);
    TraceStep step;
    step.config = to_host(std::move(*found), sub.to_host);
    step.graph_order = static_cast<int>(remaining.size());
    for (Vertex v : step.config.reduction_set) kept[v] = false;
    std::erase_if(remaining, [&](Vertex v) { return !kept[v]; });
    trace.push_back(std::move(step));
  }
  return trace;
}

BuildResult build_distribution(const Graph& g, const ListAssignment& lists, BuildMode mode) {
  require_three_assignment(g, lists);
  if (mode == BuildMode::Exact && g.order() > kExactVertexCap)
    throw CapExceededError("exact mode is limited to " + std::to_string(kExactVertexCap) + " vertices, graph has " +
                           std::to_string(g.order()));
  const auto& constants = engine_constants();
  BuildResult result;
  result.trace = plan_reductions(g);
  result.guarantee = {3, constants.epsilon, constants.alpha};

  // Step i lives in the graph left after steps 0..i-1 and reads only colors
  // fixed by later steps, so the steps are applied last to first.
  std::vector<ExtensionStep> steps;
  std::vector<bool> kept(static_cast<std::size_t>(g.order()), true);
  for (auto& t : result.trace) {
    steps.push_back(make_step(masked(g, kept), t.config, lists));
    t.construction = steps.back().name;
    t.guarantee = steps.back().guarantee;
    for (Vertex v : t.config.reduction_set) kept[v] = false;
  }

  const Coloring blank(static_cast<std::size_t>(g.order()), kNoColor);
  Sampler sampler{"empty", g.order(), {}, [blank](RandomSource&) { return blank; }, result.guarantee};
  for (auto it = steps.rbegin(); it != steps.rend(); ++it) sampler = apply_step(sampler, *it);
  sampler.name = "engine";
  sampler.guarantee = result.guarantee;
  result.sampler = std::move(sampler);

  if (mode == BuildMode::Exact) {
    auto d = ExactDistribution::point_mass(blank);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) d = apply_step_exact(d, *it);
    result.distribution = std::move(d);
  }
  return result;
}

RequestResult satisfy_request(const Graph& g, const ListAssignment& lists, const WeightedRequest& w, BuildMode mode,
                              std::size_t budget, std::uint64_t seed) {
  RequestResult out;
  out.build = build_distribution(g, lists, mode);
  const Rational& eps = out.build.guarantee.fix;
  if (mode == BuildMode::Exact) {
    Rational expected = 0;
    const WeightedColoring* best = nullptr;
    Rational best_value = -1;
    for (const auto& atom : out.build.distribution->atoms()) {
      const Rational value = request_value(atom.coloring, w);
      expected += atom.weight * value;
      if (value > best_value) {
        best_value = value;
        best = &atom;
      }
    }
    out.coloring = best->coloring;
    out.fraction = request_fraction(out.coloring, w);
    const Rational total = w.total();
    out.expected_fraction = total == 0 ? Rational(1) : Rational(expected / total);
  } else {
    if (budget == 0) throw PreconditionError("sample budget must be positive");
    SeededRandom source(seed);
    for (std::size_t i = 0; i < budget; ++i) {
      Coloring phi = out.build.sampler.draw(source);
      Rational f = request_fraction(phi, w);
      ++out.draws;
      if (out.draws == 1 || f > out.fraction) {
        out.fraction = f;
        out.coloring = std::move(phi);
      }
      if (out.fraction == 1) break;
    }
  }
  out.met = out.fraction >= eps;
  return out;
}

}  // namespace flexcolor
