#include "flexcolor/cli/run.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/engine/discharge.hpp"
#include "flexcolor/graph/blocks.hpp"
#include "flexcolor/graph/conductive.hpp"
#include "flexcolor/graph/density.hpp"
#include "flexcolor/graph/graph_io.hpp"
#include "flexcolor/listcolor/oracle.hpp"

namespace flexcolor::cli {

using Json = nlohmann::ordered_json;

namespace {

constexpr std::string_view kCommandNames[] = {"analyze", "color", "verify", "find-config", "discharge", "oracle"};

std::string q(const Rational& r) { return to_string(r); }

Json constants_json() {
  const auto& k = engine_constants();
  Json j;
  j["alpha"] = q(k.alpha);
  j["epsilon"] = q(k.epsilon);
  j["epsilon > 2^-30"] = epsilon_exceeds_two_pow_minus_30(k);
  return j;
}

Json mad_json(const Graph& g) {
  Json j;
  if (g.order() == 0) {
    j["value"] = "0";
    j["witness"] = Json::array();
  } else {
    const auto mad = max_average_degree_with_witness(g);
    j["value"] = q(mad.value);
    j["witness"] = mad.witness;
  }
  j["below 3"] = g.order() == 0 || max_average_degree(g) < 3;
  return j;
}

Json config_json(const ReducibleConfig& c) {
  Json j;
  j["kind"] = config_kind_name(c.kind);
  j["clause"] = c.clause;
  j["vertices"] = c.vertices;
  j["reduction set"] = c.reduction_set;
  if (c.cut >= 0) j["cut"] = c.cut;
  if (!c.roles.empty()) j["roles"] = c.roles;
  if (c.kind == ConfigKind::CutComposite) {
    j["spine"] = c.spine;
    Json parts = Json::array();
    for (const auto& p : c.parts) {
      Json part;
      part["shape"] = p.shape == ConfigPart::Shape::Path ? "path" : "block";
      part["vertices"] = p.vertices;
      parts.push_back(std::move(part));
    }
    j["parts"] = std::move(parts);
  }
  return j;
}

Json trace_json(const std::vector<TraceStep>& trace, bool with_guarantee) {
  Json out = Json::array();
  for (std::size_t i = 0; i < trace.size(); ++i) {
    Json j;
    j["step"] = i;
    j["graph order"] = trace[i].graph_order;
    j.update(config_json(trace[i].config));
    if (with_guarantee) {
      j["construction"] = trace[i].construction;
      j["fix"] = q(trace[i].guarantee.fix);
      j["forb"] = q(trace[i].guarantee.forb);
    }
    out.push_back(std::move(j));
  }
  return out;
}

Json report_json(const DistributionReport& r) {
  Json j;
  j["passed"] = r.passed();
  j["fix ok"] = r.fix_ok;
  j["forb ok"] = r.forb_ok;
  Json m;
  m["value"] = q(r.min_marginal);
  m["vertex"] = r.min_marginal_vertex;
  m["color"] = r.min_marginal_color;
  j["min marginal"] = std::move(m);
  Json a;
  a["value"] = q(r.min_avoidance);
  a["threshold"] = q(r.min_avoidance_threshold);
  a["set"] = r.min_avoidance_set;
  a["color"] = r.min_avoidance_color;
  j["min avoidance"] = std::move(a);
  j["violation count"] = r.violation_count;
  Json vs = Json::array();
  for (const auto& v : r.violations) {
    Json x;
    x["event"] = v.fix ? "fix" : "forb";
    x["vertices"] = v.vertices;
    x["color"] = v.color;
    x["probability"] = q(v.probability);
    x["threshold"] = q(v.threshold);
    vs.push_back(std::move(x));
  }
  j["violations"] = std::move(vs);
  return j;
}

struct Inputs {
  Graph graph;
  ListAssignment lists;
  WeightedRequest request;
};

Inputs load_inputs(const RunConfig& cfg, bool need_three) {
  Inputs in;
  in.graph = load_graph(cfg.graph_path);
  in.lists = cfg.lists_path ? load_lists(*cfg.lists_path, in.graph.order()) : ListAssignment::uniform(in.graph.order(), 3);
  if (need_three)
    for (Vertex v = 0; v < in.graph.order(); ++v)
      if (in.lists.size(v) != 3)
        throw ParseError("vertex " + std::to_string(v) + " has " + std::to_string(in.lists.size(v)) +
                             " colors, this command needs exactly 3",
                         0);
  if (cfg.request_path) in.request = load_request(*cfg.request_path, in.lists);
  return in;
}

Json analyze(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.graph_path);
  Json j;
  j["order"] = g.order();
  j["size"] = g.size();
  j["mad"] = mad_json(g);
  const auto dg = degeneracy(g);
  j["degeneracy"] = dg.degeneracy;
  j["degeneracy ordering"] = dg.ordering;
  Json comps = Json::array();
  for (const auto& comp : connected_components(g)) {
    const auto sub = induced_subgraph(g, comp);
    const auto tree = block_cut_tree(sub.graph);
    Json c;
    c["vertices"] = comp;
    Json blocks = Json::array();
    for (std::size_t b = 0; b < tree.blocks.size(); ++b) {
      std::vector<Vertex> host;
      for (Vertex v : tree.blocks[b]) host.push_back(sub.to_host[v]);
      std::sort(host.begin(), host.end());
      Json block;
      block["vertices"] = host;
      block["terminal"] = tree.is_terminal(static_cast<int>(b));
      blocks.push_back(std::move(block));
    }
    std::vector<Vertex> cuts;
    for (Vertex v : tree.cut_vertices) cuts.push_back(sub.to_host[v]);
    std::sort(cuts.begin(), cuts.end());
    c["blocks"] = std::move(blocks);
    c["cut vertices"] = cuts;
    comps.push_back(std::move(c));
  }
  j["components"] = std::move(comps);
  Json conductive = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    if (g.degree(v) != 2) continue;
    Json c;
    c["vertex"] = v;
    c["reachable"] = conductively_connected(g, v).reachable;
    conductive.push_back(std::move(c));
  }
  j["conductivity"] = std::move(conductive);
  Json table = Json::array();
  for (const auto& [v, info] : classify_degree2(g)) {
    Json row;
    row["vertex"] = v;
    row["class"] = degree2_class_name(info.cls);
    row["anchors"] = info.anchors;
    table.push_back(std::move(row));
  }
  j["degree-2 classes"] = std::move(table);
  return j;
}

Json color(const RunConfig& cfg) {
  const auto in = load_inputs(cfg, true);
  const auto r = satisfy_request(in.graph, in.lists, in.request, cfg.mode, cfg.samples, cfg.seed);
  Json j;
  j["mode"] = cfg.mode == BuildMode::Exact ? "exact" : "sample";
  j["seed"] = cfg.seed;
  j["trace"] = trace_json(r.build.trace, true);
  j["coloring"] = r.coloring;
  j["fraction"] = q(r.fraction);
  if (r.expected_fraction) j["expected fraction"] = q(*r.expected_fraction);
  if (cfg.mode == BuildMode::Sample) j["draws"] = r.draws;
  j["met epsilon"] = r.met;
  if (r.build.distribution) {
    const auto& k = engine_constants();
    j["support size"] = r.build.distribution->support_size();
    j["verification"] = report_json(verify_distribution(*r.build.distribution, in.graph, in.lists, 3, k.epsilon, k.alpha));
  }
  return j;
}

Json verify(const RunConfig& cfg) {
  const auto in = load_inputs(cfg, !cfg.dist_path);
  Json j;
  ExactDistribution d;
  if (cfg.dist_path) {
    std::ifstream file(*cfg.dist_path);
    if (!file) throw ParseError("cannot open " + *cfg.dist_path, 0);
    d = read_distribution(file, in.graph.order());
    j["source"] = "file";
  } else {
    auto built = build_distribution(in.graph, in.lists, BuildMode::Exact);
    d = std::move(*built.distribution);
    j["source"] = "engine";
    j["trace"] = trace_json(built.trace, true);
  }
  const auto& k = engine_constants();
  j["support size"] = d.support_size();
  j["verification"] = report_json(verify_distribution(d, in.graph, in.lists, 3, k.epsilon, k.alpha));
  return j;
}

Json find_config(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.graph_path);
  Json j;
  j["trace"] = trace_json(plan_reductions(g), false);
  return j;
}

Json discharge(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.graph_path);
  const auto ledger = discharge_audit(g);
  Json j;
  j["mad"] = mad_json(g);
  if (!j["mad"]["below 3"].get<bool>())
    j["note"] = "mad >= 3: the forbidden-configuration argument does not apply";
  Json charges = Json::array();
  for (Vertex v = 0; v < g.order(); ++v) {
    Json c;
    c["vertex"] = v;
    c["degree"] = g.degree(v);
    c["initial"] = q(ledger.initial[v]);
    c["final"] = q(ledger.final_charge[v]);
    charges.push_back(std::move(c));
  }
  j["charges"] = std::move(charges);
  Json transfers = Json::array();
  for (const auto& t : ledger.transfers) {
    Json x;
    x["from"] = t.from;
    x["to"] = t.to;
    x["amount"] = q(t.amount);
    transfers.push_back(std::move(x));
  }
  j["transfers"] = std::move(transfers);
  j["initial total"] = q(ledger.initial_total());
  j["final total"] = q(ledger.final_total());
  j["2|E| - 3|V|"] = 2 * static_cast<long>(g.size()) - 3 * static_cast<long>(g.order());
  j["conserved"] = ledger.conserved(g);
  Json negatives = Json::array();
  for (const auto& n : ledger.negatives) {
    Json x;
    x["vertex"] = n.vertex;
    x["charge"] = q(n.charge);
    x["reason"] = n.reason;
    negatives.push_back(std::move(x));
  }
  j["negative charges"] = std::move(negatives);
  return j;
}

Json oracle(const RunConfig& cfg) {
  const Graph g = load_graph(cfg.graph_path);
  std::vector<int> f(static_cast<std::size_t>(g.order()), 3);
  if (cfg.f) {
    if (cfg.f->size() != f.size())
      throw ParseError("--f has " + std::to_string(cfg.f->size()) + " entries, graph has " +
                           std::to_string(g.order()) + " vertices",
                       0);
    f = *cfg.f;
  } else if (cfg.lists_path) {
    const auto lists = load_lists(*cfg.lists_path, g.order());
    for (Vertex v = 0; v < g.order(); ++v) f[v] = lists.size(v);
  }
  const Rational alpha = cfg.alpha.value_or(engine_constants().alpha);
  OracleOptions options;
  options.samples = cfg.samples;
  options.seed = cfg.seed;
  const auto verdict = reductive_oracle(g, f, 3, alpha, options);
  Json j;
  j["f"] = f;
  j["k"] = 3;
  j["alpha"] = q(alpha);
  j["reductive"] = verdict.reductive;
  j["sampled"] = verdict.sampled;
  j["assignments"] = verdict.assignments;
  j["worst value"] = q(verdict.worst_value);
  if (verdict.witness) j["witness"] = format_lists(*verdict.witness);
  return j;
}

Json dispatch(const RunConfig& cfg) {
  switch (cfg.command) {
    case Command::Analyze: return analyze(cfg);
    case Command::Color: return color(cfg);
    case Command::Verify: return verify(cfg);
    case Command::FindConfig: return find_config(cfg);
    case Command::Discharge: return discharge(cfg);
    case Command::Oracle: return oracle(cfg);
  }
  return {};
}

void emit_text(const Json& j, int indent, std::ostringstream& out);

std::string scalar_text(const Json& j) {
  if (j.is_string()) return j.get<std::string>();
  return j.dump();
}

bool is_flat(const Json& j) {
  return std::none_of(j.begin(), j.end(), [](const Json& x) { return x.is_structured(); });
}

void emit_entry(const std::string& key, const Json& value, int indent, std::ostringstream& out) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (!value.is_structured()) {
    out << pad << key << ": " << scalar_text(value) << '\n';
  } else if (value.is_array() && is_flat(value)) {
    out << pad << key << ": [";
    for (std::size_t i = 0; i < value.size(); ++i) out << (i ? ", " : "") << scalar_text(value[i]);
    out << "]\n";
  } else {
    out << pad << key << ":\n";
    emit_text(value, indent + 2, out);
  }
}

void emit_text(const Json& j, int indent, std::ostringstream& out) {
  if (j.is_object()) {
    for (const auto& [key, value] : j.items()) emit_entry(key, value, indent, out);
    return;
  }
  for (std::size_t i = 0; i < j.size(); ++i) emit_entry("- " + std::to_string(i), j[i], indent, out);
}

}  // namespace

std::optional<Command> parse_command(std::string_view name) {
  for (std::size_t i = 0; i < std::size(kCommandNames); ++i)
    if (kCommandNames[i] == name) return static_cast<Command>(i);
  return std::nullopt;
}

std::string_view command_name(Command command) { return kCommandNames[static_cast<std::size_t>(command)]; }

std::string emit_report(const Json& report, OutputFormat format) {
  if (format == OutputFormat::Json) return report.dump(2) + "\n";
  std::ostringstream out;
  emit_text(report, 0, out);
  return out.str();
}

RunResult run(const RunConfig& cfg) {
  Json report;
  report["command"] = command_name(cfg.command);
  report["graph"] = cfg.graph_path;
  report["constants"] = constants_json();
  RunResult result;
  auto fail = [&](int code, std::string_view kind, const std::string& message, const std::string& certificate) {
    Json e;
    e["kind"] = kind;
    e["message"] = message;
    if (!certificate.empty()) e["certificate"] = certificate;
    report["error"] = std::move(e);
    result.exit_code = code;
  };
  try {
    report["result"] = dispatch(cfg);
  } catch (const ParseError& e) {
    fail(kExitUsage, "parse", e.what(), {});
  } catch (const PreconditionError& e) {
    fail(kExitPrecondition, "precondition", e.what(), {});
  } catch (const CitationError& e) {
    fail(kExitCitation, "citation", e.what(), e.certificate());
  }
  result.report = emit_report(report, cfg.output);
  return result;
}

}  // namespace flexcolor::cli
