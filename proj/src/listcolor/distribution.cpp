#include "flexcolor/listcolor/distribution.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

ExactDistribution::ExactDistribution(std::vector<WeightedColoring> atoms) {
  std::map<Coloring, Rational> merged;
  std::size_t width = atoms.empty() ? 0 : atoms.front().coloring.size();
  Rational total = 0;
  for (auto& atom : atoms) {
    if (atom.coloring.size() != width) throw PreconditionError("distribution atoms have different frames");
    if (atom.weight <= 0) throw PreconditionError("distribution weights must be positive");
    total += atom.weight;
    merged[std::move(atom.coloring)] += atom.weight;
  }
  if (total != 1) throw PreconditionError("distribution weights sum to " + to_string(total) + ", not 1");
  atoms_.reserve(merged.size());
  for (auto& [phi, w] : merged) atoms_.push_back({phi, w});
}

ExactDistribution::ExactDistribution(const Graph& g, const ListAssignment& lists, std::vector<WeightedColoring> atoms)
    : ExactDistribution(std::move(atoms)) {
  for (const auto& atom : atoms_)
    if (!is_proper_total(g, lists, atom.coloring))
      throw PreconditionError("support coloring is not a proper L-coloring: " + format_coloring(atom.coloring));
}

ExactDistribution ExactDistribution::point_mass(Coloring phi) {
  return ExactDistribution(std::vector<WeightedColoring>{{std::move(phi), Rational(1)}});
}

Rational ExactDistribution::marginal(Vertex v, Color c) const {
  Rational p = 0;
  for (const auto& atom : atoms_)
    if (atom.coloring.at(static_cast<std::size_t>(v)) == c) p += atom.weight;
  return p;
}

Rational ExactDistribution::avoidance(const std::vector<Vertex>& U, Color c) const {
  Rational p = 0;
  for (const auto& atom : atoms_)
    if (std::none_of(U.begin(), U.end(), [&](Vertex u) { return atom.coloring.at(static_cast<std::size_t>(u)) == c; }))
      p += atom.weight;
  return p;
}

std::string ExactDistribution::dump() const {
  std::string out;
  for (const auto& atom : atoms_) {
    out += to_string(atom.weight);
    out += ':';
    const std::string body = format_coloring(atom.coloring);
    if (!body.empty()) out += ' ' + body;
    out += '\n';
  }
  return out;
}

ExactDistribution read_distribution(std::istream& in, int order) {
  std::vector<WeightedColoring> atoms;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError("expected 'p/q: v→c ...'", number);
    WeightedColoring atom;
    try {
      atom.weight = parse_rational(std::string_view(line).substr(0, colon));
    } catch (const std::invalid_argument&) {
      throw ParseError("invalid weight", number);
    }
    atom.coloring.assign(static_cast<std::size_t>(order), kNoColor);
    std::istringstream tokens(line.substr(colon + 1));
    std::string token;
    while (tokens >> token) {
      std::string arrow = "→";
      auto pos = token.find(arrow);
      if (pos == std::string::npos) {
        arrow = "->";
        pos = token.find(arrow);
      }
      if (pos == std::string::npos) throw ParseError("expected 'v→c', got '" + token + "'", number);
      int v = 0, c = 0;
      try {
        std::size_t used = 0;
        const std::string vs = token.substr(0, pos), cs = token.substr(pos + arrow.size());
        v = std::stoi(vs, &used);
        if (used != vs.size()) throw std::invalid_argument(vs);
        c = std::stoi(cs, &used);
        if (used != cs.size()) throw std::invalid_argument(cs);
      } catch (const std::exception&) {
        throw ParseError("invalid assignment '" + token + "'", number);
      }
      if (v < 0 || v >= order) throw ParseError("vertex out of range in '" + token + "'", number);
      if (atom.coloring[v] != kNoColor) throw ParseError("vertex assigned twice", number);
      if (c < 0) throw ParseError("negative color", number);
      atom.coloring[v] = c;
    }
    if (std::find(atom.coloring.begin(), atom.coloring.end(), kNoColor) != atom.coloring.end())
      throw ParseError("coloring does not cover every vertex", number);
    atoms.push_back(std::move(atom));
  }
  try {
    return ExactDistribution(std::move(atoms));
  } catch (const PreconditionError& e) {
    throw ParseError(e.what(), 0);
  }
}

ExactDistribution parse_distribution(std::string_view text, int order) {
  std::istringstream in{std::string(text)};
  return read_distribution(in, order);
}

namespace {

// Calls visit(U) for each nonempty U of size <= max_size, in lexicographic order.
template <class Visit>
void subsets(int n, int max_size, Visit&& visit) {
  std::vector<Vertex> U;
  auto go = [&](auto&& self, Vertex from) -> void {
    if (!U.empty()) visit(static_cast<const std::vector<Vertex>&>(U));
    if (static_cast<int>(U.size()) == max_size) return;
    for (Vertex v = from; v < n; ++v) {
      U.push_back(v);
      self(self, v + 1);
      U.pop_back();
    }
  };
  go(go, 0);
}

void record(DistributionReport& report, Violation violation) {
  ++report.violation_count;
  if (report.violations.size() < kReportedViolations) report.violations.push_back(std::move(violation));
}

// threshold(|U|) gives the avoidance threshold for a set of that size.
template <class Threshold>
DistributionReport check(const ExactDistribution& d, const Graph& g, const ListAssignment& lists, int k,
                         const Rational& fix_level, Threshold threshold) {
  if (lists.order() != g.order()) throw PreconditionError("lists do not match the graph");
  if (d.support_size() == 0 || d.order() != g.order())
    throw PreconditionError("distribution frame does not match the graph");
  for (const auto& atom : d.atoms())
    if (!is_proper_total(g, lists, atom.coloring))
      throw PreconditionError("support coloring is not a proper L-coloring: " + format_coloring(atom.coloring));
  DistributionReport report;
  report.k = k;
  const int n = g.order();
  std::vector<std::map<Color, Rational>> marg(static_cast<std::size_t>(n));
  for (const auto& atom : d.atoms())
    for (Vertex v = 0; v < n; ++v) marg[v][atom.coloring[v]] += atom.weight;
  auto marginal = [&](Vertex v, Color c) {
    auto it = marg[v].find(c);
    return it == marg[v].end() ? Rational(0) : it->second;
  };
  bool first = true;
  for (Vertex v = 0; v < n; ++v)
    for (Color c : lists[v]) {
      const Rational p = marginal(v, c);
      if (first || p < report.min_marginal) {
        report.min_marginal = p;
        report.min_marginal_vertex = v;
        report.min_marginal_color = c;
        first = false;
      }
      if (p < fix_level) {
        report.fix_ok = false;
        record(report, {true, {v}, c, p, fix_level});
      }
    }
  first = true;
  subsets(n, k - 2, [&](const std::vector<Vertex>& U) {
    std::set<Color> colors;
    for (Vertex u : U) colors.insert(lists[u].begin(), lists[u].end());
    const Rational t = threshold(U.size());
    for (Color c : colors) {
      const Rational p = U.size() == 1 ? Rational(1 - marginal(U[0], c)) : d.avoidance(U, c);
      if (first || p * report.min_avoidance_threshold < report.min_avoidance * t) {
        report.min_avoidance = p;
        report.min_avoidance_threshold = t;
        report.min_avoidance_set = U;
        report.min_avoidance_color = c;
        first = false;
      }
      if (p < t) {
        report.forb_ok = false;
        record(report, {false, U, c, p, t});
      }
    }
  });
  return report;
}

}  // namespace

DistributionReport verify_distribution(const ExactDistribution& d, const Graph& g, const ListAssignment& lists,
                                       int k, const Rational& eps, const Rational& alpha) {
  return check(d, g, lists, k, eps, [&](std::size_t size) { return power(alpha, static_cast<unsigned>(size)); });
}

DistributionReport verify_fix_forb(const ExactDistribution& d, const Graph& g, const ListAssignment& lists, int k,
                                   const Rational& alpha) {
  return check(d, g, lists, k, alpha, [&](std::size_t) { return alpha; });
}

}  // namespace flexcolor
