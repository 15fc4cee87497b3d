// One line per acceptance criterion. Exit status is nonzero when any fails.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "flexcolor/cli/run.hpp"
#include "flexcolor/core/errors.hpp"
#include "flexcolor/engine/build.hpp"
#include "flexcolor/engine/discharge.hpp"
#include "flexcolor/gadgets/diamond.hpp"
#include "flexcolor/gadgets/exceptional.hpp"
#include "flexcolor/gadgets/max3.hpp"
#include "flexcolor/gadgets/path.hpp"
#include "flexcolor/graph/blocks.hpp"
#include "flexcolor/graph/catalog.hpp"
#include "flexcolor/graph/density.hpp"
#include "flexcolor/graph/graph_io.hpp"
#include "flexcolor/graph/pattern.hpp"
#include "flexcolor/listcolor/choosability.hpp"
#include "support/corpus.hpp"
#include "support/graphs.hpp"
#include "support/lists.hpp"

using namespace flexcolor;

namespace {

// Pinned thresholds and budgets.
constexpr std::uint64_t kCorpusSeed = 2026;
constexpr int kCorpusSize = 100;
constexpr int kCorpusMaxOrder = 10;
constexpr int kMaxPathOrder = 6;
constexpr int kDiamondTrials = 200;
constexpr int kExceptionalTrials = 50;
constexpr int kMax3Trials = 20;
constexpr int kMadGraphs = 100;
constexpr int kMadMaxOrder = 8;
const Rational kEpsilon = 4 / Rational(3486784401UL);  // 4 * 3^-20
const Rational kAlpha = make_rational(1, 19683);        // 3^-9
const Rational kMax3Level = make_rational(1, 6561);     // 3^-8
const Rational kEnvAvoid = make_rational(2, 3);
const std::map<int, double> kSecondsLimit = {{1, 30}, {2, 5}, {3, 300}, {4, 120}, {5, 300},
                                              {6, 600}, {7, 60}, {8, 120}, {9, 60}};

struct Outcome {
  bool pass = true;
  std::string detail;
};

Outcome fail(std::string why) { return {false, std::move(why)}; }

// Pr(phi(v) = c) from the atoms.
Rational marginal_of(const ExactDistribution& d, Vertex v, Color c) {
  Rational p = 0;
  for (const auto& atom : d.atoms())
    if (atom.coloring[v] == c) p += atom.weight;
  return p;
}

bool proper_from_lists(const Graph& g, const ListAssignment& lists, const Coloring& phi) {
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!std::ranges::count(lists[v], phi[v])) return false;
    for (Vertex w : g.neighbors(v))
      if (phi[v] == phi[w]) return false;
  }
  return true;
}

// Plain backtracking colorer, vertex order.
bool colorable(const Graph& g, const ListAssignment& lists, Coloring& phi, Vertex v = 0) {
  if (v == g.order()) return true;
  for (Color c : lists[v]) {
    bool ok = true;
    for (Vertex w : g.neighbors(v))
      if (w < v && phi[w] == c) ok = false;
    if (!ok) continue;
    phi[v] = c;
    if (colorable(g, lists, phi, v + 1)) return true;
  }
  return false;
}

std::string describe(const Graph& g) {
  std::string s = format_graph(g);
  std::replace(s.begin(), s.end(), '\n', ' ');
  return s;
}

Outcome path_pairs() {
  std::size_t checked = 0;
  for (int n = 1; n <= kMaxPathOrder; ++n) {
    const Graph p = catalog::path(n);
    const std::vector<int> f(static_cast<std::size_t>(n), 2);
    std::string error;
    for_each_canonical_assignment(f, 2 * n, [&](const ListAssignment& lists) {
      ++checked;
      const auto [a, b] = path_pair_colorings(p, lists);
      if (!proper_from_lists(p, lists, a) || !proper_from_lists(p, lists, b)) error = "improper coloring";
      for (Vertex v = 0; v < n && error.empty(); ++v)
        for (Color c : lists[v])
          if ((a[v] == c) + (b[v] == c) != 1) error = "(v, c) not covered exactly once";
      if (!error.empty()) error += " on P" + std::to_string(n) + " with " + format_lists(lists);
      return error.empty();
    });
    if (!error.empty()) return fail(error);
  }
  return {true, std::to_string(checked) + " assignments"};
}

Outcome diamond_covers() {
  const Graph d = catalog::diamond();
  std::mt19937_64 rng(41);
  auto check = [&](const ListAssignment& lists) -> std::string {
    const auto cover = diamond_cover(d, lists);
    if (cover.size() != 6) return "cover size " + std::to_string(cover.size());
    std::map<std::pair<Vertex, Color>, int> count;
    for (const auto& phi : cover) {
      if (!proper_from_lists(d, lists, phi)) return "improper coloring";
      for (Vertex v = 0; v < 4; ++v) ++count[{v, phi[v]}];
    }
    const auto law = diamond_six_colorings(d, lists);
    for (Vertex v = 0; v < 4; ++v)
      for (Color c : lists[v]) {
        if (count[{v, c}] != 2) return "(v, c) not covered twice";
        if (marginal_of(law, v, c) != make_rational(1, 3)) return "marginal is not 1/3";
      }
    return {};
  };
  if (auto e = check(ListAssignment::uniform(4, 3)); !e.empty()) return fail(e + " on {1,2,3} lists");
  for (int trial = 0; trial < kDiamondTrials; ++trial) {
    const int palette = 3 + static_cast<int>(rng() % 7);
    const auto lists = testing::random_lists(rng, 4, 3, palette);
    if (auto e = check(lists); !e.empty()) return fail(e + " with " + format_lists(lists));
  }
  return {true, "1 + " + std::to_string(kDiamondTrials) + " assignments"};
}

std::uint64_t canonical_mask(const Graph& g) {
  const int n = g.order();
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::uint64_t best = ~std::uint64_t{0};
  do {
    std::uint64_t m = 0;
    int bit = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++bit)
        if (g.adjacent(perm[i], perm[j])) m |= std::uint64_t{1} << bit;
    best = std::min(best, m);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Outcome ert_equivalence() {
  int graphs = 0;
  for (int n = 1; n <= 5; ++n) {
    std::set<std::uint64_t> seen;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (n * (n - 1) / 2)); ++mask) {
      const Graph g = testing::graph_from_mask(n, mask);
      if (!is_connected(g) || !seen.insert(canonical_mask(g)).second) continue;
      ++graphs;
      // A lone vertex has degree 0; it gets one color.
      std::vector<int> f = degrees(g);
      for (int& x : f) x = std::max(x, 1);
      bool brute = true;
      const int palette = std::accumulate(f.begin(), f.end(), 0);
      for_each_canonical_assignment(f, palette, [&](const ListAssignment& lists) {
        Coloring phi(static_cast<std::size_t>(n), kNoColor);
        brute = colorable(g, lists, phi);
        return brute;
      });
      if (brute != is_f_choosable_ERT(g, f)) return fail("disagreement on " + describe(g));
    }
  }
  return {true, std::to_string(graphs) + " graphs up to isomorphism"};
}

Outcome exceptional_bounds() {
  std::mt19937_64 rng(43);
  Rational least_fix[2] = {1, 1}, least_forb[2] = {1, 1};
  for (int which = 0; which < 2; ++which) {
    const PatternKind kind = which == 0 ? PatternKind::H5 : PatternKind::H7;
    const Graph& h = pattern_graph(kind);
    const int x = which == 0 ? int{h5_role::x} : int{h7_role::x};
    const Vertex outside = h.order();
    auto edges = h.edges();
    edges.emplace_back(x, outside);
    const Graph host(h.order() + 1, edges);
    std::vector<Vertex> roles(static_cast<std::size_t>(h.order()));
    for (int i = 0; i < h.order(); ++i) roles[i] = i;
    const GadgetContext ctx{host, kind, roles};
    const Rational want_fix = make_rational(1, which == 0 ? 15 : 21) * kEnvAvoid;
    const Rational want_forb = make_rational(1, which == 0 ? 10 : 14);
    for (int trial = 0; trial < kExceptionalTrials; ++trial) {
      const auto lists = testing::random_lists(rng, host.order(), 3, 6);
      const std::vector<Color> env_colors(lists[outside].begin(), lists[outside].end());
      Sampler env;
      env.name = "uniform";
      env.frame_order = host.order();
      env.domain = {outside};
      env.guarantee = {3, make_rational(1, 3), kEnvAvoid};
      env.draw = [n = host.order(), outside, env_colors](RandomSource& s) {
        Coloring phi(static_cast<std::size_t>(n), kNoColor);
        phi[outside] = env_colors[s.uniform(3)];
        return phi;
      };
      const auto law = exact_law(which == 0 ? h5_sampler(ctx, lists, env) : h7_sampler(ctx, lists, env));
      for (const auto& atom : law.atoms())
        if (!proper_from_lists(host, lists, atom.coloring)) return fail("improper coloring with " + format_lists(lists));
      for (Vertex v : roles)
        for (Color c : lists[v]) {
          const Rational p = marginal_of(law, v, c);
          least_fix[which] = std::min(least_fix[which], p);
          least_forb[which] = std::min(least_forb[which], Rational(1 - p));
          if (p < want_fix || 1 - p < want_forb)
            return fail(std::string(pattern_name(kind)) + " below bound with " + format_lists(lists));
        }
    }
  }
  return {true, "H5 fix " + to_string(least_fix[0]) + " forb " + to_string(least_forb[0]) + ", H7 fix " +
                    to_string(least_fix[1]) + " forb " + to_string(least_forb[1])};
}

Outcome max3_bounds() {
  std::mt19937_64 rng(47);
  Rational least = 1;
  std::size_t most_classes = 0;
  for (const Graph& h : {catalog::prism(), catalog::cube()}) {
    const auto classes = max3_classes(h);
    most_classes = std::max(most_classes, std::set<int>(classes.begin(), classes.end()).size());
    for (int trial = 0; trial < kMax3Trials; ++trial) {
      const auto lists = testing::random_lists(rng, h.order(), 3, 6);
      const auto law = exact_law(max3_sampler(h, lists, std::nullopt));
      for (const auto& atom : law.atoms())
        if (!proper_from_lists(h, lists, atom.coloring)) return fail("improper coloring with " + format_lists(lists));
      for (Vertex v = 0; v < h.order(); ++v)
        for (Color c : lists[v]) least = std::min(least, marginal_of(law, v, c));
    }
  }
  for (const auto& g : testing::mad_corpus(kCorpusSeed, kCorpusSize, kCorpusMaxOrder)) {
    const auto classes = max3_classes(g);
    most_classes = std::max(most_classes, std::set<int>(classes.begin(), classes.end()).size());
  }
  if (least < kMax3Level) return fail("min marginal " + to_string(least));
  if (most_classes > static_cast<std::size_t>(kMax3ClassBound)) return fail("class count above 766");
  return {true, "min marginal " + to_string(least) + ", at most " + std::to_string(most_classes) + " classes"};
}

Outcome end_to_end() {
  std::mt19937_64 rng(53);
  Rational least_fraction = 1;
  for (const auto& g : testing::mad_corpus(kCorpusSeed, kCorpusSize, kCorpusMaxOrder)) {
    const auto lists = testing::random_lists(rng, g.order(), 3, 5);
    WeightedRequest w;
    std::bernoulli_distribution coin(0.3);
    for (Vertex v = 0; v < g.order(); ++v)
      for (Color c : lists[v])
        if (coin(rng)) w.set(v, c, 1);
    if (w.total() == 0 && g.order() > 0) w.set(0, lists[0][0], 1);
    const auto r = satisfy_request(g, lists, w, BuildMode::Exact);
    const auto& d = *r.build.distribution;
    const auto report = verify_distribution(d, g, lists, 3, kEpsilon, kAlpha);
    if (!report.passed()) return fail("verify_distribution rejects " + describe(g));
    for (const auto& atom : d.atoms())
      if (!proper_from_lists(g, lists, atom.coloring)) return fail("improper support coloring on " + describe(g));
    for (Vertex v = 0; v < g.order(); ++v)
      for (Color c : lists[v]) {
        const Rational p = marginal_of(d, v, c);
        if (p < kEpsilon || 1 - p < kAlpha) return fail("marginal out of range on " + describe(g));
      }
    int hit = 0;
    for (Vertex v = 0; v < g.order(); ++v) hit += w.weight(v, r.coloring[v]) > 0;
    const Rational fraction = g.order() == 0 ? Rational(1) : Rational(hit / w.total());
    if (fraction != r.fraction || fraction < kEpsilon) return fail("request fraction on " + describe(g));
    least_fraction = std::min(least_fraction, fraction);
  }
  return {true, std::to_string(kCorpusSize) + " graphs, least request fraction " + to_string(least_fraction)};
}

std::vector<Graph> three_regular_graphs() {
  std::vector<Graph> out = {catalog::complete(4), catalog::prism(), catalog::cube()};
  std::vector<Edge> k33;
  for (int a = 0; a < 3; ++a)
    for (int b = 3; b < 6; ++b) k33.emplace_back(a, b);
  out.emplace_back(6, k33);
  std::vector<Edge> petersen;
  for (int i = 0; i < 5; ++i) {
    petersen.emplace_back(i, (i + 1) % 5);
    petersen.emplace_back(i, i + 5);
    petersen.emplace_back(5 + i, 5 + (i + 2) % 5);
  }
  for (auto& [u, v] : petersen)
    if (u > v) std::swap(u, v);
  out.emplace_back(10, petersen);
  // Circular ladders and Moebius ladders.
  for (int half = 4; half <= 7; ++half) {
    std::vector<Edge> ladder, moebius;
    const int n = 2 * half;
    for (int i = 0; i < half; ++i) {
      ladder.emplace_back(i, (i + 1) % half);
      ladder.emplace_back(half + i, half + (i + 1) % half);
      ladder.emplace_back(i, half + i);
    }
    for (int i = 0; i < n; ++i) moebius.emplace_back(i, (i + 1) % n);
    for (int i = 0; i < half; ++i) moebius.emplace_back(i, i + half);
    for (auto* es : {&ladder, &moebius})
      for (auto& [u, v] : *es)
        if (u > v) std::swap(u, v);
    out.emplace_back(n, ladder);
    out.emplace_back(n, moebius);
  }
  return out;
}

Outcome completeness() {
  std::size_t steps = 0;
  for (const auto& g : testing::mad_corpus(kCorpusSeed, kCorpusSize, kCorpusMaxOrder)) {
    try {
      steps += plan_reductions(g).size();
    } catch (const CitationError& e) {
      return fail(std::string("no configuration: ") + e.certificate());
    }
  }
  const auto dir = std::filesystem::temp_directory_path();
  int rejected = 0;
  for (const auto& g : three_regular_graphs()) {
    if (max_average_degree(g) != 3) return fail("test graph is not 3-regular");
    try {
      build_distribution(g, ListAssignment::uniform(g.order(), 3), BuildMode::Sample);
      return fail("engine accepted " + describe(g));
    } catch (const PreconditionError& e) {
      if (std::string(e.what()).find("mad = 3") == std::string::npos) return fail(e.what());
    }
    const auto path = (dir / ("flexcolor_acceptance_" + std::to_string(rejected) + ".txt")).string();
    { std::ofstream(path) << format_graph(g); }
    cli::RunConfig cfg;
    cfg.command = cli::Command::Color;
    cfg.graph_path = path;
    cfg.mode = BuildMode::Sample;
    const int code = cli::run(cfg).exit_code;
    std::filesystem::remove(path);
    if (code != cli::kExitPrecondition) return fail("exit code " + std::to_string(code) + " on " + describe(g));
    ++rejected;
  }
  return {true, std::to_string(kCorpusSize) + " graphs reduced in " + std::to_string(steps) + " steps, " +
                    std::to_string(rejected) + " graphs of mad 3 rejected"};
}

Rational brute_mad(const Graph& g) {
  Rational best = 0;
  const int n = g.order();
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    int verts = 0, edges = 0;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      ++verts;
      for (Vertex w : g.neighbors(v)) edges += w > v && (s >> w & 1);
    }
    best = std::max(best, Rational(make_rational(2 * edges, verts)));
  }
  return best;
}

Outcome mad_agreement() {
  std::mt19937_64 rng(59);
  for (int i = 0; i < kMadGraphs; ++i) {
    const int n = 1 + static_cast<int>(rng() % kMadMaxOrder);
    const double p = std::uniform_real_distribution<double>(0.1, 0.9)(rng);
    const Graph g = testing::random_graph(rng, n, p);
    if (max_average_degree(g) != brute_mad(g)) return fail("disagreement on " + describe(g));
  }
  return {true, std::to_string(kMadGraphs) + " graphs"};
}

Outcome discharging() {
  int conserved = 0, nonnegative = 0, graphs = 0;
  std::string example;
  for (const auto& g : testing::mad_corpus(kCorpusSeed, kCorpusSize, kCorpusMaxOrder)) {
    ++graphs;
    const auto ledger = discharge_audit(g);
    const Rational expected = 2 * static_cast<long>(g.size()) - 3 * static_cast<long>(g.order());
    Rational initial = 0, final_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) {
      initial += ledger.initial[v];
      final_sum += ledger.final_charge[v];
    }
    conserved += initial == expected && final_sum == expected;
    const bool all_nonneg =
        std::all_of(ledger.final_charge.begin(), ledger.final_charge.end(), [](const Rational& c) { return c >= 0; });
    nonnegative += all_nonneg;
    if (!all_nonneg && example.empty()) example = to_string(final_sum);
  }
  bool floors = degree_floor(2) == 2 - 3 + 1 && degree_floor(3) == 0 && degree_floor(4) == 4 - 3 - 1 &&
                degree_floor(5) == 5 - 3 - 2;
  for (int d = 6; d <= 40; ++d) floors &= degree_floor(d) == d - 3 - Rational(make_rational(d, 2)) && degree_floor(d) >= 0;
  std::ostringstream detail;
  detail << "conservation " << conserved << "/" << graphs << ", floors " << (floors ? "match" : "differ")
         << ", all final charges >= 0 on " << nonnegative << "/" << graphs
         << " (total charge 2|E| - 3|V| is negative whenever mad < 3, e.g. " << example << ")";
  return {conserved == graphs && floors && nonnegative == graphs, detail.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::map<int, std::pair<const char*, std::function<Outcome()>>> criteria = {
      {1, {"path pair colorings", path_pairs}},
      {2, {"diamond six-coloring cover", diamond_covers}},
      {3, {"degree-choosability characterization", ert_equivalence}},
      {4, {"H5/H7 marginal and avoidance bounds", exceptional_bounds}},
      {5, {"maximum-degree-3 class-removal bound", max3_bounds}},
      {6, {"end-to-end (3, epsilon, alpha) guarantee", end_to_end}},
      {7, {"configuration completeness", completeness}},
      {8, {"mad flow oracle", mad_agreement}},
      {9, {"discharging ledger", discharging}},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoi(argv[i]));
  int failures = 0;
  for (const auto& [number, entry] : criteria) {
    if (!selected.empty() && !selected.count(number)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome outcome;
    try {
      outcome = entry.second();
    } catch (const std::exception& e) {
      outcome = fail(std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > kSecondsLimit.at(number)) outcome = fail(outcome.detail + "; over the time limit");
    failures += !outcome.pass;
    std::printf("criterion %d: %s  %s: %s [%.2f s]\n", number, outcome.pass ? "PASS" : "FAIL", entry.first,
                outcome.detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
