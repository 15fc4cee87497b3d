#include <gtest/gtest.h>

#include <random>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/graph/catalog.hpp"
#include "flexcolor/graph/gallai.hpp"
#include "flexcolor/listcolor/choosability.hpp"
#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/lists.hpp"
#include "flexcolor/listcolor/lp.hpp"
#include "flexcolor/listcolor/oracle.hpp"
#include "flexcolor/listcolor/sampler.hpp"
#include "flexcolor/listcolor/search.hpp"
#include "support/graphs.hpp"
#include "support/lp_oracle.hpp"

namespace flexcolor {
namespace {

using L = std::vector<std::vector<Color>>;

Graph make(int n, std::vector<Edge> edges) { return Graph(n, edges); }

ExactDistribution uniform_over(std::vector<Coloring> colorings) {
  std::vector<WeightedColoring> atoms;
  for (auto& phi : colorings) atoms.push_back({phi, Rational(1, static_cast<long>(colorings.size()))});
  return ExactDistribution(std::move(atoms));
}

ListAssignment random_lists(std::mt19937_64& rng, int n, int size, int palette) {
  L lists;
  for (int v = 0; v < n; ++v) {
    std::vector<Color> pool;
    for (Color c = 1; c <= palette; ++c) pool.push_back(c);
    std::shuffle(pool.begin(), pool.end(), rng);
    lists.emplace_back(pool.begin(), pool.begin() + size);
  }
  return ListAssignment(lists);
}

TEST(Lists, ParseAndFormat) {
  auto lists = parse_lists("0: 1,2,3\n1: 3, 2 ,4\n", 2);
  EXPECT_EQ(lists, ListAssignment(L{{1, 2, 3}, {2, 3, 4}}));
  EXPECT_EQ(parse_lists(format_lists(lists), 2), lists);
  EXPECT_THROW(parse_lists("0: 1,2\n", 2), ParseError);
  EXPECT_THROW(parse_lists("0: 1,1\n1: 2\n", 2), ParseError);
  EXPECT_THROW(parse_lists("0: 1\n0: 2\n", 2), ParseError);
  try {
    parse_lists("0: 1\n1 2\n", 2);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
  }
}

TEST(Request, FractionExamples) {
  auto lists = ListAssignment::uniform(2, 3);
  WeightedRequest w;
  w.set(0, 1, 1);
  EXPECT_EQ(request_fraction({1, 2}, w), 1);
  EXPECT_EQ(request_fraction({2, 2}, w), 0);
  w.set(1, 1, 1);
  EXPECT_EQ(request_fraction({1, 2}, w), Rational(1, 2));
  EXPECT_EQ(request_fraction({1, 2}, WeightedRequest{}), 1);
  auto parsed = parse_request("0 1 1/2\n1 3 2\n", lists);
  EXPECT_EQ(parsed.total(), Rational(5, 2));
  EXPECT_EQ(parse_request(format_request(parsed), lists).entries(), parsed.entries());
  EXPECT_THROW(parse_request("0 9 1\n", lists), ParseError);
  EXPECT_THROW(parse_request("0 1 -1\n", lists), ParseError);
}

TEST(Request, ScaleInvariant) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    WeightedRequest w, scaled;
    const Rational factor = make_rational(1 + static_cast<long>(rng() % 7), 1 + static_cast<long>(rng() % 5));
    for (Vertex v = 0; v < 4; ++v)
      for (Color c = 1; c <= 3; ++c) {
        const Rational x = make_rational(static_cast<long>(rng() % 4), 1 + static_cast<long>(rng() % 3));
        w.set(v, c, x);
        scaled.set(v, c, x * factor);
      }
    Coloring phi{1 + static_cast<int>(rng() % 3), 1, 2, 3};
    EXPECT_EQ(request_fraction(phi, w), request_fraction(phi, scaled));
  }
}

TEST(Ell, Formula) {
  Graph g = catalog::path(3);
  auto all = ell_bounds(g, std::vector<Vertex>{0, 1, 2}, 3);
  EXPECT_EQ(all.values, (std::vector<int>{3, 3, 3}));
  auto part = ell_bounds(g, std::vector<Vertex>{0, 1}, 3);
  EXPECT_EQ(part.at(0), 3);
  EXPECT_EQ(part.at(1), 2);
}

TEST(Search, Examples) {
  EXPECT_EQ(enumerate_L_colorings(Graph(1), ListAssignment(L{{1, 2}})), (std::vector<Coloring>{{1}, {2}}));
  EXPECT_TRUE(enumerate_L_colorings(catalog::complete(3), ListAssignment::uniform(3, 2)).empty());
  EXPECT_EQ(enumerate_L_colorings(catalog::complete(3), ListAssignment::uniform(3, 3)).size(), 6u);
  EXPECT_THROW(enumerate_L_colorings(catalog::path(13), ListAssignment::uniform(13, 2)), CapExceededError);
}

TEST(Search, AgreesWithProductEnumeration) {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 6);
    Graph g = testing::random_graph(rng, n, 0.4);
    auto lists = random_lists(rng, n, 1 + static_cast<int>(rng() % 3), 4);
    std::vector<Coloring> oracle;
    Coloring phi(n, 0);
    auto go = [&](auto&& self, int v) -> void {
      if (v == n) {
        if (is_proper_total(g, lists, phi)) oracle.push_back(phi);
        return;
      }
      for (Color c : lists[v]) {
        phi[v] = c;
        self(self, v + 1);
      }
    };
    go(go, 0);
    EXPECT_EQ(enumerate_L_colorings(g, lists), oracle);
    auto first = find_L_coloring(g, lists);
    EXPECT_EQ(first.has_value(), !oracle.empty());
    if (first) EXPECT_EQ(*first, oracle.front());
  }
}

TEST(Search, ExtendRespectsPartial) {
  Graph g = catalog::cycle(4);
  auto lists = ListAssignment::uniform(4, 2);
  EXPECT_EQ(extend_coloring(g, lists, {2, kNoColor, kNoColor, kNoColor}), (Coloring{2, 1, 2, 1}));
  EXPECT_FALSE(extend_coloring(g, lists, {1, kNoColor, 2, kNoColor}));
}

TEST(Canonical, CountsMatchEnumeration) {
  for (auto f : std::vector<std::vector<int>>{{2}, {2, 2}, {3, 2, 1}, {2, 2, 2, 2}, {3, 3, 3}}) {
    int palette = 0;
    for (int x : f) palette += x;
    std::size_t seen = for_each_canonical_assignment(f, palette, [](const ListAssignment&) { return true; });
    EXPECT_EQ(seen, count_canonical_assignments(f, palette));
  }
  // Two vertices with 2-lists: {12,12}, {12,13}, {12,34}
  EXPECT_EQ(count_canonical_assignments(std::vector<int>{2, 2}, 4), 4u);
}

TEST(Ert, Examples) {
  EXPECT_FALSE(is_f_choosable_ERT(catalog::complete(3), std::vector<int>{2, 2, 2}));
  EXPECT_TRUE(is_f_choosable_ERT(catalog::cycle(4), std::vector<int>{2, 2, 2, 2}));
  EXPECT_TRUE(is_f_choosable_ERT(catalog::complete(3), std::vector<int>{2, 3, 2}));
  EXPECT_THROW(is_f_choosable_ERT(catalog::complete(3), std::vector<int>{1, 2, 2}), PreconditionError);
}

TEST(Ert, AgreesWithExhaustiveUpToFourVertices) {
  for (int n = 1; n <= 4; ++n)
    for (std::uint64_t mask = 0; mask < (1u << (n * (n - 1) / 2)); ++mask) {
      Graph g = testing::graph_from_mask(n, mask);
      if (!is_connected(g)) continue;
      auto f = degrees(g);
      if (n == 1) f = {1};
      for (int& x : f) x = std::max(x, 1);
      // f = deg needs deg >= 1; a single vertex gets f = 1 > deg
      EXPECT_EQ(is_f_choosable_ERT(g, f), is_f_choosable_exhaustive(g, f)) << mask;
    }
}

TEST(Gallai, ListColorableExamples) {
  Graph tri = catalog::complete(3);
  EXPECT_TRUE(gallai_list_colorable(tri, ListAssignment(L{{1, 2}, {1, 2}, {1, 3}})));
  EXPECT_FALSE(gallai_list_colorable(tri, ListAssignment::uniform(3, 2)));
  EXPECT_TRUE(gallai_list_colorable(catalog::path(2), ListAssignment(L{{1}, {2}})));
  EXPECT_THROW(gallai_list_colorable(catalog::cycle(4), ListAssignment::uniform(4, 2)), PreconditionError);
}

TEST(Gallai, ListColorableMatchesSearch) {
  std::mt19937_64 rng(21);
  int checked = 0;
  while (checked < 300) {
    const int n = 2 + static_cast<int>(rng() % 6);
    Graph g = testing::random_connected_graph(rng, n, static_cast<int>(rng() % 4));
    if (!is_gallai_tree(g)) continue;
    L lists;
    for (Vertex v = 0; v < n; ++v) {
      std::vector<Color> pool{1, 2, 3, 4, 5};
      std::shuffle(pool.begin(), pool.begin() + 2 + static_cast<int>(rng() % 3), rng);
      lists.emplace_back(pool.begin(), pool.begin() + g.degree(v));
    }
    ListAssignment la(lists);
    EXPECT_EQ(gallai_list_colorable(g, la), find_L_coloring(g, la).has_value());
    ++checked;
  }
}

TEST(Distribution, TriangleUniform) {
  Graph tri = catalog::complete(3);
  auto lists = ListAssignment::uniform(3, 3);
  auto d = uniform_over(enumerate_L_colorings(tri, lists));
  auto report = verify_distribution(d, tri, lists, 3, Rational(1, 3), Rational(1, 3));
  EXPECT_EQ(report.min_marginal, Rational(1, 3));
  EXPECT_TRUE(report.passed());
  EXPECT_TRUE(verify_fix_forb(d, tri, lists, 3, Rational(1, 3)).passed());
  EXPECT_FALSE(verify_fix_forb(d, tri, lists, 3, Rational(1, 2)).passed());
  auto point = ExactDistribution::point_mass({1, 2, 3});
  EXPECT_FALSE(verify_distribution(point, tri, lists, 3, Rational(1, 3), Rational(1, 3)).fix_ok);
  // k = 3: avoidance events are singletons only
  EXPECT_EQ(report.min_avoidance_set.size(), 1u);
}

TEST(Distribution, RejectsMalformed) {
  EXPECT_THROW(ExactDistribution(std::vector<WeightedColoring>{{{1}, Rational(1, 2)}}), PreconditionError);
  EXPECT_THROW(ExactDistribution(catalog::path(2), ListAssignment::uniform(2, 2),
                                 std::vector<WeightedColoring>{{{1, 1}, Rational(1)}}),
               PreconditionError);
}

TEST(Distribution, DumpRoundTrip) {
  auto d = uniform_over(enumerate_L_colorings(catalog::complete(3), ListAssignment::uniform(3, 3)));
  EXPECT_EQ(parse_distribution(d.dump(), 3), d);
  EXPECT_EQ(parse_distribution("1/2: 0->1 1->2\n1/2: 0→2 1→1\n", 2).support_size(), 2u);
  EXPECT_THROW(parse_distribution("1/2: 0->1 1->2\n", 2), ParseError);
  EXPECT_THROW(parse_distribution("1: 0->1\n", 2), ParseError);
  EXPECT_EQ(ExactDistribution::point_mass({}).dump(), "1:\n");
  EXPECT_EQ(parse_distribution("1:\n", 0).support_size(), 1u);
}

TEST(Distribution, FixImpliesForbForThreeAndListsOfTwo) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Graph g = testing::random_graph(rng, n, 0.5);
    auto lists = random_lists(rng, n, 2 + static_cast<int>(rng() % 2), 4);
    auto support = enumerate_L_colorings(g, lists);
    if (support.empty()) continue;
    std::vector<WeightedColoring> atoms;
    long total = 0;
    std::vector<long> raw;
    for (std::size_t i = 0; i < support.size(); ++i) total += raw.emplace_back(1 + static_cast<long>(rng() % 5));
    for (std::size_t i = 0; i < support.size(); ++i) atoms.push_back({support[i], make_rational(raw[i], total)});
    ExactDistribution d(g, lists, atoms);
    for (Rational alpha : {Rational(1, 10), Rational(1, 5), Rational(1, 3), Rational(1, 2)}) {
      auto report = verify_fix_forb(d, g, lists, 3, alpha);
      if (report.fix_ok) EXPECT_TRUE(report.forb_ok);
    }
  }
}

TEST(Lp, Examples) {
  EXPECT_EQ(lp_max_min_fix(Graph(1), ListAssignment(L{{1, 2, 3}})).value, Rational(1, 3));
  EXPECT_EQ(lp_max_min_fix(catalog::complete(3), ListAssignment::uniform(3, 3)).value, Rational(1, 3));
  EXPECT_EQ(lp_max_min_fix(catalog::path(2), ListAssignment::uniform(2, 2)).value, Rational(1, 2));
  auto none = lp_max_min_fix(catalog::complete(3), ListAssignment::uniform(3, 2));
  EXPECT_FALSE(none.feasible);
  EXPECT_EQ(none.value, 0);
}

TEST(Lp, OptimalWeightsAttainValue) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Graph g = testing::random_graph(rng, n, 0.5);
    auto lists = random_lists(rng, n, 1 + static_cast<int>(rng() % 3), 4);
    std::vector<Coloring> support;
    auto result = lp_max_min_fix(g, lists, kDefaultExactCap, &support);
    if (!result.feasible) continue;
    Rational total = 0;
    for (auto& w : result.weights) {
      EXPECT_GE(w, 0);
      total += w;
    }
    EXPECT_EQ(total, 1);
    for (Vertex v = 0; v < n; ++v)
      for (Color c : lists[v]) {
        Rational p = 0;
        for (std::size_t i = 0; i < support.size(); ++i)
          if (support[i][v] == c) p += result.weights[i];
        EXPECT_GE(p, result.value);
      }
  }
}

TEST(Lp, MatchesBasicSolutionEnumeration) {
  std::mt19937_64 rng(10);
  int checked = 0;
  while (checked < 150) {
    const int n = 1 + static_cast<int>(rng() % 4);
    Graph g = testing::random_graph(rng, n, 0.6);
    auto lists = random_lists(rng, n, 1 + static_cast<int>(rng() % 3), 3 + static_cast<int>(rng() % 2));
    auto support = enumerate_L_colorings(g, lists);
    if (support.empty() || support.size() > 6) continue;
    std::vector<std::vector<std::size_t>> events;
    for (Vertex v = 0; v < n; ++v)
      for (Color c : lists[v]) {
        std::vector<std::size_t> e;
        for (std::size_t i = 0; i < support.size(); ++i)
          if (support[i][v] == c) e.push_back(i);
        events.push_back(e);
      }
    EXPECT_EQ(lp_max_min_fix(g, lists).value, testing::max_min_by_vertices(support.size(), events));
    ++checked;
  }
}

TEST(Oracle, Examples) {
  auto one = reductive_oracle(Graph(1), std::vector<int>{2}, 3, Rational(1, 3));
  EXPECT_TRUE(one.reductive);
  EXPECT_FALSE(one.sampled);
  EXPECT_TRUE(reductive_oracle(catalog::path(2), std::vector<int>{2, 2}, 3, Rational(1, 3)).reductive);
  auto tri = reductive_oracle(catalog::complete(3), std::vector<int>{2, 2, 2}, 3, Rational(1, 1000));
  EXPECT_FALSE(tri.reductive);
  ASSERT_TRUE(tri.witness);
  EXPECT_EQ(*tri.witness, ListAssignment::uniform(3, 2));
  auto big = reductive_oracle(catalog::path(5), std::vector<int>{2, 2, 2, 2, 2}, 3, Rational(1, 3),
                              OracleOptions{12, 20, 1});
  EXPECT_TRUE(big.sampled);
  EXPECT_TRUE(big.reductive);
}

TEST(Sampler, ExactLawOfUniformChoice) {
  Sampler s;
  s.frame_order = 2;
  s.domain = {0};
  s.draw = [](RandomSource& r) { return Coloring{static_cast<Color>(1 + r.uniform(3)), kNoColor}; };
  auto law = exact_law(s);
  EXPECT_EQ(law.support_size(), 3u);
  EXPECT_EQ(law.marginal(0, 2), Rational(1, 3));
  EXPECT_EQ(s.sample(4), s.sample(4));
}

}  // namespace
}  // namespace flexcolor
