#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

struct WeightedColoring {
  Coloring coloring;
  Rational weight;

  friend bool operator==(const WeightedColoring& a, const WeightedColoring& b) {
    return a.coloring == b.coloring && a.weight == b.weight;
  }
};

// Finite distribution over colorings of a fixed vertex frame. Atoms are
// merged, sorted by coloring, strictly positive and sum to exactly 1.
class ExactDistribution {
 public:
  ExactDistribution() = default;
  // Checks weights only. Throws PreconditionError when malformed.
  explicit ExactDistribution(std::vector<WeightedColoring> atoms);
  // Additionally checks every atom is a proper total L-coloring of g.
  ExactDistribution(const Graph& g, const ListAssignment& lists, std::vector<WeightedColoring> atoms);

  static ExactDistribution point_mass(Coloring phi);

  const std::vector<WeightedColoring>& atoms() const noexcept { return atoms_; }
  std::size_t support_size() const noexcept { return atoms_.size(); }
  int order() const noexcept { return atoms_.empty() ? 0 : static_cast<int>(atoms_.front().coloring.size()); }

  Rational marginal(Vertex v, Color c) const;
  // Pr(phi(u) != c for every u in U).
  Rational avoidance(const std::vector<Vertex>& U, Color c) const;

  // Lines `p/q: v0→c0 v1→c1 ...`.
  std::string dump() const;

  friend bool operator==(const ExactDistribution& a, const ExactDistribution& b) { return a.atoms_ == b.atoms_; }

 private:
  std::vector<WeightedColoring> atoms_;
};

// Accepts `→` or `->` between vertex and color. Throws ParseError.
ExactDistribution parse_distribution(std::string_view text, int order);
ExactDistribution read_distribution(std::istream& in, int order);

struct Violation {
  bool fix = true;             // otherwise an avoidance event
  std::vector<Vertex> vertices;  // {v} for marginals, U for avoidance
  Color color = kNoColor;
  Rational probability;
  Rational threshold;
};

struct DistributionReport {
  int k = 3;
  Rational min_marginal = 1;
  Vertex min_marginal_vertex = -1;
  Color min_marginal_color = kNoColor;
  // The avoidance event (U, c) with the least Pr(avoid) / threshold.
  Rational min_avoidance = 1;
  Rational min_avoidance_threshold = 0;
  std::vector<Vertex> min_avoidance_set;
  Color min_avoidance_color = kNoColor;
  bool fix_ok = true;
  bool forb_ok = true;
  std::size_t violation_count = 0;
  std::vector<Violation> violations;  // first few only

  bool passed() const noexcept { return fix_ok && forb_ok; }
};

inline constexpr std::size_t kReportedViolations = 16;

// (k, eps, alpha) check: every marginal >= eps; every |U| <= k-2 avoidance of
// any c in the union of the lists >= alpha^|U|.
DistributionReport verify_distribution(const ExactDistribution& d, const Graph& g, const ListAssignment& lists,
                                       int k, const Rational& eps, const Rational& alpha);

// (FIX) and (FORB) at level alpha: marginals >= alpha; avoidance >= alpha for
// every 1 <= |U| <= k-2.
DistributionReport verify_fix_forb(const ExactDistribution& d, const Graph& g, const ListAssignment& lists, int k,
                                   const Rational& alpha);

}  // namespace flexcolor
