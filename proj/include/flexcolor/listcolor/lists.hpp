#pragma once

#include <istream>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"

namespace flexcolor {

using Color = int;
inline constexpr Color kNoColor = -1;

// Indexed by vertex of the frame graph; kNoColor outside the domain.
using Coloring = std::vector<Color>;

// Per-vertex color lists, each sorted and duplicate free. Colors are
// nonnegative.
class ListAssignment {
 public:
  ListAssignment() = default;
  explicit ListAssignment(std::vector<std::vector<Color>> lists);

  // Every one of n vertices gets {first, ..., first + k - 1}.
  static ListAssignment uniform(int n, int k, Color first = 1);

  int order() const noexcept { return static_cast<int>(lists_.size()); }
  std::span<const Color> operator[](Vertex v) const { return lists_.at(static_cast<std::size_t>(v)); }
  int size(Vertex v) const { return static_cast<int>(lists_.at(static_cast<std::size_t>(v)).size()); }
  bool contains(Vertex v, Color c) const;
  const std::vector<std::vector<Color>>& lists() const noexcept { return lists_; }

  // Same list size k at every vertex.
  bool is_k_assignment(int k) const;

  // Lists restricted to `vertices` (relabelled like induced_subgraph).
  ListAssignment restrict(std::span<const Vertex> sorted_vertices) const;

  friend bool operator==(const ListAssignment&, const ListAssignment&) = default;

 private:
  std::vector<std::vector<Color>> lists_;
};

// `v: c1,c2,...` one line per vertex, every vertex 0..n-1 exactly once.
ListAssignment read_lists(std::istream& in, int order);
ListAssignment parse_lists(std::string_view text, int order);
ListAssignment load_lists(const std::string& path, int order);
std::string format_lists(const ListAssignment& lists);

// Nonnegative weights on (vertex, color) pairs.
class WeightedRequest {
 public:
  void set(Vertex v, Color c, const Rational& weight);
  Rational weight(Vertex v, Color c) const;
  Rational total() const;
  const std::map<std::pair<Vertex, Color>, Rational>& entries() const noexcept { return weights_; }

 private:
  std::map<std::pair<Vertex, Color>, Rational> weights_;
};

// Lines `v c weight`; weights carried by colors outside L(v) are rejected.
WeightedRequest read_request(std::istream& in, const ListAssignment& lists);
WeightedRequest parse_request(std::string_view text, const ListAssignment& lists);
WeightedRequest load_request(const std::string& path, const ListAssignment& lists);
std::string format_request(const WeightedRequest& w);

// sum_v w(v, phi(v)) / total weight, or 1 when the total weight is zero.
Rational request_fraction(const Coloring& phi, const WeightedRequest& w);
Rational request_value(const Coloring& phi, const WeightedRequest& w);

// k - deg_G(v) + deg_H(v) for v in H = G[h_vertices].
struct EllBounds {
  std::vector<Vertex> vertices;  // sorted host vertices of H
  std::vector<int> values;       // aligned with vertices
  int at(Vertex host) const;
};
EllBounds ell_bounds(const Graph& g, std::span<const Vertex> h_vertices, int k);

// Every vertex with phi(v) != kNoColor uses a color from L(v), and adjacent
// colored vertices differ.
bool is_proper(const Graph& g, const ListAssignment& lists, const Coloring& phi);
// Also requires phi to be total.
bool is_proper_total(const Graph& g, const ListAssignment& lists, const Coloring& phi);

std::string format_coloring(const Coloring& phi);

}  // namespace flexcolor
