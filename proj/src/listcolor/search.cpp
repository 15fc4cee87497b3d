#include "flexcolor/listcolor/search.hpp"

#include <algorithm>
#include <string>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {
namespace {

// Depth-first search in vertex order with forward checking on the remaining
// domains. Visits solutions in lexicographic order.
class Search {
 public:
  Search(const Graph& g, const ListAssignment& lists, const Coloring& partial)
      : g_(g), phi_(partial), domains_(static_cast<std::size_t>(g.order())) {
    for (Vertex v = 0; v < g.order(); ++v) {
      if (phi_[v] != kNoColor) continue;
      order_.push_back(v);
      for (Color c : lists[v]) {
        bool blocked = false;
        for (Vertex w : g.neighbors(v)) blocked |= phi_[w] == c;
        if (!blocked) domains_[v].push_back(c);
      }
      if (domains_[v].empty()) dead_ = true;
    }
  }

  template <class Visit>
  void run(Visit&& visit) {
    if (!dead_) descend(0, visit);
  }

 private:
  template <class Visit>
  bool descend(std::size_t i, Visit& visit) {
    if (i == order_.size()) return visit(static_cast<const Coloring&>(phi_));
    const Vertex v = order_[i];
    const std::vector<Color> options = domains_[v];
    for (Color c : options) {
      phi_[v] = c;
      std::vector<Vertex> touched;
      bool wiped = false;
      for (Vertex w : g_.neighbors(v)) {
        if (phi_[w] != kNoColor) continue;
        auto& d = domains_[w];
        auto it = std::lower_bound(d.begin(), d.end(), c);
        if (it == d.end() || *it != c) continue;
        d.erase(it);
        touched.push_back(w);
        if (d.empty()) {
          wiped = true;
          break;
        }
      }
      bool stop = false;
      if (!wiped) stop = descend(i + 1, visit);
      for (Vertex w : touched) {
        auto& d = domains_[w];
        d.insert(std::lower_bound(d.begin(), d.end(), c), c);
      }
      phi_[v] = kNoColor;
      if (stop) return true;
    }
    return false;
  }

  const Graph& g_;
  Coloring phi_;
  std::vector<std::vector<Color>> domains_;
  std::vector<Vertex> order_;
  bool dead_ = false;
};

void check_cap(const Graph& g, const ListAssignment& lists, int cap) {
  if (lists.order() != g.order()) throw PreconditionError("list assignment does not match the graph");
  if (g.order() > cap)
    throw CapExceededError("exact enumeration is capped at " + std::to_string(cap) + " vertices (graph has " +
                           std::to_string(g.order()) + "); use sample mode");
}

}  // namespace

std::vector<Coloring> enumerate_L_colorings(const Graph& g, const ListAssignment& lists, int cap) {
  check_cap(g, lists, cap);
  std::vector<Coloring> out;
  Search search(g, lists, Coloring(static_cast<std::size_t>(g.order()), kNoColor));
  search.run([&](const Coloring& phi) {
    out.push_back(phi);
    return false;
  });
  return out;
}

std::size_t count_L_colorings(const Graph& g, const ListAssignment& lists, int cap) {
  check_cap(g, lists, cap);
  std::size_t count = 0;
  Search search(g, lists, Coloring(static_cast<std::size_t>(g.order()), kNoColor));
  search.run([&](const Coloring&) {
    ++count;
    return false;
  });
  return count;
}

std::optional<Coloring> extend_coloring(const Graph& g, const ListAssignment& lists, const Coloring& partial) {
  if (lists.order() != g.order() || static_cast<int>(partial.size()) != g.order())
    throw PreconditionError("coloring does not match the graph");
  if (!is_proper(g, lists, partial)) return std::nullopt;
  std::optional<Coloring> found;
  Search search(g, lists, partial);
  search.run([&](const Coloring& phi) {
    found = phi;
    return true;
  });
  return found;
}

std::optional<Coloring> find_L_coloring(const Graph& g, const ListAssignment& lists) {
  return extend_coloring(g, lists, Coloring(static_cast<std::size_t>(g.order()), kNoColor));
}

}  // namespace flexcolor
