#include "flexcolor/listcolor/lp.hpp"

#include <numeric>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

LpResult lp_max_min_events(std::size_t outcomes, const std::vector<std::vector<std::size_t>>& events) {
  LpResult result;
  if (outcomes == 0) return result;
  result.feasible = true;
  const std::size_t m = outcomes, n = events.size();
  if (n == 0) {
    // No constraint: any distribution attains the vacuous minimum 1.
    result.value = 1;
    result.weights.assign(m, Rational(0));
    result.weights[0] = 1;
    return result;
  }
  // Columns 0..n-1 are the y_j, n..n+m-1 the slacks.
  const std::size_t cols = n + m;
  std::vector<std::vector<Rational>> a(m, std::vector<Rational>(cols, 0));
  std::vector<Rational> b(m, 1);
  std::vector<std::size_t> basis(m);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t i : events[j]) {
      if (i >= m) throw PreconditionError("event refers to a missing outcome");
      a[i][j] = 1;
    }
  for (std::size_t i = 0; i < m; ++i) {
    a[i][n + i] = 1;
    basis[i] = n + i;
  }
  // reduced[j] = c_j - c_B B^{-1} A_j, with c = 1 on structural columns.
  std::vector<Rational> reduced(cols, 0);
  for (std::size_t j = 0; j < n; ++j) reduced[j] = 1;
  Rational objective = 0;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t j = 0; j < cols; ++j)
      if (reduced[j] > 0) {
        enter = j;
        break;
      }
    if (enter == cols) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (a[i][enter] <= 0) continue;
      Rational ratio = b[i] / a[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) {
      // Unbounded packing: some event can never occur.
      result.value = 0;
      result.weights.assign(m, Rational(0));
      result.weights[0] = 1;
      return result;
    }
    ++result.pivots;
    const Rational pivot = a[leave][enter];
    for (auto& x : a[leave]) x /= pivot;
    b[leave] /= pivot;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || a[i][enter] == 0) continue;
      const Rational factor = a[i][enter];
      for (std::size_t j = 0; j < cols; ++j)
        if (a[leave][j] != 0) a[i][j] -= factor * a[leave][j];
      b[i] -= factor * b[leave];
    }
    const Rational factor = reduced[enter];
    for (std::size_t j = 0; j < cols; ++j)
      if (a[leave][j] != 0) reduced[j] -= factor * a[leave][j];
    objective += factor * b[leave];
    basis[leave] = enter;
  }
  // Dual prices of the packing rows are minus the slack reduced costs; scaled
  // by 1/objective they form the optimal distribution.
  result.value = 1 / objective;
  result.weights.resize(m);
  for (std::size_t i = 0; i < m; ++i) result.weights[i] = -reduced[n + i] / objective;
  return result;
}

LpResult lp_max_min_fix(const Graph& g, const ListAssignment& lists, int cap, std::vector<Coloring>* colorings) {
  const auto support = enumerate_L_colorings(g, lists, cap);
  std::vector<std::vector<std::size_t>> events;
  for (Vertex v = 0; v < g.order(); ++v)
    for (Color c : lists[v]) {
      std::vector<std::size_t> event;
      for (std::size_t i = 0; i < support.size(); ++i)
        if (support[i][v] == c) event.push_back(i);
      events.push_back(std::move(event));
    }
  LpResult result = lp_max_min_events(support.size(), events);
  if (colorings) *colorings = support;
  return result;
}

}  // namespace flexcolor
