#pragma once

#include <optional>
#include <vector>

#include "flexcolor/core/rational.hpp"

namespace flexcolor::testing {

// Solves the square system M x = r exactly; nullopt when singular.
inline std::optional<std::vector<Rational>> solve(std::vector<std::vector<Rational>> M, std::vector<Rational> r) {
  const std::size_t n = M.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && M[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(M[pivot], M[col]);
    std::swap(r[pivot], r[col]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || M[i][col] == 0) continue;
      const Rational f = M[i][col] / M[col][col];
      for (std::size_t j = col; j < n; ++j) M[i][j] -= f * M[col][j];
      r[i] -= f * r[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = r[i] / M[i][i];
  return x;
}

// max t s.t. sum_{i in E_j} x_i >= t, x a distribution over `outcomes`
// outcomes, by enumerating every basic solution: pick `outcomes` of the
// inequalities (x_i >= 0 or event rows) to hold with equality alongside
// sum x = 1.
inline Rational max_min_by_vertices(std::size_t outcomes, const std::vector<std::vector<std::size_t>>& events) {
  const std::size_t s = outcomes, rows = s + events.size();
  // inequality r as a coefficient row over (x_1..x_s, t): row . (x,t) >= 0
  auto row = [&](std::size_t r) {
    std::vector<Rational> out(s + 1, 0);
    if (r < s) {
      out[r] = 1;
    } else {
      for (std::size_t i : events[r - s]) out[i] = 1;
      out[s] = -1;
    }
    return out;
  };
  std::optional<Rational> best;
  std::vector<std::size_t> pick;
  auto go = [&](auto&& self, std::size_t from) -> void {
    if (pick.size() == s) {
      std::vector<std::vector<Rational>> M;
      std::vector<Rational> rhs;
      std::vector<Rational> sum(s + 1, 1);
      sum[s] = 0;
      M.push_back(sum);
      rhs.push_back(1);
      for (std::size_t r : pick) {
        M.push_back(row(r));
        rhs.push_back(0);
      }
      auto x = solve(M, rhs);
      if (!x) return;
      for (std::size_t r = 0; r < rows; ++r) {
        auto coeffs = row(r);
        Rational lhs = 0;
        for (std::size_t i = 0; i <= s; ++i) lhs += coeffs[i] * (*x)[i];
        if (lhs < 0) return;
      }
      if (!best || (*x)[s] > *best) best = (*x)[s];
      return;
    }
    for (std::size_t r = from; r < rows; ++r) {
      pick.push_back(r);
      self(self, r + 1);
      pick.pop_back();
    }
  };
  go(go, 0);
  return best.value_or(Rational(0));
}

}  // namespace flexcolor::testing
