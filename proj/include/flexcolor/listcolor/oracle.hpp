#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>

#include "flexcolor/core/rational.hpp"
#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

inline constexpr int kExhaustiveOracleCap = 4;

struct OracleOptions {
  int palette_cap = 12;
  std::size_t samples = 200;  // assignments checked in sampled mode
  std::uint64_t seed = 0;
};

struct OracleVerdict {
  bool reductive = true;
  bool sampled = false;              // true when only random assignments were checked
  std::size_t assignments = 0;
  Rational worst_value = 1;          // least LP optimum seen
  std::optional<ListAssignment> witness;  // first assignment below alpha
};

// Does every f-assignment on h admit a distribution on L-colorings with
// Pr(phi(v) = c) >= alpha for all v, c in L(v), and Pr(no u in U gets c) >=
// alpha for 1 <= |U| <= k-2? Canonical assignments are checked exhaustively
// up to kExhaustiveOracleCap vertices, random ones beyond.
OracleVerdict reductive_oracle(const Graph& h, std::span<const int> f, int k, const Rational& alpha,
                               const OracleOptions& options = {});

// The LP optimum for one assignment (FIX and FORB events together).
Rational reductive_value(const Graph& h, const ListAssignment& lists, int k);

}  // namespace flexcolor
