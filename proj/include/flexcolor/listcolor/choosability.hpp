#pragma once

#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "flexcolor/graph/graph.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

// Calls visit(lists) for every f-assignment in canonical form: colors are
// 1, 2, ... in order of first use (vertex order, ascending within a list),
// with at most `palette` colors. Stops early when visit returns false.
// Returns the number of assignments visited.
std::size_t for_each_canonical_assignment(std::span<const int> f, int palette,
                                          const std::function<bool(const ListAssignment&)>& visit);

// Number of canonical f-assignments, computed without enumerating them.
std::size_t count_canonical_assignments(std::span<const int> f, int palette);

// Degree-choosability (f >= deg everywhere): colorable from every
// f-assignment iff f(v) > deg(v) somewhere, or some block is neither a clique
// nor an odd cycle. Up to kErtWitnessOrder vertices the induced even cycle /
// theta witness is also consulted. Throws PreconditionError on disconnected input or f < deg.
inline constexpr int kErtWitnessOrder = 8;

bool is_f_choosable_ERT(const Graph& g, std::span<const int> f);

// Every canonical f-assignment with palette sum(f) admits an L-coloring.
// Optionally reports an uncolorable witness.
bool is_f_choosable_exhaustive(const Graph& g, std::span<const int> f, ListAssignment* witness = nullptr);

// For a Gallai tree with |L(v)| = deg(v): true if some terminal block holds
// two vertices of equal degree with different lists; otherwise decided by
// search. Throws PreconditionError when g is not a Gallai tree or sizes differ.
bool gallai_list_colorable(const Graph& g, const ListAssignment& lists);

std::vector<int> degrees(const Graph& g);

}  // namespace flexcolor
