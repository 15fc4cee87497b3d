#include "flexcolor/gadgets/exceptional.hpp"

#include <algorithm>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/listcolor/search.hpp"

namespace flexcolor {

namespace {

using List = std::vector<Color>;

bool has(const List& l, Color c) { return std::find(l.begin(), l.end(), c) != l.end(); }

List without(List l, Color c) {
  l.erase(std::remove(l.begin(), l.end(), c), l.end());
  return l;
}

int x_role(PatternKind kind) { return kind == PatternKind::H5 ? int{h5_role::x} : int{h7_role::x}; }

// H5: drop a4 from L''(target) when L(v) = L(z) = {a1,a2,a4}, L(other) =
// {a1,a2,a3} and L'(x) = {a3,a4}.
void h5_rule(std::vector<List>& reduced, const std::vector<List>& l, const List& lx, int target, int other) {
  using namespace h5_role;
  if (lx.size() != 2 || l[v] != l[z]) return;
  for (Color a4 : lx) {
    const Color a3 = lx[0] == a4 ? lx[1] : lx[0];
    if (!has(l[v], a4) || has(l[v], a3)) continue;
    if (has(l[other], a4) || !has(l[other], a3)) continue;
    if (without(l[v], a4) != without(l[other], a3)) continue;
    reduced[target] = without(reduced[target], a4);
  }
}

// H7: drop a from L''(target) when |L'(x)| = 2 and L'(partner) - {a} = L'(x).
void h7_rule(std::vector<List>& reduced, const std::vector<List>& lp, const List& lx, int target, int partner) {
  if (lx.size() != 2) return;
  for (Color a : lp[target])
    if (without(lp[partner], a) == lx) {
      reduced[target] = without(reduced[target], a);
      break;
    }
}

std::vector<List> prime_lists(PatternKind kind, const ListAssignment& lists, std::optional<Color> external) {
  std::vector<List> lp;
  for (Vertex s = 0; s < lists.order(); ++s) {
    if (lists.size(s) != 3) throw PreconditionError("exceptional gadget needs lists of size 3");
    lp.emplace_back(lists[s].begin(), lists[s].end());
  }
  if (external) lp[x_role(kind)] = without(lp[x_role(kind)], *external);
  return lp;
}

}  // namespace

void check_context(const GadgetContext& ctx) {
  if (ctx.kind != PatternKind::H5 && ctx.kind != PatternKind::H7)
    throw PreconditionError("gadget context must be H5 or H7");
  const Graph& pattern = pattern_graph(ctx.kind);
  if (static_cast<int>(ctx.roles.size()) != pattern.order())
    throw PreconditionError("gadget context has the wrong number of roles");
  std::vector<Vertex> sorted = ctx.roles;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end() || sorted.front() < 0 ||
      sorted.back() >= ctx.host.order())
    throw PreconditionError("gadget roles are not distinct host vertices");
  if (induced_edge_count(ctx.host, sorted) != pattern.size())
    throw PreconditionError("gadget is not an induced copy of " + std::string(pattern_name(ctx.kind)));
  for (const auto& [a, b] : pattern.edges())
    if (!ctx.host.adjacent(ctx.roles[a], ctx.roles[b]))
      throw PreconditionError("gadget roles do not match " + std::string(pattern_name(ctx.kind)));
  const int x = x_role(ctx.kind);
  for (int r = 0; r < pattern.order(); ++r) {
    const int outside = ctx.host.degree(ctx.roles[r]) - pattern.degree(r);
    if (r != x && outside != 0)
      throw PreconditionError("gadget vertex " + std::to_string(ctx.roles[r]) + " must have host degree 3");
    if (r == x && outside > 1)
      throw PreconditionError("gadget vertex x has more than one outside neighbor");
  }
}

Vertex external_neighbor(const GadgetContext& ctx) {
  const Vertex x = ctx.roles[x_role(ctx.kind)];
  for (Vertex w : ctx.host.neighbors(x))
    if (std::find(ctx.roles.begin(), ctx.roles.end(), w) == ctx.roles.end()) return w;
  return -1;
}

std::vector<std::vector<Color>> exceptional_reduced_lists(PatternKind kind, const ListAssignment& lists,
                                                          std::optional<Color> external) {
  const auto lp = prime_lists(kind, lists, external);
  auto reduced = lp;
  if (kind == PatternKind::H5) {
    std::vector<List> l;
    for (Vertex s = 0; s < 5; ++s) l.emplace_back(lists[s].begin(), lists[s].end());
    h5_rule(reduced, l, lp[h5_role::x], h5_role::w, h5_role::y);
    h5_rule(reduced, l, lp[h5_role::x], h5_role::y, h5_role::w);
  } else {
    h7_rule(reduced, lp, lp[h7_role::x], h7_role::v, h7_role::z);
    h7_rule(reduced, lp, lp[h7_role::x], h7_role::w, h7_role::y);
  }
  return reduced;
}

Coloring exceptional_procedure(PatternKind kind, const ListAssignment& lists, std::optional<Color> external,
                               RandomSource& source) {
  const Graph& h = pattern_graph(kind);
  auto lp = prime_lists(kind, lists, external);
  const auto reduced = exceptional_reduced_lists(kind, lists, external);
  const auto u = static_cast<Vertex>(source.uniform(static_cast<std::size_t>(h.order())));
  if (reduced[u].empty()) throw CitationError("empty reduced list", format_lists(lists));
  const Color c = reduced[u][source.uniform(reduced[u].size())];
  for (Vertex s : h.neighbors(u)) lp[s] = without(lp[s], c);
  lp[u] = {c};
  Coloring partial(static_cast<std::size_t>(h.order()), kNoColor);
  partial[u] = c;
  for (const auto& l : lp)
    if (l.empty()) throw CitationError("remaining list emptied", format_lists(lists));
  auto phi = extend_coloring(h, ListAssignment(lp), partial);
  if (!phi)
    throw CitationError(std::string(pattern_name(kind)) + " extension failed after coloring vertex " +
                            std::to_string(u) + " with " + std::to_string(c),
                        format_lists(lists) + (external ? "external " + std::to_string(*external) + "\n" : ""));
  return *phi;
}

ExtensionStep exceptional_step(const GadgetContext& ctx, const ListAssignment& lists, const Rational& env_alpha) {
  check_context(ctx);
  const bool h5 = ctx.kind == PatternKind::H5;
  const Vertex outside = external_neighbor(ctx);
  std::vector<std::vector<Color>> role_lists;
  for (Vertex r : ctx.roles) role_lists.emplace_back(lists[r].begin(), lists[r].end());
  ExtensionStep step;
  step.name = h5 ? "H5" : "H7";
  step.reduction_set = ctx.roles;
  std::sort(step.reduction_set.begin(), step.reduction_set.end());
  if (outside >= 0) step.boundary = {outside};
  const Rational level = outside >= 0 ? env_alpha : Rational(1);
  step.guarantee = {3, level * make_rational(1, h5 ? 15 : 21), make_rational(1, h5 ? 10 : 14)};
  step.extend = [kind = ctx.kind, roles = ctx.roles, outside, local = ListAssignment(std::move(role_lists))](
                    const Coloring& env, RandomSource& source) {
    std::optional<Color> external;
    if (outside >= 0) external = env.at(outside);
    const Coloring psi = exceptional_procedure(kind, local, external, source);
    Coloring phi = env;
    for (std::size_t r = 0; r < roles.size(); ++r) phi[roles[r]] = psi[r];
    return phi;
  };
  return step;
}

Sampler h5_sampler(const GadgetContext& ctx, const ListAssignment& lists, const Sampler& environment) {
  if (ctx.kind != PatternKind::H5) throw PreconditionError("context is not H5");
  return apply_step(environment, exceptional_step(ctx, lists, environment.guarantee.forb));
}

Sampler h7_sampler(const GadgetContext& ctx, const ListAssignment& lists, const Sampler& environment) {
  if (ctx.kind != PatternKind::H7) throw PreconditionError("context is not H7");
  return apply_step(environment, exceptional_step(ctx, lists, environment.guarantee.forb));
}

Provider exceptional_provider(PatternKind kind) {
  const bool h5 = kind == PatternKind::H5;
  return {h5 ? "H5" : "H7", make_rational(1, h5 ? 15 : 21),
          [kind](const ListAssignment& lists, RandomSource& source) {
            return exceptional_procedure(kind, lists, std::nullopt, source);
          }};
}

}  // namespace flexcolor
