#include "flexcolor/gadgets/block.hpp"

#include <algorithm>
#include <memory>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/gadgets/compose.hpp"
#include "flexcolor/gadgets/diamond.hpp"
#include "flexcolor/gadgets/exceptional.hpp"
#include "flexcolor/gadgets/max3.hpp"
#include "flexcolor/graph/pattern.hpp"

namespace flexcolor {

namespace {

Provider diamond_provider(const Graph& b) {
  return {"diamond", make_rational(1, 3), [b](const ListAssignment& lists, RandomSource& source) {
            const auto cover = diamond_cover(b, lists);
            return cover[source.uniform(cover.size())];
          }};
}

Provider pattern_provider(const Graph& b, PatternKind kind, std::vector<Vertex> roles) {
  Provider inner = exceptional_provider(kind);
  return {inner.name, inner.alpha, [roles, draw = inner.draw](const ListAssignment& lists, RandomSource& source) {
            std::vector<std::vector<Color>> by_role;
            for (Vertex r : roles) by_role.emplace_back(lists[r].begin(), lists[r].end());
            const Coloring psi = draw(ListAssignment(std::move(by_role)), source);
            Coloring phi(roles.size(), kNoColor);
            for (std::size_t i = 0; i < roles.size(); ++i) phi[roles[i]] = psi[i];
            return phi;
          }};
}

}  // namespace

std::optional<Provider> block_provider(const Graph& b, const std::vector<int>& f) {
  if (static_cast<int>(f.size()) != b.order()) throw PreconditionError("f does not match the block");
  const bool all_three = std::all_of(f.begin(), f.end(), [](int x) { return x == 3; });
  if (all_three && b.order() == 4 && embed_pattern(b, PatternKind::Diamond)) return diamond_provider(b);
  for (PatternKind kind : {PatternKind::H5, PatternKind::H7})
    if (b.order() == pattern_graph(kind).order())
      if (auto roles = embed_pattern(b, kind)) {
        if (!all_three) return std::nullopt;
        return pattern_provider(b, kind, *roles);
      }
  std::optional<Vertex> x;
  for (Vertex v = 0; v < b.order(); ++v) {
    if (f[v] == 3) continue;
    if (f[v] != 2 || x || b.degree(v) != 2) return std::nullopt;
    x = v;
  }
  try {
    check_max3_graph(b, x);
  } catch (const PreconditionError&) {
    return std::nullopt;
  }
  return max3_provider(b, x);
}

Provider cut_provider(const Graph& h, Vertex spine, std::vector<CutPiece> pieces) {
  Rational least = 1;
  std::string name = "cut(";
  for (const auto& piece : pieces) {
    if (!std::binary_search(piece.vertices.begin(), piece.vertices.end(), spine))
      throw PreconditionError("piece does not contain the spine vertex");
    least = std::min(least, piece.provider.alpha);
    name += (name.size() > 4 ? "," : "") + piece.provider.name;
  }
  name += ")";
  const int n = h.order();
  auto shared = std::make_shared<const std::vector<CutPiece>>(std::move(pieces));
  return {name, Rational(least / 3), [n, spine, shared](const ListAssignment& lists, RandomSource& source) {
            Sampler center;
            center.name = "spine";
            center.frame_order = n;
            center.domain = {spine};
            center.guarantee = {3, make_rational(1, 3), make_rational(1, 3)};
            const std::vector<Color> colors(lists[spine].begin(), lists[spine].end());
            center.draw = [n, spine, colors](RandomSource& s) {
              Coloring phi(static_cast<std::size_t>(n), kNoColor);
              phi[spine] = colors[s.uniform(colors.size())];
              return phi;
            };
            std::vector<CutPart> parts;
            for (const auto& piece : *shared) {
              Sampler part;
              part.name = piece.provider.name;
              part.frame_order = n;
              part.domain = piece.vertices;
              part.draw = [n, vs = piece.vertices, local = lists.restrict(piece.vertices),
                           draw = piece.provider.draw](RandomSource& s) {
                const Coloring psi = draw(local, s);
                Coloring phi(static_cast<std::size_t>(n), kNoColor);
                for (std::size_t i = 0; i < vs.size(); ++i) phi[vs[i]] = psi[i];
                return phi;
              };
              parts.push_back({spine, std::move(part), piece.provider.alpha});
            }
            return compose_at_cut(center, std::move(parts)).draw(source);
          }};
}

}  // namespace flexcolor
