#include "flexcolor/gadgets/compose.hpp"

#include <memory>
#include <optional>

#include "flexcolor/core/errors.hpp"
#include "flexcolor/gadgets/step.hpp"

namespace flexcolor {

namespace {

struct PartState {
  CutPart part;
  std::optional<ExactDistribution> materialized;  // exact law of a generative part

  const ExactDistribution& exact() {
    if (auto* law = std::get_if<ExactDistribution>(&part.law)) return *law;
    if (!materialized) materialized = exact_law(std::get<Sampler>(part.law));
    return *materialized;
  }
};

Coloring draw_part(PartState& state, Color c, RandomSource& source) {
  const Vertex v = state.part.attach;
  if (auto* sampler = std::get_if<Sampler>(&state.part.law); sampler && !source.enumerating()) {
    for (std::size_t attempt = 0; attempt < kRejectionRetryBound; ++attempt) {
      Coloring phi = sampler->draw(source);
      if (phi.at(v) == c) return phi;
    }
    throw PreconditionError("conditional event not hit within the retry bound at vertex " + std::to_string(v) +
                            ", color " + std::to_string(c));
  }
  return draw_conditioned(state.exact(), v, c, source);
}

}  // namespace

Sampler compose_at_cut(const Sampler& spine, std::vector<CutPart> parts) {
  Sampler out = spine;
  if (parts.empty()) return out;
  out.name = spine.name + " at cut";
  Rational least = 1;
  auto states = std::make_shared<std::vector<PartState>>();
  for (auto& part : parts) {
    if (part.attach < 0 || part.attach >= spine.frame_order)
      throw PreconditionError("part attach vertex outside the frame");
    if (!std::binary_search(spine.domain.begin(), spine.domain.end(), part.attach))
      throw PreconditionError("part attach vertex " + std::to_string(part.attach) + " is not on the spine");
    if (auto* sampler = std::get_if<Sampler>(&part.law))
      out.domain.insert(out.domain.end(), sampler->domain.begin(), sampler->domain.end());
    least = std::min(least, part.fix);
    states->push_back({std::move(part), std::nullopt});
  }
  for (auto& state : *states)
    if (auto* law = std::get_if<ExactDistribution>(&state.part.law)) {
      const auto& phi = law->atoms().front().coloring;
      for (Vertex v = 0; v < static_cast<Vertex>(phi.size()); ++v)
        if (phi[v] != kNoColor) out.domain.push_back(v);
    }
  std::sort(out.domain.begin(), out.domain.end());
  out.domain.erase(std::unique(out.domain.begin(), out.domain.end()), out.domain.end());
  out.guarantee.fix = spine.guarantee.fix * least;
  out.guarantee.forb = out.guarantee.fix;
  out.draw = [spine_draw = spine.draw, states](RandomSource& source) {
    Coloring phi = spine_draw(source);
    for (auto& state : *states) {
      const Coloring psi = draw_part(state, phi.at(state.part.attach), source);
      for (std::size_t v = 0; v < psi.size(); ++v)
        if (psi[v] != kNoColor) phi[v] = psi[v];
    }
    return phi;
  };
  return out;
}

}  // namespace flexcolor
