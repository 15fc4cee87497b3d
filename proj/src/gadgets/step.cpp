#include "flexcolor/gadgets/step.hpp"

#include <map>

#include "flexcolor/core/errors.hpp"

namespace flexcolor {

Sampler apply_step(const Sampler& environment, const ExtensionStep& step) {
  Sampler out;
  out.name = environment.name.empty() ? step.name : environment.name + " + " + step.name;
  out.frame_order = environment.frame_order;
  out.domain = environment.domain;
  out.domain.insert(out.domain.end(), step.reduction_set.begin(), step.reduction_set.end());
  std::sort(out.domain.begin(), out.domain.end());
  out.guarantee = step.guarantee;
  out.draw = [env = environment.draw, extend = step.extend](RandomSource& source) {
    return extend(env(source), source);
  };
  return out;
}

ExactDistribution apply_step_exact(const ExactDistribution& environment, const ExtensionStep& step) {
  // boundary pattern -> law of the colors given to S
  std::map<std::vector<Color>, std::vector<std::pair<std::vector<Color>, Rational>>> cache;
  std::vector<WeightedColoring> atoms;
  for (const auto& atom : environment.atoms()) {
    std::vector<Color> pattern;
    pattern.reserve(step.boundary.size());
    for (Vertex b : step.boundary) pattern.push_back(atom.coloring.at(b));
    auto it = cache.find(pattern);
    if (it == cache.end()) {
      std::map<std::vector<Color>, Rational> law;
      for (auto& branch : enumerate_branches([&](RandomSource& source) { return step.extend(atom.coloring, source); })) {
        std::vector<Color> colors;
        colors.reserve(step.reduction_set.size());
        for (Vertex s : step.reduction_set) colors.push_back(branch.value.at(s));
        law[std::move(colors)] += branch.probability;
      }
      it = cache.emplace(pattern, std::vector<std::pair<std::vector<Color>, Rational>>(law.begin(), law.end())).first;
    }
    for (const auto& [colors, p] : it->second) {
      Coloring phi = atom.coloring;
      for (std::size_t i = 0; i < colors.size(); ++i) phi[step.reduction_set[i]] = colors[i];
      atoms.push_back({std::move(phi), atom.weight * p});
    }
  }
  return ExactDistribution(std::move(atoms));
}

const Coloring& draw_conditioned(const ExactDistribution& part, Vertex v, Color c, RandomSource& source) {
  std::vector<const WeightedColoring*> matching;
  std::vector<Rational> weights;
  bool equal = true;
  for (const auto& atom : part.atoms())
    if (atom.coloring.at(static_cast<std::size_t>(v)) == c) {
      if (!matching.empty() && atom.weight != weights.front()) equal = false;
      matching.push_back(&atom);
      weights.push_back(atom.weight);
    }
  if (matching.empty())
    throw PreconditionError("conditional event has zero mass at vertex " + std::to_string(v) + ", color " +
                            std::to_string(c));
  const std::size_t i = equal ? source.uniform(matching.size()) : source.weighted(weights);
  return matching[i]->coloring;
}

}  // namespace flexcolor
