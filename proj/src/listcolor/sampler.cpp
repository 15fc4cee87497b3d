#include "flexcolor/listcolor/sampler.hpp"

#include <map>

namespace flexcolor {

ExactDistribution exact_law(const Sampler& sampler) {
  std::map<Coloring, Rational> merged;
  for (auto& branch : enumerate_branches(sampler.draw)) merged[std::move(branch.value)] += branch.probability;
  std::vector<WeightedColoring> atoms;
  atoms.reserve(merged.size());
  for (auto& [phi, w] : merged) atoms.push_back({phi, w});
  return ExactDistribution(std::move(atoms));
}

}  // namespace flexcolor
