#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "flexcolor/core/random.hpp"
#include "flexcolor/core/rational.hpp"
#include "flexcolor/listcolor/distribution.hpp"
#include "flexcolor/listcolor/lists.hpp"

namespace flexcolor {

// Declared lower bounds: every marginal Pr(phi(v) = c) >= fix; every
// avoidance Pr(phi(u) != c for all u in U) >= forb (per element of U for the
// (k, eps, alpha) reading).
struct Guarantee {
  int k = 3;
  Rational fix = 0;
  Rational forb = 0;
};

// A randomized procedure producing colorings of `domain`, written against
// RandomSource so it can be sampled or enumerated exactly. Colorings are
// frame-sized; vertices outside the domain are kNoColor.
struct Sampler {
  std::string name;
  int frame_order = 0;
  std::vector<Vertex> domain;  // sorted
  std::function<Coloring(RandomSource&)> draw;
  Guarantee guarantee;

  Coloring sample(std::uint64_t seed) const {
    SeededRandom source(seed);
    return draw(source);
  }
};

// Every branch of the sampler's randomness, merged into one distribution.
// Vertices outside the domain keep kNoColor.
ExactDistribution exact_law(const Sampler& sampler);

}  // namespace flexcolor
