#pragma once

#include "flexcolor/core/rational.hpp"

namespace flexcolor {

struct EngineConstants {
  Rational alpha;    // 3^-9
  Rational epsilon;  // (2 alpha / 3)^2
};

const EngineConstants& engine_constants();

// epsilon > 2^-30, decided in exact arithmetic.
bool epsilon_exceeds_two_pow_minus_30(const EngineConstants& constants = engine_constants());

}  // namespace flexcolor
