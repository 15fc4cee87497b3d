#include "flexcolor/engine/constants.hpp"

namespace flexcolor {

const EngineConstants& engine_constants() {
  static const EngineConstants constants = [] {
    EngineConstants c;
    c.alpha = power(make_rational(1, 3), 9);
    const Rational base = Rational(2 * c.alpha / 3);
    c.epsilon = base * base;
    return c;
  }();
  return constants;
}

bool epsilon_exceeds_two_pow_minus_30(const EngineConstants& constants) {
  return constants.epsilon > power(make_rational(1, 2), 30);
}

}  // namespace flexcolor
