#include "flexcolor/core/random.hpp"

#include <limits>
#include <stdexcept>

namespace flexcolor {

std::size_t SeededRandom::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform choice over an empty range");
  const std::uint64_t bound = static_cast<std::uint64_t>(n);
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return static_cast<std::size_t>(x % bound);
}

std::size_t SeededRandom::weighted(std::span<const Rational> weights) {
  double total = 0;
  for (const auto& w : weights) total += w.get_d();
  if (!(total > 0)) throw std::invalid_argument("weighted choice with zero total weight");
  const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53 * total;
  double acc = 0;
  std::size_t last_positive = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] <= 0) continue;
    last_positive = i;
    acc += weights[i].get_d();
    if (u < acc) return i;
  }
  return last_positive;
}

std::size_t BranchEnumerator::take(Slot& slot) {
  if (slot.width > 0) {
    probability_ /= static_cast<unsigned long>(slot.width);
    return slot.position;
  }
  const std::size_t index = slot.options[slot.position];
  probability_ *= slot.weights[index];
  probability_ /= slot.total;
  return index;
}

std::size_t BranchEnumerator::uniform(std::size_t n) {
  if (n == 0) throw std::invalid_argument("uniform choice over an empty range");
  if (depth_ < trail_.size()) {
    Slot& slot = trail_[depth_];
    if (slot.width != n) throw std::logic_error("procedure is not deterministic under replay");
    ++depth_;
    return take(slot);
  }
  trail_.push_back(Slot{n, {}, {}, 0, 0});
  ++depth_;
  return take(trail_.back());
}

std::size_t BranchEnumerator::weighted(std::span<const Rational> weights) {
  if (depth_ < trail_.size()) {
    Slot& slot = trail_[depth_];
    if (slot.width != 0 || slot.weights.size() != weights.size())
      throw std::logic_error("procedure is not deterministic under replay");
    ++depth_;
    return take(slot);
  }
  Slot slot;
  slot.weights.assign(weights.begin(), weights.end());
  slot.total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    if (weights[i] < 0) throw std::invalid_argument("negative weight");
    if (weights[i] > 0) {
      slot.options.push_back(i);
      slot.total += weights[i];
    }
  }
  if (slot.options.empty()) throw std::invalid_argument("weighted choice with zero total weight");
  trail_.push_back(std::move(slot));
  ++depth_;
  return take(trail_.back());
}

void BranchEnumerator::start() {
  depth_ = 0;
  probability_ = 1;
}

bool BranchEnumerator::advance() {
  trail_.resize(depth_);
  while (!trail_.empty()) {
    Slot& slot = trail_.back();
    const std::size_t count = slot.width > 0 ? slot.width : slot.options.size();
    if (slot.position + 1 < count) {
      ++slot.position;
      return true;
    }
    trail_.pop_back();
  }
  return false;
}

}  // namespace flexcolor
