#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <type_traits>
#include <utility>
#include <vector>

#include "flexcolor/core/rational.hpp"

namespace flexcolor {

// Source of the random choices a randomized construction makes. A
// construction written against this interface can be sampled (SeededRandom)
// or enumerated branch by branch with exact probabilities (BranchEnumerator).
class RandomSource {
 public:
  virtual ~RandomSource() = default;

  // Index uniform in [0, n). Requires n >= 1.
  virtual std::size_t uniform(std::size_t n) = 0;

  // Index i with probability weights[i] / sum(weights). Zero weights are never
  // chosen. Requires a positive total.
  virtual std::size_t weighted(std::span<const Rational> weights) = 0;

  // True when the caller is enumerating every branch exactly.
  virtual bool enumerating() const noexcept { return false; }
};

// std::mt19937_64 seeded with the raw 64-bit seed. uniform() uses rejection on
// the raw 64-bit output so streams do not depend on the standard library's
// distribution implementations. weighted() converts weights to double; it is
// only used for sampling, never for exact guarantees.
class SeededRandom final : public RandomSource {
 public:
  explicit SeededRandom(std::uint64_t seed) : engine_(seed) {}

  std::size_t uniform(std::size_t n) override;
  std::size_t weighted(std::span<const Rational> weights) override;
  std::uint64_t next_u64() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Replays a deterministic procedure once per branch of its choice tree,
// tracking the exact probability of the current branch.
class BranchEnumerator final : public RandomSource {
 public:
  std::size_t uniform(std::size_t n) override;
  std::size_t weighted(std::span<const Rational> weights) override;
  bool enumerating() const noexcept override { return true; }

  void start();
  // Moves to the next unexplored branch; false once the tree is exhausted.
  bool advance();
  const Rational& probability() const noexcept { return probability_; }

 private:
  struct Slot {
    std::size_t width = 0;               // uniform choice over [0, width)
    std::vector<std::size_t> options;    // weighted choice: indices with positive weight
    std::vector<Rational> weights;
    Rational total;
    std::size_t position = 0;
  };

  std::size_t take(Slot& slot);

  std::vector<Slot> trail_;
  std::size_t depth_ = 0;
  Rational probability_ = 1;
};

template <class T>
struct Branch {
  T value;
  Rational probability;
};

// Runs `procedure(RandomSource&)` on every branch of its choice tree.
template <class Procedure>
auto enumerate_branches(Procedure&& procedure)
    -> std::vector<Branch<std::invoke_result_t<Procedure&, RandomSource&>>> {
  using Value = std::invoke_result_t<Procedure&, RandomSource&>;
  std::vector<Branch<Value>> branches;
  BranchEnumerator source;
  do {
    source.start();
    Value value = procedure(static_cast<RandomSource&>(source));
    branches.push_back({std::move(value), source.probability()});
  } while (source.advance());
  return branches;
}

}  // namespace flexcolor
