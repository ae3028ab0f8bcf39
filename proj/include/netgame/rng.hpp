#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <utility>

namespace netgame {

/// Seeded random source for one game.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard.
/// The derived draws (bounded integers, unit reals, shuffles) are computed
/// here instead of through <random> distributions, whose algorithms differ
/// between standard libraries; that keeps traces identical across platforms.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform integer in [0, n). n must be positive.
  std::size_t uniform_index(std::size_t n);

  /// Uniform real in [0, 1) with 53 bits of precision.
  double uniform01();

  bool bernoulli(double p) { return uniform01() < p; }

  template <typename T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      std::swap(items[i - 1], items[uniform_index(i)]);
    }
  }

  /// Moves a uniform random k-subset of `items` to the front (partial
  /// Fisher-Yates). k is clamped to items.size().
  template <typename T>
  void choose_front(std::span<T> items, std::size_t k) {
    if (k > items.size()) k = items.size();
    for (std::size_t i = 0; i < k; ++i) {
      std::swap(items[i], items[i + uniform_index(items.size() - i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace netgame
