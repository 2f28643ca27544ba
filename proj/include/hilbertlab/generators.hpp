#pragma once

#include <cstdint>

#include "hilbertlab/ergodic.hpp"
#include "hilbertlab/sequence.hpp"

namespace hilbertlab {

/// Small deterministic generator (splitmix64). Used for every seeded input so
/// that identical seeds reproduce identical experiments on any platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform in [0, 1).
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  /// Uniform integer in [lo, hi], inclusive.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

 private:
  std::uint64_t state_;
};

/// a[-offset] = a[offset] = weight; data symmetric about 0, which the
/// antisymmetric kernel annihilates there.
BilateralSequence symmetric_pair(std::int64_t offset = 1, double weight = 1.0);

/// Dense support of the given size centered at 0, entries uniform in [-1, 1].
BilateralSequence random_l1_sequence(std::uint64_t seed, std::int64_t support_size);

FinitePermutationSystem random_permutation_system(std::int64_t size, std::uint64_t seed);

ObservableField indicator_observable(std::int64_t size, std::int64_t at);
ObservableField constant_observable(std::int64_t size, double value);
ObservableField random_observable(std::int64_t size, std::uint64_t seed);

}  // namespace hilbertlab
