#include "hilbertlab/generators.hpp"

#include <stdexcept>

namespace hilbertlab {

std::int64_t SplitMix64::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  const auto scaled =
      static_cast<std::uint64_t>((static_cast<unsigned __int128>(next()) * span) >> 64);
  return lo + static_cast<std::int64_t>(scaled);
}

BilateralSequence symmetric_pair(std::int64_t offset, double weight) {
  if (offset < 1) throw std::invalid_argument("symmetric_pair: offset must be >= 1");
  std::vector<double> values(static_cast<std::size_t>(2 * offset + 1), 0.0);
  values.front() = weight;
  values.back() = weight;
  return BilateralSequence(-offset, std::move(values));
}

BilateralSequence random_l1_sequence(std::uint64_t seed, std::int64_t support_size) {
  if (support_size < 1) throw std::invalid_argument("random_l1_sequence: support must be >= 1");
  SplitMix64 rng(seed);
  std::vector<double> values(static_cast<std::size_t>(support_size));
  for (auto& v : values) v = rng.uniform(-1.0, 1.0);
  return BilateralSequence(-support_size / 2, std::move(values));
}

FinitePermutationSystem random_permutation_system(std::int64_t size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("random_permutation_system: size must be >= 1");
  SplitMix64 rng(seed);
  std::vector<std::int64_t> map(static_cast<std::size_t>(size));
  for (std::int64_t x = 0; x < size; ++x) map[static_cast<std::size_t>(x)] = x;
  for (std::int64_t x = size - 1; x > 0; --x) {
    const std::int64_t y = rng.uniform_int(0, x);
    std::swap(map[static_cast<std::size_t>(x)], map[static_cast<std::size_t>(y)]);
  }
  return FinitePermutationSystem(std::move(map));
}

ObservableField indicator_observable(std::int64_t size, std::int64_t at) {
  if (size < 1) throw std::invalid_argument("indicator_observable: size must be >= 1");
  if (at < 0 || at >= size) throw std::invalid_argument("indicator_observable: point out of range");
  ObservableField f{std::vector<double>(static_cast<std::size_t>(size), 0.0)};
  f.values[static_cast<std::size_t>(at)] = 1.0;
  return f;
}

ObservableField constant_observable(std::int64_t size, double value) {
  if (size < 1) throw std::invalid_argument("constant_observable: size must be >= 1");
  return ObservableField{std::vector<double>(static_cast<std::size_t>(size), value)};
}

ObservableField random_observable(std::int64_t size, std::uint64_t seed) {
  if (size < 1) throw std::invalid_argument("random_observable: size must be >= 1");
  SplitMix64 rng(seed);
  ObservableField f{std::vector<double>(static_cast<std::size_t>(size))};
  for (auto& v : f.values) v = rng.uniform(-1.0, 1.0);
  return f;
}

}  // namespace hilbertlab
