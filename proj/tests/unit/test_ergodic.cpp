#include "hilbertlab/ergodic.hpp"

#include <cmath>

#include "doctest.h"
#include "hilbertlab/generators.hpp"
#include "hilbertlab/transform.hpp"

using namespace hilbertlab;

TEST_CASE("permutation system construction") {
  const FinitePermutationSystem sys({1, 2, 0});
  CHECK(sys.size() == 3);
  CHECK(sys.forward(0) == 1);
  CHECK(sys.backward(0) == 2);
  CHECK(sys.iterate(0, 3) == 0);
  CHECK(sys.iterate(0, -1) == 2);

  CHECK_THROWS_AS(FinitePermutationSystem({0, 0}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePermutationSystem({0, 5}), std::invalid_argument);
  CHECK_THROWS_AS(FinitePermutationSystem({}), std::invalid_argument);
  CHECK_THROWS_AS(sys.forward(3), std::invalid_argument);
}

TEST_CASE("preimages preserve the uniform measure") {
  SplitMix64 rng(73);
  const auto sys = random_permutation_system(128, rng.next());
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<char> subset(128, 0);
    std::int64_t size = 0;
    for (auto& bit : subset) {
      bit = rng.uniform() < 0.37 ? 1 : 0;
      size += bit;
    }
    // tau^{-1}E through the stored inverse.
    std::int64_t preimage_size = 0;
    for (std::int64_t x = 0; x < 128; ++x) {
      preimage_size += subset[static_cast<std::size_t>(sys.forward(x))];
    }
    CHECK(preimage_size == size);
  }
}

TEST_CASE("orbit sequence examples") {
  // Cyclic shift on 4 points, indicator of {0}: the orbit returns every 4 steps.
  const auto sys4 = FinitePermutationSystem::cyclic(4);
  const auto f4 = indicator_observable(4, 0);
  const auto orbit = orbit_sequence(sys4, f4, 0, 4);
  CHECK(orbit.support_min() == -4);
  CHECK(orbit.support_max() == 4);
  for (std::int64_t k = -4; k <= 4; ++k) {
    CHECK(orbit.at(k) == ((k % 4 == 0) ? 1.0 : 0.0));
  }

  // Zero observable gives the empty sequence.
  const auto zero = constant_observable(4, 0.0);
  CHECK(orbit_sequence(sys4, zero, 1, 3).empty());

  // Identity permutation, f = indicator of {x}: constant 1 on |k| <= K.
  const FinitePermutationSystem identity({0, 1, 2});
  const auto spike = indicator_observable(3, 2);
  const auto flat = orbit_sequence(identity, spike, 2, 2);
  for (std::int64_t k = -2; k <= 2; ++k) CHECK(flat.at(k) == 1.0);

  CHECK_THROWS_AS(orbit_sequence(sys4, f4, 7, 2), std::invalid_argument);
  CHECK_THROWS_AS(orbit_sequence(sys4, f4, 0, 0), std::invalid_argument);
}

TEST_CASE("ergodic truncated transform examples") {
  const auto sys = FinitePermutationSystem::cyclic(16);
  const auto f = indicator_observable(16, 0);

  const auto field = ergodic_truncated_hilbert(sys, f, 3);
  for (std::int64_t x = 0; x < 16; ++x) {
    double expected = 0.0;
    if (x >= 1 && x <= 3) expected = -1.0 / static_cast<double>(x);
    if (x >= 13 && x <= 15) expected = 1.0 / static_cast<double>(16 - x);
    CHECK(field.values[static_cast<std::size_t>(x)] == expected);
  }

  // Constant observables are annihilated exactly, for any system.
  SplitMix64 rng(79);
  const auto scrambled = random_permutation_system(24, rng.next());
  for (std::int64_t n : {1, 2, 5, 30}) {
    const auto out = ergodic_truncated_hilbert(scrambled, constant_observable(24, 2.5), n);
    for (double v : out.values) CHECK(v == 0.0);
  }

  // Identity permutation: f(tau^i x) = f(x), same cancellation.
  std::vector<std::int64_t> id(10);
  for (std::int64_t i = 0; i < 10; ++i) id[static_cast<std::size_t>(i)] = i;
  const FinitePermutationSystem identity(id);
  const auto g = random_observable(10, rng.next());
  const auto out = ergodic_truncated_hilbert(identity, g, 4);
  for (double v : out.values) CHECK(v == 0.0);

  CHECK_THROWS_AS(ergodic_truncated_hilbert(sys, f, 0), std::invalid_argument);
  CHECK_THROWS_AS(ergodic_truncated_hilbert(sys, indicator_observable(4, 0), 2),
                  std::invalid_argument);
}

TEST_CASE("adding a constant to the observable changes nothing") {
  SplitMix64 rng(83);
  const auto sys = random_permutation_system(32, rng.next());
  const auto f = random_observable(32, rng.next());
  ObservableField lifted = f;
  for (auto& v : lifted.values) v += 0.8125;  // dyadic, so the shift is exact
  for (std::int64_t n : {1, 3, 9}) {
    const auto base = ergodic_truncated_hilbert(sys, f, n);
    const auto moved = ergodic_truncated_hilbert(sys, lifted, n);
    for (std::size_t x = 0; x < 32; ++x) {
      CHECK(moved.values[x] == doctest::Approx(base.values[x]).epsilon(1e-13));
    }
  }
}

TEST_CASE("ergodic maximal examples") {
  const auto sys = FinitePermutationSystem::cyclic(16);
  const auto f = indicator_observable(16, 0);

  const auto field = ergodic_maximal(sys, f, 7);
  for (std::int64_t x = 1; x < 16; ++x) {
    const double nearest = static_cast<double>(std::min(x, 16 - x));
    const double expected = nearest <= 7 ? 1.0 / nearest : 0.0;
    CHECK(field.values[static_cast<std::size_t>(x)] == expected);
  }
  CHECK(field.values[0] == 0.0);

  // Dominance over each truncation level.
  for (std::int64_t n = 1; n <= 7; ++n) {
    const auto level = ergodic_truncated_hilbert(sys, f, n);
    for (std::size_t x = 0; x < 16; ++x) {
      CHECK(field.values[x] >= std::abs(level.values[x]));
    }
  }

  const auto flat = ergodic_maximal(sys, constant_observable(16, 3.0), 5);
  for (double v : flat.values) CHECK(v == 0.0);
}

TEST_CASE("ergodic level measure") {
  const auto sys = FinitePermutationSystem::cyclic(16);
  const auto f = indicator_observable(16, 0);
  const auto field = ergodic_truncated_hilbert(sys, f, 3);

  CHECK(ergodic_level_measure(field, 0.4) == 0.25);  // points {1, 2, 14, 15}

  CHECK(ergodic_level_measure(ObservableField{std::vector<double>(8, 0.0)}, 1.0) == 0.0);

  // Joint scaling invariance.
  ObservableField scaled = field;
  for (auto& v : scaled.values) v *= 3.0;
  CHECK(ergodic_level_measure(scaled, 3.0 * 0.4) == ergodic_level_measure(field, 0.4));

  CHECK_THROWS_AS(ergodic_level_measure(field, 0.0), std::invalid_argument);
}

TEST_CASE("ergodic complete sum examples") {
  const auto sys = FinitePermutationSystem::cyclic(16);
  const auto f = indicator_observable(16, 0);

  const auto report = ergodic_complete_sum(sys, f, 0.6, 5);
  REQUIRE(report.per_n_measures.size() == 5);
  for (double m : report.per_n_measures) CHECK(m == 2.0 / 16.0);
  CHECK(report.total == doctest::Approx(10.0 / 16.0));
  CHECK(report.stabilized_at == 1);
  CHECK(report.linear_growth);
  CHECK(report.bound_value == doctest::Approx((1.0 / 16.0) / 0.6));

  // High threshold: multi-hit sums at larger n stay below 2.
  const auto quiet = ergodic_complete_sum(sys, f, 2.0, 20);
  CHECK(quiet.total == 0.0);
  CHECK_FALSE(quiet.linear_growth);

  const auto flat = ergodic_complete_sum(sys, constant_observable(16, 1.0), 0.3, 10);
  CHECK(flat.total == 0.0);
}

TEST_CASE("transference holds on rotations, identities, and random systems") {
  const auto sys = FinitePermutationSystem::cyclic(16);
  const auto f = indicator_observable(16, 0);
  CHECK(transference_check(sys, f, 0.4, 3, IntegerWindow(-5, 5)).pass);

  std::vector<std::int64_t> id(12);
  for (std::int64_t i = 0; i < 12; ++i) id[static_cast<std::size_t>(i)] = i;
  const FinitePermutationSystem identity(id);
  CHECK(transference_check(identity, random_observable(12, 5), 0.2, 3, IntegerWindow(-4, 4)).pass);

  SplitMix64 rng(89);
  for (int trial = 0; trial < 10; ++trial) {
    const auto scrambled = random_permutation_system(64, rng.next());
    const auto g = random_observable(64, rng.next());
    const auto verdict = transference_check(scrambled, g, 0.3, 4, IntegerWindow(-8, 8));
    CHECK(verdict.pass);
  }
}

TEST_CASE("orbit samples bridge to the integer-lattice transform") {
  SplitMix64 rng(97);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = random_permutation_system(48, rng.next());
    const auto f = random_observable(48, rng.next());
    const auto x = rng.uniform_int(0, 47);
    const std::int64_t K = 12;
    const auto orbit = orbit_sequence(sys, f, x, K);
    for (std::int64_t n = 1; n <= K; ++n) {
      const auto lattice = truncated_hilbert(orbit, n, IntegerWindow(0, 0));
      const auto ergodic = ergodic_truncated_hilbert(sys, f, n);
      CHECK(lattice.at(0) == ergodic.values[static_cast<std::size_t>(x)]);
    }
  }
}
