#include "hilbertlab/sequence.hpp"

#include <cmath>
#include <limits>

#include "doctest.h"
#include "hilbertlab/generators.hpp"

using namespace hilbertlab;

TEST_CASE("l1 norm") {
  CHECK(BilateralSequence::delta(0).l1_norm() == 1.0);

  // a[1] = 2, a[-3] = -1
  const BilateralSequence a(-3, {-1.0, 0.0, 0.0, 0.0, 2.0});
  CHECK(a.l1_norm() == 3.0);

  CHECK(BilateralSequence().l1_norm() == 0.0);
}

TEST_CASE("construction canonicalizes") {
  const BilateralSequence a(-2, {0.0, 0.0, 1.0, 0.5, 0.0});
  CHECK(a.support_min() == 0);
  CHECK(a.support_max() == 1);
  CHECK(a.at(0) == 1.0);
  CHECK(a.at(1) == 0.5);
  CHECK(a.at(-1) == 0.0);
  CHECK(a.at(2) == 0.0);

  CHECK(BilateralSequence(5, {0.0, 0.0}).empty());
  CHECK_THROWS_AS(BilateralSequence(0, {std::numeric_limits<double>::quiet_NaN()}),
                  std::invalid_argument);

  // Idempotence: rebuilding from the canonical data changes nothing.
  const BilateralSequence again(a.support_min(), a.values());
  CHECK(again == a);
}

TEST_CASE("translate") {
  const auto delta = BilateralSequence::delta(0);
  const auto moved = delta.translated(2);
  CHECK(moved == BilateralSequence::delta(-2));
  CHECK(moved.at(-2) == 1.0);

  const BilateralSequence a(0, {1.0, 0.0, 0.0, 0.0, 0.0, -2.0});  // a0=1, a5=-2
  CHECK(a.translated(0) == a);
  CHECK(a.translated(7).l1_norm() == 3.0);

  // Composition: translating by s then t equals translating by s + t.
  SplitMix64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto b = random_l1_sequence(rng.next(), rng.uniform_int(1, 40));
    const auto s = rng.uniform_int(-50, 50);
    const auto t = rng.uniform_int(-50, 50);
    CHECK(b.translated(s).translated(t) == b.translated(s + t));
  }
}

TEST_CASE("scaling the sequence scales the norm") {
  SplitMix64 rng(23);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 40));
    const double c = rng.uniform(-3.0, 3.0);
    CHECK(a.scaled(c).l1_norm() == doctest::Approx(std::abs(c) * a.l1_norm()).epsilon(1e-14));
  }
  CHECK(BilateralSequence::delta(0).scaled(0.0).empty());
}

TEST_CASE("count_exceedances") {
  CHECK(count_exceedances({-1.0, 0.5}, 0.5) == 1);  // strict: 0.5 itself excluded
  CHECK(count_exceedances({-1.0, 0.5}, 2.0) == 0);

  // k -> -1/k on 1..4 at lambda = 0.3: 1, 1/2, 1/3 exceed, 1/4 does not.
  std::vector<double> values;
  for (int k = 1; k <= 4; ++k) values.push_back(-1.0 / k);
  CHECK(count_exceedances(values, 0.3) == 3);

  CHECK_THROWS_AS(count_exceedances(values, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(count_exceedances(values, -1.0), std::invalid_argument);
}

TEST_CASE("count_exceedances is nonincreasing in lambda") {
  SplitMix64 rng(37);
  std::vector<double> values(200);
  for (auto& v : values) v = rng.uniform(-2.0, 2.0);
  std::int64_t previous = std::numeric_limits<std::int64_t>::max();
  for (double lambda = 0.05; lambda < 2.5; lambda += 0.05) {
    const auto count = count_exceedances(values, lambda);
    CHECK(count <= previous);
    previous = count;
  }
}

TEST_CASE("integer window") {
  const IntegerWindow w(-3, 4);
  CHECK(w.width() == 8);
  CHECK(w.contains(-3));
  CHECK(w.contains(4));
  CHECK_FALSE(w.contains(5));
  CHECK_THROWS_AS(IntegerWindow(2, 1), std::invalid_argument);
}
