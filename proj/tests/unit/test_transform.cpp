#include "hilbertlab/transform.hpp"

#include <cmath>

#include "doctest.h"
#include "hilbertlab/generators.hpp"

using namespace hilbertlab;

namespace {

// Reference truncated transform, written as the naive double loop over the
// raw definition. Kept independent of the paired summation in the library.
double naive_truncated(const BilateralSequence& a, std::int64_t k, std::int64_t n) {
  double sum = 0.0;
  for (std::int64_t i = -n; i <= n; ++i) {
    if (i == 0) continue;
    sum += a.at(k + i) / static_cast<double>(i);
  }
  return sum;
}

}  // namespace

TEST_CASE("truncated transform examples") {
  const auto delta = BilateralSequence::delta(0);
  const auto field = truncated_hilbert(delta, 3, IntegerWindow(-5, 5));
  CHECK(field.at(2) == -0.5);  // only i = -2 hits the support
  CHECK(field.at(0) == 0.0);
  CHECK(field.at(5) == 0.0);  // outside reach of n = 3

  const auto pair = symmetric_pair(1);  // a[-1] = a[1] = 1
  for (std::int64_t n = 1; n <= 4; ++n) {
    CHECK(truncated_hilbert(pair, n, IntegerWindow(0, 0)).at(0) == 0.0);
  }

  const auto empty_field = truncated_hilbert(BilateralSequence(), 4, IntegerWindow(-2, 2));
  for (std::int64_t k = -2; k <= 2; ++k) CHECK(empty_field.at(k) == 0.0);

  CHECK_THROWS_AS(truncated_hilbert(delta, 0, IntegerWindow(0, 0)), std::invalid_argument);
}

TEST_CASE("truncated transform matches the naive definition") {
  SplitMix64 rng(101);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 30));
    const auto n = rng.uniform_int(1, 40);
    const IntegerWindow window(-20, 20);
    const auto field = truncated_hilbert(a, n, window);
    for (std::int64_t k = window.lo; k <= window.hi; ++k) {
      CHECK(field.at(k) == doctest::Approx(naive_truncated(a, k, n)).epsilon(1e-13));
    }
  }
}

TEST_CASE("full transform examples") {
  const auto delta = BilateralSequence::delta(0);
  const auto field = full_hilbert(delta, IntegerWindow(-100, 100));
  CHECK(field.at(0) == 0.0);
  for (std::int64_t k = -100; k <= 100; ++k) {
    if (k != 0) CHECK(field.at(k) == -1.0 / static_cast<double>(k));
  }

  // Linearity over a = delta at 0, b = delta at 1: full(2a+b) = 2 full(a) + full(b).
  const BilateralSequence combined(0, {2.0, 1.0});
  const auto fa = full_hilbert(BilateralSequence::delta(0), IntegerWindow(-10, 10));
  const auto fb = full_hilbert(BilateralSequence::delta(1), IntegerWindow(-10, 10));
  const auto fc = full_hilbert(combined, IntegerWindow(-10, 10));
  for (std::int64_t k = -10; k <= 10; ++k) {
    CHECK(fc.at(k) == doctest::Approx(2.0 * fa.at(k) + fb.at(k)).epsilon(1e-14));
  }

  CHECK(full_hilbert(symmetric_pair(1), IntegerWindow(0, 0)).at(0) == 0.0);
}

TEST_CASE("full transform equals stabilized truncation") {
  SplitMix64 rng(211);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 25));
    const IntegerWindow window(-15, 15);
    const auto full = full_hilbert(a, window);
    for (std::int64_t k = window.lo; k <= window.hi; ++k) {
      const std::int64_t reach =
          std::max(std::abs(a.support_min() - k), std::abs(a.support_max() - k));
      for (std::int64_t n : {reach, reach + 1, reach + 7}) {
        if (n < 1) continue;
        const auto truncated = truncated_hilbert(a, n, IntegerWindow(k, k));
        CHECK(std::abs(truncated.at(k) - full.at(k)) <= 1e-12);
      }
    }
  }
}

TEST_CASE("translation equivariance is exact") {
  SplitMix64 rng(307);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 25));
    const auto t = rng.uniform_int(-30, 30);
    const auto n = rng.uniform_int(1, 25);
    const auto base = truncated_hilbert(a, n, IntegerWindow(-40, 40));
    const auto moved = truncated_hilbert(a.translated(t), n, IntegerWindow(-40 - t, 40 - t));
    for (std::int64_t k = -40; k <= 40; ++k) {
      CHECK(moved.at(k - t) == base.at(k));  // same summands, same order
    }
  }
}

TEST_CASE("maximal transform examples") {
  const auto delta = BilateralSequence::delta(0);
  const auto field = maximal_hilbert(delta, IntegerWindow(-50, 50));
  CHECK(field.at(0) == 0.0);
  for (std::int64_t k = -50; k <= 50; ++k) {
    if (k != 0) CHECK(field.at(k) == 1.0 / std::abs(static_cast<double>(k)));
  }

  // Pointwise dominance over |full| for a = {a0 = 1, a3 = -2}.
  const BilateralSequence a(0, {1.0, 0.0, 0.0, -2.0});
  const IntegerWindow window(-20, 20);
  const auto maximal = maximal_hilbert(a, window);
  const auto full = full_hilbert(a, window);
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    CHECK(maximal.at(k) >= std::abs(full.at(k)));
    CHECK(maximal.at(k) >= 0.0);
  }

  const auto empty_field = maximal_hilbert(BilateralSequence(), IntegerWindow(-3, 3));
  for (std::int64_t k = -3; k <= 3; ++k) CHECK(empty_field.at(k) == 0.0);
}

TEST_CASE("maximal transform horizon restriction") {
  const auto delta = BilateralSequence::delta(0);
  // With horizon 2 the term at distance |k| = 3 is never reached.
  const auto limited = maximal_hilbert(delta, IntegerWindow(-5, 5), 2);
  CHECK(limited.at(3) == 0.0);
  CHECK(limited.at(2) == 0.5);
  CHECK(limited.at(1) == 1.0);
  CHECK_THROWS_AS(maximal_hilbert(delta, IntegerWindow(0, 0), 0), std::invalid_argument);
}

TEST_CASE("antisymmetric kernel annihilates symmetric data exactly") {
  SplitMix64 rng(401);
  for (int trial = 0; trial < 20; ++trial) {
    // Build a sequence symmetric about s from random half-data.
    const std::int64_t s = rng.uniform_int(-10, 10);
    const std::int64_t half = rng.uniform_int(1, 12);
    std::vector<double> values(static_cast<std::size_t>(2 * half + 1));
    for (std::int64_t m = 0; m <= half; ++m) {
      const double v = rng.uniform(-1.0, 1.0);
      values[static_cast<std::size_t>(half + m)] = v;
      values[static_cast<std::size_t>(half - m)] = v;
    }
    const BilateralSequence a(s - half, values);
    for (std::int64_t n : {1, 3, static_cast<int>(half), static_cast<int>(half) + 5}) {
      if (n < 1) continue;
      CHECK(truncated_hilbert(a, n, IntegerWindow(s, s)).at(s) == 0.0);
    }
  }
}

TEST_CASE("sufficient window examples") {
  const auto delta = BilateralSequence::delta(0);
  CHECK(sufficient_window(delta, 0.5) == IntegerWindow(-2, 2));
  CHECK(sufficient_window(delta, 2.0) == IntegerWindow(-1, 1));

  // No exceedance just outside: max value at |k| = 2 is 1/2 < 2.
  const auto outside = maximal_hilbert(delta, IntegerWindow(2, 2));
  CHECK(outside.at(2) <= 2.0);

  // Boundary spot check for a = {a0 = 3}, lambda = 1: window is [-3, 3] and
  // the maximal value one past the edge is 3/4 <= 1.
  const auto heavy = BilateralSequence::delta(0, 3.0);
  CHECK(sufficient_window(heavy, 1.0) == IntegerWindow(-3, 3));
  CHECK(maximal_hilbert(heavy, IntegerWindow(4, 4)).at(4) == doctest::Approx(0.75));

  CHECK_THROWS_AS(sufficient_window(BilateralSequence(), 1.0), std::invalid_argument);
  CHECK_THROWS_AS(sufficient_window(delta, 0.0), std::invalid_argument);
}

TEST_CASE("sufficient window is sound on a collar outside") {
  SplitMix64 rng(503);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 30));
    const double lambda = rng.uniform(0.05, 2.0);
    const auto window = sufficient_window(a, lambda);
    const auto collar = 2 * window.width();
    const auto left = maximal_hilbert(a, IntegerWindow(window.lo - collar, window.lo - 1));
    const auto right = maximal_hilbert(a, IntegerWindow(window.hi + 1, window.hi + collar));
    for (double v : left.values) CHECK(v <= lambda);
    for (double v : right.values) CHECK(v <= lambda);
  }
}

TEST_CASE("weak type report examples") {
  const auto delta = BilateralSequence::delta(0);

  const auto full_reports = weak_type_report(delta, {0.5}, TransformKind::full);
  REQUIRE(full_reports.size() == 1);
  CHECK(full_reports[0].count == 2);  // |-1/k| > 0.5 iff k = +-1
  CHECK(full_reports[0].ratio == doctest::Approx(1.0));

  const auto max_reports = weak_type_report(delta, {0.4}, TransformKind::maximal);
  REQUIRE(max_reports.size() == 1);
  CHECK(max_reports[0].count == 4);  // 1/|k| > 0.4 iff |k| <= 2
  CHECK(max_reports[0].ratio == doctest::Approx(1.6));

  CHECK_THROWS_AS(weak_type_report(delta, {0.5}, TransformKind::truncated),
                  std::invalid_argument);
  CHECK_THROWS_AS(weak_type_report(delta, {-0.5}, TransformKind::full), std::invalid_argument);

  const auto empty_reports = weak_type_report(BilateralSequence(), {0.5, 1.0},
                                              TransformKind::maximal);
  for (const auto& r : empty_reports) {
    CHECK(r.count == 0);
    CHECK(r.ratio == 0.0);
  }
}

TEST_CASE("weak type ratio for the delta stays below 2 on a log grid") {
  const auto delta = BilateralSequence::delta(0);
  std::vector<double> lambdas;
  for (int j = 0; j < 100; ++j) lambdas.push_back(std::pow(10.0, -3.0 + 3.0 * j / 99.0));
  const auto reports = weak_type_report(delta, lambdas, TransformKind::full);
  for (const auto& r : reports) {
    // Enumeration oracle: count k >= 1 with 1/k > lambda, doubled.
    std::int64_t half = 0;
    for (std::int64_t k = 1; 1.0 / static_cast<double>(k) > r.lambda; ++k) ++half;
    CHECK(r.count == 2 * half);
    CHECK(r.ratio < 2.0 + 1e-9);
  }
}

TEST_CASE("level set counts are invariant under joint scaling") {
  SplitMix64 rng(607);
  for (double c : {2.0, 0.5, 3.0, 0.77}) {
    for (int trial = 0; trial < 10; ++trial) {
      const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 30));
      const double lambda = rng.uniform(0.05, 1.5);
      for (auto kind : {TransformKind::full, TransformKind::maximal}) {
        const auto base = weak_type_report(a, {lambda}, kind);
        const auto scaled = weak_type_report(a.scaled(c), {c * lambda}, kind);
        CHECK(base[0].count == scaled[0].count);
      }
    }
  }
}

TEST_CASE("transform field lookups and labels") {
  const auto field = truncated_hilbert(BilateralSequence::delta(0), 3, IntegerWindow(-2, 2));
  CHECK(field.kind_label() == "truncated_n3");
  CHECK_THROWS_AS(field.at(3), std::out_of_range);
  CHECK(full_hilbert(BilateralSequence::delta(0), IntegerWindow(0, 0)).kind_label() == "full");
  CHECK(maximal_hilbert(BilateralSequence::delta(0), IntegerWindow(0, 0)).kind_label() ==
        "maximal");
}
