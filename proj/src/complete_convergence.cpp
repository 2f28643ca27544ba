#include "hilbertlab/complete_convergence.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <iterator>
#include <limits>

namespace hilbertlab {

namespace {

// Exceedance sets A_1..A_N in one incremental sweep: per point the truncated
// sums share their prefix, so step n only adds the terms at distance n.
std::vector<std::set<std::int64_t>> exceedance_series(const BilateralSequence& a, double lambda,
                                                      std::int64_t N) {
  if (!(lambda > 0.0)) throw std::invalid_argument("exceedance sets: lambda must be > 0");
  if (N < 1) throw std::invalid_argument("exceedance sets: horizon must be >= 1");
  std::vector<std::set<std::int64_t>> sets(static_cast<std::size_t>(N));
  if (a.empty()) return sets;
  const IntegerWindow window = sufficient_window(a, lambda);
  std::vector<double> acc(static_cast<std::size_t>(window.width()), 0.0);
  for (std::int64_t n = 1; n <= N; ++n) {
    auto& set_n = sets[static_cast<std::size_t>(n - 1)];
    for (std::int64_t k = window.lo; k <= window.hi; ++k) {
      auto& sum = acc[static_cast<std::size_t>(k - window.lo)];
      sum += (a.at(k + n) - a.at(k - n)) / static_cast<double>(n);
      if (std::abs(sum) > lambda) set_n.insert(k);
    }
  }
  return sets;
}

// sum of a[k+i]/i over i in [lo, hi], i != 0, pairing +i with -i in
// ascending |i| where both are present.
double block_kernel_sum(const BilateralSequence& a, std::int64_t k, std::int64_t lo,
                        std::int64_t hi) {
  if (a.empty() || lo > hi) return 0.0;
  const std::int64_t pos_hi = hi;            // positive part [1, hi]
  const std::int64_t neg_lo = -lo;           // negative part [lo, -1], as |i| in [1, -lo]
  const bool has_pos = pos_hi >= 1;
  const bool has_neg = neg_lo >= 1;
  double acc = 0.0;
  if (has_pos && has_neg) {
    const std::int64_t paired = std::min(pos_hi, neg_lo);
    for (std::int64_t i = 1; i <= paired; ++i) {
      acc += (a.at(k + i) - a.at(k - i)) / static_cast<double>(i);
    }
    for (std::int64_t i = paired + 1; i <= pos_hi; ++i) {
      acc += a.at(k + i) / static_cast<double>(i);
    }
    for (std::int64_t i = paired + 1; i <= neg_lo; ++i) {
      acc -= a.at(k - i) / static_cast<double>(i);
    }
  } else if (has_pos) {
    for (std::int64_t i = std::max<std::int64_t>(lo, 1); i <= pos_hi; ++i) {
      acc += a.at(k + i) / static_cast<double>(i);
    }
  } else if (has_neg) {
    for (std::int64_t i = std::max<std::int64_t>(-hi, 1); i <= neg_lo; ++i) {
      acc -= a.at(k - i) / static_cast<double>(i);
    }
  }
  return acc;
}

// First n0 such that the sets are identical from n0 through N; a run of
// length one is only evidence when the horizon itself is 1.
std::optional<std::int64_t> stabilization_point(const std::vector<std::set<std::int64_t>>& sets) {
  const auto N = static_cast<std::int64_t>(sets.size());
  std::int64_t run_start = 1;
  for (std::int64_t n = 2; n <= N; ++n) {
    if (sets[static_cast<std::size_t>(n - 1)] != sets[static_cast<std::size_t>(n - 2)]) {
      run_start = n;
    }
  }
  if (run_start == N && N > 1) return std::nullopt;
  return run_start;
}

}  // namespace

TranslatedBlockSpec TranslatedBlockSpec::zeros(std::int64_t n_blocks) {
  if (n_blocks < 1) throw std::invalid_argument("TranslatedBlockSpec: needs at least one block");
  return {std::vector<std::int64_t>(static_cast<std::size_t>(n_blocks), 0)};
}

TranslatedBlockSpec TranslatedBlockSpec::linear(std::int64_t n_blocks, std::int64_t step) {
  if (n_blocks < 1) throw std::invalid_argument("TranslatedBlockSpec: needs at least one block");
  TranslatedBlockSpec spec;
  spec.translates.resize(static_cast<std::size_t>(n_blocks));
  for (std::int64_t n = 1; n <= n_blocks; ++n) {
    spec.translates[static_cast<std::size_t>(n - 1)] = step * n;
  }
  return spec;
}

std::set<std::int64_t> shifted(const std::set<std::int64_t>& set, std::int64_t t) {
  std::set<std::int64_t> out;
  for (std::int64_t s : set) out.insert(s - t);
  return out;
}

std::set<std::int64_t> exceedance_set(const BilateralSequence& a, std::int64_t n, double lambda) {
  if (n < 1) throw std::invalid_argument("exceedance_set: n must be >= 1");
  if (!(lambda > 0.0)) throw std::invalid_argument("exceedance_set: lambda must be > 0");
  std::set<std::int64_t> result;
  if (a.empty()) return result;
  const IntegerWindow window = sufficient_window(a, lambda);
  const TransformField field = truncated_hilbert(a, n, window);
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    if (std::abs(field.at(k)) > lambda) result.insert(k);
  }
  return result;
}

CompleteConvergenceReport partial_sum_S(const BilateralSequence& a, double lambda, std::int64_t N) {
  const auto sets = exceedance_series(a, lambda, N);
  CompleteConvergenceReport report;
  report.lambda = lambda;
  report.per_n_counts.reserve(sets.size());
  for (const auto& set_n : sets) {
    report.per_n_counts.push_back(static_cast<std::int64_t>(set_n.size()));
    report.partial_sum += static_cast<std::int64_t>(set_n.size());
  }
  report.stabilized_at = stabilization_point(sets);
  report.linear_growth = report.stabilized_at && !sets.back().empty();
  report.bound_value = lambda > 0.0 ? a.l1_norm() / lambda : 0.0;
  return report;
}

TranslatedBlockSpec greedy_disjoint_translates(const BilateralSequence& a, double lambda,
                                               std::int64_t N) {
  const auto sets = exceedance_series(a, lambda, N);
  TranslatedBlockSpec spec;
  spec.translates.assign(static_cast<std::size_t>(N), 0);
  std::optional<std::int64_t> max_placed;
  std::vector<std::set<std::int64_t>> placed;
  placed.reserve(sets.size());
  for (std::int64_t n = 1; n <= N; ++n) {
    const auto& set_n = sets[static_cast<std::size_t>(n - 1)];
    std::int64_t t = 0;
    if (!set_n.empty()) {
      if (max_placed) t = *set_n.begin() - (*max_placed + 1);
      const auto moved = shifted(set_n, t);
      max_placed = *moved.rbegin();
      placed.push_back(moved);
    }
    spec.translates[static_cast<std::size_t>(n - 1)] = t;
  }
  // Postcondition: the placed sets are pairwise disjoint.
  for (std::size_t i = 0; i < placed.size(); ++i) {
    for (std::size_t j = i + 1; j < placed.size(); ++j) {
      std::vector<std::int64_t> common;
      std::set_intersection(placed[i].begin(), placed[i].end(), placed[j].begin(),
                            placed[j].end(), std::back_inserter(common));
      if (!common.empty()) {
        throw std::logic_error("greedy_disjoint_translates: placement overlap");
      }
    }
  }
  return spec;
}

TransformField translated_block_maximal(const BilateralSequence& a, const TranslatedBlockSpec& spec,
                                        IntegerWindow window) {
  if (spec.translates.empty()) {
    throw std::invalid_argument("translated_block_maximal: spec must be non-empty");
  }
  TransformField field{window, TransformKind::block_maximal, spec.horizon(), {}};
  field.values.assign(static_cast<std::size_t>(window.width()), 0.0);
  if (a.empty()) return field;
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    double best = 0.0;
    for (std::int64_t n = 1; n <= spec.horizon(); ++n) {
      const std::int64_t t = spec.translates[static_cast<std::size_t>(n - 1)];
      best = std::max(best, std::abs(block_kernel_sum(a, k, -n - t, n - t)));
    }
    field.values[static_cast<std::size_t>(k - window.lo)] = best;
  }
  return field;
}

HypothesisTestResult hypothesis_test(const BilateralSequence& a, double lambda,
                                     const TranslatedBlockSpec& spec) {
  if (!(lambda > 0.0)) throw std::invalid_argument("hypothesis_test: lambda must be > 0");
  if (spec.translates.empty()) {
    throw std::invalid_argument("hypothesis_test: spec must be non-empty");
  }
  HypothesisTestResult result;
  if (a.empty()) return result;

  const IntegerWindow base = sufficient_window(a, lambda);
  std::int64_t max_shift = 0;
  for (std::int64_t t : spec.translates) {
    max_shift = std::max(max_shift, static_cast<std::int64_t>(std::llabs(t)));
  }
  const IntegerWindow widened(base.lo - max_shift, base.hi + max_shift);

  result.lhs_count = count_exceedances(translated_block_maximal(a, spec, widened), lambda);
  result.rhs_count =
      count_exceedances(maximal_hilbert(a, base, spec.horizon()), lambda);
  if (result.rhs_count > 0) {
    result.ratio = static_cast<double>(result.lhs_count) / static_cast<double>(result.rhs_count);
  } else if (result.lhs_count > 0) {
    result.ratio = std::numeric_limits<double>::infinity();
    result.unbounded = true;
  }
  return result;
}

}  // namespace hilbertlab
