#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <vector>

#include "hilbertlab/sequence.hpp"
#include "hilbertlab/transform.hpp"

namespace hilbertlab {

/// Integer translates t_1..t_N; t_n shifts the centered block {-n,...,n}.
struct TranslatedBlockSpec {
  std::vector<std::int64_t> translates;

  std::int64_t horizon() const { return static_cast<std::int64_t>(translates.size()); }
  static TranslatedBlockSpec zeros(std::int64_t n_blocks);
  static TranslatedBlockSpec linear(std::int64_t n_blocks, std::int64_t step);
};

/// Truncated partial sums S_N = sum over n <= N of the exceedance counts
/// #A_n at one threshold. stabilized_at is the first n0 from which the
/// exceedance set was observed constant up to the horizon (a one-point tail
/// only counts when N = 1); when the stabilized count is positive the sum
/// grows linearly in N and linear_growth says so.
struct CompleteConvergenceReport {
  double lambda = 0.0;
  std::vector<std::int64_t> per_n_counts;  ///< per_n_counts[n-1] = #A_n
  std::int64_t partial_sum = 0;
  std::optional<std::int64_t> stabilized_at;
  bool linear_growth = false;
  double bound_value = 0.0;  ///< l1(a)/lambda, the right side without its constant
};

struct HypothesisTestResult {
  std::int64_t lhs_count = 0;  ///< exceedances of the translated-block maximal
  std::int64_t rhs_count = 0;  ///< exceedances of the centered-block maximal, same horizon
  double ratio = 0.0;          ///< lhs/rhs; +inf when rhs = 0 < lhs; 0 when both are 0
  bool unbounded = false;      ///< flags the rhs = 0 < lhs case
};

/// {s - t : s in set}.
std::set<std::int64_t> shifted(const std::set<std::int64_t>& set, std::int64_t t);

/// A_n = {k : |truncated(n) at k| > lambda}, computed over
/// sufficient_window(a, lambda), which contains every exceedance of the
/// maximal transform and hence of each A_n. Empty for the empty sequence.
std::set<std::int64_t> exceedance_set(const BilateralSequence& a, std::int64_t n, double lambda);

/// Counts #A_n for n = 1..N and their running sum, with stabilization and
/// growth diagnostics. Divergence is reported, never asserted away.
CompleteConvergenceReport partial_sum_S(const BilateralSequence& a, double lambda, std::int64_t N);

/// Deterministic translates making the sets A_n - t_n pairwise disjoint:
/// t_1 = 0 and each later nonempty set is placed immediately to the right of
/// everything placed before it (empty sets get t_n = 0; the first nonempty
/// set stays where it is). The disjointness postcondition is verified by
/// direct pairwise intersection before returning.
TranslatedBlockSpec greedy_disjoint_translates(const BilateralSequence& a, double lambda,
                                               std::int64_t N);

/// field(k) = max over n <= N of |sum of a[k+i]/i over i in B_n - t_n, i != 0|
/// where B_n - t_n = [-n-t_n, n-t_n]. Only the zero-denominator term is
/// omitted; the shifted block may or may not contain 0. Rejects an empty spec.
TransformField translated_block_maximal(const BilateralSequence& a, const TranslatedBlockSpec& spec,
                                        IntegerWindow window);

/// Level-set comparison at one lambda between the translated-block maximal
/// (lhs, counted over sufficient_window widened by max|t_n|) and the
/// centered-block maximal at the same horizon (rhs).
HypothesisTestResult hypothesis_test(const BilateralSequence& a, double lambda,
                                     const TranslatedBlockSpec& spec);

}  // namespace hilbertlab
