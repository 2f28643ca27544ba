#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hilbertlab/sequence.hpp"

namespace hilbertlab {

enum class TransformKind { truncated, full, maximal, block_maximal };

/// Values of a transform over an integer window, one entry per index.
///
/// Meaning of the values by kind, for a sequence a and the kernel 1/i with
/// the zero-denominator term always omitted:
///   truncated: sum over 1 <= |i| <= n of a[k+i]/i
///   full:      sum over all i != 0 (finite for finite support)
///   maximal:   max over truncation levels n >= 1 of |truncated(n)| at k
///              (restricted to n <= horizon when one was requested)
///   block_maximal: max over n <= N of the block sum over B_n - t_n
struct TransformField {
  IntegerWindow window;
  TransformKind kind = TransformKind::full;
  std::int64_t n = 0;  ///< truncation index, or horizon for the maximal kinds (0 = unlimited)
  std::vector<double> values;

  double at(std::int64_t k) const {
    if (!window.contains(k)) throw std::out_of_range("TransformField: index outside window");
    return values[static_cast<std::size_t>(k - window.lo)];
  }

  /// Short name used in CSV headers, e.g. "truncated_n3", "full", "maximal".
  std::string kind_label() const;
};

/// Truncated transform: field(k) = sum over 1 <= |i| <= n of a[k+i]/i.
/// Terms are added in pairs (+i, -i) in ascending |i|, so the antisymmetric
/// kernel cancels symmetric data exactly. Rejects n < 1.
TransformField truncated_hilbert(const BilateralSequence& a, std::int64_t n, IntegerWindow window);

/// Full transform: field(k) = sum over j in supp(a), j != k of a[j]/(j-k),
/// evaluated by the same paired summation run out to the support edge.
TransformField full_hilbert(const BilateralSequence& a, IntegerWindow window);

/// Maximal transform: field(k) = max over n of |truncated(n) at k|, computed
/// by one incremental sweep of n per point. The max over all n >= 1 is
/// attained by n <= distance to the farthest support point, so the sweep is
/// finite; pass a horizon to restrict to n <= horizon instead.
TransformField maximal_hilbert(const BilateralSequence& a, IntegerWindow window,
                               std::optional<std::int64_t> horizon = std::nullopt);

/// Window [min(supp)-r, max(supp)+r] with r = ceil(l1/lambda). Outside it the
/// maximal transform is at most l1/dist(k, supp) <= lambda, so no strict
/// exceedance of lambda is possible and level-set counts over the window are
/// exact. Rejects the empty sequence and lambda <= 0.
IntegerWindow sufficient_window(const BilateralSequence& a, double lambda);

/// For each lambda: count of strict exceedances of the full or maximal field
/// over sufficient_window(a, lambda), with ratio lambda*count/l1. The empty
/// sequence yields zero counts and ratios.
std::vector<LevelSetReport> weak_type_report(const BilateralSequence& a,
                                             const std::vector<double>& lambdas,
                                             TransformKind kind);

std::int64_t count_exceedances(const TransformField& field, double lambda);

}  // namespace hilbertlab
