#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace hilbertlab {

/// Closed integer interval [lo, hi]. Finite search range for transform
/// evaluation and level-set counting.
struct IntegerWindow {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  IntegerWindow() = default;
  IntegerWindow(std::int64_t lo_in, std::int64_t hi_in) : lo(lo_in), hi(hi_in) {
    if (lo > hi) throw std::invalid_argument("IntegerWindow: lo > hi");
  }

  std::int64_t width() const { return hi - lo + 1; }
  bool contains(std::int64_t k) const { return k >= lo && k <= hi; }
  bool operator==(const IntegerWindow&) const = default;
};

/// Level-set summary for one threshold lambda: the number of points whose
/// absolute value strictly exceeds lambda, and the normalized ratio
/// lambda*count/l1_norm that serves as the empirical weak-(1,1) constant.
struct LevelSetReport {
  double lambda = 0.0;
  std::int64_t count = 0;
  double l1_norm = 0.0;
  double ratio = 0.0;  ///< lambda*count/l1_norm, 0 when l1_norm == 0
};

/// Real-valued sequence indexed by the integers with finite support, stored
/// densely over its support span. Canonical form: the first and last stored
/// entries are nonzero, or the sequence is empty. Indices outside the span
/// are implicitly zero. Immutable after construction.
class BilateralSequence {
 public:
  /// The empty (identically zero) sequence.
  BilateralSequence() = default;

  /// Builds the sequence with values[m] at index support_min + m, trimming
  /// zero entries at both ends. All-zero input yields the empty sequence.
  /// Throws std::invalid_argument on non-finite entries.
  BilateralSequence(std::int64_t support_min, std::vector<double> values);

  /// Unit mass at a single index.
  static BilateralSequence delta(std::int64_t at = 0, double weight = 1.0);

  bool empty() const { return values_.empty(); }

  /// First index of the support. Only valid on non-empty sequences.
  std::int64_t support_min() const {
    require_nonempty();
    return support_min_;
  }

  /// Last index of the support.
  std::int64_t support_max() const {
    require_nonempty();
    return support_min_ + static_cast<std::int64_t>(values_.size()) - 1;
  }

  /// Width of the support span (0 for the empty sequence).
  std::int64_t span() const {
    return empty() ? 0 : static_cast<std::int64_t>(values_.size());
  }

  const std::vector<double>& values() const { return values_; }

  /// Coefficient at index j; zero outside the stored span.
  double at(std::int64_t j) const {
    if (empty()) return 0.0;
    const std::int64_t m = j - support_min_;
    if (m < 0 || m >= static_cast<std::int64_t>(values_.size())) return 0.0;
    return values_[static_cast<std::size_t>(m)];
  }

  /// Sum of absolute values over the support; 0 for the empty sequence.
  double l1_norm() const;

  /// Sequence b with b[j] = a[j + t].
  BilateralSequence translated(std::int64_t t) const;

  /// Sequence c*a. Scaling by 0 gives the empty sequence.
  BilateralSequence scaled(double c) const;

  bool operator==(const BilateralSequence&) const = default;

 private:
  void require_nonempty() const {
    if (empty()) throw std::logic_error("BilateralSequence: empty sequence has no support");
  }

  std::int64_t support_min_ = 0;
  std::vector<double> values_;
};

/// Number of entries with |value| > lambda (strict). Rejects lambda <= 0.
std::int64_t count_exceedances(const std::vector<double>& values, double lambda);

}  // namespace hilbertlab
