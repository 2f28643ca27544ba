#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hilbertlab/sequence.hpp"

namespace hilbertlab {

/// Finite measure-preserving system: M points carrying uniform measure 1/M
/// and an invertible map given as a permutation of {0,...,M-1}. Bijectivity
/// is verified at construction and the inverse is stored, so orbits walk in
/// O(1) per step in either direction.
class FinitePermutationSystem {
 public:
  explicit FinitePermutationSystem(std::vector<std::int64_t> map);

  /// Rotation x -> x+1 mod M.
  static FinitePermutationSystem cyclic(std::int64_t size);

  std::int64_t size() const { return static_cast<std::int64_t>(map_.size()); }
  std::int64_t forward(std::int64_t x) const { return map_[check_point(x)]; }
  std::int64_t backward(std::int64_t x) const { return inverse_[check_point(x)]; }

  /// tau^power(x); negative powers walk the stored inverse.
  std::int64_t iterate(std::int64_t x, std::int64_t power) const;

  const std::vector<std::int64_t>& map() const { return map_; }
  const std::vector<std::int64_t>& inverse() const { return inverse_; }

 private:
  std::size_t check_point(std::int64_t x) const {
    if (x < 0 || x >= size()) throw std::invalid_argument("point outside the system");
    return static_cast<std::size_t>(x);
  }

  std::vector<std::int64_t> map_;
  std::vector<std::int64_t> inverse_;
};

/// One real value per point of a finite system.
struct ObservableField {
  std::vector<double> values;

  /// (1/M) * sum |values|.
  double l1_norm() const;
};

/// Per-level breakdown of sum over n <= N of mu{ |truncated(n)| > lambda }.
/// Semantics of stabilized_at and linear_growth match the integer-lattice
/// report: stabilization of the exceedance set of points, linear growth when
/// the stabilized measure is positive.
struct ErgodicCompleteSumReport {
  double lambda = 0.0;
  std::vector<double> per_n_measures;
  double total = 0.0;
  std::optional<std::int64_t> stabilized_at;
  bool linear_growth = false;
  double bound_value = 0.0;  ///< l1(f)/lambda
};

/// Outcome of the orbit-translation checks; on failure (j, x) is a
/// counterexample point.
struct TransferenceVerdict {
  bool pass = true;
  std::int64_t j = 0;
  std::int64_t x = 0;
};

/// Samples f along the orbit of x: a_k = f(tau^k x) for |k| <= K, zero
/// outside. The bridge from the ergodic setting to the integer lattice.
BilateralSequence orbit_sequence(const FinitePermutationSystem& sys, const ObservableField& f,
                                 std::int64_t x, std::int64_t K);

/// out(x) = sum over 1 <= |i| <= n of f(tau^i x)/i, paired (+i, -i) in
/// ascending |i| exactly as the integer-lattice transform, so constant
/// observables are annihilated exactly.
ObservableField ergodic_truncated_hilbert(const FinitePermutationSystem& sys,
                                          const ObservableField& f, std::int64_t n);

/// Pointwise max over n <= N of |ergodic_truncated_hilbert(n)|.
ObservableField ergodic_maximal(const FinitePermutationSystem& sys, const ObservableField& f,
                                std::int64_t N);

/// mu{ x : |field(x)| > lambda } = (strict exceedance count)/M.
double ergodic_level_measure(const ObservableField& field, double lambda);

/// Sum over n <= N of the level measures of the truncated transforms.
ErgodicCompleteSumReport ergodic_complete_sum(const FinitePermutationSystem& sys,
                                              const ObservableField& f, double lambda,
                                              std::int64_t N);

/// Verifies, for every j in j_range, that the level set of
/// G_j(x) = |sum' f(tau^{i+j} x)/i| is exactly tau^{-j} of the level set of
/// G_0 and in particular has the same measure. G_j is evaluated directly
/// along shifted orbits while tau^{-j}E walks the stored inverse, so the two
/// routes are independent.
TransferenceVerdict transference_check(const FinitePermutationSystem& sys,
                                       const ObservableField& f, double lambda, std::int64_t n,
                                       IntegerWindow j_range);

}  // namespace hilbertlab
