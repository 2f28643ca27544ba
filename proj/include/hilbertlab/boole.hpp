#pragma once

#include <cstddef>
#include <vector>

namespace hilbertlab {

/// g(s) = sum of a_i / (s - t_i) with strictly positive weights a_i at
/// strictly increasing real poles t_i. Coincident poles are merged at
/// construction by summing their weights. g jumps from -inf to +inf across
/// each pole and is strictly decreasing between poles, so for every
/// lambda > 0 the equation g = lambda has exactly one root per pole.
class RationalPoleSum {
 public:
  /// Throws std::invalid_argument on empty input, mismatched lengths,
  /// non-finite values, or a nonpositive weight.
  RationalPoleSum(std::vector<double> poles, std::vector<double> weights);

  const std::vector<double>& poles() const { return poles_; }
  const std::vector<double>& weights() const { return weights_; }
  std::size_t size() const { return poles_.size(); }

  /// Sum of the weights; (1/lambda) times this is the exact level-set measure.
  double weight_sum() const;

 private:
  std::vector<double> poles_;
  std::vector<double> weights_;
};

/// The n solutions of g = lambda, sorted ascending, one per interval
/// (t_i, t_{i+1}) plus one beyond the last pole.
struct LevelRoots {
  double lambda = 0.0;
  std::vector<double> roots;
};

enum class LevelSide { above, below };

/// Evaluates g at s. Rejects s equal to any pole.
double eval_g(const RationalPoleSum& rs, double s);

/// Roots of g = lambda found by bisection on each inter-pole bracket; the
/// unbounded last interval is bracketed by (t_n, t_n + sum(a)/lambda], valid
/// because g(s) <= sum(a)/(s - t_n) there. Each root interlaces its poles.
/// Rejects lambda <= 0.
LevelRoots level_roots(const RationalPoleSum& rs, double lambda);

/// Lebesgue measure of {s : g(s) > lambda} (side above) or {s : g(s) < -lambda}
/// (side below). Both equal (1/lambda)*sum(a) exactly; the returned value is
/// the root-finding computation, so the identity acts as the test oracle.
/// The above side sums the interval lengths m_i - t_i; the below side is the
/// mirrored computation on the reflected pole configuration.
double level_set_measure(const RationalPoleSum& rs, double lambda, LevelSide side);

/// Residual |sum(m_i) - sum(t_i) - (1/lambda)*sum(a_i)| of the root-sum
/// identity, an algebraic cross-check of the roots independent of the
/// interval-length route.
double vieta_check(const RationalPoleSum& rs, double lambda);

}  // namespace hilbertlab
