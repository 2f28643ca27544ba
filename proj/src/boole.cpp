#include "hilbertlab/boole.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace hilbertlab {

namespace {

// Roots are located in the gap variable u = s - t_i rather than in s itself:
// the i-th term is a_i/u exactly and every other denominator is formed as
// (t_i - t_j) + u, so u is resolved to its own ulp instead of ulp(t_i + u).
// Interval lengths m_i - t_i then carry no cancellation error.
struct GapProblem {
  std::vector<double> shifted_poles;  // t_i - t_j for all j
  const std::vector<double>* weights;

  double eval(double u) const {
    double sum = 0.0;
    for (std::size_t j = 0; j < shifted_poles.size(); ++j) {
      sum += (*weights)[j] / (shifted_poles[j] + u);
    }
    return sum;
  }
};

// Bisection for phi(u) = lambda with phi strictly decreasing on (0, hi],
// phi(0+) = +inf and phi(hi) <= lambda. Runs to adjacent doubles.
double bisect_gap(const GapProblem& phi, double hi_in, double lambda) {
  double lo = 0.0;
  double hi = hi_in;
  for (int iteration = 0; iteration < 200; ++iteration) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (phi.eval(mid) > lambda ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Length of each interval (t_i, m_i) where g > lambda; sums to the measure.
std::vector<double> solve_gaps(const RationalPoleSum& rs, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("level set: lambda must be > 0");
  const auto& poles = rs.poles();
  const auto& weights = rs.weights();
  const std::size_t n = rs.size();
  const double total_weight = rs.weight_sum();

  std::vector<double> gaps(n);
  GapProblem phi;
  phi.weights = &weights;
  phi.shifted_poles.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) phi.shifted_poles[j] = poles[i] - poles[j];
    const double hi = (i + 1 < n) ? poles[i + 1] - poles[i] : total_weight / lambda;
    if (!(hi > 0.0)) throw std::logic_error("level set: degenerate bracket");
    gaps[i] = bisect_gap(phi, hi, lambda);
  }
  return gaps;
}

}  // namespace

RationalPoleSum::RationalPoleSum(std::vector<double> poles, std::vector<double> weights) {
  if (poles.empty()) throw std::invalid_argument("RationalPoleSum: needs at least one pole");
  if (poles.size() != weights.size()) {
    throw std::invalid_argument("RationalPoleSum: poles and weights differ in length");
  }
  std::vector<std::size_t> order(poles.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return poles[a] < poles[b]; });
  for (std::size_t idx : order) {
    const double t = poles[idx];
    const double a = weights[idx];
    if (!std::isfinite(t) || !std::isfinite(a)) {
      throw std::invalid_argument("RationalPoleSum: poles and weights must be finite");
    }
    if (!(a > 0.0)) throw std::invalid_argument("RationalPoleSum: weights must be > 0");
    if (!poles_.empty() && poles_.back() == t) {
      weights_.back() += a;  // merge coincident poles
    } else {
      poles_.push_back(t);
      weights_.push_back(a);
    }
  }
}

double RationalPoleSum::weight_sum() const {
  double sum = 0.0;
  for (double a : weights_) sum += a;
  return sum;
}

double eval_g(const RationalPoleSum& rs, double s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < rs.size(); ++i) {
    const double d = s - rs.poles()[i];
    if (d == 0.0) throw std::invalid_argument("eval_g: s coincides with a pole");
    sum += rs.weights()[i] / d;
  }
  return sum;
}

LevelRoots level_roots(const RationalPoleSum& rs, double lambda) {
  const std::vector<double> gaps = solve_gaps(rs, lambda);
  LevelRoots result{lambda, {}};
  result.roots.resize(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) result.roots[i] = rs.poles()[i] + gaps[i];
  return result;
}

double level_set_measure(const RationalPoleSum& rs, double lambda, LevelSide side) {
  if (side == LevelSide::below) {
    // {g < -lambda} maps to {g~ > lambda} under s -> -s with reflected poles.
    std::vector<double> mirrored_poles(rs.size());
    std::vector<double> mirrored_weights(rs.size());
    for (std::size_t i = 0; i < rs.size(); ++i) {
      mirrored_poles[i] = -rs.poles()[rs.size() - 1 - i];
      mirrored_weights[i] = rs.weights()[rs.size() - 1 - i];
    }
    return level_set_measure(RationalPoleSum(std::move(mirrored_poles), std::move(mirrored_weights)),
                             lambda, LevelSide::above);
  }
  const std::vector<double> gaps = solve_gaps(rs, lambda);
  double measure = 0.0;
  for (double u : gaps) measure += u;
  return measure;
}

double vieta_check(const RationalPoleSum& rs, double lambda) {
  const LevelRoots roots = level_roots(rs, lambda);
  double root_sum = 0.0;
  for (double m : roots.roots) root_sum += m;
  double pole_sum = 0.0;
  for (double t : rs.poles()) pole_sum += t;
  return std::abs(root_sum - pole_sum - rs.weight_sum() / lambda);
}

}  // namespace hilbertlab
