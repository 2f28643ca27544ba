#include "hilbertlab/ergodic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace hilbertlab {

namespace {

void check_observable(const FinitePermutationSystem& sys, const ObservableField& f) {
  if (static_cast<std::int64_t>(f.values.size()) != sys.size()) {
    throw std::invalid_argument("observable size does not match the system");
  }
}

// G_j(x) = |sum over 1 <= |i| <= n of f(tau^{i+j} x)/i|, evaluated by walking
// the orbit outward from tau^j x.
double shifted_truncated_abs(const FinitePermutationSystem& sys, const ObservableField& f,
                             std::int64_t x, std::int64_t j, std::int64_t n) {
  const std::int64_t center = sys.iterate(x, j);
  std::int64_t fwd = center;
  std::int64_t bwd = center;
  double acc = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    fwd = sys.forward(fwd);
    bwd = sys.backward(bwd);
    acc += (f.values[static_cast<std::size_t>(fwd)] - f.values[static_cast<std::size_t>(bwd)]) /
           static_cast<double>(i);
  }
  return std::abs(acc);
}

}  // namespace

FinitePermutationSystem::FinitePermutationSystem(std::vector<std::int64_t> map)
    : map_(std::move(map)) {
  if (map_.empty()) throw std::invalid_argument("FinitePermutationSystem: empty map");
  inverse_.assign(map_.size(), -1);
  for (std::size_t x = 0; x < map_.size(); ++x) {
    const std::int64_t y = map_[x];
    if (y < 0 || y >= size()) {
      throw std::invalid_argument("FinitePermutationSystem: map value out of range");
    }
    if (inverse_[static_cast<std::size_t>(y)] != -1) {
      throw std::invalid_argument("FinitePermutationSystem: map is not a bijection");
    }
    inverse_[static_cast<std::size_t>(y)] = static_cast<std::int64_t>(x);
  }
}

FinitePermutationSystem FinitePermutationSystem::cyclic(std::int64_t size) {
  if (size < 1) throw std::invalid_argument("cyclic system: size must be >= 1");
  std::vector<std::int64_t> map(static_cast<std::size_t>(size));
  for (std::int64_t x = 0; x < size; ++x) {
    map[static_cast<std::size_t>(x)] = (x + 1) % size;
  }
  return FinitePermutationSystem(std::move(map));
}

std::int64_t FinitePermutationSystem::iterate(std::int64_t x, std::int64_t power) const {
  std::int64_t y = static_cast<std::int64_t>(check_point(x));
  for (std::int64_t step = 0; step < power; ++step) y = forward(y);
  for (std::int64_t step = 0; step > power; --step) y = backward(y);
  return y;
}

double ObservableField::l1_norm() const {
  if (values.empty()) return 0.0;
  double sum = 0.0;
  for (double v : values) sum += std::abs(v);
  return sum / static_cast<double>(values.size());
}

BilateralSequence orbit_sequence(const FinitePermutationSystem& sys, const ObservableField& f,
                                 std::int64_t x, std::int64_t K) {
  check_observable(sys, f);
  if (K < 1) throw std::invalid_argument("orbit_sequence: K must be >= 1");
  if (x < 0 || x >= sys.size()) throw std::invalid_argument("orbit_sequence: x outside the system");
  std::vector<double> values(static_cast<std::size_t>(2 * K + 1), 0.0);
  values[static_cast<std::size_t>(K)] = f.values[static_cast<std::size_t>(x)];
  std::int64_t fwd = x;
  std::int64_t bwd = x;
  for (std::int64_t k = 1; k <= K; ++k) {
    fwd = sys.forward(fwd);
    bwd = sys.backward(bwd);
    values[static_cast<std::size_t>(K + k)] = f.values[static_cast<std::size_t>(fwd)];
    values[static_cast<std::size_t>(K - k)] = f.values[static_cast<std::size_t>(bwd)];
  }
  return BilateralSequence(-K, std::move(values));
}

ObservableField ergodic_truncated_hilbert(const FinitePermutationSystem& sys,
                                          const ObservableField& f, std::int64_t n) {
  check_observable(sys, f);
  if (n < 1) throw std::invalid_argument("ergodic_truncated_hilbert: n must be >= 1");
  const std::size_t M = f.values.size();
  std::vector<double> acc(M, 0.0);
  std::vector<std::int64_t> fwd(M);
  std::vector<std::int64_t> bwd(M);
  for (std::size_t x = 0; x < M; ++x) fwd[x] = bwd[x] = static_cast<std::int64_t>(x);
  for (std::int64_t i = 1; i <= n; ++i) {
    for (std::size_t x = 0; x < M; ++x) {
      fwd[x] = sys.forward(fwd[x]);
      bwd[x] = sys.backward(bwd[x]);
      acc[x] += (f.values[static_cast<std::size_t>(fwd[x])] -
                 f.values[static_cast<std::size_t>(bwd[x])]) /
                static_cast<double>(i);
    }
  }
  return ObservableField{std::move(acc)};
}

ObservableField ergodic_maximal(const FinitePermutationSystem& sys, const ObservableField& f,
                                std::int64_t N) {
  check_observable(sys, f);
  if (N < 1) throw std::invalid_argument("ergodic_maximal: horizon must be >= 1");
  const std::size_t M = f.values.size();
  std::vector<double> acc(M, 0.0);
  std::vector<double> best(M, 0.0);
  std::vector<std::int64_t> fwd(M);
  std::vector<std::int64_t> bwd(M);
  for (std::size_t x = 0; x < M; ++x) fwd[x] = bwd[x] = static_cast<std::int64_t>(x);
  for (std::int64_t i = 1; i <= N; ++i) {
    for (std::size_t x = 0; x < M; ++x) {
      fwd[x] = sys.forward(fwd[x]);
      bwd[x] = sys.backward(bwd[x]);
      acc[x] += (f.values[static_cast<std::size_t>(fwd[x])] -
                 f.values[static_cast<std::size_t>(bwd[x])]) /
                static_cast<double>(i);
      best[x] = std::max(best[x], std::abs(acc[x]));
    }
  }
  return ObservableField{std::move(best)};
}

double ergodic_level_measure(const ObservableField& field, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("ergodic_level_measure: lambda must be > 0");
  if (field.values.empty()) return 0.0;
  return static_cast<double>(count_exceedances(field.values, lambda)) /
         static_cast<double>(field.values.size());
}

ErgodicCompleteSumReport ergodic_complete_sum(const FinitePermutationSystem& sys,
                                              const ObservableField& f, double lambda,
                                              std::int64_t N) {
  check_observable(sys, f);
  if (!(lambda > 0.0)) throw std::invalid_argument("ergodic_complete_sum: lambda must be > 0");
  if (N < 1) throw std::invalid_argument("ergodic_complete_sum: horizon must be >= 1");
  const std::size_t M = f.values.size();
  std::vector<double> acc(M, 0.0);
  std::vector<std::int64_t> fwd(M);
  std::vector<std::int64_t> bwd(M);
  for (std::size_t x = 0; x < M; ++x) fwd[x] = bwd[x] = static_cast<std::int64_t>(x);

  ErgodicCompleteSumReport report;
  report.lambda = lambda;
  report.bound_value = f.l1_norm() / lambda;
  report.per_n_measures.reserve(static_cast<std::size_t>(N));

  std::vector<char> previous(M, 0);
  std::vector<char> current(M, 0);
  std::int64_t run_start = 1;
  std::int64_t last_count = 0;
  for (std::int64_t n = 1; n <= N; ++n) {
    std::int64_t count = 0;
    for (std::size_t x = 0; x < M; ++x) {
      fwd[x] = sys.forward(fwd[x]);
      bwd[x] = sys.backward(bwd[x]);
      acc[x] += (f.values[static_cast<std::size_t>(fwd[x])] -
                 f.values[static_cast<std::size_t>(bwd[x])]) /
                static_cast<double>(n);
      current[x] = std::abs(acc[x]) > lambda ? 1 : 0;
      count += current[x];
    }
    if (n > 1 && current != previous) run_start = n;
    previous = current;
    last_count = count;
    const double measure = static_cast<double>(count) / static_cast<double>(M);
    report.per_n_measures.push_back(measure);
    report.total += measure;
  }
  if (run_start == N && N > 1) {
    report.stabilized_at = std::nullopt;
  } else {
    report.stabilized_at = run_start;
  }
  report.linear_growth = report.stabilized_at.has_value() && last_count > 0;
  return report;
}

TransferenceVerdict transference_check(const FinitePermutationSystem& sys,
                                       const ObservableField& f, double lambda, std::int64_t n,
                                       IntegerWindow j_range) {
  check_observable(sys, f);
  if (!(lambda > 0.0)) throw std::invalid_argument("transference_check: lambda must be > 0");
  if (n < 1) throw std::invalid_argument("transference_check: n must be >= 1");
  const std::size_t M = f.values.size();

  const ObservableField base = ergodic_truncated_hilbert(sys, f, n);
  std::vector<char> base_set(M, 0);
  for (std::size_t x = 0; x < M; ++x) base_set[x] = std::abs(base.values[x]) > lambda ? 1 : 0;

  for (std::int64_t j = j_range.lo; j <= j_range.hi; ++j) {
    // Route 1: level set of G_j evaluated directly along shifted orbits.
    // Route 2: pull the base level set back through the stored inverse.
    std::vector<char> pulled_back(M, 0);
    for (std::size_t e = 0; e < M; ++e) {
      if (base_set[e]) {
        const std::int64_t target = sys.iterate(static_cast<std::int64_t>(e), -j);
        pulled_back[static_cast<std::size_t>(target)] = 1;
      }
    }
    for (std::size_t x = 0; x < M; ++x) {
      const bool exceeds = shifted_truncated_abs(sys, f, static_cast<std::int64_t>(x), j, n) > lambda;
      if (exceeds != static_cast<bool>(pulled_back[x])) {
        return TransferenceVerdict{false, j, static_cast<std::int64_t>(x)};
      }
    }
  }
  return TransferenceVerdict{};
}

}  // namespace hilbertlab
