#include "hilbertlab/transform.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

namespace hilbertlab {

namespace {

// Distance from k to the farthest support point; every truncation level
// beyond it leaves the partial sum unchanged.
std::int64_t farthest_reach(const BilateralSequence& a, std::int64_t k) {
  return std::max(std::llabs(a.support_min() - k), std::llabs(a.support_max() - k));
}

// sum over 1 <= |i| <= n of a[k+i]/i, pairing +i with -i in ascending |i|.
double paired_kernel_sum(const BilateralSequence& a, std::int64_t k, std::int64_t n) {
  double acc = 0.0;
  for (std::int64_t i = 1; i <= n; ++i) {
    acc += (a.at(k + i) - a.at(k - i)) / static_cast<double>(i);
  }
  return acc;
}

}  // namespace

std::string TransformField::kind_label() const {
  switch (kind) {
    case TransformKind::truncated:
      return "truncated_n" + std::to_string(n);
    case TransformKind::full:
      return "full";
    case TransformKind::maximal:
      return n > 0 ? "maximal_n" + std::to_string(n) : "maximal";
    case TransformKind::block_maximal:
      return "block_maximal_n" + std::to_string(n);
  }
  return "unknown";
}

TransformField truncated_hilbert(const BilateralSequence& a, std::int64_t n, IntegerWindow window) {
  if (n < 1) throw std::invalid_argument("truncated_hilbert: n must be >= 1");
  TransformField field{window, TransformKind::truncated, n, {}};
  field.values.assign(static_cast<std::size_t>(window.width()), 0.0);
  if (a.empty()) return field;
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    field.values[static_cast<std::size_t>(k - window.lo)] = paired_kernel_sum(a, k, n);
  }
  return field;
}

TransformField full_hilbert(const BilateralSequence& a, IntegerWindow window) {
  TransformField field{window, TransformKind::full, 0, {}};
  field.values.assign(static_cast<std::size_t>(window.width()), 0.0);
  if (a.empty()) return field;
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    field.values[static_cast<std::size_t>(k - window.lo)] =
        paired_kernel_sum(a, k, farthest_reach(a, k));
  }
  return field;
}

TransformField maximal_hilbert(const BilateralSequence& a, IntegerWindow window,
                               std::optional<std::int64_t> horizon) {
  if (horizon && *horizon < 1) throw std::invalid_argument("maximal_hilbert: horizon must be >= 1");
  TransformField field{window, TransformKind::maximal, horizon.value_or(0), {}};
  field.values.assign(static_cast<std::size_t>(window.width()), 0.0);
  if (a.empty()) return field;
  for (std::int64_t k = window.lo; k <= window.hi; ++k) {
    std::int64_t n_max = farthest_reach(a, k);
    if (horizon) n_max = std::min(n_max, *horizon);
    double acc = 0.0;
    double best = 0.0;
    for (std::int64_t i = 1; i <= n_max; ++i) {
      acc += (a.at(k + i) - a.at(k - i)) / static_cast<double>(i);
      best = std::max(best, std::abs(acc));
    }
    field.values[static_cast<std::size_t>(k - window.lo)] = best;
  }
  return field;
}

IntegerWindow sufficient_window(const BilateralSequence& a, double lambda) {
  if (a.empty()) throw std::invalid_argument("sufficient_window: sequence is empty");
  if (!(lambda > 0.0)) throw std::invalid_argument("sufficient_window: lambda must be > 0");
  const double radius_real = std::ceil(a.l1_norm() / lambda);
  if (!(radius_real < 0x1p53)) {
    throw std::invalid_argument("sufficient_window: lambda too small for a finite window");
  }
  const auto radius = static_cast<std::int64_t>(radius_real);
  return IntegerWindow(a.support_min() - radius, a.support_max() + radius);
}

std::vector<LevelSetReport> weak_type_report(const BilateralSequence& a,
                                             const std::vector<double>& lambdas,
                                             TransformKind kind) {
  if (kind != TransformKind::full && kind != TransformKind::maximal) {
    throw std::invalid_argument("weak_type_report: kind must be full or maximal");
  }
  std::vector<LevelSetReport> reports;
  reports.reserve(lambdas.size());
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw std::invalid_argument("weak_type_report: lambda must be > 0");
    if (a.empty()) {
      reports.push_back({lambda, 0, 0.0, 0.0});
      continue;
    }
    const IntegerWindow window = sufficient_window(a, lambda);
    const TransformField field = kind == TransformKind::full
                                     ? full_hilbert(a, window)
                                     : maximal_hilbert(a, window);
    const std::int64_t count = count_exceedances(field, lambda);
    const double l1 = a.l1_norm();
    reports.push_back({lambda, count, l1, lambda * static_cast<double>(count) / l1});
  }
  return reports;
}

std::int64_t count_exceedances(const TransformField& field, double lambda) {
  return count_exceedances(field.values, lambda);
}

}  // namespace hilbertlab
