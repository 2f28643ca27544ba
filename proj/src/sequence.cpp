#include "hilbertlab/sequence.hpp"

#include <cmath>
#include <utility>

namespace hilbertlab {

BilateralSequence::BilateralSequence(std::int64_t support_min, std::vector<double> values) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw std::invalid_argument("BilateralSequence: entries must be finite");
    }
  }
  std::size_t first = 0;
  std::size_t last = values.size();
  while (first < last && values[first] == 0.0) ++first;
  while (last > first && values[last - 1] == 0.0) --last;
  if (first == last) return;  // all zero -> empty
  support_min_ = support_min + static_cast<std::int64_t>(first);
  values_.assign(values.begin() + static_cast<std::ptrdiff_t>(first),
                 values.begin() + static_cast<std::ptrdiff_t>(last));
}

BilateralSequence BilateralSequence::delta(std::int64_t at, double weight) {
  return BilateralSequence(at, {weight});
}

double BilateralSequence::l1_norm() const {
  double sum = 0.0;
  for (double v : values_) sum += std::abs(v);
  return sum;
}

BilateralSequence BilateralSequence::translated(std::int64_t t) const {
  if (empty()) return {};
  BilateralSequence b;
  b.support_min_ = support_min_ - t;
  b.values_ = values_;
  return b;
}

BilateralSequence BilateralSequence::scaled(double c) const {
  if (empty()) return {};
  std::vector<double> scaled_values(values_.size());
  for (std::size_t m = 0; m < values_.size(); ++m) scaled_values[m] = c * values_[m];
  return BilateralSequence(support_min_, std::move(scaled_values));
}

std::int64_t count_exceedances(const std::vector<double>& values, double lambda) {
  if (!(lambda > 0.0)) throw std::invalid_argument("count_exceedances: lambda must be > 0");
  std::int64_t count = 0;
  for (double v : values) {
    if (std::abs(v) > lambda) ++count;
  }
  return count;
}

}  // namespace hilbertlab
