#include "hilbertlab/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>

#include "json.hpp"

namespace hilbertlab {

namespace {

nlohmann::json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error("invalid JSON in " + path.string() + ": " + e.what());
  }
  return j;
}

void write_json_file(const nlohmann::json& j, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

const nlohmann::json& require_field(const nlohmann::json& j, const char* field,
                                    const std::filesystem::path& path) {
  auto it = j.find(field);
  if (it == j.end()) {
    throw std::runtime_error(path.string() + ": missing field \"" + field + "\"");
  }
  return *it;
}

}  // namespace

BilateralSequence load_sequence(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  const auto support_min = require_field(j, "support_min", path).get<std::int64_t>();
  const auto values = require_field(j, "values", path).get<std::vector<double>>();
  return BilateralSequence(support_min, values);
}

RationalPoleSum load_pole_sum(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  return RationalPoleSum(require_field(j, "poles", path).get<std::vector<double>>(),
                         require_field(j, "weights", path).get<std::vector<double>>());
}

FinitePermutationSystem load_system(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  const auto size = require_field(j, "size", path).get<std::int64_t>();
  auto map = require_field(j, "map", path).get<std::vector<std::int64_t>>();
  if (static_cast<std::int64_t>(map.size()) != size) {
    throw std::runtime_error(path.string() + ": field \"size\" does not match the map length");
  }
  return FinitePermutationSystem(std::move(map));
}

ObservableField load_observable(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  return ObservableField{require_field(j, "values", path).get<std::vector<double>>()};
}

TranslatedBlockSpec load_translates(const std::filesystem::path& path) {
  const auto j = read_json_file(path);
  return TranslatedBlockSpec{
      require_field(j, "translates", path).get<std::vector<std::int64_t>>()};
}

void save_sequence(const BilateralSequence& a, const std::filesystem::path& path) {
  nlohmann::json j;
  j["support_min"] = a.empty() ? 0 : a.support_min();
  j["values"] = a.values();
  write_json_file(j, path);
}

void save_system(const FinitePermutationSystem& sys, const std::filesystem::path& path) {
  nlohmann::json j;
  j["size"] = sys.size();
  j["map"] = sys.map();
  write_json_file(j, path);
}

std::string format_double(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.17g", value);
  return buffer;
}

void write_transform_csv(std::ostream& os, const TransformField& field) {
  os << "k," << field.kind_label() << '\n';
  for (std::int64_t k = field.window.lo; k <= field.window.hi; ++k) {
    os << k << ',' << format_double(field.at(k)) << '\n';
  }
}

void write_weak_type_csv(std::ostream& os, const std::string& kind_label,
                         const std::vector<LevelSetReport>& reports) {
  os << "kind,lambda,count,l1_norm,ratio\n";
  for (const auto& r : reports) {
    os << kind_label << ',' << format_double(r.lambda) << ',' << r.count << ','
       << format_double(r.l1_norm) << ',' << format_double(r.ratio) << '\n';
  }
}

void write_boole_csv(std::ostream& os, const std::vector<BooleCsvRow>& rows) {
  os << "lambda,side,measure,expected,residual\n";
  for (const auto& r : rows) {
    os << format_double(r.lambda) << ',' << (r.side == LevelSide::above ? "above" : "below")
       << ',' << format_double(r.measure) << ',' << format_double(r.expected) << ','
       << format_double(r.residual) << '\n';
  }
}

void write_vieta_csv(std::ostream& os, const std::vector<VietaCsvRow>& rows) {
  os << "lambda,root_sum,expected,residual\n";
  for (const auto& r : rows) {
    os << format_double(r.lambda) << ',' << format_double(r.root_sum) << ','
       << format_double(r.expected) << ',' << format_double(r.residual) << '\n';
  }
}

void write_complete_convergence_csv(std::ostream& os, const CompleteConvergenceReport& report) {
  os << "n,count,cumulative\n";
  std::int64_t cumulative = 0;
  for (std::size_t idx = 0; idx < report.per_n_counts.size(); ++idx) {
    cumulative += report.per_n_counts[idx];
    os << (idx + 1) << ',' << report.per_n_counts[idx] << ',' << cumulative << '\n';
  }
}

void write_hypothesis_csv(std::ostream& os, double lambda, const HypothesisTestResult& result) {
  os << "lambda,lhs,rhs,ratio\n";
  os << format_double(lambda) << ',' << result.lhs_count << ',' << result.rhs_count << ','
     << format_double(result.ratio) << '\n';
}

void write_ergodic_csv(std::ostream& os, const ErgodicCompleteSumReport& report) {
  os << "n,measure,cumulative\n";
  double cumulative = 0.0;
  for (std::size_t idx = 0; idx < report.per_n_measures.size(); ++idx) {
    cumulative += report.per_n_measures[idx];
    os << (idx + 1) << ',' << format_double(report.per_n_measures[idx]) << ','
       << format_double(cumulative) << '\n';
  }
}

}  // namespace hilbertlab
