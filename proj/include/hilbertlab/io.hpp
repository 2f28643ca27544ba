#pragma once

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

#include "hilbertlab/boole.hpp"
#include "hilbertlab/complete_convergence.hpp"
#include "hilbertlab/ergodic.hpp"
#include "hilbertlab/sequence.hpp"
#include "hilbertlab/transform.hpp"

namespace hilbertlab {

// JSON interchange formats:
//   sequence    {"support_min": int, "values": [real, ...]}
//   pole sum    {"poles": [real, ...], "weights": [real, ...]}
//   system      {"size": int, "map": [int, ...]}
//   observable  {"values": [real, ...]}
//   translates  {"translates": [int, ...]}
// Canonical form is enforced on load by the type constructors.

BilateralSequence load_sequence(const std::filesystem::path& path);
RationalPoleSum load_pole_sum(const std::filesystem::path& path);
FinitePermutationSystem load_system(const std::filesystem::path& path);
ObservableField load_observable(const std::filesystem::path& path);
TranslatedBlockSpec load_translates(const std::filesystem::path& path);

void save_sequence(const BilateralSequence& a, const std::filesystem::path& path);
void save_system(const FinitePermutationSystem& sys, const std::filesystem::path& path);

/// Shortest decimal round-trip form of a double; "inf"/"nan" spelled out.
std::string format_double(double value);

// CSV reports. Every file starts with a named header row and ends with a
// trailing newline; bodies are deterministic for identical inputs.

/// Header "k,<kind_label>" then one row per window index.
void write_transform_csv(std::ostream& os, const TransformField& field);

/// Header "kind,lambda,count,l1_norm,ratio".
void write_weak_type_csv(std::ostream& os, const std::string& kind_label,
                         const std::vector<LevelSetReport>& reports);

struct BooleCsvRow {
  double lambda = 0.0;
  LevelSide side = LevelSide::above;
  double measure = 0.0;
  double expected = 0.0;
  double residual = 0.0;  ///< relative to expected
};

/// Header "lambda,side,measure,expected,residual".
void write_boole_csv(std::ostream& os, const std::vector<BooleCsvRow>& rows);

struct VietaCsvRow {
  double lambda = 0.0;
  double root_sum = 0.0;
  double expected = 0.0;
  double residual = 0.0;  ///< absolute
};

/// Header "lambda,root_sum,expected,residual".
void write_vieta_csv(std::ostream& os, const std::vector<VietaCsvRow>& rows);

/// Header "n,count,cumulative".
void write_complete_convergence_csv(std::ostream& os, const CompleteConvergenceReport& report);

/// Header "lambda,lhs,rhs,ratio".
void write_hypothesis_csv(std::ostream& os, double lambda, const HypothesisTestResult& result);

/// Header "n,measure,cumulative".
void write_ergodic_csv(std::ostream& os, const ErgodicCompleteSumReport& report);

}  // namespace hilbertlab
