#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <sstream>

#include "hilbertlab/boole.hpp"
#include "hilbertlab/complete_convergence.hpp"
#include "hilbertlab/ergodic.hpp"
#include "hilbertlab/generators.hpp"
#include "hilbertlab/io.hpp"
#include "hilbertlab/sequence.hpp"
#include "hilbertlab/transform.hpp"

namespace py = pybind11;
using namespace hilbertlab;

PYBIND11_MODULE(_core, m) {
  m.doc() = "Discrete and ergodic Hilbert transforms with exact level-set checks";

  py::class_<IntegerWindow>(m, "IntegerWindow")
      .def(py::init<std::int64_t, std::int64_t>(), py::arg("lo"), py::arg("hi"))
      .def_readonly("lo", &IntegerWindow::lo)
      .def_readonly("hi", &IntegerWindow::hi)
      .def("width", &IntegerWindow::width)
      .def("contains", &IntegerWindow::contains, py::arg("k"))
      .def("__eq__", [](const IntegerWindow& a, const IntegerWindow& b) { return a == b; })
      .def("__repr__", [](const IntegerWindow& w) {
        std::ostringstream os;
        os << "IntegerWindow(" << w.lo << ", " << w.hi << ")";
        return os.str();
      });

  py::class_<BilateralSequence>(m, "BilateralSequence")
      .def(py::init<>())
      .def(py::init<std::int64_t, std::vector<double>>(), py::arg("support_min"),
           py::arg("values"))
      .def_static("delta", &BilateralSequence::delta, py::arg("at") = 0,
                  py::arg("weight") = 1.0)
      .def_property_readonly("empty", &BilateralSequence::empty)
      .def_property_readonly("support_min", &BilateralSequence::support_min)
      .def_property_readonly("support_max", &BilateralSequence::support_max)
      .def_property_readonly("span", &BilateralSequence::span)
      .def_property_readonly("values", &BilateralSequence::values)
      .def("at", &BilateralSequence::at, py::arg("j"))
      .def("l1_norm", &BilateralSequence::l1_norm)
      .def("translated", &BilateralSequence::translated, py::arg("t"))
      .def("scaled", &BilateralSequence::scaled, py::arg("c"))
      .def("__eq__",
           [](const BilateralSequence& a, const BilateralSequence& b) { return a == b; })
      .def("__repr__", [](const BilateralSequence& a) {
        std::ostringstream os;
        if (a.empty()) {
          os << "BilateralSequence()";
        } else {
          os << "BilateralSequence(support=[" << a.support_min() << ", " << a.support_max()
             << "], l1=" << a.l1_norm() << ")";
        }
        return os.str();
      });

  py::class_<LevelSetReport>(m, "LevelSetReport")
      .def_readonly("lam", &LevelSetReport::lambda)
      .def_readonly("count", &LevelSetReport::count)
      .def_readonly("l1_norm", &LevelSetReport::l1_norm)
      .def_readonly("ratio", &LevelSetReport::ratio)
      .def("__repr__", [](const LevelSetReport& r) {
        std::ostringstream os;
        os << "LevelSetReport(lam=" << r.lambda << ", count=" << r.count
           << ", ratio=" << r.ratio << ")";
        return os.str();
      });

  py::enum_<TransformKind>(m, "TransformKind")
      .value("truncated", TransformKind::truncated)
      .value("full", TransformKind::full)
      .value("maximal", TransformKind::maximal)
      .value("block_maximal", TransformKind::block_maximal);

  py::class_<TransformField>(m, "TransformField")
      .def_readonly("window", &TransformField::window)
      .def_readonly("kind", &TransformField::kind)
      .def_readonly("n", &TransformField::n)
      .def_readonly("values", &TransformField::values)
      .def("at", &TransformField::at, py::arg("k"))
      .def("kind_label", &TransformField::kind_label);

  m.def("truncated_hilbert", &truncated_hilbert, py::arg("a"), py::arg("n"), py::arg("window"));
  m.def("full_hilbert", &full_hilbert, py::arg("a"), py::arg("window"));
  m.def("maximal_hilbert", &maximal_hilbert, py::arg("a"), py::arg("window"),
        py::arg("horizon") = std::nullopt);
  m.def("sufficient_window", &sufficient_window, py::arg("a"), py::arg("lam"));
  m.def("weak_type_report", &weak_type_report, py::arg("a"), py::arg("lambdas"),
        py::arg("kind"));
  m.def(
      "count_exceedances",
      [](const TransformField& field, double lambda) { return count_exceedances(field, lambda); },
      py::arg("field"), py::arg("lam"));
  m.def(
      "count_exceedances",
      [](const std::vector<double>& values, double lambda) {
        return count_exceedances(values, lambda);
      },
      py::arg("values"), py::arg("lam"));

  py::class_<RationalPoleSum>(m, "RationalPoleSum")
      .def(py::init<std::vector<double>, std::vector<double>>(), py::arg("poles"),
           py::arg("weights"))
      .def_property_readonly("poles", &RationalPoleSum::poles)
      .def_property_readonly("weights", &RationalPoleSum::weights)
      .def_property_readonly("size", &RationalPoleSum::size)
      .def("weight_sum", &RationalPoleSum::weight_sum);

  py::class_<LevelRoots>(m, "LevelRoots")
      .def_readonly("lam", &LevelRoots::lambda)
      .def_readonly("roots", &LevelRoots::roots);

  py::enum_<LevelSide>(m, "LevelSide")
      .value("above", LevelSide::above)
      .value("below", LevelSide::below);

  m.def("eval_g", &eval_g, py::arg("rs"), py::arg("s"));
  m.def("level_roots", &level_roots, py::arg("rs"), py::arg("lam"));
  m.def("level_set_measure", &level_set_measure, py::arg("rs"), py::arg("lam"),
        py::arg("side") = LevelSide::above);
  m.def("vieta_check", &vieta_check, py::arg("rs"), py::arg("lam"));

  py::class_<TranslatedBlockSpec>(m, "TranslatedBlockSpec")
      .def(py::init<>())
      .def(py::init([](std::vector<std::int64_t> translates) {
             return TranslatedBlockSpec{std::move(translates)};
           }),
           py::arg("translates"))
      .def_readonly("translates", &TranslatedBlockSpec::translates)
      .def("horizon", &TranslatedBlockSpec::horizon)
      .def_static("zeros", &TranslatedBlockSpec::zeros, py::arg("n_blocks"))
      .def_static("linear", &TranslatedBlockSpec::linear, py::arg("n_blocks"), py::arg("step"));

  py::class_<CompleteConvergenceReport>(m, "CompleteConvergenceReport")
      .def_readonly("lam", &CompleteConvergenceReport::lambda)
      .def_readonly("per_n_counts", &CompleteConvergenceReport::per_n_counts)
      .def_readonly("partial_sum", &CompleteConvergenceReport::partial_sum)
      .def_readonly("stabilized_at", &CompleteConvergenceReport::stabilized_at)
      .def_readonly("linear_growth", &CompleteConvergenceReport::linear_growth)
      .def_readonly("bound_value", &CompleteConvergenceReport::bound_value);

  py::class_<HypothesisTestResult>(m, "HypothesisTestResult")
      .def_readonly("lhs_count", &HypothesisTestResult::lhs_count)
      .def_readonly("rhs_count", &HypothesisTestResult::rhs_count)
      .def_readonly("ratio", &HypothesisTestResult::ratio)
      .def_readonly("unbounded", &HypothesisTestResult::unbounded)
      .def("__repr__", [](const HypothesisTestResult& r) {
        std::ostringstream os;
        os << "HypothesisTestResult(lhs=" << r.lhs_count << ", rhs=" << r.rhs_count
           << ", ratio=" << r.ratio << ")";
        return os.str();
      });

  m.def("shifted", &shifted, py::arg("set"), py::arg("t"));
  m.def("exceedance_set", &exceedance_set, py::arg("a"), py::arg("n"), py::arg("lam"));
  m.def("partial_sum_S", &partial_sum_S, py::arg("a"), py::arg("lam"), py::arg("N"));
  m.def("greedy_disjoint_translates", &greedy_disjoint_translates, py::arg("a"), py::arg("lam"),
        py::arg("N"));
  m.def("translated_block_maximal", &translated_block_maximal, py::arg("a"), py::arg("spec"),
        py::arg("window"));
  m.def("hypothesis_test", &hypothesis_test, py::arg("a"), py::arg("lam"), py::arg("spec"));

  py::class_<FinitePermutationSystem>(m, "FinitePermutationSystem")
      .def(py::init<std::vector<std::int64_t>>(), py::arg("map"))
      .def_static("cyclic", &FinitePermutationSystem::cyclic, py::arg("size"))
      .def_property_readonly("size", &FinitePermutationSystem::size)
      .def("forward", &FinitePermutationSystem::forward, py::arg("x"))
      .def("backward", &FinitePermutationSystem::backward, py::arg("x"))
      .def("iterate", &FinitePermutationSystem::iterate, py::arg("x"), py::arg("power"))
      .def_property_readonly("map", &FinitePermutationSystem::map)
      .def_property_readonly("inverse", &FinitePermutationSystem::inverse);

  py::class_<ObservableField>(m, "ObservableField")
      .def(py::init([](std::vector<double> values) { return ObservableField{std::move(values)}; }),
           py::arg("values"))
      .def_readonly("values", &ObservableField::values)
      .def("l1_norm", &ObservableField::l1_norm);

  py::class_<ErgodicCompleteSumReport>(m, "ErgodicCompleteSumReport")
      .def_readonly("lam", &ErgodicCompleteSumReport::lambda)
      .def_readonly("per_n_measures", &ErgodicCompleteSumReport::per_n_measures)
      .def_readonly("total", &ErgodicCompleteSumReport::total)
      .def_readonly("stabilized_at", &ErgodicCompleteSumReport::stabilized_at)
      .def_readonly("linear_growth", &ErgodicCompleteSumReport::linear_growth)
      .def_readonly("bound_value", &ErgodicCompleteSumReport::bound_value);

  py::class_<TransferenceVerdict>(m, "TransferenceVerdict")
      .def_readonly("pass_", &TransferenceVerdict::pass)
      .def_readonly("j", &TransferenceVerdict::j)
      .def_readonly("x", &TransferenceVerdict::x)
      .def("__bool__", [](const TransferenceVerdict& v) { return v.pass; });

  m.def("orbit_sequence", &orbit_sequence, py::arg("sys"), py::arg("f"), py::arg("x"),
        py::arg("K"));
  m.def("ergodic_truncated_hilbert", &ergodic_truncated_hilbert, py::arg("sys"), py::arg("f"),
        py::arg("n"));
  m.def("ergodic_maximal", &ergodic_maximal, py::arg("sys"), py::arg("f"), py::arg("N"));
  m.def("ergodic_level_measure", &ergodic_level_measure, py::arg("field"), py::arg("lam"));
  m.def("ergodic_complete_sum", &ergodic_complete_sum, py::arg("sys"), py::arg("f"),
        py::arg("lam"), py::arg("N"));
  m.def("transference_check", &transference_check, py::arg("sys"), py::arg("f"), py::arg("lam"),
        py::arg("n"), py::arg("j_range"));

  m.def("symmetric_pair", &symmetric_pair, py::arg("offset") = 1, py::arg("weight") = 1.0);
  m.def("random_l1_sequence", &random_l1_sequence, py::arg("seed"), py::arg("support_size"));
  m.def("random_permutation_system", &random_permutation_system, py::arg("size"),
        py::arg("seed"));
  m.def("indicator_observable", &indicator_observable, py::arg("size"), py::arg("at"));
  m.def("constant_observable", &constant_observable, py::arg("size"), py::arg("value"));
  m.def("random_observable", &random_observable, py::arg("size"), py::arg("seed"));

  m.def("load_sequence", &load_sequence, py::arg("path"));
  m.def("load_pole_sum", &load_pole_sum, py::arg("path"));
  m.def("load_system", &load_system, py::arg("path"));
  m.def("load_observable", &load_observable, py::arg("path"));
  m.def("load_translates", &load_translates, py::arg("path"));
  m.def("save_sequence", &save_sequence, py::arg("a"), py::arg("path"));
  m.def("save_system", &save_system, py::arg("sys"), py::arg("path"));

  m.attr("__version__") = "0.1.0";
}
