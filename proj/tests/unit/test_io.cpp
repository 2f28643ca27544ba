#include "hilbertlab/io.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "hilbertlab/generators.hpp"

using namespace hilbertlab;
namespace fs = std::filesystem;

namespace {

fs::path scratch_dir() {
  const auto dir = fs::temp_directory_path() / "hilbertlab_io_test";
  fs::create_directories(dir);
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("sequence json round trip") {
  const auto dir = scratch_dir();
  SplitMix64 rng(111);
  for (int trial = 0; trial < 10; ++trial) {
    const auto a = random_l1_sequence(rng.next(), rng.uniform_int(1, 30));
    const auto path = dir / "seq.json";
    save_sequence(a, path);
    CHECK(load_sequence(path) == a);
  }
  // Canonical form enforced on load: padded zeros are trimmed.
  const auto path = dir / "padded.json";
  write_text(path, R"({"support_min": -2, "values": [0.0, 1.0, 0.0]})");
  const auto loaded = load_sequence(path);
  CHECK(loaded.support_min() == -1);
  CHECK(loaded.span() == 1);
}

TEST_CASE("loader error messages name the missing field") {
  const auto dir = scratch_dir();
  const auto path = dir / "broken.json";
  write_text(path, R"({"values": [1.0]})");
  CHECK_THROWS_WITH_AS(load_sequence(path), doctest::Contains("support_min"),
                       std::runtime_error);
  write_text(path, "not json");
  CHECK_THROWS_AS(load_sequence(path), std::runtime_error);
  CHECK_THROWS_AS(load_sequence(dir / "absent.json"), std::runtime_error);
}

TEST_CASE("pole sum, system, observable, translates load") {
  const auto dir = scratch_dir();

  write_text(dir / "poles.json", R"({"poles": [0.0, 1.0], "weights": [1.0, 1.0]})");
  const auto rs = load_pole_sum(dir / "poles.json");
  CHECK(rs.size() == 2);
  CHECK(rs.weight_sum() == 2.0);

  write_text(dir / "sys.json", R"({"size": 3, "map": [1, 2, 0]})");
  const auto sys = load_system(dir / "sys.json");
  CHECK(sys.forward(2) == 0);
  write_text(dir / "sys_bad.json", R"({"size": 4, "map": [1, 2, 0]})");
  CHECK_THROWS_WITH_AS(load_system(dir / "sys_bad.json"), doctest::Contains("size"),
                       std::runtime_error);

  write_text(dir / "obs.json", R"({"values": [0.0, 1.0, 0.5]})");
  CHECK(load_observable(dir / "obs.json").values.size() == 3);

  write_text(dir / "tr.json", R"({"translates": [0, -3, 5]})");
  CHECK(load_translates(dir / "tr.json").translates == std::vector<std::int64_t>{0, -3, 5});
}

TEST_CASE("format_double round trips") {
  SplitMix64 rng(131);
  for (int trial = 0; trial < 200; ++trial) {
    const double v = (rng.uniform() - 0.5) * std::pow(10.0, rng.uniform(-8.0, 8.0));
    CHECK(std::stod(format_double(v)) == v);
  }
  CHECK(format_double(std::numeric_limits<double>::infinity()) == "inf");
}

TEST_CASE("csv writers emit named headers and full bodies") {
  const auto field = full_hilbert(BilateralSequence::delta(0), IntegerWindow(-2, 2));
  std::ostringstream os;
  write_transform_csv(os, field);
  const auto text = os.str();
  CHECK(text.substr(0, text.find('\n')) == "k,full");
  CHECK(text.find("-2,0.5") != std::string::npos);
  CHECK(text.find("1,-1") != std::string::npos);

  std::ostringstream weak;
  write_weak_type_csv(weak, "maximal", weak_type_report(BilateralSequence::delta(0), {0.4},
                                                        TransformKind::maximal));
  CHECK(weak.str().rfind("kind,lambda,count,l1_norm,ratio\n", 0) == 0);
  CHECK(weak.str().find("maximal,0.4") != std::string::npos);

  std::ostringstream cc;
  write_complete_convergence_csv(cc, partial_sum_S(BilateralSequence::delta(0), 0.5, 3));
  CHECK(cc.str() == "n,count,cumulative\n1,2,2\n2,2,4\n3,2,6\n");

  std::ostringstream hyp;
  write_hypothesis_csv(hyp, 0.5,
                       hypothesis_test(BilateralSequence::delta(0), 0.5,
                                       TranslatedBlockSpec::linear(10, 1)));
  CHECK(hyp.str() == "lambda,lhs,rhs,ratio\n0.5,1,2,0.5\n");
}
