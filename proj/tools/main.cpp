// hilbertlab command-line front end: loads sequences, pole sums, and finite
// systems (from JSON files or named seeded generators), runs transform and
// level-set sweeps, and writes CSV reports plus a JSON manifest per run.
//
// Exit codes: 0 success, 1 usage/config/file errors, 2 invariant violations
// detected during the run (reported with the failing input and values).

#include <chrono>
#include <cstdlib>
#include <ctime>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "hilbertlab/boole.hpp"
#include "hilbertlab/complete_convergence.hpp"
#include "hilbertlab/ergodic.hpp"
#include "hilbertlab/generators.hpp"
#include "hilbertlab/io.hpp"
#include "hilbertlab/sequence.hpp"
#include "hilbertlab/transform.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace hilbertlab;

namespace {

constexpr const char* kVersion = "0.1.0";

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct GeneratorSpec {
  std::string name;
  std::map<std::string, std::string> args;
};

std::optional<GeneratorSpec> parse_generator(const std::string& text,
                                             std::initializer_list<const char*> names) {
  const auto colon = text.find(':');
  const std::string head = text.substr(0, colon);
  bool known = false;
  for (const char* name : names) known = known || head == name;
  if (!known) return std::nullopt;
  GeneratorSpec spec{head, {}};
  if (colon != std::string::npos) {
    std::string rest = text.substr(colon + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
      const auto comma = rest.find(',', pos);
      const std::string item = rest.substr(pos, comma - pos);
      const auto eq = item.find('=');
      if (eq == std::string::npos || eq == 0) {
        throw ConfigError("generator \"" + text + "\": expected key=value arguments");
      }
      spec.args[item.substr(0, eq)] = item.substr(eq + 1);
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  return spec;
}

std::string require_arg(const GeneratorSpec& spec, const std::string& key) {
  const auto it = spec.args.find(key);
  if (it == spec.args.end()) {
    throw ConfigError("generator \"" + spec.name + "\": missing argument \"" + key + "\"");
  }
  return it->second;
}

double arg_double(const GeneratorSpec& spec, const std::string& key, double fallback) {
  const auto it = spec.args.find(key);
  return it == spec.args.end() ? fallback : std::stod(it->second);
}

std::int64_t arg_int(const GeneratorSpec& spec, const std::string& key,
                     std::optional<std::int64_t> fallback = std::nullopt) {
  const auto it = spec.args.find(key);
  if (it == spec.args.end()) {
    if (fallback) return *fallback;
    throw ConfigError("generator \"" + spec.name + "\": missing argument \"" + key + "\"");
  }
  return std::stoll(it->second);
}

std::uint64_t arg_seed(const GeneratorSpec& spec) {
  return static_cast<std::uint64_t>(std::stoull(require_arg(spec, "seed")));
}

BilateralSequence resolve_sequence(const std::string& text) {
  if (const auto gen = parse_generator(text, {"delta", "sympair", "random-l1"})) {
    if (gen->name == "delta") {
      return BilateralSequence::delta(arg_int(*gen, "at", 0), arg_double(*gen, "weight", 1.0));
    }
    if (gen->name == "sympair") {
      return symmetric_pair(arg_int(*gen, "offset", 1), arg_double(*gen, "weight", 1.0));
    }
    return random_l1_sequence(arg_seed(*gen), arg_int(*gen, "support"));
  }
  return load_sequence(text);
}

FinitePermutationSystem resolve_system(const std::string& text) {
  if (const auto gen = parse_generator(text, {"cyclic", "random-perm"})) {
    if (gen->name == "cyclic") return FinitePermutationSystem::cyclic(arg_int(*gen, "size"));
    return random_permutation_system(arg_int(*gen, "size"), arg_seed(*gen));
  }
  return load_system(text);
}

ObservableField resolve_observable(const std::string& text, std::int64_t system_size) {
  if (const auto gen = parse_generator(text, {"indicator", "constant", "random"})) {
    if (gen->name == "indicator") return indicator_observable(system_size, arg_int(*gen, "at"));
    if (gen->name == "constant") {
      return constant_observable(system_size, arg_double(*gen, "value", 1.0));
    }
    return random_observable(system_size, arg_seed(*gen));
  }
  auto f = load_observable(text);
  if (static_cast<std::int64_t>(f.values.size()) != system_size) {
    throw ConfigError("observable \"" + text + "\" does not match the system size");
  }
  return f;
}

std::vector<double> parse_lambdas(const std::string& text) {
  std::vector<double> lambdas;
  if (text.rfind("log:", 0) == 0) {
    // log:LO..HI:COUNT, geometric grid inclusive of both endpoints.
    const std::string body = text.substr(4);
    const auto dots = body.find("..");
    const auto colon = body.find(':', dots == std::string::npos ? 0 : dots + 2);
    if (dots == std::string::npos || colon == std::string::npos) {
      throw ConfigError("lambdas: expected log:LO..HI:COUNT, got \"" + text + "\"");
    }
    const double lo = std::stod(body.substr(0, dots));
    const double hi = std::stod(body.substr(dots + 2, colon - dots - 2));
    const auto count = std::stoll(body.substr(colon + 1));
    if (!(lo > 0.0) || !(hi > 0.0) || count < 1) {
      throw ConfigError("lambdas: log grid needs positive endpoints and count >= 1");
    }
    for (std::int64_t j = 0; j < count; ++j) {
      const double frac = count == 1 ? 0.0 : static_cast<double>(j) / static_cast<double>(count - 1);
      lambdas.push_back(lo * std::pow(hi / lo, frac));
    }
  } else {
    std::size_t pos = 0;
    while (pos <= text.size()) {
      const auto comma = text.find(',', pos);
      const std::string item = text.substr(pos, comma - pos);
      if (item.empty()) throw ConfigError("lambdas: empty entry in \"" + text + "\"");
      try {
        lambdas.push_back(std::stod(item));
      } catch (const std::exception&) {
        throw ConfigError("lambdas: cannot parse \"" + item + "\"");
      }
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }
  }
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw ConfigError("lambdas: values must be > 0");
  }
  return lambdas;
}

IntegerWindow parse_window(const std::string& text) {
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    throw ConfigError("window: expected LO..HI, got \"" + text + "\"");
  }
  try {
    return IntegerWindow(std::stoll(text.substr(0, dots)), std::stoll(text.substr(dots + 2)));
  } catch (const std::invalid_argument& e) {
    throw ConfigError(std::string("window: ") + e.what());
  }
}

TranslatedBlockSpec resolve_translates(const std::string& text, std::int64_t horizon,
                                       const BilateralSequence& a, double lambda) {
  if (text == "zero") return TranslatedBlockSpec::zeros(horizon);
  if (text == "greedy") return greedy_disjoint_translates(a, lambda, horizon);
  if (const auto gen = parse_generator(text, {"linear"})) {
    return TranslatedBlockSpec::linear(horizon, arg_int(*gen, "c", 1));
  }
  return load_translates(text);
}

std::string iso_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buffer[32];
  std::strftime(buffer, sizeof buffer, "%FT%TZ", std::gmtime(&now));
  return buffer;
}

// Collects per-run outputs and writes the manifest at the end; violations
// accumulate and flip the exit code to 2.
struct RunContext {
  fs::path out_dir;
  json parameters = json::object();
  std::vector<std::string> inputs;
  std::vector<std::string> outputs;
  std::vector<std::string> violations;

  explicit RunContext(const std::string& out) : out_dir(out) {
    fs::create_directories(out_dir);
  }

  std::ofstream open_csv(const std::string& name) {
    std::ofstream os(out_dir / name, std::ios::binary);  // '\n' endings everywhere
    if (!os) throw ConfigError("cannot write " + (out_dir / name).string());
    outputs.push_back(name);
    return os;
  }

  int finish(const std::string& command) {
    json manifest;
    manifest["command"] = command;
    manifest["version"] = kVersion;
    manifest["inputs"] = inputs;
    manifest["parameters"] = parameters;
    manifest["outputs"] = outputs;
    manifest["violations"] = violations;
    manifest["timestamp"] = iso_timestamp();
    std::ofstream os(out_dir / "run_manifest.json");
    os << manifest.dump(2) << '\n';
    for (const auto& v : violations) std::cerr << "violation: " << v << '\n';
    std::cout << command << ": wrote " << outputs.size() << " report(s) to " << out_dir.string()
              << '\n';
    return violations.empty() ? 0 : 2;
  }
};

// Options shared by every subcommand. When --config is given the JSON file
// replaces the per-command flags; --out still applies (config may override).
struct CommonOpts {
  std::string out = ".";
  std::string config;

  json load(const char* command) const {
    if (config.empty()) return json::object();
    std::ifstream in(config);
    if (!in) throw ConfigError(std::string(command) + ": cannot open config " + config);
    json cfg;
    try {
      in >> cfg;
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string(command) + ": invalid config JSON: " + e.what());
    }
    return cfg;
  }
};

std::vector<std::string> config_inputs(const json& cfg, const std::string& fallback) {
  if (!cfg.contains("inputs")) {
    if (fallback.empty()) throw ConfigError("config: missing field \"inputs\"");
    return {fallback};
  }
  const auto& in = cfg.at("inputs");
  if (!in.is_array() || in.empty()) {
    throw ConfigError("config: field \"inputs\" must be a non-empty array");
  }
  std::vector<std::string> out;
  for (const auto& item : in) {
    if (!item.is_string()) throw ConfigError("config: field \"inputs\" must hold strings");
    out.push_back(item.get<std::string>());
  }
  return out;
}

template <typename T>
T config_value(const json& cfg, const char* field, const T& fallback) {
  if (!cfg.contains(field)) return fallback;
  try {
    return cfg.at(field).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(std::string("config: field \"") + field + "\" has the wrong type");
  }
}

int run_transform(const CommonOpts& common, const std::string& seq, std::int64_t n,
                  std::string window) {
  const json cfg = common.load("transform");
  const auto inputs = config_inputs(cfg, seq);
  n = config_value<std::int64_t>(cfg, "n", n);
  window = config_value<std::string>(cfg, "window", window);
  if (window.empty()) throw ConfigError("transform: missing \"window\"");
  if (n < 1) throw ConfigError("transform: field \"n\" must be >= 1");
  const IntegerWindow w = parse_window(window);

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"n", n}, {"window", window}};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto a = resolve_sequence(inputs[i]);
    auto os = run.open_csv("transform_in" + std::to_string(i) + ".csv");
    write_transform_csv(os, truncated_hilbert(a, n, w));
  }
  return run.finish("transform");
}

int run_maximal(const CommonOpts& common, const std::string& seq, double lambda,
                std::optional<std::int64_t> horizon) {
  const json cfg = common.load("maximal");
  const auto inputs = config_inputs(cfg, seq);
  lambda = config_value<double>(cfg, "lambda", lambda);
  if (cfg.contains("horizon")) horizon = cfg.at("horizon").get<std::int64_t>();
  if (!(lambda > 0.0)) throw ConfigError("maximal: field \"lambda\" must be > 0");

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"lambda", lambda}};
  if (horizon) run.parameters["horizon"] = *horizon;
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto a = resolve_sequence(inputs[i]);
    const auto suffix = "_in" + std::to_string(i) + ".csv";
    if (a.empty()) {
      auto os = run.open_csv("maximal_levelset" + suffix);
      write_weak_type_csv(os, "maximal", {{lambda, 0, 0.0, 0.0}});
      continue;
    }
    const auto window = sufficient_window(a, lambda);
    const auto field = maximal_hilbert(a, window, horizon);
    auto os = run.open_csv("maximal_field" + suffix);
    write_transform_csv(os, field);
    const auto count = count_exceedances(field, lambda);
    const double l1 = a.l1_norm();
    auto report = run.open_csv("maximal_levelset" + suffix);
    write_weak_type_csv(report, field.kind_label(),
                        {{lambda, count, l1, lambda * static_cast<double>(count) / l1}});
  }
  return run.finish("maximal");
}

int run_boole_check(const CommonOpts& common, const std::string& poles, std::string lambdas,
                    double tol_measure, double tol_vieta) {
  const json cfg = common.load("boole-check");
  const auto inputs = config_inputs(cfg, poles);
  lambdas = config_value<std::string>(cfg, "lambdas", lambdas);
  if (lambdas.empty()) throw ConfigError("boole-check: missing \"lambdas\"");
  if (cfg.contains("tolerances")) {
    tol_measure = config_value<double>(cfg.at("tolerances"), "boole_measure_rel", tol_measure);
    tol_vieta = config_value<double>(cfg.at("tolerances"), "vieta_scale", tol_vieta);
  }
  const auto grid = parse_lambdas(lambdas);

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"lambdas", lambdas},
                    {"tolerances", {{"boole_measure_rel", tol_measure}, {"vieta_scale", tol_vieta}}}};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto rs = load_pole_sum(inputs[i]);
    std::vector<BooleCsvRow> rows;
    std::vector<VietaCsvRow> vieta_rows;
    for (double lambda : grid) {
      const double expected = rs.weight_sum() / lambda;
      for (auto side : {LevelSide::above, LevelSide::below}) {
        const double measure = level_set_measure(rs, lambda, side);
        const double residual = std::abs(measure - expected) / expected;
        rows.push_back({lambda, side, measure, expected, residual});
        if (residual > tol_measure) {
          run.violations.push_back("boole-check " + inputs[i] + " lambda " +
                                   format_double(lambda) + " side " +
                                   (side == LevelSide::above ? std::string("above") : "below") +
                                   ": measure " + format_double(measure) + " expected " +
                                   format_double(expected) + " residual " +
                                   format_double(residual) + " > " + format_double(tol_measure));
        }
      }
      const auto roots = level_roots(rs, lambda);
      double root_sum = 0.0;
      for (double m : roots.roots) root_sum += m;
      double pole_abs = 0.0;
      double pole_sum = 0.0;
      for (double t : rs.poles()) {
        pole_abs += std::abs(t);
        pole_sum += t;
      }
      const double residual = std::abs(root_sum - pole_sum - expected);
      const double scale = std::max(1.0, pole_abs + expected);
      vieta_rows.push_back({lambda, root_sum, pole_sum + expected, residual});
      if (residual > tol_vieta * scale) {
        run.violations.push_back("boole-check " + inputs[i] + " lambda " + format_double(lambda) +
                                 ": root-sum residual " + format_double(residual) + " > " +
                                 format_double(tol_vieta * scale));
      }
    }
    auto os = run.open_csv("boole_in" + std::to_string(i) + ".csv");
    write_boole_csv(os, rows);
    auto vs = run.open_csv("vieta_in" + std::to_string(i) + ".csv");
    write_vieta_csv(vs, vieta_rows);
  }
  return run.finish("boole-check");
}

int run_weak_type(const CommonOpts& common, const std::string& seq, std::string kind,
                  std::string lambdas) {
  const json cfg = common.load("weak-type");
  const auto inputs = config_inputs(cfg, seq);
  kind = config_value<std::string>(cfg, "kind", kind);
  lambdas = config_value<std::string>(cfg, "lambdas", lambdas);
  if (lambdas.empty()) throw ConfigError("weak-type: missing \"lambdas\"");
  if (kind != "full" && kind != "maximal") {
    throw ConfigError("weak-type: field \"kind\" must be full or maximal");
  }
  const auto grid = parse_lambdas(lambdas);
  const auto transform_kind = kind == "full" ? TransformKind::full : TransformKind::maximal;

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"kind", kind}, {"lambdas", lambdas}};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto a = resolve_sequence(inputs[i]);
    auto os = run.open_csv("weaktype_in" + std::to_string(i) + ".csv");
    write_weak_type_csv(os, kind, weak_type_report(a, grid, transform_kind));
  }
  return run.finish("weak-type");
}

int run_complete_conv(const CommonOpts& common, const std::string& seq, double lambda,
                      std::int64_t horizon) {
  const json cfg = common.load("complete-conv");
  const auto inputs = config_inputs(cfg, seq);
  lambda = config_value<double>(cfg, "lambda", lambda);
  horizon = config_value<std::int64_t>(cfg, "horizon", horizon);
  if (!(lambda > 0.0)) throw ConfigError("complete-conv: field \"lambda\" must be > 0");
  if (horizon < 1) throw ConfigError("complete-conv: field \"horizon\" must be >= 1");

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"lambda", lambda}, {"horizon", horizon}};
  json growth = json::array();
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto a = resolve_sequence(inputs[i]);
    const auto report = partial_sum_S(a, lambda, horizon);
    auto os = run.open_csv("completeconv_in" + std::to_string(i) + ".csv");
    write_complete_convergence_csv(os, report);
    json entry = {{"input", inputs[i]},
                  {"partial_sum", report.partial_sum},
                  {"bound_value", report.bound_value},
                  {"linear_growth", report.linear_growth}};
    if (report.stabilized_at) entry["stabilized_at"] = *report.stabilized_at;
    growth.push_back(entry);
  }
  run.parameters["growth"] = growth;
  return run.finish("complete-conv");
}

int run_hypothesis(const CommonOpts& common, const std::string& seq, double lambda,
                   std::string translates, std::int64_t horizon) {
  const json cfg = common.load("hypothesis");
  const auto inputs = config_inputs(cfg, seq);
  lambda = config_value<double>(cfg, "lambda", lambda);
  translates = config_value<std::string>(cfg, "translates", translates);
  horizon = config_value<std::int64_t>(cfg, "horizon", horizon);
  if (!(lambda > 0.0)) throw ConfigError("hypothesis: field \"lambda\" must be > 0");
  if (horizon < 1) throw ConfigError("hypothesis: field \"horizon\" must be >= 1");
  if (translates.empty()) throw ConfigError("hypothesis: missing \"translates\"");

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.inputs = inputs;
  run.parameters = {{"lambda", lambda}, {"translates", translates}, {"horizon", horizon}};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    const auto a = resolve_sequence(inputs[i]);
    const auto spec = resolve_translates(translates, horizon, a, lambda);
    const auto result = hypothesis_test(a, lambda, spec);
    auto os = run.open_csv("hypothesis_in" + std::to_string(i) + ".csv");
    write_hypothesis_csv(os, lambda, result);
  }
  return run.finish("hypothesis");
}

int run_ergodic(const CommonOpts& common, const std::string& system,
                const std::string& observable,
                double lambda, std::int64_t horizon) {
  const json cfg = common.load("ergodic");
  std::vector<std::pair<std::string, std::string>> inputs;
  if (cfg.contains("inputs")) {
    const auto& in = cfg.at("inputs");
    if (!in.is_array() || in.empty()) {
      throw ConfigError("config: field \"inputs\" must be a non-empty array");
    }
    for (const auto& item : in) {
      if (!item.contains("system") || !item.contains("observable")) {
        throw ConfigError("config: ergodic inputs need \"system\" and \"observable\"");
      }
      inputs.emplace_back(item.at("system").get<std::string>(),
                          item.at("observable").get<std::string>());
    }
  } else {
    inputs.emplace_back(system, observable);
  }
  lambda = config_value<double>(cfg, "lambda", lambda);
  horizon = config_value<std::int64_t>(cfg, "horizon", horizon);
  if (!(lambda > 0.0)) throw ConfigError("ergodic: field \"lambda\" must be > 0");
  if (horizon < 1) throw ConfigError("ergodic: field \"horizon\" must be >= 1");

  RunContext run(config_value<std::string>(cfg, "out", common.out));
  run.parameters = {{"lambda", lambda}, {"horizon", horizon}};
  for (std::size_t i = 0; i < inputs.size(); ++i) {
    run.inputs.push_back(inputs[i].first + " / " + inputs[i].second);
    const auto sys = resolve_system(inputs[i].first);
    const auto f = resolve_observable(inputs[i].second, sys.size());
    const auto report = ergodic_complete_sum(sys, f, lambda, horizon);
    auto os = run.open_csv("ergodic_in" + std::to_string(i) + ".csv");
    write_ergodic_csv(os, report);
  }
  return run.finish("ergodic");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"discrete and ergodic Hilbert transform laboratory"};
  app.require_subcommand(1);

  CommonOpts common;
  const auto add_common = [&common](CLI::App* cmd) {
    cmd->add_option("--out", common.out, "output directory for reports")
        ->envname("HILBERTLAB_OUT");
    cmd->add_option("--config", common.config, "JSON config replacing the flags");
  };

  std::string seq;
  std::string poles;
  std::string system;
  std::string observable;
  std::string kind = "full";
  std::string lambdas;
  std::string window;
  std::string translates = "zero";
  double lambda = 1.0;
  std::int64_t n = 1;
  std::int64_t horizon = 10;
  std::optional<std::int64_t> maximal_horizon;
  double tol_measure = 1e-9;
  double tol_vieta = 1e-8;

  auto* transform_cmd = app.add_subcommand("transform", "truncated transform over a window");
  transform_cmd->add_option("--seq", seq, "sequence file or generator");
  transform_cmd->add_option("--n", n, "truncation index");
  transform_cmd->add_option("--window", window, "evaluation window LO..HI");
  add_common(transform_cmd);

  auto* maximal_cmd = app.add_subcommand("maximal", "maximal transform and its level set");
  maximal_cmd->add_option("--seq", seq, "sequence file or generator");
  maximal_cmd->add_option("--lambda", lambda, "level-set threshold");
  maximal_cmd->add_option("--horizon", maximal_horizon, "restrict to truncation levels <= N");
  add_common(maximal_cmd);

  auto* boole_cmd = app.add_subcommand("boole-check", "exact level-set identity for pole sums");
  boole_cmd->add_option("--poles", poles, "pole-sum JSON file");
  boole_cmd->add_option("--lambdas", lambdas, "thresholds: list or log:LO..HI:COUNT");
  boole_cmd->add_option("--tol-measure", tol_measure, "relative tolerance on the measure");
  boole_cmd->add_option("--tol-vieta", tol_vieta, "scale tolerance on the root-sum residual");
  add_common(boole_cmd);

  auto* weak_cmd = app.add_subcommand("weak-type", "level-set counts and normalized ratios");
  weak_cmd->add_option("--seq", seq, "sequence file or generator");
  weak_cmd->add_option("--kind", kind, "full or maximal");
  weak_cmd->add_option("--lambdas", lambdas, "thresholds: list or log:LO..HI:COUNT");
  add_common(weak_cmd);

  auto* cc_cmd = app.add_subcommand("complete-conv", "partial sums of exceedance counts");
  cc_cmd->add_option("--seq", seq, "sequence file or generator");
  cc_cmd->add_option("--lambda", lambda, "level-set threshold");
  cc_cmd->add_option("--horizon", horizon, "number of truncation levels");
  add_common(cc_cmd);

  auto* hyp_cmd = app.add_subcommand("hypothesis", "translated-block maximal comparison");
  hyp_cmd->add_option("--seq", seq, "sequence file or generator");
  hyp_cmd->add_option("--lambda", lambda, "level-set threshold");
  hyp_cmd->add_option("--translates", translates, "zero | linear:c=C | greedy | JSON file");
  hyp_cmd->add_option("--horizon", horizon, "number of blocks");
  add_common(hyp_cmd);

  auto* ergodic_cmd = app.add_subcommand("ergodic", "complete-convergence sums on a finite system");
  ergodic_cmd->add_option("--system", system, "system file or generator");
  ergodic_cmd->add_option("--observable", observable, "observable file or generator");
  ergodic_cmd->add_option("--lambda", lambda, "level-set threshold");
  ergodic_cmd->add_option("--horizon", horizon, "number of truncation levels");
  add_common(ergodic_cmd);

  CLI11_PARSE(app, argc, argv);

  try {
    if (transform_cmd->parsed()) return run_transform(common, seq, n, window);
    if (maximal_cmd->parsed()) return run_maximal(common, seq, lambda, maximal_horizon);
    if (boole_cmd->parsed()) return run_boole_check(common, poles, lambdas, tol_measure, tol_vieta);
    if (weak_cmd->parsed()) return run_weak_type(common, seq, kind, lambdas);
    if (cc_cmd->parsed()) return run_complete_conv(common, seq, lambda, horizon);
    if (hyp_cmd->parsed()) return run_hypothesis(common, seq, lambda, translates, horizon);
    if (ergodic_cmd->parsed()) return run_ergodic(common, system, observable, lambda, horizon);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
