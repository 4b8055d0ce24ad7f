// Command-line front end: check, suite, classify, falsify, paper-examples,
// coverage.
//
// Exit status: 0 when every verdict is as expected, 1 when a checker
// reports a violation the theorem rules out (or a pinned expectation
// fails), 2 on malformed input.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>

#include "opineq/falsify.hpp"
#include "opineq/scenario.hpp"
#include "opineq/suite.hpp"

using namespace opineq;

namespace {

constexpr int kOk = 0;
constexpr int kViolation = 1;
constexpr int kInputError = 2;

struct IntervalFlag {
  std::vector<double> bounds;
  void apply(SpectralInterval& iv) const {
    if (!bounds.empty()) iv = SpectralInterval(bounds.at(0), bounds.at(1));
  }
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::config_invalid, "cannot write '" + out_path + "'");
  f << text;
}

int cmd_check(const std::string& path) {
  const ScenarioOutcome o = run_scenario(read_document(path));
  std::cout << dump17(to_json(o)) << '\n';
  return o.expectation_met && !o.unexpected_violation ? kOk : kViolation;
}

struct SuiteFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<int> trials, dim_min, dim_max, grid, threads;
  IntervalFlag interval;
  std::vector<std::string> theorems;
  std::string out = "suite_out";
  std::string format = "json";
};

int cmd_suite(const SuiteFlags& fl) {
  TrialConfig c = fl.config_path.empty() ? TrialConfig{} : config_from_json(read_document(fl.config_path));
  if (fl.seed) c.seed = *fl.seed;
  if (fl.trials) c.trials = *fl.trials;
  if (fl.dim_min) c.dim_min = *fl.dim_min;
  if (fl.dim_max) c.dim_max = *fl.dim_max;
  if (fl.grid) c.grid_n = *fl.grid;
  if (fl.threads) c.threads = *fl.threads;
  if (!fl.theorems.empty()) c.theorem_ids = fl.theorems;
  fl.interval.apply(c.interval);
  const SuiteResult r = run_suite(c);
  write_suite_outputs(r, fl.out);
  std::cout << (fl.format == "csv" ? summary_csv(r.summary) : summary_jsonl(r.summary));
  std::fprintf(stderr, "suite: %d trials in %.3f s\n", c.trials, r.summary.wall_seconds);
  return r.summary.total_violated() == 0 ? kOk : kViolation;
}

// {"interval": [g, G], "f": .., "g": .., "h": .., "grid": n, "r": [..]}
int cmd_classify(const std::string& path, const std::string& out) {
  const json doc = read_document(path);
  if (!doc.is_object() || !doc.contains("f") || !doc.contains("interval"))
    throw Error(ErrorKind::parse_error, "classify needs 'f' and 'interval'");
  const SpectralInterval iv = interval_from_json(doc["interval"]);
  const int grid = doc.value("grid", default_grid);
  const ScalarFunction f = function_from_json(doc["f"]);
  const ScalarFunction h = doc.contains("h") ? function_from_json(doc["h"]) : ScalarFunction::constant(1.0);
  json result = {{"interval", to_json(iv)}, {"grid", grid}};
  if (doc.contains("g")) {
    const ScalarFunction g = function_from_json(doc["g"]);
    result["synchrony"] = to_json(classify_synchrony(f, g, h, iv, grid));
    if (doc.contains("r")) {
      const auto r = doc["r"].get<std::vector<double>>();
      json rows = json::array();
      for (const auto& s : scan_tr_regions(f, g, r, iv, grid))
        rows.push_back({{"r", s.r}, {"classification", std::string(to_string(s.verdict.classification))},
                        {"min_product", s.verdict.min_product}, {"max_product", s.verdict.max_product}});
      result["regions"] = rows;
    }
  }
  result["monotonicity"] = to_json(classify_monotonicity(f, h, iv, grid));
  if (doc.contains("r")) {
    const auto r = doc["r"].get<std::vector<double>>();
    json rows = json::array();
    for (const auto& s : scan_tr_monotonicity(f, r, iv, grid))
      rows.push_back({{"r", s.r}, {"classification", std::string(to_string(s.verdict.classification))},
                      {"min_defect", s.verdict.min_defect}, {"max_defect", s.verdict.max_defect}});
    result["monotonicity_regions"] = rows;
  }
  emit(dump17(result) + "\n", out);
  return kOk;
}

struct FalsifyFlags {
  std::string theorem;
  std::string drop = "none";
  long budget = 100000;
  std::uint64_t seed = 0;
  IntervalFlag interval;
  int dim_min = 2, dim_max = 4, grid = default_grid;
  std::string pool_path;
  std::string out;
};

int cmd_falsify(const FalsifyFlags& fl) {
  FalsifyConfig c;
  c.theorem_id = fl.theorem;
  c.drop = drop_from_string(fl.drop);
  c.budget = fl.budget;
  c.seed = fl.seed;
  c.dim_min = fl.dim_min;
  c.dim_max = fl.dim_max;
  c.grid_n = fl.grid;
  fl.interval.apply(c.interval);
  if (!fl.pool_path.empty()) {
    const json pool = read_document(fl.pool_path);
    if (!pool.is_array()) throw Error(ErrorKind::parse_error, "pool file must hold a list of functions");
    for (const auto& f : pool) c.pool.push_back(function_from_json(f));
  }
  const FalsifyResult r = falsify(c);
  emit(dump17(to_json(r)) + "\n", fl.out);
  // With every hypothesis in place a counterexample contradicts the theorem.
  return r.found && c.drop == DropHypothesis::none ? kViolation : kOk;
}

int cmd_examples() {
  int failures = 0;
  for (const auto& s : scenario_library()) {
    ScenarioOutcome o;
    try {
      o = run_scenario(s.doc);
    } catch (const Error& e) {
      std::cout << "FAIL " << s.name << ": " << e.what() << '\n';
      ++failures;
      continue;
    }
    const bool ok = o.expectation_met && !o.unexpected_violation;
    std::cout << (ok ? "PASS " : "FAIL ") << s.name;
    for (const auto& m : o.mismatches) std::cout << " | " << m;
    std::cout << '\n';
    if (!ok) ++failures;
  }
  for (const auto& id : uncovered_theorems()) {
    std::cout << "FAIL coverage: no scenario for " << id << '\n';
    ++failures;
  }
  std::cout << scenario_library().size() << " scenarios, " << failures << " failures\n";
  return failures == 0 ? kOk : kViolation;
}

int cmd_coverage() {
  json manifest = json::object();
  for (const auto& [id, names] : coverage_manifest()) manifest[id] = names;
  std::cout << manifest.dump(2) << '\n';
  const auto missing = uncovered_theorems();
  for (const auto& id : missing) std::cerr << "no scenario covers " << id << '\n';
  return missing.empty() ? kOk : kViolation;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Operator Čebyšev / Pompeiu–Čebyšev inequality checker"};
  app.require_subcommand(1);

  std::string scenario_path;
  auto* check = app.add_subcommand("check", "evaluate one scenario file");
  check->add_option("scenario", scenario_path, "scenario JSON")->required();

  SuiteFlags sf;
  auto* suite = app.add_subcommand("suite", "run the randomized property suite");
  suite->add_option("config", sf.config_path, "suite config JSON");
  suite->add_option("--seed", sf.seed);
  suite->add_option("--trials", sf.trials);
  suite->add_option("--dim-min", sf.dim_min);
  suite->add_option("--dim-max", sf.dim_max);
  suite->add_option("--interval", sf.interval.bounds, "gamma Gamma")->expected(2);
  suite->add_option("--grid", sf.grid);
  suite->add_option("--theorems", sf.theorems)->delimiter(',');
  suite->add_option("--threads", sf.threads);
  suite->add_option("--out", sf.out, "output directory");
  suite->add_option("--format", sf.format, "stdout summary format")->check(CLI::IsMember({"json", "csv"}));

  std::string classify_path, classify_out;
  auto* classify = app.add_subcommand("classify", "synchrony and monotonicity scan of a function set");
  classify->add_option("functions", classify_path, "functions JSON")->required();
  classify->add_option("--out", classify_out, "output file");

  FalsifyFlags ff;
  auto* fals = app.add_subcommand("falsify", "search for a counterexample with a hypothesis dropped");
  fals->add_option("--theorem", ff.theorem)->required();
  fals->add_option("--drop", ff.drop, "none|synchrony|spectral-containment|normalization");
  fals->add_option("--budget", ff.budget);
  fals->add_option("--seed", ff.seed);
  fals->add_option("--interval", ff.interval.bounds, "gamma Gamma")->expected(2);
  fals->add_option("--dim-min", ff.dim_min);
  fals->add_option("--dim-max", ff.dim_max);
  fals->add_option("--grid", ff.grid);
  fals->add_option("--pool", ff.pool_path, "JSON list of function literals");
  fals->add_option("--out", ff.out, "output file");

  auto* examples = app.add_subcommand("paper-examples", "run the pinned scenario library");
  examples->alias("examples");

  auto* coverage = app.add_subcommand("coverage", "list theorem ids and the scenarios that cover them");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*check) return cmd_check(scenario_path);
    if (*suite) return cmd_suite(sf);
    if (*classify) return cmd_classify(classify_path, classify_out);
    if (*fals) return cmd_falsify(ff);
    if (*examples) return cmd_examples();
    if (*coverage) return cmd_coverage();
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  } catch (const json::exception& e) {
    std::cerr << "error: ParseError: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
