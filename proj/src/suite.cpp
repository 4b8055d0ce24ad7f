#include "opineq/suite.hpp"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <thread>

namespace opineq {

std::vector<ScalarFunction> default_function_pool() {
  return {ScalarFunction::constant(1.0), ScalarFunction::identity(),     ScalarFunction::power(2.0),
          ScalarFunction::power(0.5),    ScalarFunction::power(-1.0),    ScalarFunction::log(),
          ScalarFunction::exp(),         ScalarFunction::affine(2.0, 1.0), ScalarFunction::power(3.0)};
}

namespace {

const ScalarFunction& pick(Rng& rng, const std::vector<ScalarFunction>& pool) {
  return pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
}

Eigen::Index draw_dim(Rng& rng, const DrawSettings& settings) { return rng.uniform_int(settings.dim_min, settings.dim_max); }

}  // namespace

Inputs draw_inputs(const TheoremInfo& info, Rng& rng, const DrawSettings& settings) {
  Inputs in;
  switch (info.family) {
    case Family::kantorovich:
    case Family::ensemble_inverse_bound:
    case Family::ensemble_kantorovich:
    case Family::discrete_chebyshev:
      break;
    default:
      in.f = pick(rng, settings.pool);
      in.g = pick(rng, settings.pool);
      in.h = pick(rng, settings.pool);
      break;
  }
  switch (info.family) {
    case Family::pompeiu_sign:
    case Family::weighted_cauchy:
    case Family::kantorovich:
    case Family::pompeiu_refined:
    case Family::inverse_pair:
      in.a = random_operator(rng, draw_dim(rng, settings), settings.interval);
      in.x = random_state(rng, in.a->dim());
      break;
    case Family::two_operator:
      in.a = random_operator(rng, draw_dim(rng, settings), settings.interval);
      in.x = random_state(rng, in.a->dim());
      in.b = random_operator(rng, draw_dim(rng, settings), settings.interval);
      in.y = random_state(rng, in.b->dim());
      break;
    case Family::ensemble_sign:
    case Family::ensemble_refined:
      in.ensemble = random_ensemble(rng, rng.uniform_int(1, settings.max_ensemble), settings.dim_min, settings.dim_max,
                                    settings.interval, Normalization::sum_of_squares);
      break;
    case Family::ensemble_inverse_bound:
    case Family::ensemble_kantorovich:
      in.ensemble = random_ensemble(rng, rng.uniform_int(1, settings.max_ensemble), settings.dim_min, settings.dim_max,
                                    settings.interval, Normalization::per_vector);
      break;
    case Family::discrete_chebyshev: {
      const int n = rng.uniform_int(2, 6);
      for (int i = 0; i < n; ++i) {
        in.tuple_a.push_back(rng.uniform(settings.interval.lower(), settings.interval.upper()));
        in.tuple_b.push_back(rng.uniform(settings.interval.lower(), settings.interval.upper()));
      }
      if (rng.uniform() < 0.5) {
        std::sort(in.tuple_a.begin(), in.tuple_a.end());
        std::sort(in.tuple_b.begin(), in.tuple_b.end());
      }
      break;
    }
  }
  specialize(info, in);
  return in;
}

std::vector<std::string> report_ids(const TheoremInfo& info) {
  switch (info.family) {
    case Family::kantorovich:
      return {"kantorovich_lower", "kantorovich_upper"};
    case Family::ensemble_kantorovich:
      return {info.id + ".lower", info.id + ".middle", info.id + ".upper"};
    default:
      return {info.id};
  }
}

void TrialConfig::validate() const {
  auto fail = [](const std::string& m) { throw Error(ErrorKind::config_invalid, m); };
  if (trials < 1) fail("trials must be >= 1");
  if (dim_min < 1 || dim_max > 16 || dim_min > dim_max) fail("dimension range must satisfy 1 <= min <= max <= 16");
  if (grid_n < 2) fail("grid must have at least 2 points");
  if (threads < 1) fail("threads must be >= 1");
  for (const auto& id : theorem_ids) {
    const TheoremInfo* info = nullptr;
    try {
      info = &theorem_info(id);
    } catch (const Error& e) {
      fail(e.what());
    }
    if (info->needs_positive_interval && !interval.positive())
      fail("theorem '" + id + "' needs a positive spectral interval");
  }
}

TrialConfig config_from_json(const json& j) {
  if (!j.is_object()) throw Error(ErrorKind::config_invalid, "suite config must be a JSON object");
  TrialConfig c;
  try {
    if (j.contains("seed")) c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("trials")) c.trials = j["trials"].get<int>();
    if (j.contains("dim_min")) c.dim_min = j["dim_min"].get<int>();
    if (j.contains("dim_max")) c.dim_max = j["dim_max"].get<int>();
    if (j.contains("grid")) c.grid_n = j["grid"].get<int>();
    if (j.contains("threads")) c.threads = j["threads"].get<int>();
    if (j.contains("theorems")) c.theorem_ids = j["theorems"].get<std::vector<std::string>>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::config_invalid, e.what());
  }
  if (j.contains("interval")) c.interval = interval_from_json(j["interval"]);
  if (j.contains("function_pool")) {
    if (!j["function_pool"].is_array()) throw Error(ErrorKind::config_invalid, "'function_pool' must be a list");
    for (const auto& f : j["function_pool"]) c.function_pool.push_back(function_from_json(f));
  }
  c.validate();
  return c;
}

json to_json(const TrialConfig& c) {
  json pool = json::array();
  for (const auto& f : c.function_pool) pool.push_back(to_json(f));
  return {{"seed", c.seed},         {"trials", c.trials}, {"dim_min", c.dim_min},
          {"dim_max", c.dim_max},   {"interval", to_json(c.interval)},
          {"function_pool", pool},  {"grid", c.grid_n},   {"theorems", c.theorem_ids}};
}

long SuiteSummary::total_violated() const {
  long n = 0;
  for (const auto& t : tallies) n += t.violated;
  return n;
}

namespace {

struct Plan {
  std::vector<const TheoremInfo*> theorems;
  std::vector<std::size_t> first_tally;  // index of each theorem's first report tally
  std::vector<ReportTally> blank;
  DrawSettings settings;
  CheckOptions opts;
};

Plan make_plan(const TrialConfig& c) {
  Plan p;
  if (c.theorem_ids.empty()) {
    for (const auto& t : theorem_registry())
      if (!t.needs_positive_interval || c.interval.positive()) p.theorems.push_back(&t);
  } else {
    for (const auto& id : c.theorem_ids) p.theorems.push_back(&theorem_info(id));
  }
  for (const TheoremInfo* t : p.theorems) {
    p.first_tally.push_back(p.blank.size());
    for (auto& rid : report_ids(*t)) p.blank.push_back(ReportTally{.report_id = rid, .theorem_id = t->id, .worst_bundle = {}});
  }
  p.settings.interval = c.interval;
  p.settings.dim_min = c.dim_min;
  p.settings.dim_max = c.dim_max;
  if (!c.function_pool.empty()) {
    p.settings.pool = c.function_pool;
  } else {
    // Keep the default functions that are defined across the interval.
    const auto grid = uniform_grid(c.interval, 33);
    for (const auto& f : default_function_pool())
      if (std::all_of(grid.begin(), grid.end(), [&](double s) { return f.defined_at(s); })) p.settings.pool.push_back(f);
  }
  if (p.settings.pool.empty()) throw Error(ErrorKind::config_invalid, "function pool is empty on this interval");
  p.opts.grid_n = c.grid_n;
  return p;
}

struct Chunk {
  std::vector<ReportTally> tallies;
  std::string lines;
};

json bundle_for(const TheoremInfo& info, const Inputs& in, const CheckOptions& opts,
                const std::vector<InequalityReport>& reports, long trial) {
  Inputs fixed = in;
  if (!reports.empty() && info.family != Family::kantorovich && info.family != Family::ensemble_kantorovich &&
      info.family != Family::ensemble_inverse_bound && info.family != Family::discrete_chebyshev)
    fixed.direction = reports.front().direction;
  json doc = scenario_from_inputs(info, fixed, opts);
  doc["name"] = info.id + "_trial_" + std::to_string(trial);
  json expect = json::array();
  for (const auto& r : reports)
    expect.push_back({{"report", r.theorem_id}, {"verdict", std::string(to_string(r.verdict))}, {"gap", r.gap}});
  doc["expect"] = expect;
  return doc;
}

void tally(ReportTally& t, const InequalityReport& r, long trial, const json* bundle) {
  switch (r.verdict) {
    case Verdict::holds:
      ++t.holds;
      if (r.gap < 0.0) ++t.near_miss;
      break;
    case Verdict::violated: ++t.violated; break;
    case Verdict::hypothesis_not_met: ++t.not_met; return;
  }
  if (r.gap < t.worst_gap) {
    t.worst_gap = r.gap;
    t.worst_trial = trial;
    t.worst_bundle = bundle ? *bundle : json(nullptr);
  }
}

void run_trial(const Plan& plan, const TrialConfig& c, long trial, Chunk& out) {
  Rng rng = Rng::for_trial(c.seed, static_cast<std::uint64_t>(trial));
  for (std::size_t ti = 0; ti < plan.theorems.size(); ++ti) {
    const TheoremInfo& info = *plan.theorems[ti];
    const Inputs in = draw_inputs(info, rng, plan.settings);
    std::vector<InequalityReport> reports;
    std::optional<ErrorKind> error;
    try {
      reports = evaluate(info, in, plan.opts);
    } catch (const Error& e) {
      // Instances outside a theorem's standing assumptions count as unmet hypotheses.
      if (e.kind() != ErrorKind::domain_violation && e.kind() != ErrorKind::not_similarly_ordered) throw;
      error = e.kind();
    }
    const auto ids = report_ids(info);
    std::optional<json> bundle;
    for (std::size_t k = 0; k < ids.size(); ++k) {
      ReportTally& t = out.tallies[plan.first_tally[ti] + k];
      json line = {{"trial", trial}, {"theorem", info.id}, {"report", ids[k]}};
      if (error) {
        ++t.not_met;
        line["verdict"] = std::string(to_string(Verdict::hypothesis_not_met));
        line["error"] = std::string(to_string(*error));
      } else {
        const InequalityReport& r = reports[k];
        const bool candidate = r.verdict != Verdict::hypothesis_not_met && r.gap < t.worst_gap;
        if ((candidate || r.verdict == Verdict::violated) && !bundle) bundle = bundle_for(info, in, plan.opts, reports, trial);
        tally(t, r, trial, candidate ? &*bundle : nullptr);
        line["direction"] = std::string(to_string(r.direction));
        line["verdict"] = std::string(to_string(r.verdict));
        line["lhs"] = r.lhs;
        line["rhs"] = r.rhs;
        line["gap"] = r.gap;
        line["tolerance"] = r.tolerance;
        line["synchrony"] = r.hypothesis_evidence
                                ? json(std::string(to_string(r.hypothesis_evidence->classification)))
                                : json(nullptr);
        if (r.verdict == Verdict::violated) line["bundle"] = *bundle;
      }
      out.lines += dump17(line);
      out.lines += '\n';
    }
  }
}

void merge(std::vector<ReportTally>& into, const std::vector<ReportTally>& from) {
  for (std::size_t i = 0; i < into.size(); ++i) {
    ReportTally& a = into[i];
    const ReportTally& b = from[i];
    a.holds += b.holds;
    a.violated += b.violated;
    a.not_met += b.not_met;
    a.near_miss += b.near_miss;
    // Chunks arrive in trial order, so strict < keeps the earliest trial on ties.
    if (b.worst_gap < a.worst_gap) {
      a.worst_gap = b.worst_gap;
      a.worst_trial = b.worst_trial;
      a.worst_bundle = b.worst_bundle;
    }
  }
}

}  // namespace

SuiteResult run_suite(const TrialConfig& config) {
  config.validate();
  const auto start = std::chrono::steady_clock::now();
  const Plan plan = make_plan(config);

  const int workers = std::max(1, std::min(config.threads, config.trials));
  std::vector<Chunk> chunks(static_cast<std::size_t>(workers));
  std::vector<std::exception_ptr> errors(chunks.size());
  auto work = [&](int w) {
    Chunk& chunk = chunks[static_cast<std::size_t>(w)];
    chunk.tallies = plan.blank;
    const long lo = static_cast<long>(config.trials) * w / workers;
    const long hi = static_cast<long>(config.trials) * (w + 1) / workers;
    try {
      for (long k = lo; k < hi; ++k) run_trial(plan, config, k, chunk);
    } catch (...) {
      errors[static_cast<std::size_t>(w)] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);

  SuiteResult out;
  out.summary.config = config;
  if (out.summary.config.function_pool.empty()) out.summary.config.function_pool = plan.settings.pool;
  out.summary.tallies = plan.blank;
  for (auto& chunk : chunks) {
    merge(out.summary.tallies, chunk.tallies);
    out.report_lines += chunk.lines;
  }
  out.summary.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

namespace {

json worst_gap_json(const ReportTally& t) { return t.worst_trial < 0 ? json(nullptr) : json(t.worst_gap); }

}  // namespace

std::string summary_jsonl(const SuiteSummary& s) {
  std::string out = dump17(json{{"config", to_json(s.config)}}) + "\n";
  for (const auto& t : s.tallies) {
    out += dump17(json{{"report", t.report_id},
                       {"theorem", t.theorem_id},
                       {"trials", t.total()},
                       {"holds", t.holds},
                       {"violated", t.violated},
                       {"hypothesis_not_met", t.not_met},
                       {"near_miss", t.near_miss},
                       {"worst_gap", worst_gap_json(t)},
                       {"worst_trial", t.worst_trial},
                       {"worst_bundle", t.worst_bundle}});
    out += '\n';
  }
  return out;
}

std::string summary_csv(const SuiteSummary& s) {
  std::string out = "report,theorem,trials,holds,violated,hypothesis_not_met,near_miss,worst_gap,worst_trial\n";
  for (const auto& t : s.tallies) {
    out += t.report_id + ',' + t.theorem_id + ',' + std::to_string(t.total()) + ',' + std::to_string(t.holds) + ',' +
           std::to_string(t.violated) + ',' + std::to_string(t.not_met) + ',' + std::to_string(t.near_miss) + ',' +
           (t.worst_trial < 0 ? std::string() : format17(t.worst_gap)) + ',' + std::to_string(t.worst_trial) + '\n';
  }
  return out;
}

void write_suite_outputs(const SuiteResult& r, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto write = [&](const char* name, const std::string& text) {
    std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
    if (!f) throw Error(ErrorKind::config_invalid, "cannot write into '" + dir + "'");
    f << text;
  };
  write("reports.jsonl", r.report_lines);
  write("summary.jsonl", summary_jsonl(r.summary));
  write("summary.csv", summary_csv(r.summary));
}

}  // namespace opineq
