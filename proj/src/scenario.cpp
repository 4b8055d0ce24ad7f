#include "opineq/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace opineq {

const std::vector<TheoremInfo>& theorem_registry() {
  static const std::vector<TheoremInfo> registry = [] {
    using F = Family;
    std::vector<TheoremInfo> r;
    auto add = [&](std::string id, Family fam, std::string summary) -> TheoremInfo& {
      r.push_back(TheoremInfo{.id = std::move(id), .family = fam, .summary = std::move(summary)});
      return r.back();
    };
    add("cebysev_sign", F::pompeiu_sign, "<f(A)g(A)x,x> >= (<=) <f(A)x,x><g(A)x,x> for synchronous (asynchronous) f, g")
        .h_is_one = true;
    add("cebysev_refined", F::pompeiu_refined, "Čebyšev functional bounded below by the <Ax,x> point corrections")
        .h_is_one = true;
    add("pc_sign", F::pompeiu_sign, "sign of the Pompeiu–Čebyšev functional for h-synchronous f, g");
    add("pc_self", F::weighted_cauchy, "<h(A)f(A)x,x>^2 <= <h^2(A)x,x><f^2(A)x,x>").g_is_f = true;
    {
      auto& t = add("pc_sign_h_identity", F::pompeiu_sign, "<A^2x,x><f(A)g(A)x,x> >= (<=) <Ag(A)x,x><Af(A)x,x>");
      t.h_is_identity = true;
      t.needs_positive_interval = true;
    }
    add("pc_sign_g_one", F::pompeiu_sign, "<h^2(A)x,x><f(A)x,x> >= <h(A)x,x><h(A)f(A)x,x>").g_is_one = true;
    {
      auto& t = add("pc_sign_g_one_h_identity", F::pompeiu_sign, "<A^2x,x><f(A)x,x> >= <Ax,x><Af(A)x,x>");
      t.g_is_one = true;
      t.h_is_identity = true;
      t.needs_positive_interval = true;
    }
    add("kantorovich", F::kantorovich, "1 <= <A^-1x,x><Ax,x> <= (γ+Γ)^2/(4γΓ)").needs_positive_interval = true;
    add("two_operator", F::two_operator, "mixed A, B / x, y form of the Pompeiu–Čebyšev sign inequality");
    add("pc_refined", F::pompeiu_refined, "Pompeiu–Čebyšev functional refined by the scalar point <Ax,x>");
    add("pc_refined_self", F::pompeiu_refined, "refined form with g = f").g_is_f = true;
    {
      auto& t = add("pc_refined_self_h_identity", F::pompeiu_refined, "refined form with g = f and h(t) = t");
      t.g_is_f = true;
      t.h_is_identity = true;
      t.needs_positive_interval = true;
    }
    add("inverse_pair", F::inverse_pair, "scalar inequality in <Ax,x> and <A^-1x,x>").needs_positive_interval = true;
    {
      auto& t = add("inverse_pair_self", F::inverse_pair, "scalar inverse-pair inequality with g = f");
      t.g_is_f = true;
      t.needs_positive_interval = true;
    }
    add("ensemble_pc_sign", F::ensemble_sign, "n-operator Pompeiu–Čebyšev sign inequality");
    add("ensemble_pc_self", F::ensemble_sign, "n-operator weighted Cauchy–Schwarz form (g = f)").g_is_f = true;
    {
      auto& t = add("ensemble_pc_self_h_identity", F::ensemble_sign, "n-operator form with g = f and h(t) = t");
      t.g_is_f = true;
      t.h_is_identity = true;
      t.needs_positive_interval = true;
    }
    add("ensemble_pc_refined", F::ensemble_refined, "n-operator refined form at sum <A_j x_j, x_j>");
    add("ensemble_pc_refined_self", F::ensemble_refined, "n-operator refined form with g = f").g_is_f = true;
    {
      auto& t = add("ensemble_pc_refined_self_h_identity", F::ensemble_refined,
                    "n-operator refined form with g = f and h(t) = t");
      t.g_is_f = true;
      t.h_is_identity = true;
      t.needs_positive_interval = true;
    }
    add("ensemble_inverse_bound", F::ensemble_inverse_bound, "n^2 <= sum<A_j x_j,x_j> sum<A_j^-1 x_j,x_j>")
        .needs_positive_interval = true;
    add("ensemble_kantorovich_chain", F::ensemble_kantorovich,
        "1 <= mean(a) mean(b) <= mean(ab) <= mean(K_j), a_j = <A_j x_j,x_j>, b_j = <A_j^-1 x_j,x_j>")
        .needs_positive_interval = true;
    add("discrete_chebyshev", F::discrete_chebyshev, "mean(ab) >= mean(a) mean(b) for similarly ordered tuples");
    return r;
  }();
  return registry;
}

const TheoremInfo& theorem_info(const std::string& id) {
  for (const auto& t : theorem_registry())
    if (t.id == id) return t;
  throw Error(ErrorKind::unknown_theorem, "no theorem with id '" + id + "'");
}

void specialize(const TheoremInfo& info, Inputs& in) {
  if (info.h_is_one) in.h = ScalarFunction::constant(1.0);
  if (info.h_is_identity) in.h = ScalarFunction::identity();
  if (info.g_is_one) in.g = ScalarFunction::constant(1.0);
  if (info.g_is_f && in.f) in.g = in.f;
}

std::optional<Direction> supported_direction(const ScalarFunction& f, const ScalarFunction& g,
                                             const ScalarFunction& h, const SpectralInterval& interval, int grid_n) {
  const SynchronyVerdict v = classify_synchrony(f, g, h, interval, grid_n);
  if (v.supports(Direction::geq)) return Direction::geq;
  if (v.supports(Direction::leq)) return Direction::leq;
  return std::nullopt;
}

namespace {

template <class T>
const T& need(const std::optional<T>& v, const char* what) {
  if (!v) throw Error(ErrorKind::parse_error, std::string("missing input: ") + what);
  return *v;
}

bool uses_functions(Family fam) {
  switch (fam) {
    case Family::kantorovich:
    case Family::ensemble_inverse_bound:
    case Family::ensemble_kantorovich:
    case Family::discrete_chebyshev:
      return false;
    default:
      return true;
  }
}

// Interval over which the synchrony hypothesis is judged.
SpectralInterval gate_interval(const TheoremInfo& info, const Inputs& in) {
  switch (info.family) {
    case Family::ensemble_sign:
    case Family::ensemble_refined:
      return need(in.ensemble, "ensemble").interval();
    case Family::inverse_pair: {
      const HermitianOperator& a = need(in.a, "operator");
      const StateVector& x = need(in.x, "state");
      const double pa = expectation(a, ScalarFunction::identity(), x);
      const double pb = expectation(a, ScalarFunction::power(-1.0), x);
      return a.interval().hull({std::clamp(pa, a.min_eigenvalue(), a.max_eigenvalue()),
                                std::clamp(pb, 1.0 / a.max_eigenvalue(), 1.0 / a.min_eigenvalue())});
    }
    default:
      return need(in.a, "operator").interval();
  }
}

}  // namespace

std::vector<InequalityReport> evaluate(const TheoremInfo& info, const Inputs& raw, const CheckOptions& opts) {
  Inputs in = raw;
  specialize(info, in);

  Direction dir = Direction::geq;
  if (in.direction) {
    dir = *in.direction;
  } else if (uses_functions(info.family) && !info.g_is_f && info.family != Family::weighted_cauchy) {
    if (info.family == Family::inverse_pair) need(in.a, "operator").interval().require_positive(info.id);
    dir = supported_direction(need(in.f, "f"), need(in.g, "g"), need(in.h, "h"), gate_interval(info, in), opts.grid_n)
              .value_or(Direction::geq);
  }

  auto fn = [&](const std::optional<ScalarFunction>& s, const char* what) -> const ScalarFunction& {
    return need(s, what);
  };

  if (info.needs_positive_interval) {
    if (in.a) in.a->interval().require_positive(info.id);
    if (in.ensemble) in.ensemble->interval().require_positive(info.id);
  }

  std::vector<InequalityReport> out;
  switch (info.family) {
    case Family::pompeiu_sign:
      out.push_back(check_pompeiu_sign(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"), need(in.a, "operator"),
                                       need(in.x, "state"), dir, opts, info.id));
      break;
    case Family::weighted_cauchy:
      out.push_back(check_weighted_cauchy(fn(in.f, "f"), fn(in.h, "h"), need(in.a, "operator"), need(in.x, "state"),
                                          info.id));
      break;
    case Family::kantorovich: {
      const auto k = in.declared ? kantorovich_chain(need(in.a, "operator"), need(in.x, "state"), *in.declared)
                                 : kantorovich_chain(need(in.a, "operator"), need(in.x, "state"));
      out.push_back(k.lower);
      out.push_back(k.upper);
      break;
    }
    case Family::two_operator:
      out.push_back(check_two_operator(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"), need(in.a, "operator"),
                                       need(in.b, "operator_b"), need(in.x, "state"), need(in.y, "state_b"), dir,
                                       opts, info.id));
      break;
    case Family::pompeiu_refined:
      out.push_back(check_pompeiu_refined(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"), need(in.a, "operator"),
                                          need(in.x, "state"), dir, opts, info.id));
      break;
    case Family::inverse_pair:
      out.push_back(check_inverse_pair(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"), need(in.a, "operator"),
                                       need(in.x, "state"), dir, opts, info.id));
      break;
    case Family::ensemble_sign:
      out.push_back(check_ensemble_pompeiu_sign(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"),
                                                need(in.ensemble, "ensemble"), dir, opts, info.id));
      break;
    case Family::ensemble_refined:
      out.push_back(check_ensemble_pompeiu_refined(fn(in.f, "f"), fn(in.g, "g"), fn(in.h, "h"),
                                                   need(in.ensemble, "ensemble"), dir, opts, info.id));
      break;
    case Family::ensemble_inverse_bound:
      out.push_back(check_ensemble_inverse_bound(need(in.ensemble, "ensemble")));
      break;
    case Family::ensemble_kantorovich: {
      const OperatorEnsemble& e = need(in.ensemble, "ensemble");
      std::vector<SpectralInterval> intervals = in.intervals;
      if (intervals.empty())
        for (const auto& op : e.operators()) intervals.push_back(op.interval());
      auto chain = kantorovich_ensemble_chain(e, intervals);
      out.push_back(std::move(chain.lower));
      out.push_back(std::move(chain.middle));
      out.push_back(std::move(chain.upper));
      break;
    }
    case Family::discrete_chebyshev:
      out.push_back(discrete_chebyshev(in.tuple_a, in.tuple_b));
      break;
  }
  return out;
}

Inputs inputs_from_scenario(const json& doc, const TheoremInfo& info) {
  Inputs in;
  if (doc.contains("f")) in.f = function_from_json(doc["f"]);
  if (doc.contains("g")) in.g = function_from_json(doc["g"]);
  if (doc.contains("h")) in.h = function_from_json(doc["h"]);
  if (doc.contains("operator")) in.a = operator_from_json(doc["operator"]);
  if (doc.contains("state")) in.x = state_from_json(doc["state"]);
  if (doc.contains("operator_b")) in.b = operator_from_json(doc["operator_b"]);
  if (doc.contains("state_b")) in.y = state_from_json(doc["state_b"]);
  if (doc.contains("ensemble")) in.ensemble = ensemble_from_json(doc["ensemble"]);
  if (doc.contains("intervals")) {
    if (!doc["intervals"].is_array()) throw Error(ErrorKind::parse_error, "'intervals' must be a list");
    for (const auto& iv : doc["intervals"]) in.intervals.push_back(interval_from_json(iv));
  }
  if (doc.contains("declared_interval")) in.declared = interval_from_json(doc["declared_interval"]);
  auto tuple = [&](const char* field, std::vector<double>& out) {
    if (!doc.contains(field)) return;
    if (!doc[field].is_array()) throw Error(ErrorKind::parse_error, std::string("'") + field + "' must be a list");
    for (const auto& v : doc[field]) {
      if (!v.is_number()) throw Error(ErrorKind::parse_error, std::string("'") + field + "' must hold numbers");
      out.push_back(v.get<double>());
    }
  };
  tuple("a", in.tuple_a);
  tuple("b", in.tuple_b);
  if (doc.contains("direction")) in.direction = direction_from_json(doc["direction"]);
  specialize(info, in);
  return in;
}

json scenario_from_inputs(const TheoremInfo& info, const Inputs& in, const CheckOptions& opts) {
  json doc = {{"theorem", info.id}, {"grid", opts.grid_n}, {"enforce_hypotheses", opts.enforce_hypotheses}};
  if (in.f) doc["f"] = to_json(*in.f);
  if (in.g) doc["g"] = to_json(*in.g);
  if (in.h) doc["h"] = to_json(*in.h);
  if (in.a) doc["operator"] = to_json(*in.a);
  if (in.x) doc["state"] = to_json(*in.x);
  if (in.b) doc["operator_b"] = to_json(*in.b);
  if (in.y) doc["state_b"] = to_json(*in.y);
  if (in.ensemble) doc["ensemble"] = to_json(*in.ensemble);
  if (!in.intervals.empty()) {
    doc["intervals"] = json::array();
    for (const auto& iv : in.intervals) doc["intervals"].push_back(to_json(iv));
  }
  if (in.declared) doc["declared_interval"] = to_json(*in.declared);
  if (!in.tuple_a.empty()) doc["a"] = in.tuple_a;
  if (!in.tuple_b.empty()) doc["b"] = in.tuple_b;
  if (in.direction) doc["direction"] = std::string(to_string(*in.direction));
  return doc;
}

namespace {

std::optional<ErrorKind> error_kind_from_name(const std::string& name) {
  for (int k = 0; k <= static_cast<int>(ErrorKind::parse_error); ++k)
    if (to_string(static_cast<ErrorKind>(k)) == name) return static_cast<ErrorKind>(k);
  return std::nullopt;
}

bool close(double got, double want, double tol) { return std::abs(got - want) <= tol * std::max(1.0, std::abs(want)); }

void compare(const json& e, const std::vector<InequalityReport>& reports, ScenarioOutcome& out) {
  const InequalityReport* r = nullptr;
  if (e.contains("report")) {
    const std::string id = e["report"].get<std::string>();
    for (const auto& rep : reports)
      if (rep.theorem_id == id) r = &rep;
    if (!r) {
      out.mismatches.push_back("no report named '" + id + "'");
      return;
    }
  } else {
    if (reports.empty()) {
      out.mismatches.emplace_back("no reports produced");
      return;
    }
    r = &reports.front();
  }
  const double tol = e.value("tol", 1e-12);
  if (e.contains("verdict") && e["verdict"].get<std::string>() != to_string(r->verdict))
    out.mismatches.push_back(r->theorem_id + ": verdict " + std::string(to_string(r->verdict)) + ", expected " +
                             e["verdict"].get<std::string>());
  for (const char* field : {"lhs", "rhs", "gap"}) {
    if (!e.contains(field)) continue;
    const double want = e[field].get<double>();
    const double got = std::string(field) == "lhs" ? r->lhs : std::string(field) == "rhs" ? r->rhs : r->gap;
    if (!close(got, want, tol))
      out.mismatches.push_back(r->theorem_id + ": " + field + " = " + format17(got) + ", expected " + format17(want));
  }
}

}  // namespace

ScenarioOutcome run_scenario(const json& doc) {
  if (!doc.is_object()) throw Error(ErrorKind::parse_error, "scenario must be a JSON object");
  ScenarioOutcome out;
  out.name = doc.value("name", std::string("unnamed"));
  if (!doc.contains("theorem") || !doc["theorem"].is_string())
    throw Error(ErrorKind::parse_error, "scenario needs a string 'theorem'");
  out.theorem_id = doc["theorem"].get<std::string>();
  const TheoremInfo& info = theorem_info(out.theorem_id);

  const json expect = doc.value("expect", json::array());
  if (!expect.is_array()) throw Error(ErrorKind::parse_error, "'expect' must be a list");
  std::optional<ErrorKind> expected_error;
  for (const auto& e : expect) {
    if (e.contains("error")) {
      expected_error = error_kind_from_name(e["error"].get<std::string>());
      if (!expected_error) throw Error(ErrorKind::parse_error, "unknown error kind in 'expect'");
    }
  }

  CheckOptions opts;
  opts.grid_n = doc.value("grid", default_grid);
  opts.enforce_hypotheses = doc.value("enforce_hypotheses", true);
  try {
    const Inputs in = inputs_from_scenario(doc, info);
    out.reports = evaluate(info, in, opts);
  } catch (const Error& err) {
    if (!expected_error) throw;
    out.error = err.kind();
    out.error_message = err.what();
  }

  if (expected_error) {
    if (out.error != expected_error)
      out.mismatches.push_back("expected error " + std::string(to_string(*expected_error)) +
                               (out.error ? ", got " + std::string(to_string(*out.error)) : ", got none"));
  } else {
    for (const auto& e : expect) compare(e, out.reports, out);
  }

  // A violation is unexpected unless the scenario pins that exact verdict.
  std::set<std::string> expected_violations;
  for (const auto& e : expect) {
    if (e.value("verdict", std::string()) == "violated")
      expected_violations.insert(e.value("report", out.reports.empty() ? std::string() : out.reports.front().theorem_id));
  }
  for (const auto& r : out.reports)
    if (r.verdict == Verdict::violated && !expected_violations.count(r.theorem_id)) out.unexpected_violation = true;

  out.expectation_met = out.mismatches.empty();
  return out;
}

json to_json(const ScenarioOutcome& o) {
  json reports = json::array();
  for (const auto& r : o.reports) reports.push_back(to_json(r));
  return {{"name", o.name},
          {"theorem", o.theorem_id},
          {"reports", reports},
          {"error", o.error ? json(std::string(to_string(*o.error))) : json(nullptr)},
          {"error_message", o.error_message},
          {"expectation_met", o.expectation_met},
          {"mismatches", o.mismatches},
          {"unexpected_violation", o.unexpected_violation}};
}

std::map<std::string, std::vector<std::string>> coverage_manifest() {
  std::map<std::string, std::vector<std::string>> m;
  for (const auto& t : theorem_registry()) m[t.id];
  for (const auto& s : scenario_library()) m[s.doc.at("theorem").get<std::string>()].push_back(s.name);
  return m;
}

std::vector<std::string> uncovered_theorems() {
  std::vector<std::string> out;
  for (const auto& [id, names] : coverage_manifest())
    if (names.empty()) out.push_back(id);
  return out;
}

}  // namespace opineq
