// Acceptance run: one PASS/FAIL line per criterion. Exit status is the
// number of failed criteria.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>

#include "opineq/falsify.hpp"
#include "opineq/suite.hpp"

#ifndef OPINEQ_CLI_PATH
#error "OPINEQ_CLI_PATH must name the CLI executable"
#endif
#ifndef OPINEQ_WORK_DIR
#error "OPINEQ_WORK_DIR must name a scratch directory"
#endif

using namespace opineq;
namespace fs = std::filesystem;

namespace {

// Pinned tolerances.
constexpr double kPinnedTol = 1e-12;       // hand values and brute-force equivalence
constexpr double kLiftTol = 1e-9;          // ensemble vs lifted single operator
constexpr int kCalculusDraws = 10000;
constexpr int kSignTrials = 10000;
constexpr int kBruteGrid = 21;
constexpr int kEnsembleDraws = 1000;
constexpr long kFalsifyBudget = 100000;
constexpr int kChainDraws = 1000;

struct Outcome {
  bool pass;
  std::string detail;
};

int failures = 0;

void report(int n, const char* name, const std::function<Outcome()>& run) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = run();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  std::printf("%s %d %s: %s [%.2f s]\n", o.pass ? "PASS" : "FAIL", n, name, o.detail.c_str(), secs);
  std::fflush(stdout);
  if (!o.pass) ++failures;
}

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

ScalarFunction pw(double p) { return ScalarFunction::power(p); }

double rel_close(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// 1. multiplicativity, linearity, norm and order of the functional calculus
Outcome calculus_invariants() {
  const std::vector<ScalarFunction> pool{
      ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(2.0), pw(0.5), pw(-1.0), ScalarFunction::log(),
      ScalarFunction::exp(), pw(3.0), ScalarFunction::affine(-1.0, 3.0), ScalarFunction::neg_parabola()};
  const SpectralInterval iv(0.5, 3.0);
  Rng rng(101);
  double worst = 0.0;  // error / tolerance
  long order_checks = 0;
  for (int t = 0; t < kCalculusDraws; ++t) {
    const auto a = random_operator(rng, rng.uniform_int(1, 8), iv);
    const auto x = random_state(rng, a.dim());
    const auto& f = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
    const auto& g = pool[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(pool.size()) - 1))];
    const double mf = spectral_sup(a, f), mg = spectral_sup(a, g);
    const Matrix fa = apply_function(a, f), ga = apply_function(a, g);

    worst = std::max(worst, (apply_function(a, f * g) - fa * ga).norm() / tol::calc(mf, mg));
    const double al = rng.uniform(-2.0, 2.0), be = rng.uniform(-2.0, 2.0);
    worst = std::max(worst, (apply_function(a, f.scaled(al) + g.scaled(be)) - (al * fa + be * ga)).norm() /
                                tol::calc(std::abs(al) * mf + std::abs(be) * mg));
    const double op_norm = Eigen::JacobiSVD<Matrix>(fa).singularValues()(0);
    worst = std::max(worst, std::abs(op_norm - mf) / tol::calc(mf));

    // f <= f + g^2 everywhere; and f <= g whenever it holds on the spectrum.
    auto order = [&](const ScalarFunction& lo, const ScalarFunction& hi) {
      const Matrix diff = apply_function(a, hi) - apply_function(a, lo);
      const double tol = tol::calc(spectral_sup(a, hi) + spectral_sup(a, lo));
      const double min_eig = Eigen::SelfAdjointEigenSolver<Matrix>(diff).eigenvalues().minCoeff();
      const double quad = expectation(a, hi, x) - expectation(a, lo, x);
      worst = std::max({worst, -min_eig / tol, -quad / tol});
      ++order_checks;
    };
    order(f, f + g * g);
    bool below = true;
    for (double l : a.eigenvalues()) below = below && f(l) <= g(l);
    if (below) order(f, g);
  }
  return {worst <= 1.0, std::to_string(kCalculusDraws) + " draws, " + std::to_string(order_checks) +
                            " order checks, worst error/tol_calc = " + fmt("%.3g", worst)};
}

// 2. sign inequality on grid-certified synchronous and asynchronous triples
Outcome sign_suite() {
  const std::vector<ScalarFunction> pool{ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(-2.0), pw(-1.0),
                                         pw(-0.5), pw(0.5), pw(2.0), pw(3.0), ScalarFunction::log(),
                                         ScalarFunction::exp(), ScalarFunction::affine(2.0, 1.0)};
  struct Triple {
    std::size_t f, g, h;
    SpectralInterval iv;
  };
  std::vector<Triple> sync, async;
  for (const SpectralInterval iv : {SpectralInterval(1.0, 2.0), SpectralInterval(1.0, 5.0)}) {
    for (std::size_t i = 0; i < pool.size(); ++i)
      for (std::size_t j = 0; j < pool.size(); ++j)
        for (std::size_t k = 0; k < pool.size(); ++k) {
          const auto v = classify_synchrony(pool[i], pool[j], pool[k], iv);
          if (v.classification == SyncClass::synchronous && v.weight_nonnegative) sync.push_back({i, j, k, iv});
          if (v.classification == SyncClass::asynchronous && v.weight_nonnegative) async.push_back({i, j, k, iv});
        }
  }
  Rng rng(202);
  long violated_geq = 0, violated_leq = 0, unmet = 0;
  double worst = std::numeric_limits<double>::infinity();
  auto run = [&](const std::vector<Triple>& set, Direction d, long& violated) {
    for (int t = 0; t < kSignTrials; ++t) {
      const Triple& tr = set[static_cast<std::size_t>(rng.uniform_int(0, static_cast<int>(set.size()) - 1))];
      const auto a = random_operator(rng, rng.uniform_int(1, 8), tr.iv);
      const auto x = random_state(rng, a.dim());
      const auto r = check_pompeiu_sign(pool[tr.f], pool[tr.g], pool[tr.h], a, x, d);
      if (r.verdict == Verdict::violated) ++violated;
      if (r.verdict == Verdict::hypothesis_not_met) ++unmet;
      worst = std::min(worst, r.gap / r.tolerance);
    }
  };
  run(sync, Direction::geq, violated_geq);
  run(async, Direction::leq, violated_leq);
  return {violated_geq == 0 && violated_leq == 0 && unmet == 0,
          std::to_string(kSignTrials) + " synchronous (" + std::to_string(sync.size()) + " triples) -> " +
              std::to_string(violated_geq) + " violated; " + std::to_string(kSignTrials) + " asynchronous (" +
              std::to_string(async.size()) + " triples) -> " + std::to_string(violated_leq) +
              " violated of <=; worst gap/tol_ineq = " + fmt("%.3g", worst)};
}

// 3. functional vs. a from-definition evaluation on 2x2 diagonal operators
Outcome brute_force() {
  struct Case {
    ScalarFunction f, g, h;
    std::function<double(double)> df, dg, dh;
  };
  const std::vector<Case> cases{
      {pw(2.0), pw(2.0), ScalarFunction::identity(), [](double s) { return s * s; }, [](double s) { return s * s; },
       [](double s) { return s; }},
      {ScalarFunction::exp(), pw(-1.0), pw(0.5), [](double s) { return std::exp(s); }, [](double s) { return 1.0 / s; },
       [](double s) { return std::sqrt(s); }},
      {ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(0.5), [](double) { return 1.0; },
       [](double s) { return s; }, [](double s) { return std::sqrt(s); }},
      {ScalarFunction::log(), pw(3.0), pw(-1.0), [](double s) { return std::log(s); },
       [](double s) { return s * s * s; }, [](double s) { return 1.0 / s; }},
  };
  const SpectralInterval iv(1.0, 2.0);
  double worst = 0.0;
  long n = 0;
  for (const auto& c : cases) {
    for (int i = 0; i < kBruteGrid; ++i) {
      for (int j = 0; j < kBruteGrid; ++j) {
        const double l1 = 1.0 + i / double(kBruteGrid - 1), l2 = 1.0 + j / double(kBruteGrid - 1);
        const auto a = HermitianOperator::diagonal({l1, l2}, iv);
        for (int k = 0; k < kBruteGrid; ++k) {
          const double th = M_PI / 2.0 * k / double(kBruteGrid - 1);
          const double w1 = std::cos(th) * std::cos(th), w2 = std::sin(th) * std::sin(th);
          auto mean = [&](auto fn) { return w1 * fn(l1) + w2 * fn(l2); };
          const double h2 = mean([&](double s) { return c.dh(s) * c.dh(s); });
          const double fg = mean([&](double s) { return c.df(s) * c.dg(s); });
          const double hg = mean([&](double s) { return c.dh(s) * c.dg(s); });
          const double hf = mean([&](double s) { return c.dh(s) * c.df(s); });
          const double direct = h2 * fg - hg * hf;
          Vector xv(2);
          xv << std::cos(th), std::sin(th);
          const double got = pompeiu_cebysev(c.f, c.g, c.h, a, StateVector(xv));
          worst = std::max(worst, std::abs(got - direct) / (std::abs(h2 * fg) + std::abs(hg * hf)));
          ++n;
        }
      }
    }
  }
  return {worst <= kPinnedTol,
          std::to_string(n) + " evaluations, worst relative difference " + fmt("%.3g", worst) + " (tol 1e-12)"};
}

// 4. pinned hand values and the full scenario library
Outcome pinned_values() {
  const SpectralInterval iv(1.0, 2.0);
  const auto a = HermitianOperator::diagonal({1.0, 2.0}, iv);
  const auto x = StateVector::equal_weight(2);
  const auto id = ScalarFunction::identity();
  std::vector<std::pair<std::string, double>> bad;
  auto pin = [&](const std::string& what, double got, double want) {
    if (rel_close(got, want) > kPinnedTol) bad.emplace_back(what, got);
  };
  pin("C(id,id)", cebysev(id, id, a, x), 0.25);
  pin("P(s^2,s^2,id)", pompeiu_cebysev(pw(2.0), pw(2.0), id, a, x), 1.0);
  const auto k = kantorovich_chain(a, x);
  pin("Kantorovich product", k.product, 1.125);
  pin("Kantorovich bound", k.upper.rhs, 9.0 / 8.0);
  pin("Kantorovich equality gap", k.upper.gap, 0.0);
  const auto ip = check_inverse_pair(id, id, ScalarFunction::constant(1.0), a, x, Direction::geq);
  pin("inverse pair lhs", ip.lhs, 2.8125);
  pin("inverse pair rhs", ip.rhs, 2.25);
  std::size_t scenarios = 0;
  for (const auto& s : scenario_library()) {
    const auto o = run_scenario(s.doc);
    ++scenarios;
    if (!o.expectation_met || o.unexpected_violation) bad.emplace_back("scenario " + s.name, 0.0);
  }
  if (!uncovered_theorems().empty()) bad.emplace_back("coverage", 0.0);
  std::string detail = "7 hand values + " + std::to_string(scenarios) + " pinned scenarios at 1e-12";
  for (const auto& [what, v] : bad) detail += "; mismatch " + what + " = " + format17(v);
  return {bad.empty(), detail};
}

// 5. n-operator gaps vs. the block-diagonal lift
Outcome lift_equivalence() {
  const std::vector<ScalarFunction> pool{ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(2.0),
                                         pw(0.5), pw(-1.0), ScalarFunction::exp(), ScalarFunction::log()};
  Rng rng(505);
  double worst = 0.0;
  for (int t = 0; t < kEnsembleDraws; ++t) {
    const auto e = random_ensemble(rng, rng.uniform_int(1, 4), 1, 4, {1.0, 2.0}, Normalization::sum_of_squares);
    const auto& f = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto& g = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto& h = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto [a, x] = e.lift();
    for (auto d : {Direction::geq, Direction::leq}) {
      const auto en = check_ensemble_pompeiu_sign(f, g, h, e, d);
      const auto one = check_pompeiu_sign(f, g, h, a, x, d);
      worst = std::max(worst, std::abs(en.gap - one.gap) / (1.0 + std::abs(one.lhs) + std::abs(one.rhs)));
      const auto enr = check_ensemble_pompeiu_refined(f, g, h, e, d);
      const auto oner = check_pompeiu_refined(f, g, h, a, x, d);
      worst = std::max(worst, std::abs(enr.gap - oner.gap) / (1.0 + std::abs(oner.lhs) + std::abs(oner.rhs)));
    }
  }
  return {worst <= kLiftTol, std::to_string(kEnsembleDraws) + " ensembles (n<=4, dim<=4), worst relative gap difference " +
                                 fmt("%.3g", worst) + " (tol 1e-9)"};
}

// 6. synchronous/asynchronous and h-monotone labels at interior sample points
Outcome regions() {
  const SpectralInterval iv(1.0, 2.0);
  const auto one = ScalarFunction::constant(1.0);
  const auto id = ScalarFunction::identity();
  const auto inv = pw(-1.0);
  int checked = 0;
  std::string bad;
  auto sync_case = [&](const char* label, const ScalarFunction& f, const ScalarFunction& g,
                       std::vector<std::pair<double, SyncClass>> expect, const SpectralInterval& on) {
    std::vector<double> rs;
    for (auto& [r, _] : expect) rs.push_back(r);
    const auto got = scan_tr_regions(f, g, rs, on);
    for (std::size_t i = 0; i < rs.size(); ++i, ++checked)
      if (got[i].verdict.classification != expect[i].second)
        bad += std::string(" ") + label + "@r=" + fmt("%g", rs[i]);
  };
  auto mono_case = [&](const char* label, const ScalarFunction& f, std::vector<std::pair<double, MonoClass>> expect) {
    std::vector<double> rs;
    for (auto& [r, _] : expect) rs.push_back(r);
    const auto got = scan_tr_monotonicity(f, rs, iv);
    for (std::size_t i = 0; i < rs.size(); ++i, ++checked)
      if (got[i].verdict.classification != expect[i].second)
        bad += std::string(" ") + label + "@r=" + fmt("%g", rs[i]);
  };
  using S = SyncClass;
  using M = MonoClass;
  mono_case("f=1", one, {{2.0, M::decreasing}, {0.5, M::decreasing}, {-1.0, M::increasing}, {-3.0, M::increasing}});
  mono_case("f=s", id, {{2.0, M::decreasing}, {1.5, M::decreasing}, {0.5, M::increasing}, {-1.0, M::increasing}});
  mono_case("f=1/s", inv, {{0.0, M::decreasing}, {1.0, M::decreasing}, {-2.0, M::increasing}, {-3.0, M::increasing}});
  sync_case("(1,1)", one, one, {{-2.0, S::synchronous}, {0.5, S::synchronous}, {3.0, S::synchronous}}, iv);
  sync_case("(1,s)", one, id, {{-1.0, S::synchronous}, {0.5, S::asynchronous}, {2.0, S::synchronous}}, iv);
  sync_case("(1,1/s)", one, inv, {{-2.0, S::synchronous}, {-0.5, S::asynchronous}, {1.0, S::synchronous}}, iv);
  sync_case("(s,1/s)", id, inv, {{-2.0, S::synchronous}, {0.0, S::asynchronous}, {2.0, S::synchronous}}, iv);
  // powers: synchronous for p, q > r > 0, asynchronous for p > r > q > 0
  sync_case("(s^2,s^3)", pw(2.0), pw(3.0), {{0.5, S::synchronous}, {1.5, S::synchronous}}, iv);
  sync_case("(s^3,s^1)", pw(3.0), pw(1.0), {{1.5, S::asynchronous}, {2.5, S::asynchronous}}, iv);
  sync_case("(s^0.5,s^2)", pw(0.5), pw(2.0), {{0.25, S::synchronous}, {1.0, S::asynchronous}}, iv);
  sync_case("(exp,exp)", ScalarFunction::exp(), ScalarFunction::exp(),
            {{-3.0, S::synchronous}, {0.0, S::synchronous}, {4.0, S::synchronous}}, iv);

  // Power against log on s > 1: printed as measured, not scored.
  std::string measured;
  const SpectralInterval gt1(1.5, 3.0);
  for (double p : {-1.0, -2.0}) {
    const double rs[] = {p - 0.5, p + 0.5};
    for (const auto& s : scan_tr_regions(pw(p), ScalarFunction::log(), rs, gt1))
      measured += " p=" + fmt("%g", p) + ",r=" + fmt("%g", s.r) + ":" + std::string(to_string(s.verdict.classification));
  }
  std::printf("INFO 6 power/log labels as measured on [1.5,3]:%s\n", measured.c_str());
  return {bad.empty(), std::to_string(checked) + " labelled samples" + (bad.empty() ? "" : "; mismatches:" + bad)};
}

// 7. counterexample search with and without the synchrony hypothesis
Outcome necessity() {
  FalsifyConfig c;
  c.theorem_id = "pc_sign";
  c.interval = {1.0, 4.0};
  c.pool = {ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(0.5)};
  c.budget = kFalsifyBudget;
  c.seed = 7;
  c.drop = DropHypothesis::synchrony;
  const auto t0 = std::chrono::steady_clock::now();
  const auto dropped = falsify(c);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  bool replay = false;
  if (dropped.bundle) replay = run_scenario(*dropped.bundle).expectation_met;
  c.drop = DropHypothesis::none;
  const auto intact = falsify(c);
  const bool pass = dropped.found && dropped.best_gap < 0.0 && replay && secs < 30.0 && !intact.found;
  return {pass, "synchrony dropped: best gap " + format17(dropped.best_gap) + " in " + fmt("%.2f", secs) +
                    " s (bundle replays: " + (replay ? "yes" : "no") + "); intact: " +
                    (intact.found ? "found gap " + format17(intact.best_gap) : "none, best gap " + format17(intact.best_gap)) +
                    "; budget " + std::to_string(kFalsifyBudget) + " each"};
}

// 8. inverse bound under sum-of-squares vs. per-vector normalization
Outcome normalization() {
  const ScenarioOutcome pinned = [] {
    for (const auto& s : scenario_library())
      if (s.name == "ensemble_inverse_bound_sum_of_squares") return run_scenario(s.doc);
    throw Error(ErrorKind::unknown_theorem, "pinned counterexample scenario missing");
  }();
  const auto& r = pinned.reports.at(0);
  const bool counterexample = pinned.expectation_met && r.verdict == Verdict::violated &&
                              rel_close(r.lhs, 4.0) <= kPinnedTol && rel_close(r.rhs, 1.0) <= kPinnedTol;
  Rng rng(808);
  long bad = 0;
  for (int t = 0; t < kChainDraws; ++t) {
    const double lo = rng.uniform(0.1, 2.0);
    const SpectralInterval iv(lo, lo + rng.uniform(0.0, 5.0));
    const auto e = random_ensemble(rng, rng.uniform_int(1, 4), 1, 4, iv, Normalization::per_vector);
    std::vector<SpectralInterval> ivs;
    for (const auto& op : e.operators()) ivs.push_back(op.interval());
    if (kantorovich_ensemble_chain(e, ivs).any_violated()) ++bad;
    if (check_ensemble_inverse_bound(e).verdict == Verdict::violated) ++bad;
  }
  return {counterexample && bad == 0,
          "sum-of-squares instance: n^2 = " + format17(r.lhs) + " > product " + format17(r.rhs) + " (" +
              std::string(to_string(r.verdict)) + "); per-vector chain over " + std::to_string(kChainDraws) +
              " random positive ensembles: " + std::to_string(bad) + " violations"};
}

// 9. two suite runs with the same seed are byte-identical
Outcome determinism() {
  const fs::path work = fs::path(OPINEQ_WORK_DIR) / "determinism";
  fs::remove_all(work);
  fs::create_directories(work);
  auto run = [&](const std::string& tag, const std::string& extra) {
    const fs::path out = work / tag;
    const std::string cmd = std::string("\"") + OPINEQ_CLI_PATH + "\" suite --seed 7 " + extra + " --out \"" +
                            out.string() + "\" > \"" + (work / (tag + ".stdout")).string() + "\" 2> \"" +
                            (work / (tag + ".stderr")).string() + "\"";
    return std::system(cmd.c_str());
  };
  const int ra = run("a", "");
  const int rb = run("b", "--threads 4");
  auto slurp = [](const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream s;
    s << f.rdbuf();
    return s.str();
  };
  bool same = ra == 0 && rb == 0;
  std::uintmax_t bytes = 0;
  for (const char* name : {"reports.jsonl", "summary.jsonl", "summary.csv"}) {
    const std::string a = slurp(work / "a" / name), b = slurp(work / "b" / name);
    same = same && !a.empty() && a == b;
    bytes += a.size();
  }
  same = same && slurp(work / "a.stdout") == slurp(work / "b.stdout");
  return {same, "suite --seed 7 (10000 trials; second run with 4 threads): " + std::to_string(bytes) +
                    " bytes compared, exit codes " + std::to_string(ra) + "/" + std::to_string(rb)};
}

}  // namespace

int main() {
  report(1, "functional-calculus invariants", calculus_invariants);
  report(2, "sign inequality on certified triples", sign_suite);
  report(3, "brute-force equivalence on 2x2 diagonal operators", brute_force);
  report(4, "pinned hand values", pinned_values);
  report(5, "block-diagonal equivalence", lift_equivalence);
  report(6, "region reproduction", regions);
  report(7, "necessity probes", necessity);
  report(8, "normalization finding", normalization);
  report(9, "suite determinism", determinism);
  std::printf("%d of 9 criteria failed\n", failures);
  return failures;
}
