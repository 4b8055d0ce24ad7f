#include <doctest.h>

#include <cmath>

#include "opineq/functionals.hpp"
#include "opineq/generators.hpp"

using namespace opineq;

namespace {

const SpectralInterval k12{1.0, 2.0};
const auto kD12 = HermitianOperator::diagonal({1.0, 2.0}, k12);
const auto kEq = StateVector::equal_weight(2);

ScalarFunction pw(double p) { return ScalarFunction::power(p); }
const auto kId = ScalarFunction::identity();
const auto kOne = ScalarFunction::constant(1.0);

}  // namespace

TEST_CASE("Čebyšev functional values") {
  CHECK(cebysev(kId, kId, kD12, kEq) == doctest::Approx(0.25).epsilon(1e-14));
  CHECK(cebysev(kId, pw(-1.0), kD12, kEq) == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(cebysev(kId, kId, kD12, StateVector::basis(2, 0)) == doctest::Approx(0.0));
}

TEST_CASE("Pompeiu–Čebyšev functional values") {
  const auto t = pompeiu_terms(pw(2.0), pw(2.0), kId, kD12, kEq);
  CHECK(t.h2 == doctest::Approx(2.5).epsilon(1e-15));
  CHECK(t.fg == doctest::Approx(8.5).epsilon(1e-15));
  CHECK(t.hf == doctest::Approx(4.5).epsilon(1e-15));
  CHECK(pompeiu_cebysev(pw(2.0), pw(2.0), kId, kD12, kEq) == doctest::Approx(1.0).epsilon(1e-14));
  // unit weight reduces to the Čebyšev functional
  CHECK(pompeiu_cebysev(kId, pw(-1.0), kOne, kD12, kEq) == doctest::Approx(-0.125).epsilon(1e-14));
  const auto seed = HermitianOperator::diagonal({1.0, 4.0}, {1.0, 4.0});
  CHECK(pompeiu_cebysev(kOne, kId, pw(0.5), seed, kEq) == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("sign checker verdicts") {
  const auto r = check_pompeiu_sign(pw(2.0), pw(2.0), kId, kD12, kEq, Direction::geq);
  CHECK(r.verdict == Verdict::holds);
  CHECK(r.gap == doctest::Approx(1.0));
  REQUIRE(r.hypothesis_evidence);
  CHECK(r.hypothesis_evidence->classification == SyncClass::synchronous);

  const auto wrong = check_pompeiu_sign(kId, pw(-1.0), kOne, kD12, kEq, Direction::geq);
  CHECK(wrong.verdict == Verdict::hypothesis_not_met);
  CHECK(wrong.gap == doctest::Approx(-0.125));
  const auto right = check_pompeiu_sign(kId, pw(-1.0), kOne, kD12, kEq, Direction::leq);
  CHECK(right.verdict == Verdict::holds);
  CHECK(right.gap == doctest::Approx(0.125));

  CheckOptions off;
  off.enforce_hypotheses = false;
  const auto forced = check_pompeiu_sign(kId, pw(-1.0), kOne, kD12, kEq, Direction::geq, off);
  CHECK(forced.verdict == Verdict::violated);
}

TEST_CASE("report tolerance and threshold") {
  CHECK(inequality_tolerance(1.0, 2.0) == doctest::Approx(4e-9));
  const auto tiny = make_report("t", Direction::geq, 1.0, 1.0 + 1e-9, true);
  CHECK(tiny.verdict == Verdict::holds);  // within 10 tol
  const auto big = make_report("t", Direction::geq, 1.0, 1.1, true);
  CHECK(big.verdict == Verdict::violated);
  const auto le = make_report("t", Direction::leq, 1.0, 3.0, true);
  CHECK(le.gap == 2.0);
}

TEST_CASE("weighted Cauchy–Schwarz") {
  const auto r = check_weighted_cauchy(pw(0.5), kId, kD12, kEq);
  CHECK(r.lhs == doctest::Approx(3.6642135623730945).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(3.75).epsilon(1e-14));
  CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("Kantorovich chain") {
  const auto k = kantorovich_chain(kD12, kEq);
  CHECK(k.product == doctest::Approx(1.125).epsilon(1e-15));
  CHECK(k.upper.rhs == doctest::Approx(1.125).epsilon(1e-15));
  CHECK(std::abs(k.upper.gap) < 1e-14);
  CHECK(k.lower.verdict == Verdict::holds);
  CHECK(kantorovich_constant({1.0, 3.0}) == doctest::Approx(4.0 / 3.0));
  CHECK(kantorovich_constant({2.0, 2.0}) == 1.0);
  const auto narrow = kantorovich_chain(kD12, kEq, {1.2, 1.8});
  CHECK(narrow.upper.verdict == Verdict::violated);
  const auto neg = HermitianOperator::diagonal({-1.0, 1.0}, {-1.0, 1.0});
  CHECK_THROWS_AS(kantorovich_chain(neg, kEq), Error);
}

TEST_CASE("two operators") {
  const auto b = HermitianOperator::diagonal({1.0, 1.5}, k12);
  const auto r = check_two_operator(pw(2.0), pw(2.0), kId, kD12, b, kEq, kEq, Direction::geq);
  CHECK(r.lhs == doctest::Approx(21.390625).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(19.6875).epsilon(1e-14));
  const auto e = check_two_operator(ScalarFunction::exp(), ScalarFunction::exp(), pw(-1.0), kD12, b, kEq, kEq,
                                    Direction::geq);
  CHECK(e.gap == doctest::Approx(12.67409360682689).epsilon(1e-12));
  // B = A, y = x gives twice the single-operator functional
  const auto same = check_two_operator(pw(2.0), pw(2.0), kId, kD12, kD12, kEq, kEq, Direction::geq);
  CHECK(same.gap == doctest::Approx(2.0).epsilon(1e-14));
  const auto other = HermitianOperator::diagonal({1.0, 2.0}, {1.0, 3.0});
  CHECK_THROWS_AS(check_two_operator(kId, kId, kId, kD12, other, kEq, kEq, Direction::geq), Error);
}

TEST_CASE("refined form") {
  const auto r = check_pompeiu_refined(pw(2.0), pw(3.0), kId, kD12, kEq, Direction::geq);
  CHECK(r.lhs == doctest::Approx(-1.125).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(-5.765625).epsilon(1e-14));
  CHECK(r.verdict == Verdict::holds);
  const auto s = check_pompeiu_refined(pw(2.0), pw(2.0), kId, kD12, kEq, Direction::geq);
  CHECK(s.rhs == doctest::Approx(-2.53125).epsilon(1e-14));
  const auto reversed = check_pompeiu_refined(kId, pw(-1.0), kOne, kD12, kEq, Direction::leq);
  CHECK(reversed.verdict == Verdict::holds);
  CHECK(reversed.lhs == doctest::Approx(-0.125).epsilon(1e-14));
  CHECK(!reversed.notes.empty());
}

TEST_CASE("scalar inverse pair") {
  const auto r = check_inverse_pair(kId, kId, kOne, kD12, kEq, Direction::geq);
  CHECK(r.lhs == doctest::Approx(2.8125).epsilon(1e-14));
  CHECK(r.rhs == doctest::Approx(2.25).epsilon(1e-14));
  const auto s = check_inverse_pair(pw(2.0), pw(2.0), kId, kD12, kEq, Direction::geq);
  CHECK(s.gap == doctest::Approx(0.7119140625).epsilon(1e-14));
  // b = 0.75 lies below the interval: the gate covers the hull
  CHECK(!s.notes.empty());
  REQUIRE(s.hypothesis_evidence);
  const auto neg = HermitianOperator::diagonal({-1.0, 1.0}, {-1.0, 1.0});
  CHECK_THROWS_AS(check_inverse_pair(kId, kId, kOne, neg, kEq, Direction::geq), Error);
}

TEST_CASE("special cases: h(t) = t and g = 1") {
  const auto hid = check_pompeiu_sign(pw(2.0), pw(3.0), kId, kD12, kEq, Direction::geq);
  CHECK(hid.lhs == doctest::Approx(41.25).epsilon(1e-14));
  CHECK(hid.rhs == doctest::Approx(38.25).epsilon(1e-14));
  const auto g1 = check_pompeiu_sign(pw(-1.0), kOne, pw(-2.0), kD12, kEq, Direction::geq);
  CHECK(g1.lhs == doctest::Approx(0.3984375).epsilon(1e-14));
  CHECK(g1.rhs == doctest::Approx(0.3515625).epsilon(1e-14));
  CHECK(g1.verdict == Verdict::holds);
  // f = s^2, g = 1, h = s is asynchronous: only <= is supported
  const auto sq = check_pompeiu_sign(pw(2.0), kOne, kId, kD12, kEq, Direction::geq);
  CHECK(sq.verdict == Verdict::hypothesis_not_met);
  CHECK(sq.lhs == doctest::Approx(6.25));
  CHECK(sq.rhs == doctest::Approx(6.75));
}

TEST_CASE("random certified triples never violate") {
  Rng rng(3);
  const std::vector<ScalarFunction> pool{kOne, kId, pw(2.0), pw(0.5), pw(-1.0), ScalarFunction::exp(),
                                         ScalarFunction::log()};
  for (int t = 0; t < 300; ++t) {
    const auto& f = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto& g = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto& h = pool[static_cast<std::size_t>(rng.uniform_int(0, 6))];
    const auto a = random_operator(rng, rng.uniform_int(1, 5), k12);
    const auto x = random_state(rng, a.dim());
    for (auto d : {Direction::geq, Direction::leq}) {
      CHECK(check_pompeiu_sign(f, g, h, a, x, d).verdict != Verdict::violated);
      CHECK(check_pompeiu_refined(f, g, h, a, x, d).verdict != Verdict::violated);
    }
  }
}

TEST_CASE("direct evaluation on diagonal operators") {
  // Independent path: sums over the diagonal without the calculus core.
  const auto f = ScalarFunction::exp();
  const auto g = pw(-1.0);
  const auto h = pw(0.5);
  for (double l1 : {1.0, 1.3, 2.0}) {
    for (double l2 : {1.0, 1.7}) {
      for (double th : {0.0, 0.4, 1.2}) {
        const double c = std::cos(th), s = std::sin(th);
        auto ex = [&](auto fn) { return c * c * fn(l1) + s * s * fn(l2); };
        const double direct = ex([&](double v) { return h(v) * h(v); }) * ex([&](double v) { return f(v) * g(v); }) -
                              ex([&](double v) { return h(v) * g(v); }) * ex([&](double v) { return h(v) * f(v); });
        Vector xv(2);
        xv << c, s;
        const double got = pompeiu_cebysev(f, g, h, HermitianOperator::diagonal({l1, l2}, k12), StateVector(xv));
        CHECK(got == doctest::Approx(direct).epsilon(1e-12).scale(4.0));
      }
    }
  }
}
