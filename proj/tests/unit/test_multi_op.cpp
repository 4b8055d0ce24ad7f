#include <doctest.h>

#include <cmath>

#include "opineq/generators.hpp"
#include "opineq/multi_op.hpp"

using namespace opineq;

namespace {

const SpectralInterval k12{1.0, 2.0};
const auto kD12 = HermitianOperator::diagonal({1.0, 2.0}, k12);

StateVector vec(std::initializer_list<double> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (double x : xs) v(i++) = x;
  return StateVector(v);
}

ScalarFunction pw(double p) { return ScalarFunction::power(p); }

}  // namespace

TEST_CASE("ensemble sums and the sign inequality") {
  OperatorEnsemble e({kD12, kD12}, {vec({0.5, 0.5}), vec({0.5, 0.5})}, Normalization::sum_of_squares);
  const auto t = ensemble_terms(pw(2.0), pw(2.0), ScalarFunction::identity(), e);
  CHECK(t.h2 == doctest::Approx(2.5));
  CHECK(t.fg == doctest::Approx(8.5));
  CHECK(t.hf == doctest::Approx(4.5));
  const auto r = check_ensemble_pompeiu_sign(pw(2.0), pw(2.0), ScalarFunction::identity(), e, Direction::geq);
  CHECK(r.gap == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(r.verdict == Verdict::holds);
}

TEST_CASE("ensemble validation") {
  CHECK_THROWS_AS(OperatorEnsemble({kD12, HermitianOperator::diagonal({3.0, 4.0}, {3.0, 4.0})},
                                   {vec({0.5, 0.5}), vec({0.5, 0.5})}, Normalization::sum_of_squares),
                  Error);
  CHECK_THROWS_AS(OperatorEnsemble({kD12, kD12}, {vec({1.0, 0.0}), vec({1.0, 0.0})}, Normalization::sum_of_squares),
                  Error);
  CHECK_THROWS_AS(OperatorEnsemble({kD12, kD12}, {vec({0.5, 0.5}), vec({0.5, 0.5})}, Normalization::per_vector),
                  Error);
}

TEST_CASE("single operator ensemble matches the single checker") {
  const auto x = StateVector::equal_weight(2);
  OperatorEnsemble e({kD12}, {x}, Normalization::sum_of_squares);
  const auto a = check_ensemble_pompeiu_sign(pw(2.0), pw(2.0), ScalarFunction::identity(), e, Direction::geq);
  const auto b = check_pompeiu_sign(pw(2.0), pw(2.0), ScalarFunction::identity(), kD12, x, Direction::geq);
  CHECK(a.gap == doctest::Approx(b.gap).epsilon(1e-14));
}

TEST_CASE("ensemble gaps equal lifted single-operator gaps") {
  Rng rng(17);
  const std::vector<ScalarFunction> pool{ScalarFunction::constant(1.0), ScalarFunction::identity(), pw(2.0),
                                         pw(0.5), pw(-1.0), ScalarFunction::exp()};
  for (int t = 0; t < 200; ++t) {
    const auto e = random_ensemble(rng, rng.uniform_int(1, 4), 1, 4, k12, Normalization::sum_of_squares);
    const auto& f = pool[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    const auto& g = pool[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    const auto& h = pool[static_cast<std::size_t>(rng.uniform_int(0, 5))];
    const auto [a, x] = e.lift();
    const auto en = check_ensemble_pompeiu_sign(f, g, h, e, Direction::geq);
    const auto one = check_pompeiu_sign(f, g, h, a, x, Direction::geq);
    CHECK(std::abs(en.gap - one.gap) <= 1e-9 * (1.0 + std::abs(one.lhs) + std::abs(one.rhs)));
    const auto enr = check_ensemble_pompeiu_refined(f, g, h, e, Direction::geq);
    const auto oner = check_pompeiu_refined(f, g, h, a, x, Direction::geq);
    CHECK(std::abs(enr.gap - oner.gap) <= 1e-9 * (1.0 + std::abs(oner.lhs) + std::abs(oner.rhs)));
  }
}

TEST_CASE("discrete Chebyshev") {
  const double a[] = {1, 2, 3};
  const auto r = discrete_chebyshev(a, a);
  CHECK(r.gap == doctest::Approx(2.0 / 3.0).epsilon(1e-15));
  const double c[] = {2, 2, 2};
  const double b[] = {5, 1, 9};
  CHECK(discrete_chebyshev(c, b).gap == doctest::Approx(0.0));
  const double x[] = {1, 2};
  const double y[] = {2, 1};
  CHECK(opposite_pair(x, y).has_value());
  CHECK_THROWS_AS(discrete_chebyshev(x, y), Error);
  const double z[] = {1, 2, 3, 4};
  CHECK_THROWS_AS(discrete_chebyshev(a, z), Error);
}

TEST_CASE("inverse bound depends on the normalization") {
  const SpectralInterval one{1.0, 1.0};
  const auto id = HermitianOperator::diagonal({1.0, 1.0}, one);
  OperatorEnsemble bad({id, id}, {vec({std::sqrt(0.5), 0.0}), vec({std::sqrt(0.5), 0.0})},
                       Normalization::sum_of_squares);
  const auto r = check_ensemble_inverse_bound(bad);
  CHECK(r.lhs == doctest::Approx(4.0));
  CHECK(r.rhs == doctest::Approx(1.0));
  CHECK(r.verdict == Verdict::violated);
  OperatorEnsemble good({id, id}, {vec({1.0, 0.0}), vec({1.0, 0.0})}, Normalization::per_vector);
  CHECK(check_ensemble_inverse_bound(good).verdict == Verdict::holds);
}

TEST_CASE("ensemble Kantorovich chain") {
  const SpectralInterval k13{1.0, 3.0};
  const auto x = StateVector::equal_weight(2);
  OperatorEnsemble e({kD12.with_interval(k13), HermitianOperator::diagonal({1.0, 3.0}, k13)}, {x, x},
                     Normalization::per_vector);
  const SpectralInterval ivs[] = {k12, k13};
  const auto c = kantorovich_ensemble_chain(e, ivs);
  CHECK(c.a[0] == doctest::Approx(1.5));
  CHECK(c.a[1] == doctest::Approx(2.0));
  CHECK(c.b[0] == doctest::Approx(0.75));
  CHECK(c.b[1] == doctest::Approx(2.0 / 3.0));
  CHECK(c.lower.rhs == doctest::Approx(1.2395833333333333));
  CHECK(c.middle.verdict == Verdict::hypothesis_not_met);
  CHECK(c.upper.lhs == doctest::Approx(1.2291666666666667));
  CHECK(c.upper.rhs == doctest::Approx(1.2291666666666667));
  CHECK(c.mean_constant_minus_form == doctest::Approx((0.125 + 1.0 / 3.0) / 2.0));
  CHECK(!c.any_violated());
  const SpectralInterval wrong[] = {k12, k12};
  CHECK_THROWS_AS(kantorovich_ensemble_chain(e, wrong), Error);
}

TEST_CASE("per-vector chain holds on random positive ensembles") {
  Rng rng(23);
  for (int t = 0; t < 300; ++t) {
    const auto e = random_ensemble(rng, rng.uniform_int(1, 4), 1, 4, {0.5, 4.0}, Normalization::per_vector);
    std::vector<SpectralInterval> ivs;
    for (const auto& op : e.operators()) ivs.push_back(op.interval());
    const auto c = kantorovich_ensemble_chain(e, ivs);
    CHECK(!c.any_violated());
    CHECK(check_ensemble_inverse_bound(e).verdict == Verdict::holds);
  }
}
