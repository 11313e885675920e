#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fhlab/hankel.hpp"
#include "fhlab/orthopoly.hpp"
#include "test_support.hpp"

using namespace fhlab;
using fhlab::test::agrees;

namespace {

// E det(mu - H)^2 over GUE(n) = pi'_{n+1}(mu) pi_n(mu) - pi'_n(mu) pi_{n+1}(mu),
// pi_k the monic Hermite polynomials: pi_{k+1} = x pi_k - (k/2) pi_{k-1}.
Real hermite_square_average(int n, const Real& mu) {
  const Precision bits = mu.precision();
  Real p_prev(1, bits), p = mu;
  Real d_prev(0, bits), d(1, bits);
  for (int k = 1; k <= n; ++k) {
    Real p_next = mu * p - Real(k, bits) / 2 * p_prev;
    Real d_next = p + mu * d - Real(k, bits) / 2 * d_prev;
    p_prev = std::move(p);
    p = std::move(p_next);
    d_prev = std::move(d);
    d = std::move(d_next);
  }
  // p = pi_{n+1}, p_prev = pi_n
  return d * p_prev - d_prev * p;
}

}  // namespace

TEST_CASE("Selberg values") {
  const Precision bits = 300;
  // D_1(0) = sqrt(pi), D_2(0) = pi/2
  CHECK(agrees(selberg_log(1, bits), log(const_pi(bits)) / 2, 80));
  CHECK(agrees(selberg_log(2, bits), log(const_pi(bits) / 2), 80));
  CHECK_THROWS_AS(selberg_log(0, bits), InvalidInput);
}

TEST_CASE("alpha = 0 determinant equals the Selberg value for n = 1..20") {
  PrecisionContext ctx = PrecisionContext::with_digits(60);
  for (int n = 1; n <= 20; ++n) {
    LogDeterminant d = exact_log_determinant(WeightSpec{{0.0}, {0.0}, n}, ctx);
    INFO("n=" << n);
    CHECK(abs(d.log_value - selberg_log(n, d.log_value.precision())) < pow10(-40, 300));
    CHECK(d.agreement_digits >= ctx.digits - 2 * ctx.guard_digits);
    CHECK(d.n == n);
  }
}

TEST_CASE("alpha = 1 average matches the Hermite two-point formula") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  for (int n : {1, 3, 7, 12}) {
    for (double lambda : {0.0, 0.35, -0.8}) {
      WeightSpec spec{{lambda}, {1.0}, n};
      Real mu = spec.mu(0, bits);
      Real oracle = log(hermite_square_average(n, mu));
      INFO("n=" << n << " lambda=" << lambda);
      CHECK(agrees(char_poly_average_log(spec, ctx), oracle, 35));
    }
  }
}

TEST_CASE("LU and kappa product agree") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  WeightSpec base{{0.3}, {0.5}, 1};
  for (int n : {2, 5, 10, 20, 30}) {
    MomentSource source(base.with_n(n));
    LogDeterminant d = exact_log_determinant(source, ctx);
    RecurrenceData R = exact_recurrence(source, n, ctx);
    INFO("n=" << n);
    CHECK(abs(d.log_value - kappa_logproduct(R, n)) < pow10(-25, 200));
  }
}

TEST_CASE("doubling digits does not move the accepted value") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  WeightSpec spec{{-0.4, 0.3}, {0.5, -0.2}, 10};
  Real a = exact_log_determinant(spec, ctx).log_value;
  Real b = exact_log_determinant(spec, ctx.rescaled(80)).log_value;
  CHECK((abs(a - b) / abs(b)).to_long_double() <= ctx.target_tol);
}

TEST_CASE("hankel_log_determinant on a given table") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  MomentTable t = moment_table(WeightSpec{{0.0}, {0.0}, 6}, 10, ctx.rescaled(80));
  LogDeterminant d = hankel_log_determinant(t, 6, ctx);
  CHECK(agrees(d.log_value, selberg_log(6, 300), 38));
  CHECK(d.precision_used == 40);
  CHECK_THROWS_AS(hankel_log_determinant(t, 7, ctx), InvalidInput);
}

TEST_CASE("non-positive pivots are reported") {
  const Precision bits = 200;
  // Hankel matrix of moments (1, 1, 1, 1, 1): rank one, second pivot is zero.
  std::vector<Real> moments(5, Real(1, bits));
  CHECK_FALSE(hankel_pivots(moments, 3, bits).has_value());
  MomentTable t;
  t.values = moments;
  t.K = 4;
  CHECK_THROWS_AS(hankel_log_determinant(t, 3, PrecisionContext{}), NumericallySingular);
  CHECK_THROWS_AS(hankel_pivots(moments, 4, bits), InvalidInput);
}

TEST_CASE("characteristic polynomial average") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  CHECK(char_poly_average_log(WeightSpec{{0.2, -0.5}, {0.0, 0.0}, 9}, ctx).is_zero());
  CHECK_THROWS_AS(char_poly_average_log(WeightSpec{{1.5}, {0.5}, 4}, ctx), InvalidInput);
  // reflection leaves the average unchanged
  WeightSpec spec{{-0.45, 0.1}, {0.5, 0.75}, 8};
  CHECK(agrees(char_poly_average_log(spec, ctx), char_poly_average_log(spec.reflected(), ctx), 35));
  // outside the bulk via the unrestricted entry point
  WeightSpec outside{{1.5}, {1.0}, 5};
  Real mu = outside.mu(0, ctx.working_bits());
  CHECK(agrees(exact_average_log(outside, ctx), log(hermite_square_average(5, mu)), 35));
}
