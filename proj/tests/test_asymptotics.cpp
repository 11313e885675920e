#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "fhlab/asymptotics.hpp"
#include "fhlab/hankel.hpp"
#include "fhlab/specfun.hpp"
#include "test_support.hpp"

using namespace fhlab;
using fhlab::test::agrees;

// Frozen values: mpmath, 60 digits, by direct quadrature and Barnes G, with
// lambda = 0.4 taken as its double value.

TEST_CASE("equilibrium measure") {
  const Precision bits = 200;
  CHECK(agrees(equilibrium_tail(0.0, bits), Real(1, bits) / 2, 55));
  CHECK(equilibrium_tail(1.0, bits).is_zero());
  CHECK(agrees(equilibrium_tail(0.5, bits),
               "0.195501109477885320955501708755090972983986713241673170133492", 55));
  CHECK(agrees(equilibrium_tail(-0.5, bits) + equilibrium_tail(0.5, bits), Real(1, bits), 55));
  CHECK(EquilibriumData::psi(Real(1.5, bits)).is_zero());
  CHECK_THROWS_AS(equilibrium_tail(1.2, bits), InvalidInput);
}

TEST_CASE("g-function values") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  Complex g2 = g_value(Complex{Real(2, bits), Real(0, bits)}, ctx);
  CHECK(agrees(g2.re, "0.659709101227116812152921542838047142065871329486499969536178", 35));
  CHECK(abs(g2.im) < pow10(-35, bits));
  // g(z) - ln z = -1/(8 z^2) + O(z^-4)
  Complex big = g_value(Complex{Real(1000, bits), Real(0, bits)}, ctx);
  Real defect = big.re - log(Real(1000, bits)) + Real(1, bits) / 8000000;
  CHECK(abs(defect) < pow10(-12, bits));
  CHECK_THROWS_AS(g_value(Complex{Real(0.5, bits), Real(0, bits)}, ctx), InvalidInput);
  CHECK_THROWS_AS(g_value(Complex{Real(-3, bits), Real(0, bits)}, ctx), InvalidInput);
}

TEST_CASE("g-function jump and sum across the cut") {
  PrecisionContext ctx = PrecisionContext::with_digits(30);
  const Precision bits = ctx.working_bits();
  const Real l = EquilibriumData::l_const(bits);
  const Real two_pi = 2 * const_pi(bits);
  const Real bound = pow10(-10, bits);
  for (int i = 0; i < 20; ++i) {
    const double x = -0.95 + 1.9 * i / 19.0;
    Complex plus = g_boundary(x, 1, ctx);
    Complex minus = g_boundary(x, -1, ctx);
    Real xr(x, bits);
    INFO("x=" << x);
    // g_+ + g_- = 2 x^2 + l
    CHECK(abs(plus.re + minus.re - 2 * xr * xr - l) < bound);
    CHECK(abs(plus.im + minus.im) < bound);
    // g_+ - g_- = 2 pi i int_x^1 psi
    CHECK(abs(plus.re - minus.re) < bound);
    CHECK(abs(plus.im - minus.im - two_pi * EquilibriumData::tail(xr)) < bound);
  }
  Complex on_cut = g_boundary(0.3, 1, ctx);
  CHECK(abs(on_cut.re - Real::parse("-1.10314718055994530941723212145817656807550013436025525412068", bits)) <
        bound);
}

TEST_CASE("Szego function") {
  const Precision bits = 200;
  WeightSpec spec{{-0.5, 0.4}, {1.0, 0.5}, 10};
  // alpha = 0 gives 1
  Complex z{Real(0.2, bits), Real(0.7, bits)};
  Complex one = szego_value(z, spec.with_alphas({0.0, 0.0}), bits);
  CHECK(agrees(one.re, Real(1, bits), 55));
  CHECK(abs(one.im) < pow10(-55, bits));
  // D(z) -> D_inf
  CHECK(agrees(szego_infinity(WeightSpec{{0.3}, {1.0}, 4}, bits), Real(1, bits) / 2, 55));
  Complex far = szego_value(Complex{Real(1e12, bits), Real(0, bits)}, spec, bits);
  CHECK(abs(far.re - szego_infinity(spec, bits)) < pow10(-10, bits));
  // boundary values: D_+ D_- = prod |x - lambda_j|^(2 alpha_j), limits of D(x +- i delta)
  for (double x : {-0.9, -0.2, 0.1, 0.7}) {
    Real xr(x, bits);
    Real w = pow(abs(xr + 0.5), Real(2.0, bits)) * pow(abs(xr - 0.4), Real(1.0, bits));
    Complex plus = szego_boundary(x, 1, spec, bits);
    Complex minus = szego_boundary(x, -1, spec, bits);
    Complex prod = plus * minus;
    INFO("x=" << x);
    CHECK(agrees(prod.re, w, 50));
    CHECK(abs(prod.im) < pow10(-50, bits));
    Real delta = pow10(-30, bits);
    Complex above = szego_value(Complex{xr, delta}, spec, bits);
    Complex below = szego_value(Complex{xr, -delta}, spec, bits);
    CHECK(abs(above.re - plus.re) < pow10(-25, bits));
    CHECK(abs(above.im - plus.im) < pow10(-25, bits));
    CHECK(abs(below.re - minus.re) < pow10(-25, bits));
    CHECK(abs(below.im - minus.im) < pow10(-25, bits));
  }
  CHECK_THROWS_AS(szego_value(Complex{Real(0.5, bits), Real(0, bits)}, spec, bits), InvalidInput);
  CHECK_THROWS_AS(szego_boundary(0.4, 1, spec, bits), InvalidInput);
}

TEST_CASE("phases") {
  const Precision bits = 200;
  const Real pi = const_pi(bits);
  for (int n : {1, 4, 9}) {
    CHECK(agrees(phase_t(WeightSpec{{0.0}, {0.0}, n}, bits).t[0], pi * n, 55));
    CHECK(agrees(phase_t(WeightSpec{{0.0}, {1.0}, n}, bits).t[0], pi * n, 55));
  }
  PhaseData ph = phase_t(WeightSpec{{-0.5, 0.4}, {1.0, 0.5}, 10}, bits);
  CHECK(agrees(ph.t[0], "50.5481560857082963138058101512560669573429515940533140866116", 55));
  CHECK(agrees(ph.t[1], "17.7605106180061562799891044429576152028674168983378926327164", 55));
  CHECK(agrees(ph.tau[1], asin(Real(0.4, bits)), 55));
  CHECK_THROWS_AS(phase_t(WeightSpec{{1.0}, {1.0}, 3}, bits), InvalidInput);
}

TEST_CASE("bulk prediction") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  CHECK(theorem1_log(WeightSpec{{-0.3, 0.6}, {0.0, 0.0}, 12}, ctx).log_value.is_zero());

  // single point at the origin: ln C + (alpha n + alpha^2) ln(n/2) - alpha n
  const double alpha = 0.75;
  const int n = 14;
  Real a(alpha, bits);
  Real expected = log_c(alpha, ctx) + (a * n + a * a) * log(Real(n, bits) / 2) - a * n;
  CHECK(agrees(theorem1_log(WeightSpec{{0.0}, {alpha}, n}, ctx).log_value, expected, 38));

  AsymptoticPrediction p = theorem1_log(WeightSpec{{-0.5, 0.4}, {1.0, 0.5}, 10}, ctx);
  CHECK(agrees(p.term("C(alpha)"), "1.86673172826987268209113767538181022839324694588270984123567", 38));
  CHECK(agrees(p.term("semicircle"), "-0.165635209618987685450612742627167882008326959460578701323073", 38));
  CHECK(agrees(p.term("power of n/2"), "26.1533660770541310872623391649255491422910220068634129810805", 38));
  CHECK(agrees(p.term("exponential"), "-8.39999999999999982236431605997494860183827547414496617669647", 38));
  CHECK(agrees(p.term("cross terms"), "-0.587786664902119032861353910066786585950042902202389192072642", 38));
  CHECK(agrees(p.log_value, "18.866675930802897228677194127638456300887623616938188752224", 38));
  CHECK_THROWS_AS(p.term("missing"), InvalidInput);

  AsymptoticPrediction swapped = theorem1_log(WeightSpec{{0.4, -0.5}, {0.5, 1.0}, 10}, ctx);
  CHECK(agrees(swapped.log_value, p.log_value, 38));
  CHECK_THROWS_AS(theorem1_log(WeightSpec{{1.2}, {0.5}, 10}, ctx), InvalidInput);
}

TEST_CASE("bulk prediction tracks the exact value") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  WeightSpec spec{{0.3}, {0.5}, 24};
  Real diff = char_poly_average_log(spec, ctx) - theorem1_log(spec, ctx).log_value;
  CHECK(abs(diff).to_double() < 0.2 * std::log(24.0) / 24.0);
}

TEST_CASE("outside-spectrum prediction") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  CHECK(johansson_log(1.5, 0.0, 8, ctx).log_value.is_zero());
  AsymptoticPrediction p = johansson_log(1.5, 1.0, 8, ctx);
  CHECK(agrees(p.log_value, "27.9717269486732723290841914686065858572616165180410363605641", 38));
  CHECK(agrees(johansson_log(-1.5, 1.0, 8, ctx).log_value, p.log_value, 38));
  Real exact = exact_average_log(WeightSpec{{1.5}, {1.0}, 8}, ctx);
  CHECK(abs(exact - p.log_value) < Real(0.1, bits));
  CHECK_THROWS_AS(johansson_log(0.9, 1.0, 8, ctx), InvalidInput);
}

TEST_CASE("coefficient predictions reduce to Hermite at alpha = 0") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  for (int n : {3, 10, 25}) {
    CoefficientPrediction c = coeff_asym(WeightSpec{{0.2, -0.6}, {0.0, 0.0}, n}, ctx);
    Real expected = pow(Real(2, bits), static_cast<long>(n - 1)) /
                    (sqrt(const_pi(bits)) * exp(log_gamma(Real(n, bits))));
    INFO("n=" << n);
    CHECK(agrees(c.kappa2, expected, 38));
    CHECK(abs(c.beta) < pow10(-38, bits));
    CHECK(agrees(c.gamma, Real(-n * (n - 1), bits) / 4, 38));
    CHECK(agrees(c.gamma_brace * n, c.gamma, 38));
  }
}

TEST_CASE("differential identity") {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const Precision bits = ctx.working_bits();
  Real lambda(0.35, bits);
  Real n(20, bits);
  Real rhs0 = diff_identity_rhs(WeightSpec{{0.35}, {0.0}, 20}, 0, ctx);
  CHECK(agrees(rhs0, n * log(n / 2) + (2 * lambda * lambda - 1) * n, 38));
  CHECK_THROWS_AS(diff_identity_rhs(WeightSpec{{0.35}, {0.5}, 20}, 1, ctx), InvalidInput);

  // integrating the identity over the exponents reproduces the prediction term by term
  WeightSpec spec{{-0.5, 0.1, 0.4}, {1.0, -0.3, 0.5}, 12};
  AsymptoticPrediction direct = theorem1_log(spec, ctx);
  AsymptoticPrediction integrated = integrated_identity_log(spec, ctx);
  for (const auto& [name, value] : direct.terms) {
    INFO(name);
    CHECK(abs(integrated.term(name) - value) < pow10(-35, bits));
  }
}
