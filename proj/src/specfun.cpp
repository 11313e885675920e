#include "fhlab/specfun.hpp"

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <vector>

#include "fhlab/quadrature.hpp"

namespace fhlab {

namespace {

// Exact B_{2k} as rationals, grown on demand from the tangent numbers
// (Brent-Harvey recurrence, integer arithmetic only). Entries never change
// once written.
class BernoulliTable {
 public:
  const mpq_class& get(int k) {
    std::lock_guard<std::mutex> lock(mu_);
    if (k >= static_cast<int>(b2k_.size())) grow(std::max(k + 1, 2 * static_cast<int>(b2k_.size())));
    return b2k_[k];
  }

 private:
  void grow(int count) {
    // Tangent numbers T_1..T_N.
    const int n = count;
    std::vector<mpz_class> t(n + 1);
    t[1] = 1;
    for (int k = 2; k <= n; ++k) t[k] = (k - 1) * t[k - 1];
    for (int k = 2; k <= n; ++k) {
      for (int j = k; j <= n; ++j) t[j] = (j - k) * t[j - 1] + (j - k + 2) * t[j];
    }
    b2k_.assign(n + 1, mpq_class(0));
    for (int k = 1; k <= n; ++k) {
      // B_2k = (-1)^(k-1) 2k T_k / (4^k (4^k - 1))
      mpz_class four_k;
      mpz_ui_pow_ui(four_k.get_mpz_t(), 4, static_cast<unsigned long>(k));
      mpq_class b(2 * k * t[k], four_k * (four_k - 1));
      b.canonicalize();
      if (k % 2 == 0) b = -b;
      b2k_[k] = b;
    }
  }

  std::mutex mu_;
  std::vector<mpq_class> b2k_{mpq_class(0)};
};

BernoulliTable& bernoulli_table() {
  static BernoulliTable table;
  return table;
}

constexpr Precision kGuardBits = 32;

// Shift so that the Stirling series at z >= threshold converges below 2^-bits
// well before the Bernoulli numbers start to dominate.
long stirling_threshold(Precision bits) {
  return static_cast<long>(std::ceil(0.5 * static_cast<double>(bits) * 0.30103)) + 12;
}

void require_positive(const Real& x, const char* what) {
  if (!(x > 0)) throw InvalidInput(std::string(what) + ": argument must be positive");
}

Real to_real(const mpq_class& q, Precision bits) {
  Real r = Real::zero(bits);
  mpfr_set_q(r.get(), q.get_mpq_t(), MPFR_RNDN);
  return r;
}

// ln Gamma at z >= threshold.
Real stirling_log_gamma(const Real& z) {
  const Precision bits = z.precision();
  Real eps = ldexp(Real(1, bits), -static_cast<long>(bits));
  Real result = (z - 0.5) * log(z) - z + log(2 * const_pi(bits)) / 2;
  Real z2 = z * z;
  Real zpow = z;  // z^(2k-1)
  for (int k = 1; k < 4000; ++k) {
    Real term = bernoulli_b2k(k, bits) / (Real(2 * k, bits) * (2 * k - 1) * zpow);
    result += term;
    if (abs(term) < eps * abs(result)) break;
    zpow *= z2;
  }
  return result;
}

Real stirling_digamma(const Real& z) {
  const Precision bits = z.precision();
  Real eps = ldexp(Real(1, bits), -static_cast<long>(bits));
  Real result = log(z) - 1 / (2 * z);
  Real z2 = z * z;
  Real zpow = z2;  // z^(2k)
  for (int k = 1; k < 4000; ++k) {
    Real term = bernoulli_b2k(k, bits) / (Real(2 * k, bits) * zpow);
    result -= term;
    if (abs(term) < eps * abs(result)) break;
    zpow *= z2;
  }
  return result;
}

// Integral of ln Gamma(t + shift) over [lo, hi] by Gauss-Legendre; the
// integrand has its nearest singularity at t = -shift.
Real integrate_log_gamma(const Real& lo, const Real& hi, const Real& shift) {
  const Precision bits = std::max({lo.precision(), hi.precision(), shift.precision()});
  if (lo == hi) return Real::zero(bits);
  const int digits = digits_for_bits(bits) + 4;
  const int points = quad::gauss_legendre_points(lo, hi, -shift.to_double(), digits);
  quad::GaussLegendreRule rule = quad::gauss_legendre(points, bits);
  return quad::integrate(rule, lo, hi, [&](const Real& t) { return log_gamma(t + shift); });
}

}  // namespace

Real bernoulli_b2k(int k, Precision bits) {
  if (k < 1) throw InvalidInput("bernoulli: index must be >= 1");
  return to_real(bernoulli_table().get(k), bits);
}

Real log_gamma(const Real& x) {
  require_positive(x, "log_gamma");
  const Precision bits = x.precision();
  const Precision work = bits + kGuardBits;
  Real z = x.at_precision(work);
  const long threshold = stirling_threshold(work);
  if (z >= static_cast<double>(threshold)) return stirling_log_gamma(z).at_precision(bits);

  // Gamma(x) = Gamma(x + s) / (x (x+1) ... (x+s-1))
  const long shift = threshold - static_cast<long>(std::floor(z.to_double()));
  Real product(1, work);
  for (long i = 0; i < shift; ++i) product *= z + i;
  Real shifted = z + shift;
  return (stirling_log_gamma(shifted) - log(product)).at_precision(bits);
}

Real log_gamma(double x, const PrecisionContext& ctx) {
  return log_gamma(Real(x, ctx.working_bits()));
}

Real digamma(const Real& x) {
  require_positive(x, "digamma");
  const Precision bits = x.precision();
  const Precision work = bits + kGuardBits;
  Real z = x.at_precision(work);
  const long threshold = stirling_threshold(work);
  if (z >= static_cast<double>(threshold)) return stirling_digamma(z).at_precision(bits);

  const long shift = threshold - static_cast<long>(std::floor(z.to_double()));
  Real correction = Real::zero(work);
  for (long i = 0; i < shift; ++i) correction += 1 / (z + i);
  return (stirling_digamma(z + shift) - correction).at_precision(bits);
}

Real digamma(double x, const PrecisionContext& ctx) {
  return digamma(Real(x, ctx.working_bits()));
}

Real log_barnes_g(const Real& x) {
  require_positive(x, "log_barnes_g");
  const Precision bits = x.precision();
  const Precision work = bits + kGuardBits;
  Real xw = x.at_precision(work);
  if (xw < 1) {
    // ln G(x) = ln G(x+1) - ln Gamma(x)
    return (log_barnes_g(xw + 1) - log_gamma(xw)).at_precision(bits);
  }
  Real z = xw - 1;
  Real two_pi = 2 * const_pi(work);
  Real integral = integrate_log_gamma(Real::zero(work), z, Real(1, work));
  Real value = z / 2 * log(two_pi) - z * (z + 1) / 2 + z * log_gamma(z + 1) - integral;
  return value.at_precision(bits);
}

Real log_barnes_g(double x, const PrecisionContext& ctx) {
  return log_barnes_g(Real(x, ctx.working_bits()));
}

Real log_c_integral(double alpha, const PrecisionContext& ctx) {
  if (!(alpha > -0.5)) throw InvalidInput("log_C: alpha must exceed -1/2");
  const Precision bits = ctx.working_bits();
  if (alpha == 0.0) return Real::zero(bits);
  Real a(alpha, bits);
  Real half = Real(1, bits) / 2;
  Real integral = integrate_log_gamma(Real::zero(bits), a, half);
  return -2 * a * log_gamma(a + half) + 2 * integral + a * a;
}

Real log_c_barnes(double alpha, const PrecisionContext& ctx) {
  if (!(alpha > -0.5)) throw InvalidInput("log_C: alpha must exceed -1/2");
  const Precision bits = ctx.working_bits();
  Real a(alpha, bits);
  return 2 * a * a * const_log2(bits) + 2 * log_barnes_g(a + 1) - log_barnes_g(2 * a + 1);
}

Real log_c(double alpha, const PrecisionContext& ctx) {
  Real integral_form = log_c_integral(alpha, ctx);
  if (alpha == 0.0) return integral_form;
  Real barnes_form = log_c_barnes(alpha, ctx);
  const Precision bits = ctx.working_bits();
  Real tol = pow10(-(ctx.digits - 2 * ctx.guard_digits), bits);
  if (abs(integral_form - barnes_form) > tol * max(Real(1, bits), abs(integral_form))) {
    throw ConsistencyFailure("log_C: integral and Barnes G forms disagree at alpha = " +
                             std::to_string(alpha));
  }
  return integral_form;
}

SpecialConstant zeta_prime_minus1(const PrecisionContext& ctx) {
  const Precision bits = ctx.working_bits();
  const Precision work = bits + kGuardBits;
  const long n = stirling_threshold(work);
  Real big_n(n, work);
  Real eps = ldexp(Real(1, work), -static_cast<long>(work));

  Real sum = Real::zero(work);
  for (long k = 2; k <= n; ++k) {
    Real kk(k, work);
    sum += kk * log(kk);
  }
  Real log_a = sum - (big_n * big_n / 2 + big_n / 2 + Real(1, work) / 12) * log(big_n) +
               big_n * big_n / 4;
  // Tail: sum_{j>=2} B_2j (2j-3)! / (2j)! N^(2-2j)
  Real n2 = big_n * big_n;
  Real npow = n2;  // N^(2j-2)
  for (int j = 2; j < 4000; ++j) {
    Real coeff = bernoulli_b2k(j, work) / (Real(2 * j, work) * (2 * j - 1) * (2 * j - 2));
    Real term = coeff / npow;
    log_a += term;
    if (abs(term) < eps) break;
    npow *= n2;
  }
  Real value = Real(1, work) / 12 - log_a;
  return {"zeta'(-1)", value.at_precision(bits),
          "1/12 - ln A, ln A from Euler-Maclaurin summation of k ln k up to N = " +
              std::to_string(n)};
}

}  // namespace fhlab
