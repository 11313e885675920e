#include "fhlab/asymptotics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include "fhlab/quadrature.hpp"
#include "fhlab/specfun.hpp"

namespace fhlab {

Real EquilibriumData::psi(const Real& x) {
  const Precision bits = x.precision();
  if (abs(x) >= 1) return Real::zero(bits);
  return 2 * sqrt(1 - x * x) / const_pi(bits);
}

Real EquilibriumData::tail(const Real& lambda) {
  const Precision bits = lambda.precision();
  if (abs(lambda) > 1) throw InvalidInput("equilibrium tail: |lambda| must not exceed 1");
  Real root = sqrt(max(Real::zero(bits), 1 - lambda * lambda));
  return Real(1, bits) / 2 - (lambda * root + asin(lambda)) / const_pi(bits);
}

Real EquilibriumData::l_const(Precision bits) { return -1 - 2 * const_log2(bits); }

Real equilibrium_tail(double lambda, Precision bits) {
  if (!(std::fabs(lambda) <= 1.0)) throw InvalidInput("equilibrium tail: |lambda| must not exceed 1");
  return EquilibriumData::tail(Real(lambda, bits));
}

Complex g_value(const Complex& z, const PrecisionContext& ctx) {
  if (z.im.is_zero() && z.re <= 1) throw InvalidInput("g: z lies on the cut (-inf, 1]");
  const Precision bits = ctx.working_bits();
  Complex zw{z.re.at_precision(bits), z.im.at_precision(bits)};
  Real two_over_pi = 2 / const_pi(bits);

  std::vector<Real> cuts{Real(-1, bits)};
  if (zw.re > -1 && zw.re < 1) cuts.push_back(zw.re);
  cuts.emplace_back(1, bits);

  Complex total{Real::zero(bits), Real::zero(bits)};
  for (std::size_t s = 0; s + 1 < cuts.size(); ++s) {
    const Real& a = cuts[s];
    const Real& b = cuts[s + 1];
    const bool z_right_of_segment = zw.re >= b;
    quad::TanhSinhOptions opt;
    opt.bits = bits;
    opt.rel_tol = ctx.target_tol;
    opt.tail_digits = ctx.digits + ctx.guard_digits;
    opt.max_level = 16;
    auto integrand = [&](const quad::Node& node, std::span<Real> out) {
      Real one_plus = (a + 1) + node.to_left;
      Real one_minus = (1 - b) + node.to_right;
      Real psi = two_over_pi * sqrt(one_plus * one_minus);
      Real dx = z_right_of_segment ? (zw.re - b) + node.to_right : (zw.re - a) - node.to_left;
      Complex w{dx, zw.im};
      Complex lw = log(w);
      out[0] = lw.re * psi;
      out[1] = lw.im * psi;
    };
    quad::TanhSinhResult r = quad::tanh_sinh(a, b, 2, integrand, opt);
    total.re += r.values[0];
    total.im += r.values[1];
  }
  return total;
}

Complex g_boundary(double x, int side, const PrecisionContext& ctx) {
  if (!(std::fabs(x) < 1.0)) throw InvalidInput("g boundary: x must lie in (-1, 1)");
  if (side != 1 && side != -1) throw InvalidInput("g boundary: side must be +1 or -1");
  const Precision bits = ctx.working_bits();
  const std::array<double, 3> deltas{1e-3, 1e-4, 1e-5};
  std::array<Complex, 3> values;
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    values[i] = g_value(Complex{Real(x, bits), Real(side * deltas[i], bits)}, ctx);
  }
  // Lagrange interpolation through (delta_i, g_i), evaluated at 0.
  Complex result{Real::zero(bits), Real::zero(bits)};
  for (std::size_t i = 0; i < deltas.size(); ++i) {
    Real weight(1, bits);
    for (std::size_t j = 0; j < deltas.size(); ++j) {
      if (j == i) continue;
      Real dj(deltas[j], bits);
      weight *= dj / (dj - Real(deltas[i], bits));
    }
    result += values[i] * weight;
  }
  return result;
}

Complex szego_value(const Complex& z, const WeightSpec& spec, Precision bits) {
  if (z.im.is_zero() && abs(z.re) <= 1) throw InvalidInput("Szego: z lies on [-1, 1]");
  Complex zw{z.re.at_precision(bits), z.im.at_precision(bits)};
  Complex one{Real(1, bits), Real::zero(bits)};
  Complex w = zw + sqrt(zw - one) * sqrt(zw + one);
  Complex log_d = log(w) * Real(-spec.big_a(), bits);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (spec.alphas[j] == 0.0) continue;
    Complex shifted = zw - Complex{Real(spec.lambdas[j], bits), Real::zero(bits)};
    log_d += log(shifted) * Real(spec.alphas[j], bits);
  }
  return exp(log_d);
}

Complex szego_boundary(double x, int side, const WeightSpec& spec, Precision bits) {
  if (!(std::fabs(x) < 1.0)) throw InvalidInput("Szego boundary: x must lie in (-1, 1)");
  if (side != 1 && side != -1) throw InvalidInput("Szego boundary: side must be +1 or -1");
  Real xr(x, bits);
  Real phase = -side * spec.big_a() * acos(xr);
  Real log_mod = Real::zero(bits);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (spec.alphas[j] == 0.0) continue;
    Real d = xr - Real(spec.lambdas[j], bits);
    if (d.is_zero()) throw InvalidInput("Szego boundary: x coincides with a singular point");
    log_mod += Real(spec.alphas[j], bits) * log(abs(d));
    if (d < 0) phase += side * spec.alphas[j] * const_pi(bits);
  }
  return polar(exp(log_mod), phase);
}

Real szego_infinity(const WeightSpec& spec, Precision bits) {
  return exp(-spec.big_a() * const_log2(bits));
}

PhaseData phase_t(const WeightSpec& spec, Precision bits) {
  PhaseData out;
  out.big_a = spec.big_a();
  Real pi = const_pi(bits);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    Real lambda(spec.lambdas[j], bits);
    if (!(abs(lambda) < 1)) throw InvalidInput("phase: lambda must lie in (-1, 1)");
    Real tau = asin(lambda);
    double upper = 0;
    for (std::size_t i = 0; i < spec.size(); ++i) {
      if (spec.lambdas[i] >= spec.lambdas[j]) upper += spec.alphas[i];
    }
    Real t = 2 * pi * spec.n * EquilibriumData::tail(lambda) + spec.alphas[j] * pi -
             2 * upper * pi + out.big_a * (pi - 2 * tau);
    out.t.push_back(std::move(t));
    out.tau.push_back(std::move(tau));
  }
  return out;
}

const Real& AsymptoticPrediction::term(const std::string& name) const {
  for (const auto& [key, value] : terms) {
    if (key == name) return value;
  }
  throw InvalidInput("prediction has no term '" + name + "'");
}

namespace {

AsymptoticPrediction assemble(std::vector<std::pair<std::string, Real>> terms, std::string order,
                              Precision bits) {
  AsymptoticPrediction p;
  p.log_value = Real::zero(bits);
  for (const auto& term : terms) p.log_value += term.second;
  p.terms = std::move(terms);
  p.error_order = std::move(order);
  return p;
}

}  // namespace

AsymptoticPrediction theorem1_log(const WeightSpec& spec, const PrecisionContext& ctx) {
  spec.validate(Regime::bulk);
  const Precision bits = ctx.working_bits();
  Real c_term = Real::zero(bits);
  Real semicircle = Real::zero(bits);
  Real power = Real::zero(bits);
  Real exponential = Real::zero(bits);
  Real cross = Real::zero(bits);
  Real n(spec.n, bits);
  Real log_half_n = log(n / 2);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const double alpha = spec.alphas[j];
    if (alpha == 0.0) continue;
    Real a(alpha, bits);
    Real lambda(spec.lambdas[j], bits);
    c_term += log_c(alpha, ctx);
    semicircle += a * a / 2 * log(1 - lambda * lambda);
    power += (a * n + a * a) * log_half_n;
    exponential += (2 * lambda * lambda - 1) * a * n;
    for (std::size_t i = 0; i < j; ++i) {
      if (spec.alphas[i] == 0.0) continue;
      Real gap = 2 * abs(Real(spec.lambdas[i], bits) - lambda);
      cross -= 2 * Real(spec.alphas[i], bits) * a * log(gap);
    }
  }
  return assemble({{"C(alpha)", c_term},
                   {"semicircle", semicircle},
                   {"power of n/2", power},
                   {"exponential", exponential},
                   {"cross terms", cross}},
                  "O(ln n/n)", bits);
}

AsymptoticPrediction johansson_log(double lambda, double alpha, int n, const PrecisionContext& ctx) {
  if (!(std::fabs(lambda) > 1.0) || !std::isfinite(lambda)) {
    throw InvalidInput("outside-spectrum formula: |lambda| must exceed 1");
  }
  if (!(alpha > -0.5)) throw InvalidInput("outside-spectrum formula: alpha must exceed -1/2");
  if (n < 1) throw InvalidInput("outside-spectrum formula: n must be positive");
  const Precision bits = ctx.working_bits();
  Real l(std::fabs(lambda), bits);
  Real a(alpha, bits);
  Real nn(n, bits);
  Real l2m1 = l * l - 1;
  Real root = sqrt(l2m1);
  return assemble({{"power of 2n", a * nn * log(2 * nn)},
                   {"lambda^2-1", -(a * a) * log(l2m1)},
                   {"root power", 2 * a * (nn + a) * log((l + root) / 2)},
                   {"exponential", 2 * a * nn * (l * l - l * root - Real(1, bits) / 2)}},
                  "o(1)", bits);
}

CoefficientPrediction coeff_asym(const WeightSpec& spec, const PrecisionContext& ctx) {
  spec.validate(Regime::bulk);
  const Precision bits = ctx.working_bits();
  PhaseData ph = phase_t(spec, bits);
  Real n(spec.n, bits);
  Real big_a(spec.big_a(), bits);
  Real s1 = Real::zero(bits);
  Real s2 = Real::zero(bits);
  Real sum_alpha2 = Real::zero(bits);
  Real kappa_sum = Real::zero(bits);
  Real sin_sum = Real::zero(bits);
  Real gamma_cos_sum = Real::zero(bits);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    Real a(spec.alphas[j], bits);
    Real lambda(spec.lambdas[j], bits);
    Real c = 1 / (1 - lambda * lambda);
    Real cos_tt = cos(ph.t[j] + ph.tau[j]);
    s1 += a * lambda;
    s2 += a * lambda * lambda;
    sum_alpha2 += a * a;
    kappa_sum += c * (a * a + a * cos_tt);
    sin_sum += c * (a * sin(ph.t[j]) - a * a * lambda);
    gamma_cos_sum += c * (a * cos_tt + a * a * lambda * lambda);
  }

  CoefficientPrediction p;
  p.kappa2_brace = 1 - (big_a * big_a - big_a + kappa_sum) / (2 * n);
  p.log_kappa2 = (n - 1 + big_a) * const_log2(bits) - big_a * log(n) - log(const_pi(bits)) / 2 -
                 log_gamma(n) + log(p.kappa2_brace);
  p.kappa2 = exp(p.log_kappa2);
  p.beta_brace = s1 + sin_sum / (4 * n);
  p.beta = sqrt(2 * n) * p.beta_brace;
  p.gamma_brace = -(n - 1) / 4 + s1 * s1 + s2 - big_a / 2 +
                  (big_a - big_a * big_a + sum_alpha2 - gamma_cos_sum + 2 * sin_sum * s1) / (4 * n);
  p.gamma = n * p.gamma_brace;
  return p;
}

Real diff_identity_rhs(const WeightSpec& spec, int nu, const PrecisionContext& ctx) {
  spec.validate(Regime::bulk);
  if (nu < 0 || nu >= static_cast<int>(spec.size())) {
    throw InvalidInput("differential identity: index out of range");
  }
  const Precision bits = ctx.working_bits();
  Real n(spec.n, bits);
  Real a(spec.alphas[nu], bits);
  Real lambda(spec.lambdas[nu], bits);
  Real rhs = (n + 2 * a) * log(n / 2) + (2 * lambda * lambda - 1) * n;
  if (spec.alphas[nu] != 0.0) {
    rhs += 2 * a + a * log(1 - lambda * lambda) - 2 * a * digamma(a + Real(1, bits) / 2);
  }
  for (std::size_t j = 0; j < spec.size(); ++j) {
    if (static_cast<int>(j) == nu || spec.alphas[j] == 0.0) continue;
    Real gap = 2 * abs(Real(spec.lambdas[j], bits) - lambda);
    rhs -= 2 * Real(spec.alphas[j], bits) * log(gap);
  }
  return rhs;
}

AsymptoticPrediction integrated_identity_log(const WeightSpec& spec, const PrecisionContext& ctx) {
  spec.validate(Regime::bulk);
  const Precision bits = ctx.working_bits();
  Real c_term = Real::zero(bits);
  Real semicircle = Real::zero(bits);
  Real power = Real::zero(bits);
  Real exponential = Real::zero(bits);
  Real cross = Real::zero(bits);
  Real n(spec.n, bits);
  Real log_half_n = log(n / 2);
  Real half = Real(1, bits) / 2;

  for (std::size_t nu = 0; nu < spec.size(); ++nu) {
    const double target = spec.alphas[nu];
    if (target == 0.0) continue;
    Real lambda(spec.lambdas[nu], bits);
    Real lo = Real::zero(bits);
    Real hi(target, bits);
    const int points = quad::gauss_legendre_points(lo, hi, -0.5, ctx.digits + ctx.guard_digits);
    quad::GaussLegendreRule rule = quad::gauss_legendre(points, bits);
    Real log_semi = log(1 - lambda * lambda);
    Real cross_rate = Real::zero(bits);
    for (std::size_t j = 0; j < nu; ++j) {
      if (spec.alphas[j] == 0.0) continue;
      cross_rate -= 2 * Real(spec.alphas[j], bits) * log(2 * abs(Real(spec.lambdas[j], bits) - lambda));
    }
    c_term += quad::integrate(rule, lo, hi, [&](const Real& a) {
      return 2 * a - 2 * a * digamma(a + half);
    });
    semicircle += quad::integrate(rule, lo, hi, [&](const Real& a) { return a * log_semi; });
    power += quad::integrate(rule, lo, hi, [&](const Real& a) { return (n + 2 * a) * log_half_n; });
    exponential += quad::integrate(rule, lo, hi,
                                   [&](const Real&) { return (2 * lambda * lambda - 1) * n; });
    cross += quad::integrate(rule, lo, hi, [&](const Real&) { return cross_rate; });
  }
  return assemble({{"C(alpha)", c_term},
                   {"semicircle", semicircle},
                   {"power of n/2", power},
                   {"exponential", exponential},
                   {"cross terms", cross}},
                  "O(ln n/n)", bits);
}

}  // namespace fhlab
