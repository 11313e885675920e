// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "fhlab/asymptotics.hpp"
#include "fhlab/hankel.hpp"
#include "fhlab/mc_gue.hpp"
#include "fhlab/orthopoly.hpp"
#include "fhlab/specfun.hpp"
#include "fhlab/weights.hpp"

using namespace fhlab;

namespace {

struct Verdict {
  bool pass;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  std::function<Verdict()> run;
};

double ratio_spread(const std::vector<double>& v) {
  auto [lo, hi] = std::minmax_element(v.begin(), v.end());
  return *hi / *lo;
}

std::string join(const std::vector<double>& v) {
  std::ostringstream os;
  os.precision(3);
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os.str();
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i) {
    if (!(v[i] < v[i - 1])) return false;
  }
  return true;
}

double rel(const Real& value, const Real& reference) {
  return (abs(value - reference) / abs(reference)).to_double();
}

// Moment sources of the one-point spec lambda = 0.3, alpha = 0.5, shared by
// the convergence and coefficient criteria.
std::map<int, MomentSource>& one_point_sources() {
  static std::map<int, MomentSource> sources;
  return sources;
}

MomentSource& one_point_source(int n) {
  auto& sources = one_point_sources();
  auto it = sources.find(n);
  if (it == sources.end()) it = sources.emplace(n, MomentSource(WeightSpec{{0.3}, {0.5}, n})).first;
  return it->second;
}

Verdict selberg() {
  PrecisionContext ctx = PrecisionContext::with_digits(60);
  double worst = 0;
  for (int n = 1; n <= 20; ++n) {
    LogDeterminant d = exact_log_determinant(WeightSpec{{0.0}, {0.0}, n}, ctx);
    worst = std::max(worst, abs(d.log_value - selberg_log(n, d.log_value.precision())).to_double());
  }
  std::ostringstream os;
  os << "max |ln D_n - Selberg| = " << worst << " over n = 1..20 (bound 1e-40)";
  return {worst < 1e-40, os.str()};
}

Verdict moment_oracle() {
  PrecisionContext ctx = PrecisionContext::with_digits(60);
  const Precision bits = ctx.working_bits();
  double worst = 0;
  for (double alpha : {-0.3, 0.5, 1.2}) {
    MomentTable t = moment_table(WeightSpec{{0.0}, {alpha}, 1}, 40, ctx);
    for (int k = 0; k <= 40; ++k) {
      if (k % 2 == 0) {
        worst = std::max(worst, rel(t.values[k], symmetric_moment_oracle(alpha, k, bits)));
      } else {
        // odd moments vanish; measured against the neighbouring even moment
        worst = std::max(worst, (abs(t.values[k]) / t.values[k - 1]).to_double());
      }
    }
  }
  std::ostringstream os;
  os << "max relative defect " << worst << " for alpha in {-0.3, 0.5, 1.2}, k <= 40 (bound 1e-45)";
  return {worst < 1e-45, os.str()};
}

Verdict two_path_determinant() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  double worst = 0;
  for (int n = 1; n <= 30; ++n) {
    MomentSource source(WeightSpec{{0.3}, {0.5}, n});
    LogDeterminant d = exact_log_determinant(source, ctx);
    RecurrenceData R = exact_recurrence(source, n, ctx);
    worst = std::max(worst, abs(d.log_value - kappa_logproduct(R, n)).to_double());
  }
  std::ostringstream os;
  os << "max |LU - kappa product| = " << worst << " over n = 1..30 (bound 1e-25)";
  return {worst < 1e-25, os.str()};
}

Verdict bulk_convergence() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  std::vector<double> e, scaled;
  for (int n : {8, 16, 32, 64}) {
    MomentSource& source = one_point_source(n);
    Real exact = char_poly_average_log(source, ctx);
    Real asym = theorem1_log(source.spec(), ctx).log_value;
    e.push_back(abs(exact - asym).to_double());
    scaled.push_back(e.back() * n / std::log(static_cast<double>(n)));
  }
  const double spread = ratio_spread(scaled);
  std::ostringstream os;
  os << "e_n n/ln n = " << join(scaled) << " (spread " << spread << " <= 3); e_64 = " << e[3]
     << " < e_8 = " << e[0];
  return {spread <= 3.0 && e[3] < e[0], os.str()};
}

Verdict cross_term() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const double a1 = 0.5, a2 = 0.5;
  const double target = -2 * a1 * a2 * std::log(2 * std::fabs(-0.4 - 0.3));
  std::vector<double> err;
  for (int n : {8, 16, 32}) {
    WeightSpec both{{-0.4, 0.3}, {a1, a2}, n};
    Real combo = char_poly_average_log(both, ctx) - char_poly_average_log(both.with_alphas({a1, 0.0}), ctx) -
                 char_poly_average_log(both.with_alphas({0.0, a2}), ctx);
    err.push_back(std::fabs(combo.to_double() - target));
  }
  std::ostringstream os;
  os << "|combination - cross term| = " << join(err) << " for n = 8, 16, 32 (strictly decreasing)";
  return {strictly_decreasing(err), os.str()};
}

Verdict coefficient_asymptotics() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  std::vector<double> k_dev, b_dev, g_dev;
  for (int n : {16, 32, 64}) {
    MomentSource& source = one_point_source(n);
    RecurrenceData R = exact_recurrence(source, n, ctx);
    CoefficientPrediction p = coeff_asym(source.spec(), ctx);
    const Precision bits = R.kappa[0].precision();
    Real nn(n, bits);
    Real kappa2 = R.kappa[n - 1] * R.kappa[n - 1];
    k_dev.push_back((nn * nn * abs(kappa2 / p.kappa2 - 1)).to_double());
    b_dev.push_back((nn * nn * abs(R.beta[n] / sqrt(2 * nn) - p.beta_brace)).to_double());
    g_dev.push_back((nn * abs(R.gamma[n] - p.gamma)).to_double());
  }
  const double sk = ratio_spread(k_dev), sb = ratio_spread(b_dev), sg = ratio_spread(g_dev);
  std::ostringstream os;
  os << "n^2 kappa dev = " << join(k_dev) << "; n^2 beta dev = " << join(b_dev)
     << "; n gamma dev = " << join(g_dev) << " (spreads " << sk << ", " << sb << ", " << sg << " <= 3)";
  return {sk <= 3.0 && sb <= 3.0 && sg <= 3.0, os.str()};
}

Verdict differential_identity() {
  PrecisionContext ctx = PrecisionContext::with_digits(60);
  const Precision bits = ctx.working_bits();
  const double alpha = 0.5, step = 1e-6;
  std::vector<double> scaled;
  for (int n : {8, 16, 32}) {
    WeightSpec spec{{0.3}, {alpha}, n};
    Real fd = (char_poly_average_log(spec.with_alphas({alpha + step}), ctx) -
               char_poly_average_log(spec.with_alphas({alpha - step}), ctx)) /
              (2 * Real(step, bits));
    Real residual = abs(fd - diff_identity_rhs(spec, 0, ctx));
    scaled.push_back(residual.to_double() * n / std::log(static_cast<double>(n)));
  }
  const double spread = ratio_spread(scaled);
  std::ostringstream os;
  os << "|fd - rhs| n/ln n = " << join(scaled) << " (spread " << spread << " <= 3)";
  return {spread <= 3.0, os.str()};
}

Verdict outside_regime() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  std::vector<double> per_n;
  for (int n : {4, 8, 16}) {
    Real exact = exact_average_log(WeightSpec{{1.5}, {0.5}, n}, ctx);
    Real asym = johansson_log(1.5, 0.5, n, ctx).log_value;
    per_n.push_back(abs(exact - asym).to_double() / n);
  }
  std::ostringstream os;
  os << "|exact - prediction|/n = " << join(per_n) << " for n = 4, 8, 16 (strictly decreasing)";
  return {strictly_decreasing(per_n), os.str()};
}

Verdict special_functions() {
  PrecisionContext ctx = PrecisionContext::with_digits(60);
  const Precision bits = ctx.working_bits();
  double worst = 0;
  for (double alpha : {-0.45, -0.25, 0.1, 0.5, 1.0, 1.7, 3.2}) {
    worst = std::max(worst, abs(log_c_integral(alpha, ctx) - log_c_barnes(alpha, ctx)).to_double());
  }
  const double c0 = abs(exp(log_c(0.0, ctx)) - 1).to_double();
  const double c1 = abs(exp(log_c(1.0, ctx)) - 4).to_double();
  Real half(0.5, bits);
  Real lhs = 2 * log_barnes_g(half);
  Real rhs = const_log2(bits) / 12 - log(const_pi(bits)) / 2 + 3 * zeta_prime_minus1(ctx).value;
  const double identity = abs(lhs - rhs).to_double();
  std::ostringstream os;
  os << "C forms max diff " << worst << " on 7 points; |C(0)-1| = " << c0 << ", |C(1)-4| = " << c1
     << "; Barnes G(1/2) identity defect " << identity << " (bound 1e-40)";
  return {worst < 1e-40 && c0 < 1e-40 && c1 < 1e-40 && identity < 1e-40, os.str()};
}

Verdict g_and_szego() {
  PrecisionContext ctx = PrecisionContext::with_digits(30);
  const Precision bits = ctx.working_bits();
  const Real l = EquilibriumData::l_const(bits);
  const Real two_pi = 2 * const_pi(bits);
  double g_worst = 0;
  double d_worst = 0;
  WeightSpec spec{{-0.4, 0.3}, {0.5, 0.75}, 8};
  const Precision d_bits = bits_for_digits(60);
  for (int i = 0; i < 20; ++i) {
    const double x = -0.95 + 1.9 * i / 19.0;
    Real xr(x, bits);
    Complex plus = g_boundary(x, 1, ctx);
    Complex minus = g_boundary(x, -1, ctx);
    for (const Real& defect : {abs(plus.re + minus.re - 2 * xr * xr - l), abs(plus.im + minus.im),
                               abs(plus.re - minus.re),
                               abs(plus.im - minus.im - two_pi * EquilibriumData::tail(xr))}) {
      g_worst = std::max(g_worst, defect.to_double());
    }
    // D_+ D_- = w on the cut; the grid avoids the singular points
    Real xd(x, d_bits);
    Real w = pow(abs(xd + 0.4), Real(1.0, d_bits)) * pow(abs(xd - 0.3), Real(1.5, d_bits));
    Complex prod = szego_boundary(x, 1, spec, d_bits) * szego_boundary(x, -1, spec, d_bits);
    d_worst = std::max(d_worst, std::max(rel(prod.re, w), (abs(prod.im) / w).to_double()));
  }
  std::ostringstream os;
  os << "g jump/sum max defect " << g_worst << " at 20 points (bound 1e-10); D+ D- = w max relative defect "
     << d_worst << " (bound 1e-55)";
  return {g_worst < 1e-10 && d_worst < 1e-55, os.str()};
}

Verdict cd_and_coefficient_identities() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  const int n = 12;
  MomentSource source(WeightSpec{{-0.4, 0.3}, {0.5, 0.75}, n});
  RecurrenceData R = exact_recurrence(source, n, ctx);
  const Precision bits = R.kappa[0].precision();
  double cd = 0;
  for (double x : {-6.1, -3.3, -1.7, -0.2, 0.45, 1.9, 2.8, 5.5}) {
    cd = std::max(cd, christoffel_darboux_residual(R, Real(x, bits)).to_double());
  }
  CoefficientDefects d = coefficient_identity_defects(R, source.table(2 * R.digits, 2 * n));
  const double ci = std::max({d.b_kappa.to_double(), d.a_beta.to_double(), d.kappa_gamma.to_double()});
  std::ostringstream os;
  os << "Christoffel-Darboux max residual " << cd << "; coefficient identities max defect " << ci
     << " at n = 12 (bound 1e-20)";
  return {cd < 1e-20 && ci < 1e-20, os.str()};
}

Verdict monte_carlo() {
  PrecisionContext ctx = PrecisionContext::with_digits(40);
  WeightSpec spec{{0.2}, {1.0}, 4};
  McEstimate first = mc_average_log(spec, 100000, 1);
  McEstimate second = mc_average_log(spec, 100000, 1);
  const double exact = char_poly_average_log(spec, ctx).to_double();
  const double z = (1.0 - std::exp(exact - first.mean_log)) / first.stderr_rel;
  const bool same = first.mean_log == second.mean_log && first.stderr_rel == second.stderr_rel;
  std::ostringstream os;
  os << "z = " << z << " (|z| <= 4), rerun with the same seed " << (same ? "identical" : "differs");
  return {std::fabs(z) <= 4.0 && same, os.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "Selberg exactness", selberg},
      {2, "moment oracle", moment_oracle},
      {3, "two-path determinant", two_path_determinant},
      {4, "bulk asymptotics convergence", bulk_convergence},
      {5, "two-point cross term", cross_term},
      {6, "coefficient asymptotics", coefficient_asymptotics},
      {7, "differential identity", differential_identity},
      {8, "outside-spectrum regime", outside_regime},
      {9, "special functions", special_functions},
      {10, "g-function and Szego properties", g_and_szego},
      {11, "Christoffel-Darboux and coefficient identities", cd_and_coefficient_identities},
      {12, "Monte Carlo cross-check", monte_carlo},
  };
  int failed = 0;
  for (const Criterion& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!v.pass) ++failed;
    std::cout << (v.pass ? "[PASS] " : "[FAIL] ") << c.id << ' ' << c.name << ": " << v.detail << " ["
              << std::fixed << std::setprecision(1) << seconds << " s]" << std::defaultfloat << std::endl;
  }
  std::cout << (criteria.size() - failed) << '/' << criteria.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
