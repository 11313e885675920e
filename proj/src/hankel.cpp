#include "fhlab/hankel.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhlab/specfun.hpp"

namespace fhlab {

std::optional<std::vector<Real>> hankel_pivots(std::span<const Real> moments, int n,
                                               Precision bits) {
  if (n < 1) throw InvalidInput("hankel: n must be positive");
  if (static_cast<int>(moments.size()) < 2 * n - 1) {
    throw InvalidInput("hankel: need " + std::to_string(2 * n - 1) + " moments, have " +
                       std::to_string(moments.size()));
  }
  std::vector<Real> a(static_cast<std::size_t>(n) * n, Real::zero(bits));
  auto at = [&](int i, int j) -> Real& { return a[static_cast<std::size_t>(i) * n + j]; };
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) at(i, j) = moments[i + j].at_precision(bits);
  }
  std::vector<Real> log_pivots;
  log_pivots.reserve(n);
  for (int k = 0; k < n; ++k) {
    const Real& pivot = at(k, k);
    if (!(pivot > 0)) return std::nullopt;
    log_pivots.push_back(log(pivot));
    for (int i = k + 1; i < n; ++i) {
      Real factor = at(i, k) / pivot;
      for (int j = k + 1; j < n; ++j) at(i, j) -= factor * at(k, j);
    }
  }
  return log_pivots;
}

namespace {

std::optional<Real> lu_log_det(std::span<const Real> moments, int n, Precision bits) {
  auto pivots = hankel_pivots(moments, n, bits);
  if (!pivots) return std::nullopt;
  Real sum = Real::zero(bits);
  for (const Real& p : *pivots) sum += p;
  return sum;
}

int agreement(const Real& a, const Real& b) {
  Real diff = abs(a - b);
  if (diff.is_zero()) return digits_for_bits(std::min(a.precision(), b.precision()));
  Real scale = max(Real(1, a.precision()), abs(b));
  return static_cast<int>(std::floor(-std::log10((diff / scale).to_double())));
}

}  // namespace

LogDeterminant hankel_log_determinant(const MomentTable& M, int n, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw InvalidInput("hankel: n must be positive");
  if (M.K < 2 * n - 2) {
    throw InvalidInput("hankel: moment table has K = " + std::to_string(M.K) + ", need " +
                       std::to_string(2 * n - 2));
  }
  const Precision low_bits = bits_for_digits(ctx.digits);
  const Precision high_bits = bits_for_digits(2 * ctx.digits);
  std::span<const Real> moments(M.values.data(), 2 * n - 1);

  std::optional<Real> low = lu_log_det(moments, n, low_bits);
  std::optional<Real> high = lu_log_det(moments, n, high_bits);
  if (!low && !high) {
    throw NumericallySingular("hankel: non-positive pivot at both precisions (n = " +
                                  std::to_string(n) + ")",
                              ctx.digits);
  }
  if (!low || !high) {
    throw PrecisionUnreachable("hankel: non-positive pivot at one precision (n = " +
                                   std::to_string(n) + ")",
                               ctx.digits);
  }
  Real diff = abs(*high - *low);
  Real scale = max(Real(1, high_bits), abs(*high));
  if (diff > ctx.tolerance(high_bits) * scale) {
    throw PrecisionUnreachable("hankel: precision passes disagree (n = " + std::to_string(n) +
                                   ", " + std::to_string(agreement(*low, *high)) + " digits)",
                               ctx.digits);
  }
  LogDeterminant result;
  result.log_value = *high;
  result.n = n;
  result.precision_used = ctx.digits;
  result.agreement_digits = agreement(*low, *high);
  return result;
}

int initial_digits(int n, const PrecisionContext& ctx) {
  return std::max(ctx.digits, static_cast<int>(std::ceil(20.0 + 2.5 * n)));
}

LogDeterminant exact_log_determinant(MomentSource& source, const PrecisionContext& ctx) {
  ctx.validate();
  const int n = source.spec().n;
  int digits = initial_digits(n, ctx);
  constexpr int kEscalations = 3;
  for (int attempt = 0;; ++attempt) {
    PrecisionContext pass = ctx;
    pass.digits = digits;
    const MomentTable& table = source.table(2 * digits, 2 * n);
    try {
      return hankel_log_determinant(table, n, pass);
    } catch (const PrecisionUnreachable&) {
      if (attempt == kEscalations) throw;
    }
    digits *= 2;
  }
}

LogDeterminant exact_log_determinant(const WeightSpec& spec, const PrecisionContext& ctx) {
  MomentSource source(spec, ctx.guard_digits);
  return exact_log_determinant(source, ctx);
}

Real selberg_log(int n, Precision bits) {
  if (n < 1) throw InvalidInput("selberg: n must be positive");
  Real two_pi = 2 * const_pi(bits);
  Real result = Real(n, bits) / 2 * log(two_pi) - Real(n, bits) * n / 2 * const_log2(bits);
  Real log_fact = Real::zero(bits);
  for (int j = 1; j <= n - 1; ++j) {
    log_fact += log(Real(j, bits));
    result += log_fact;
  }
  return result;
}

Real exact_average_log(MomentSource& source, const PrecisionContext& ctx) {
  const WeightSpec& spec = source.spec();
  spec.validate(Regime::any);
  const Precision bits = ctx.working_bits();
  if (spec.all_alpha_zero()) return Real::zero(bits);
  LogDeterminant d = exact_log_determinant(source, ctx);
  return (d.log_value - selberg_log(spec.n, d.log_value.precision())).at_precision(bits);
}

Real exact_average_log(const WeightSpec& spec, const PrecisionContext& ctx) {
  MomentSource source(spec, ctx.guard_digits);
  return exact_average_log(source, ctx);
}

Real char_poly_average_log(MomentSource& source, const PrecisionContext& ctx) {
  source.spec().validate(Regime::bulk);
  return exact_average_log(source, ctx);
}

Real char_poly_average_log(const WeightSpec& spec, const PrecisionContext& ctx) {
  spec.validate(Regime::bulk);
  return exact_average_log(spec, ctx);
}

}  // namespace fhlab
