#include "fhlab/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>

#include "fhlab/hankel.hpp"

namespace fhlab {

namespace {

struct ChebyshevPass {
  std::vector<Real> a;
  std::vector<Real> h;
};

// Chebyshev algorithm on ordinary moments; sigma_{k,l} = int pi_k x^l w.
std::optional<ChebyshevPass> chebyshev(const std::vector<Real>& moments, int n, Precision bits) {
  const int top = 2 * n;
  ChebyshevPass out;
  std::vector<Real> prev2(top + 1, Real::zero(bits));
  std::vector<Real> prev(top + 1, Real::zero(bits));
  for (int l = 0; l <= top; ++l) prev[l] = moments[l].at_precision(bits);
  if (!(prev[0] > 0)) return std::nullopt;
  out.h.push_back(prev[0]);
  out.a.push_back(prev[1] / prev[0]);

  std::vector<Real> row(top + 1, Real::zero(bits));
  for (int k = 1; k <= n; ++k) {
    const Real& a_prev = out.a[k - 1];
    Real ratio = k >= 2 ? out.h[k - 1] / out.h[k - 2] : Real::zero(bits);
    for (int l = k; l <= top - k; ++l) {
      row[l] = prev[l + 1] - a_prev * prev[l];
      if (k >= 2) row[l] -= ratio * prev2[l];
    }
    if (!(row[k] > 0)) return std::nullopt;
    out.h.push_back(row[k]);
    if (k < n) out.a.push_back(row[k + 1] / row[k] - prev[k] / out.h[k - 1]);
    std::swap(prev2, prev);
    std::swap(prev, row);
  }
  return out;
}

bool close(const Real& x, const Real& y, const Real& tol) {
  return abs(x - y) <= tol * max(Real(1, x.precision()), abs(y));
}

int agreement(const Real& x, const Real& y) {
  Real d = abs(x - y) / max(Real(1, y.precision()), abs(y));
  if (d.is_zero()) return digits_for_bits(std::min(x.precision(), y.precision()));
  return static_cast<int>(std::floor(-std::log10(d.to_double())));
}

Real relative_defect(const Real& lhs, const Real& rhs) {
  return abs(lhs - rhs) / max(Real(1, lhs.precision()), abs(lhs));
}

}  // namespace

void fill_subleading(RecurrenceData& R) {
  const int n = R.size();
  const Precision bits = R.a.empty() ? 64 : R.a.front().precision();
  R.beta.assign(n + 1, Real::zero(bits));
  R.gamma.assign(n + 1, Real::zero(bits));
  for (int j = 0; j < n; ++j) {
    R.beta[j + 1] = R.beta[j] - R.a[j];
    Real b_prev_sq = j >= 1 ? R.b[j - 1] * R.b[j - 1] : Real::zero(bits);
    R.gamma[j + 1] = R.gamma[j] - R.a[j] * R.beta[j] - b_prev_sq;
  }
}

RecurrenceData recurrence_from_moments(const MomentTable& M, int n, const PrecisionContext& ctx) {
  ctx.validate();
  if (n < 1) throw InvalidInput("recurrence: n must be positive");
  if (M.K < 2 * n) {
    throw InvalidInput("recurrence: moment table has K = " + std::to_string(M.K) + ", need " +
                       std::to_string(2 * n));
  }
  const Precision low_bits = bits_for_digits(ctx.digits);
  const Precision high_bits = bits_for_digits(2 * ctx.digits);
  std::optional<ChebyshevPass> low = chebyshev(M.values, n, low_bits);
  std::optional<ChebyshevPass> high = chebyshev(M.values, n, high_bits);
  if (!low || !high) {
    throw PrecisionUnreachable("recurrence: h_j lost positivity (n = " + std::to_string(n) + ")",
                               ctx.digits);
  }

  RecurrenceData R;
  R.spec = M.spec;
  R.digits = ctx.digits;
  R.a = high->a;
  for (int j = 0; j <= n; ++j) {
    R.log_h.push_back(log(high->h[j]));
    R.kappa.push_back(1 / sqrt(high->h[j]));
  }
  for (int j = 0; j < n; ++j) R.b.push_back(sqrt(high->h[j + 1] / high->h[j]));

  Real tol = ctx.tolerance(high_bits);
  int agree = digits_for_bits(high_bits);
  for (int j = 0; j <= n; ++j) {
    Real log_h_low = log(low->h[j]);
    if (!close(log_h_low, R.log_h[j], tol)) {
      throw PrecisionUnreachable("recurrence: precision passes disagree on h_" + std::to_string(j),
                                 ctx.digits);
    }
    agree = std::min(agree, agreement(log_h_low, R.log_h[j]));
  }
  for (int j = 0; j < n; ++j) {
    if (!close(low->a[j], R.a[j], tol)) {
      throw PrecisionUnreachable("recurrence: precision passes disagree on a_" + std::to_string(j),
                                 ctx.digits);
    }
    agree = std::min(agree, agreement(low->a[j], R.a[j]));
  }
  R.agreement_digits = agree;
  fill_subleading(R);
  return R;
}

RecurrenceData exact_recurrence(MomentSource& source, int n, const PrecisionContext& ctx) {
  ctx.validate();
  int digits = initial_digits(std::max(n, source.spec().n), ctx);
  constexpr int kEscalations = 3;
  for (int attempt = 0;; ++attempt) {
    PrecisionContext pass = ctx;
    pass.digits = digits;
    const MomentTable& table = source.table(2 * digits, std::max(2 * n, 2 * source.spec().n));
    try {
      return recurrence_from_moments(table, n, pass);
    } catch (const PrecisionUnreachable&) {
      if (attempt == kEscalations) throw;
    }
    digits *= 2;
  }
}

RecurrenceData exact_recurrence(const WeightSpec& spec, int n, const PrecisionContext& ctx) {
  MomentSource source(spec, ctx.guard_digits);
  return exact_recurrence(source, n, ctx);
}

Real kappa_logproduct(const RecurrenceData& R, int n) {
  if (n < 1 || n > static_cast<int>(R.log_h.size())) {
    throw InvalidInput("kappa product: n out of range");
  }
  Real sum = Real::zero(R.log_h.front().precision());
  for (int j = 0; j < n; ++j) sum += R.log_h[j];
  return sum;
}

BasisValues eval_basis(const RecurrenceData& R, const Real& x, int upto) {
  if (upto < 0 || upto > R.size()) throw InvalidInput("eval_basis: degree out of range");
  const Precision bits = std::max(x.precision(), R.kappa.front().precision());
  BasisValues v;
  v.p.assign(upto + 1, Real::zero(bits));
  v.dp.assign(upto + 1, Real::zero(bits));
  v.p[0] = R.kappa[0].at_precision(bits);
  for (int j = 0; j < upto; ++j) {
    Real shifted = x - R.a[j];
    Real p = shifted * v.p[j];
    Real dp = v.p[j] + shifted * v.dp[j];
    if (j >= 1) {
      p -= R.b[j - 1] * v.p[j - 1];
      dp -= R.b[j - 1] * v.dp[j - 1];
    }
    v.p[j + 1] = p / R.b[j];
    v.dp[j + 1] = dp / R.b[j];
  }
  return v;
}

Real christoffel_darboux_residual(const RecurrenceData& R, const Real& x) {
  const int n = R.size();
  BasisValues v = eval_basis(R, x, n);
  Real lhs = Real::zero(v.p[0].precision());
  for (int j = 0; j < n; ++j) lhs += v.p[j] * v.p[j];
  Real rhs = R.b[n - 1] * (v.dp[n] * v.p[n - 1] - v.p[n] * v.dp[n - 1]);
  return abs(lhs - rhs) / abs(lhs);
}

Real orthonormality_defect(const RecurrenceData& R, int count, const PrecisionContext& ctx) {
  if (count < 1 || count > R.size()) throw InvalidInput("orthonormality: count out of range");
  const int pairs = count * (count + 1) / 2;
  auto integrand = [&](const Real& x, const Real& w, std::span<Real> out) {
    BasisValues v = eval_basis(R, x, count - 1);
    int idx = 0;
    for (int i = 0; i < count; ++i) {
      Real pw = v.p[i] * w;
      for (int j = i; j < count; ++j) out[idx++] = pw * v.p[j];
    }
  };
  WeightedIntegrals wi = integrate_weighted(R.spec, pairs, 2 * count, integrand, ctx);
  Real worst = Real::zero(ctx.working_bits());
  int idx = 0;
  for (int i = 0; i < count; ++i) {
    for (int j = i; j < count; ++j) {
      Real target(i == j ? 1 : 0, ctx.working_bits());
      worst = max(worst, abs(wi.values[idx++] - target));
    }
  }
  return worst;
}

std::vector<Real> monic_coefficients_direct(const MomentTable& M, int j, Precision bits) {
  if (j < 0 || M.K < 2 * j - 1) throw InvalidInput("monic coefficients: not enough moments");
  std::vector<std::vector<Real>> A(j, std::vector<Real>(j + 1, Real::zero(bits)));
  for (int i = 0; i < j; ++i) {
    for (int l = 0; l < j; ++l) A[i][l] = M.values[i + l].at_precision(bits);
    A[i][j] = -M.values[i + j].at_precision(bits);
  }
  for (int k = 0; k < j; ++k) {
    int piv = k;
    for (int i = k + 1; i < j; ++i) {
      if (abs(A[i][k]) > abs(A[piv][k])) piv = i;
    }
    std::swap(A[k], A[piv]);
    if (A[k][k].is_zero()) throw NumericallySingular("monic coefficients: singular system", 0);
    for (int i = k + 1; i < j; ++i) {
      Real f = A[i][k] / A[k][k];
      for (int l = k; l <= j; ++l) A[i][l] -= f * A[k][l];
    }
  }
  std::vector<Real> c(j, Real::zero(bits));
  for (int k = j - 1; k >= 0; --k) {
    Real s = A[k][j];
    for (int l = k + 1; l < j; ++l) s -= A[k][l] * c[l];
    c[k] = s / A[k][k];
  }
  return c;
}

CoefficientDefects coefficient_identity_defects(const RecurrenceData& R, const MomentTable& M) {
  const int n = R.size();
  const Precision bits = R.a.front().precision();
  auto log_pivots = hankel_pivots(M.values, n + 1, bits);
  if (!log_pivots) throw NumericallySingular("coefficient identities: Hankel pivot not positive", 0);

  std::vector<Real> kappa, beta, gamma;
  for (int j = 0; j <= n; ++j) {
    kappa.push_back(exp(-(*log_pivots)[j] / 2));
    std::vector<Real> c = monic_coefficients_direct(M, j, bits);
    beta.push_back(j >= 1 ? c[j - 1] : Real::zero(bits));
    gamma.push_back(j >= 2 ? c[j - 2] : Real::zero(bits));
  }

  CoefficientDefects d{Real::zero(bits), Real::zero(bits), Real::zero(bits)};
  for (int j = 0; j < n; ++j) {
    d.b_kappa = max(d.b_kappa, relative_defect(R.b[j], kappa[j] / kappa[j + 1]));
    d.a_beta = max(d.a_beta, relative_defect(R.a[j], beta[j] - beta[j + 1]));
  }
  for (int j = 1; j < n; ++j) {
    Real ratio = kappa[j - 1] / kappa[j];
    Real rhs = gamma[j] - gamma[j + 1] - beta[j] * beta[j] + beta[j] * beta[j + 1];
    d.kappa_gamma = max(d.kappa_gamma, relative_defect(ratio * ratio, rhs));
  }
  return d;
}

}  // namespace fhlab
