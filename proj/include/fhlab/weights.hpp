#ifndef FHLAB_WEIGHTS_HPP_
#define FHLAB_WEIGHTS_HPP_

#include <functional>
#include <map>
#include <span>
#include <vector>

#include "fhlab/precision.hpp"
#include "fhlab/real.hpp"

namespace fhlab {

/// Where the singular points may sit.
enum class Regime {
  bulk,  ///< every |lambda_j| < 1 (interior of the equilibrium support)
  any,   ///< no restriction beyond distinctness
};

/// Singular Gaussian weight
///   w(x) = prod_j |x - mu_j|^(2 alpha_j) exp(-x^2),  mu_j = lambda_j sqrt(2n).
struct WeightSpec {
  std::vector<double> lambdas;
  std::vector<double> alphas;
  int n = 1;

  std::size_t size() const { return lambdas.size(); }
  /// Eigenvalue-scale position lambda_j sqrt(2n) at `bits`.
  Real mu(std::size_t j, Precision bits) const;
  /// Sum of the exponents.
  double big_a() const;
  bool all_alpha_zero() const;
  /// True when the (lambda, alpha) pairs are invariant under lambda -> -lambda.
  bool symmetric() const;
  WeightSpec reflected() const;
  WeightSpec with_n(int new_n) const;
  WeightSpec with_alphas(std::vector<double> new_alphas) const;

  /// Throws InvalidInput on: empty or mismatched sequences, n < 1, alpha <= -1/2,
  /// repeated lambda, and (bulk regime) |lambda| >= 1.
  void validate(Regime regime = Regime::bulk) const;
};

/// prod_j |x - mu_j|^(2 alpha_j), times exp(-x^2) when `include_gaussian`.
/// Throws SingularPoint at x = mu_j with alpha_j < 0.
Real weight_eval(const WeightSpec& spec, const Real& x, bool include_gaussian = true);

/// Hankel moments M_0..M_K of the weight.
struct MomentTable {
  std::vector<Real> values;
  int K = -1;
  WeightSpec spec;
  /// Estimated relative accuracy, measured against the integral of |x|^k w.
  long double achieved_tol = 0;
  /// Nominal decimal digits the table was computed for.
  int digits = 0;
  /// Largest tanh-sinh level used by any segment.
  int quadrature_level = 0;

  Precision precision() const { return values.empty() ? 0 : values.front().precision(); }
};

/// Result of integrating several functions against the weight.
struct WeightedIntegrals {
  std::vector<Real> values;
  std::vector<long double> abs_values;
  long double achieved_tol = 0;
  int level = 0;
};

/// Integrand f(x, w(x), out) that fills `out` with f_i(x) * w(x).
using WeightedIntegrand = std::function<void(const Real& x, const Real& w, std::span<Real> out)>;

/// Integrals of `count` functions over the real line against the weight,
/// split at every mu_j and truncated where the Gaussian tail drops below the
/// working precision. `max_power` bounds the polynomial growth of the
/// integrand and sets the truncation point.
WeightedIntegrals integrate_weighted(const WeightSpec& spec, int count, int max_power,
                                     const WeightedIntegrand& f, const PrecisionContext& ctx);

/// Moments M_0..M_K with relative accuracy ctx.target_tol.
/// Throws InvalidInput for an invalid spec (any regime) and
/// PrecisionUnreachable when the quadrature cannot converge.
MomentTable moment_table(const WeightSpec& spec, int K, const PrecisionContext& ctx);

/// Gamma(alpha + (k+1)/2) for even k, 0 for odd k: the moments of
/// |x|^(2 alpha) exp(-x^2).
Real symmetric_moment_oracle(double alpha, int k, Precision bits);

/// Moment tables of one spec at several precisions, computed on demand.
/// Not thread-safe; meant to be owned by a single computation.
class MomentSource {
 public:
  explicit MomentSource(WeightSpec spec, int guard_digits = 10);

  const WeightSpec& spec() const { return spec_; }
  /// Table with at least K+1 moments accurate to about `digits` digits.
  const MomentTable& table(int digits, int K);

 private:
  WeightSpec spec_;
  int guard_digits_;
  std::map<int, MomentTable> cache_;
};

}  // namespace fhlab

#endif  // FHLAB_WEIGHTS_HPP_
