#ifndef FHLAB_ASYMPTOTICS_HPP_
#define FHLAB_ASYMPTOTICS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "fhlab/complex.hpp"
#include "fhlab/precision.hpp"
#include "fhlab/real.hpp"
#include "fhlab/weights.hpp"

namespace fhlab {

/// Semicircle equilibrium measure of the scaled GUE on [-1, 1].
struct EquilibriumData {
  /// psi(x) = (2/pi) sqrt(1 - x^2).
  static Real psi(const Real& x);
  /// int_lambda^1 psi = 1/2 - (lambda sqrt(1 - lambda^2) + arcsin lambda)/pi.
  static Real tail(const Real& lambda);
  /// Lagrange constant l = -1 - 2 ln 2.
  static Real l_const(Precision bits);
};

/// Throws InvalidInput for |lambda| > 1.
Real equilibrium_tail(double lambda, Precision bits);

/// g(z) = int_{-1}^1 ln(z - s) psi(s) ds by tanh-sinh quadrature, principal
/// logarithm. Rejects z on (-inf, 1].
Complex g_value(const Complex& z, const PrecisionContext& ctx);

/// g_+(x) (side = +1) or g_-(x) (side = -1) on (-1, 1) from g(x + side i delta),
/// delta in {1e-3, 1e-4, 1e-5}, extrapolated to delta = 0.
Complex g_boundary(double x, int side, const PrecisionContext& ctx);

/// Szego function D(z) = (z + sqrt(z^2 - 1))^(-A) prod_j (z - lambda_j)^(alpha_j),
/// sqrt(z^2 - 1) = sqrt(z - 1) sqrt(z + 1). Rejects z on [-1, 1].
Complex szego_value(const Complex& z, const WeightSpec& spec, Precision bits);
/// Boundary values D_+(x), D_-(x) = e^(-+ i A arccos x) prod_j (x - lambda_j +- i0)^(alpha_j).
Complex szego_boundary(double x, int side, const WeightSpec& spec, Precision bits);
/// D_inf = 2^(-A).
Real szego_infinity(const WeightSpec& spec, Precision bits);

struct PhaseData {
  std::vector<Real> t;    ///< t_j, in the order of spec.lambdas
  std::vector<Real> tau;  ///< arcsin lambda_j
  double big_a = 0;
};

/// t_j = 2 pi n tail(lambda_j) + pi alpha_j - 2 pi sum_{i: lambda_i >= lambda_j} alpha_i
///       + A (pi - 2 tau_j).
PhaseData phase_t(const WeightSpec& spec, Precision bits);

/// Log-scale prediction with its named parts; log_value is their sum.
struct AsymptoticPrediction {
  Real log_value;
  std::vector<std::pair<std::string, Real>> terms;
  std::string error_order;

  const Real& term(const std::string& name) const;
};

/// Bulk prediction of ln E prod_j |det(H - mu_j)|^(2 alpha_j) in the bulk.
/// Terms: "C(alpha)", "semicircle", "power of n/2", "exponential", "cross terms".
AsymptoticPrediction theorem1_log(const WeightSpec& spec, const PrecisionContext& ctx);

/// Outside-spectrum prediction for one point |lambda| > 1.
/// Terms: "power of 2n", "lambda^2-1", "root power", "exponential".
AsymptoticPrediction johansson_log(double lambda, double alpha, int n, const PrecisionContext& ctx);

/// Predictions for kappa^2_{n-1}, beta_n, gamma_n of the weight with parameter n.
struct CoefficientPrediction {
  Real log_kappa2;
  Real kappa2;
  /// 1 + (1/n correction) multiplying the leading kappa^2 factor.
  Real kappa2_brace;
  Real beta;
  /// beta / sqrt(2n).
  Real beta_brace;
  Real gamma;
  /// gamma / n.
  Real gamma_brace;
};
CoefficientPrediction coeff_asym(const WeightSpec& spec, const PrecisionContext& ctx);

/// Leading part of d/d alpha_nu ln D_n (nu is 0-based):
///   (n + 2 alpha) ln(n/2) + (2 lambda^2 - 1) n + 2 alpha + alpha ln(1 - lambda^2)
///   - 2 alpha psi(alpha + 1/2) - 2 sum_{j != nu} alpha_j ln(2 |lambda_j - lambda_nu|).
Real diff_identity_rhs(const WeightSpec& spec, int nu, const PrecisionContext& ctx);

/// Integrates diff_identity_rhs over alpha_1, then alpha_2, ... (each from 0,
/// the later exponents held at 0) by Gauss-Legendre quadrature, term by term.
/// Same term names as theorem1_log.
AsymptoticPrediction integrated_identity_log(const WeightSpec& spec, const PrecisionContext& ctx);

}  // namespace fhlab

#endif  // FHLAB_ASYMPTOTICS_HPP_
