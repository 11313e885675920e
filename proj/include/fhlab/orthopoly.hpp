#ifndef FHLAB_ORTHOPOLY_HPP_
#define FHLAB_ORTHOPOLY_HPP_

#include <vector>

#include "fhlab/precision.hpp"
#include "fhlab/real.hpp"
#include "fhlab/weights.hpp"

namespace fhlab {

/// Orthonormal polynomials p_j(x) = kappa_j (x^j + beta_j x^(j-1) + gamma_j x^(j-2) + ...)
/// of the weight, with
///   b_{j-1} p_{j-1}(x) + (a_j - x) p_j(x) + b_j p_{j+1}(x) = 0.
struct RecurrenceData {
  std::vector<Real> a;       ///< a_0..a_{n-1}
  std::vector<Real> b;       ///< b_0..b_{n-1}, positive
  std::vector<Real> kappa;   ///< kappa_0..kappa_n
  std::vector<Real> beta;    ///< beta_0..beta_n
  std::vector<Real> gamma;   ///< gamma_0..gamma_n
  std::vector<Real> log_h;   ///< ln h_j = -2 ln kappa_j, j = 0..n
  WeightSpec spec;
  int digits = 0;
  int agreement_digits = 0;

  int size() const { return static_cast<int>(a.size()); }
};

/// Chebyshev moment algorithm for n recurrence steps, run at ctx.digits and
/// 2 ctx.digits and accepted when every output agrees to ctx.target_tol.
/// Needs K >= 2n. Throws PrecisionUnreachable on disagreement or when some
/// h_j is not positive.
RecurrenceData recurrence_from_moments(const MomentTable& M, int n, const PrecisionContext& ctx);

/// Adaptive version with the determinant's precision policy; shares tables
/// with exact_log_determinant through `source`.
RecurrenceData exact_recurrence(MomentSource& source, int n, const PrecisionContext& ctx);
RecurrenceData exact_recurrence(const WeightSpec& spec, int n, const PrecisionContext& ctx);

/// beta_j, gamma_j from a_j, b_j:
///   beta_{j+1} = beta_j - a_j,  gamma_{j+1} = gamma_j - a_j beta_j - b_{j-1}^2.
void fill_subleading(RecurrenceData& R);

/// -2 sum_{j<n} ln kappa_j = ln D_n.
Real kappa_logproduct(const RecurrenceData& R, int n);

struct BasisValues {
  std::vector<Real> p;
  std::vector<Real> dp;
};

/// p_0..p_upto and their x-derivatives at x (upto <= R.size()).
BasisValues eval_basis(const RecurrenceData& R, const Real& x, int upto);

/// |sum_{j<n} p_j^2 - b_{n-1} (p'_n p_{n-1} - p_n p'_{n-1})| / sum_{j<n} p_j^2 with n = R.size().
Real christoffel_darboux_residual(const RecurrenceData& R, const Real& x);

/// max_{i,j<count} |int p_i p_j w - delta_ij| by quadrature at ctx.
Real orthonormality_defect(const RecurrenceData& R, int count, const PrecisionContext& ctx);

/// Monic coefficients c_0..c_{j-1} of the degree-j orthogonal polynomial from
/// the Hankel system sum_l M_{i+l} c_l = -M_{i+j}, i < j (Gaussian elimination
/// with partial pivoting at `bits`).
std::vector<Real> monic_coefficients_direct(const MomentTable& M, int j, Precision bits);

/// Largest relative defects of
///   b_j = kappa_j / kappa_{j+1},  a_j = beta_j - beta_{j+1},
///   (kappa_{j-1}/kappa_j)^2 = gamma_j - gamma_{j+1} - beta_j^2 + beta_j beta_{j+1},
/// where a_j, b_j come from R and kappa_j, beta_j, gamma_j are recomputed
/// directly from the moments (Hankel pivots and monic coefficient solves).
struct CoefficientDefects {
  Real b_kappa;
  Real a_beta;
  Real kappa_gamma;
};
CoefficientDefects coefficient_identity_defects(const RecurrenceData& R, const MomentTable& M);

}  // namespace fhlab

#endif  // FHLAB_ORTHOPOLY_HPP_
