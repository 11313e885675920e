#ifndef FHLAB_HANKEL_HPP_
#define FHLAB_HANKEL_HPP_

#include <optional>
#include <span>
#include <vector>

#include "fhlab/precision.hpp"
#include "fhlab/real.hpp"
#include "fhlab/weights.hpp"

namespace fhlab {

/// ln D_n with the precision bookkeeping of the two passes.
struct LogDeterminant {
  Real log_value;
  int n = 0;
  /// Nominal digits of the lower pass.
  int precision_used = 0;
  /// Decimal digits of agreement between the two passes.
  int agreement_digits = 0;
};

/// ln of the leading principal minors' pivots of the Hankel matrix (M_{i+j})
/// by LU without pivoting at `bits`. Returns nullopt when a pivot is not
/// positive.
std::optional<std::vector<Real>> hankel_pivots(std::span<const Real> moments, int n, Precision bits);

/// ln det (M_{i+j})_{i,j<n}, computed at ctx.digits and 2 ctx.digits and
/// accepted when the two agree to ctx.target_tol.
/// Throws InvalidInput when the table has fewer than 2n-1 moments,
/// NumericallySingular when both passes meet a non-positive pivot and
/// PrecisionUnreachable when the passes disagree.
LogDeterminant hankel_log_determinant(const MomentTable& M, int n, const PrecisionContext& ctx);

/// Adaptive ln D_n: starts at max(ctx.digits, 20 + 2.5 n) digits and doubles
/// up to three times until hankel_log_determinant accepts. Tolerance stays
/// ctx.target_tol throughout.
LogDeterminant exact_log_determinant(MomentSource& source, const PrecisionContext& ctx);
LogDeterminant exact_log_determinant(const WeightSpec& spec, const PrecisionContext& ctx);

/// Starting digits of the adaptive policy for size n.
int initial_digits(int n, const PrecisionContext& ctx);

/// ln D_n(0,...,0) = (n/2) ln 2pi - (n^2/2) ln 2 + sum_{j=1}^{n-1} ln j!.
Real selberg_log(int n, Precision bits);

/// ln E prod_j |det(H - mu_j)|^(2 alpha_j) over GUE(n) = ln D_n - ln D_n(0).
/// Requires every |lambda_j| < 1; exact_average_log accepts any lambda.
Real char_poly_average_log(const WeightSpec& spec, const PrecisionContext& ctx);
Real char_poly_average_log(MomentSource& source, const PrecisionContext& ctx);
Real exact_average_log(const WeightSpec& spec, const PrecisionContext& ctx);
Real exact_average_log(MomentSource& source, const PrecisionContext& ctx);

}  // namespace fhlab

#endif  // FHLAB_HANKEL_HPP_
