#ifndef FHLAB_QUADRATURE_HPP_
#define FHLAB_QUADRATURE_HPP_

#include <functional>
#include <span>
#include <vector>

#include "fhlab/real.hpp"

namespace fhlab::quad {

/// Node handed to an integrand on [a, b]. `to_left` = x - a and
/// `to_right` = b - x are computed without cancellation, so integrands with
/// algebraic endpoint singularities can use them directly.
struct Node {
  const Real& x;
  const Real& to_left;
  const Real& to_right;
};

/// Fills `out` with the integrand components at `node`.
using VectorIntegrand = std::function<void(const Node& node, std::span<Real> out)>;

struct TanhSinhOptions {
  Precision bits = 256;
  /// Successive levels must agree to rel_tol relative to the integral of |f|.
  long double rel_tol = 1e-30L;
  /// Decimal digits below which the truncated DE tails are dropped.
  int tail_digits = 40;
  /// Smallest exponent s of |x - endpoint|^s the integrand may carry (s > -1);
  /// controls how far out the transformed tails are kept.
  double left_exponent = 0.0;
  double right_exponent = 0.0;
  int min_level = 3;
  int max_level = 14;
};

struct TanhSinhResult {
  std::vector<Real> values;
  /// Integral of |f| per component (long double: values can exceed double).
  std::vector<long double> abs_values;
  /// Largest |I_L - I_{L-1}| / integral(|f|) over components at exit.
  long double rel_change = 0;
  int level = 0;
  std::size_t evaluations = 0;
};

/// Double-exponential quadrature of `count` functions on the finite interval
/// [a, b], halving the step until two successive levels agree.
/// Throws PrecisionUnreachable after `max_level` refinements.
TanhSinhResult tanh_sinh(const Real& a, const Real& b, int count, const VectorIntegrand& f,
                         const TanhSinhOptions& opt);

/// Scalar convenience wrapper.
Real tanh_sinh(const Real& a, const Real& b, const std::function<Real(const Node&)>& f,
               const TanhSinhOptions& opt);

struct GaussLegendreRule {
  std::vector<Real> nodes;    // ascending, on [-1, 1]
  std::vector<Real> weights;
};

/// N-point Gauss-Legendre rule computed by Newton iteration at `bits`.
GaussLegendreRule gauss_legendre(int points, Precision bits);

/// Integral of f over [a, b] with the given rule.
Real integrate(const GaussLegendreRule& rule, const Real& a, const Real& b,
               const std::function<Real(const Real&)>& f);

/// Point count for which an N-point Gauss-Legendre rule on [a, b] reaches
/// `digits` when the integrand's nearest singularity is at real `pole`
/// outside [a, b] (Bernstein-ellipse estimate).
int gauss_legendre_points(const Real& a, const Real& b, double pole, int digits);

}  // namespace fhlab::quad

#endif  // FHLAB_QUADRATURE_HPP_
