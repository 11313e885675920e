#ifndef FHLAB_SPECFUN_HPP_
#define FHLAB_SPECFUN_HPP_

#include <string>

#include "fhlab/precision.hpp"
#include "fhlab/real.hpp"

namespace fhlab {

/// Bernoulli number B_{2k} rounded to `bits` (k >= 1).
Real bernoulli_b2k(int k, Precision bits);

/// ln Gamma(x) for x > 0 at the precision of x (argument-shifted Stirling series).
Real log_gamma(const Real& x);
Real log_gamma(double x, const PrecisionContext& ctx);

/// psi(x) = Gamma'(x)/Gamma(x) for x > 0 at the precision of x.
Real digamma(const Real& x);
Real digamma(double x, const PrecisionContext& ctx);

/// ln G(x) for x > 0, G the Barnes G-function, from
///   int_0^z ln Gamma(t+1) dt = (z/2) ln 2pi - z(z+1)/2 + z ln Gamma(z+1) - ln G(z+1)
/// with the integral done by Gauss-Legendre quadrature. Arguments below 1 are
/// lifted with G(x+1) = Gamma(x) G(x).
Real log_barnes_g(const Real& x);
Real log_barnes_g(double x, const PrecisionContext& ctx);

/// ln C(alpha) with
///   C(alpha) = Gamma(alpha+1/2)^(-2 alpha) exp(2 int_0^alpha ln Gamma(s+1/2) ds + alpha^2).
Real log_c_integral(double alpha, const PrecisionContext& ctx);
/// ln C(alpha) = 2 alpha^2 ln 2 + 2 ln G(alpha+1) - ln G(2 alpha+1).
Real log_c_barnes(double alpha, const PrecisionContext& ctx);
/// Integral form, cross-checked against the Barnes form; throws
/// ConsistencyFailure when they differ by more than 10^-(digits - 2 guard).
Real log_c(double alpha, const PrecisionContext& ctx);

struct SpecialConstant {
  std::string name;
  Real value;
  std::string derivation;
};

/// zeta'(-1) = 1/12 - ln A (A the Glaisher-Kinkelin constant), with ln A from
/// the Euler-Maclaurin expansion of sum k ln k.
SpecialConstant zeta_prime_minus1(const PrecisionContext& ctx);

}  // namespace fhlab

#endif  // FHLAB_SPECFUN_HPP_
