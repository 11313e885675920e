#include "fhlab/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhlab/precision.hpp"

namespace fhlab::quad {

namespace {

// Largest t kept on one side: the integrand ~ d^s near the endpoint and
// d ~ exp(-2u) with u = (pi/2) sinh t.
double side_tmax(double exponent, int tail_digits) {
  double decay = std::max(1.0 + exponent, 1e-3);
  double u = tail_digits * std::log(10.0) / (2.0 * decay) + 2.0;
  return std::asinh(2.0 * u / M_PI);
}

struct Accumulator {
  std::vector<Real> sum;
  std::vector<long double> abs_sum;
  std::vector<Real> scratch;

  Accumulator(int count, Precision bits)
      : sum(count, Real::zero(bits + 64)), abs_sum(count, 0.0L), scratch(count, Real::zero(bits)) {}
};

// Adds the contribution of the node pair at +t and -t (or the single node
// t = 0) with DE weight.
void add_nodes(const Real& a, const Real& b, const Real& width, const Real& t, bool pair,
               const VectorIntegrand& f, Accumulator& acc, Precision bits, std::size_t& evals) {
  Real half_pi = const_pi(bits) / 2;
  Real u = half_pi * sinh(t);
  Real q = exp(-2 * u);  // t >= 0 so q <= 1
  Real one_plus_q = 1 + q;
  Real weight = width * const_pi(bits) * cosh(t) * q / (one_plus_q * one_plus_q);
  Real near = width * q / one_plus_q;
  Real far = width / one_plus_q;

  auto visit = [&](const Real& x, const Real& dl, const Real& dr) {
    f(Node{x, dl, dr}, acc.scratch);
    ++evals;
    for (std::size_t k = 0; k < acc.sum.size(); ++k) {
      Real c = acc.scratch[k] * weight;
      acc.sum[k] += c;
      acc.abs_sum[k] += std::fabs(c.to_long_double());
    }
  };

  // +t sits near b; -t sits near a.
  Real x_right = b - near;
  visit(x_right, far, near);
  if (pair) {
    Real x_left = a + near;
    visit(x_left, near, far);
  }
}

}  // namespace

TanhSinhResult tanh_sinh(const Real& a_in, const Real& b_in, int count, const VectorIntegrand& f,
                         const TanhSinhOptions& opt) {
  const Precision bits = opt.bits;
  Real a = a_in.at_precision(bits);
  Real b = b_in.at_precision(bits);
  Real width = b - a;
  TanhSinhResult result;
  if (count <= 0) return result;

  // Both sides share nodes, so keep the larger reach.
  double tmax = std::max(side_tmax(opt.left_exponent, opt.tail_digits),
                         side_tmax(opt.right_exponent, opt.tail_digits));

  Accumulator acc(count, bits);
  std::size_t evals = 0;

  // Level 0: step 1, nodes at integers.
  add_nodes(a, b, width, Real(0, bits), false, f, acc, bits, evals);
  for (int k = 1; k <= static_cast<int>(std::ceil(tmax)); ++k) {
    add_nodes(a, b, width, Real(k, bits), true, f, acc, bits, evals);
  }

  std::vector<Real> previous(count, Real::zero(bits));
  for (int k = 0; k < count; ++k) previous[k] = acc.sum[k].at_precision(bits);

  long double rel_change = 0;
  for (int level = 1; level <= opt.max_level; ++level) {
    Real h = ldexp(Real(1, bits), -level);
    long steps = static_cast<long>(std::ceil(tmax * std::ldexp(1.0, level)));
    for (long j = 1; j <= steps; j += 2) {
      add_nodes(a, b, width, h * j, true, f, acc, bits, evals);
    }
    long double hd = std::ldexp(1.0L, -level);
    rel_change = 0;
    std::vector<Real> current(count, Real::zero(bits));
    for (int k = 0; k < count; ++k) {
      current[k] = acc.sum[k].at_precision(bits) * h;
      long double scale = acc.abs_sum[k] * hd;
      long double diff = std::fabs((current[k] - previous[k]).to_long_double());
      if (scale > 0) rel_change = std::max(rel_change, diff / scale);
    }
    previous = std::move(current);
    if (level >= opt.min_level && rel_change <= opt.rel_tol) {
      result.values = std::move(previous);
      result.abs_values.resize(count);
      for (int k = 0; k < count; ++k) result.abs_values[k] = acc.abs_sum[k] * hd;
      result.rel_change = rel_change;
      result.level = level;
      result.evaluations = evals;
      return result;
    }
  }
  throw PrecisionUnreachable("tanh-sinh quadrature did not converge (relative change " +
                                 std::to_string(static_cast<double>(rel_change)) + ")",
                             opt.max_level);
}

Real tanh_sinh(const Real& a, const Real& b, const std::function<Real(const Node&)>& f,
               const TanhSinhOptions& opt) {
  auto vf = [&](const Node& node, std::span<Real> out) { out[0] = f(node); };
  return tanh_sinh(a, b, 1, vf, opt).values[0];
}

GaussLegendreRule gauss_legendre(int points, Precision bits) {
  GaussLegendreRule rule;
  rule.nodes.assign(points, Real::zero(bits));
  rule.weights.assign(points, Real::zero(bits));
  const Precision work = bits + 32;
  Real eps = ldexp(Real(1, work), -static_cast<long>(bits));

  for (int i = 0; i < (points + 1) / 2; ++i) {
    // Root i of P_N counted from the right end.
    Real x(std::cos(M_PI * (i + 0.75) / (points + 0.5)), work);
    Real dp = Real::zero(work);
    for (int iter = 0; iter < 100; ++iter) {
      Real p0(1, work);
      Real p1 = x;
      for (int k = 2; k <= points; ++k) {
        Real p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = std::move(p1);
        p1 = std::move(p2);
      }
      // p1 = P_N(x), p0 = P_{N-1}(x)
      dp = points * (x * p1 - p0) / (x * x - 1);
      Real dx = p1 / dp;
      x -= dx;
      if (abs(dx) < eps) {
        // one more pass for the derivative at the converged node
        Real q0(1, work);
        Real q1 = x;
        for (int k = 2; k <= points; ++k) {
          Real q2 = ((2 * k - 1) * x * q1 - (k - 1) * q0) / k;
          q0 = std::move(q1);
          q1 = std::move(q2);
        }
        dp = points * (x * q1 - q0) / (x * x - 1);
        break;
      }
    }
    Real w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[points - 1 - i] = x.at_precision(bits);
    rule.nodes[i] = (-x).at_precision(bits);
    rule.weights[points - 1 - i] = w.at_precision(bits);
    rule.weights[i] = w.at_precision(bits);
  }
  return rule;
}

Real integrate(const GaussLegendreRule& rule, const Real& a, const Real& b,
               const std::function<Real(const Real&)>& f) {
  Precision bits = rule.nodes.empty() ? a.precision() : rule.nodes.front().precision();
  Real mid = (a + b) / 2;
  Real half = (b - a) / 2;
  Real sum = Real::zero(bits + 32);
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
  }
  return (sum * half).at_precision(bits);
}

int gauss_legendre_points(const Real& a, const Real& b, double pole, int digits) {
  double lo = std::min(a.to_double(), b.to_double());
  double hi = std::max(a.to_double(), b.to_double());
  double mid = 0.5 * (lo + hi);
  double half = std::max(0.5 * (hi - lo), 1e-300);
  double z = std::fabs((pole - mid) / half);
  double rho = z + std::sqrt(std::max(z * z - 1.0, 0.0));
  rho = std::max(rho, 1.05);
  int n = static_cast<int>(std::ceil(digits * std::log(10.0) / (2.0 * std::log(rho))));
  return std::max(n + 8, 8);
}

}  // namespace fhlab::quad
