#include "fhlab/weights.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fhlab/quadrature.hpp"
#include "fhlab/specfun.hpp"

namespace fhlab {

Real WeightSpec::mu(std::size_t j, Precision bits) const {
  Real two_n(2 * n, bits);
  return Real(lambdas.at(j), bits) * sqrt(two_n);
}

double WeightSpec::big_a() const {
  double s = 0;
  for (double a : alphas) s += a;
  return s;
}

bool WeightSpec::all_alpha_zero() const {
  return std::all_of(alphas.begin(), alphas.end(), [](double a) { return a == 0.0; });
}

bool WeightSpec::symmetric() const {
  for (std::size_t j = 0; j < size(); ++j) {
    if (alphas[j] == 0.0) continue;
    bool found = false;
    for (std::size_t i = 0; i < size() && !found; ++i) {
      found = lambdas[i] == -lambdas[j] && alphas[i] == alphas[j];
    }
    if (!found) return false;
  }
  return true;
}

WeightSpec WeightSpec::reflected() const {
  WeightSpec r = *this;
  for (double& l : r.lambdas) l = -l;
  return r;
}

WeightSpec WeightSpec::with_n(int new_n) const {
  WeightSpec r = *this;
  r.n = new_n;
  return r;
}

WeightSpec WeightSpec::with_alphas(std::vector<double> new_alphas) const {
  WeightSpec r = *this;
  r.alphas = std::move(new_alphas);
  return r;
}

void WeightSpec::validate(Regime regime) const {
  if (lambdas.empty()) throw InvalidInput("weight: at least one singular point is required");
  if (lambdas.size() != alphas.size()) {
    throw InvalidInput("weight: lambdas and alphas differ in length");
  }
  if (n < 1) throw InvalidInput("weight: n must be positive");
  for (std::size_t j = 0; j < size(); ++j) {
    if (!std::isfinite(lambdas[j]) || !std::isfinite(alphas[j])) {
      throw InvalidInput("weight: non-finite parameter");
    }
    if (!(alphas[j] > -0.5)) {
      throw InvalidInput("weight: alpha_" + std::to_string(j + 1) + " must exceed -1/2");
    }
    if (regime == Regime::bulk && !(std::fabs(lambdas[j]) < 1.0)) {
      throw InvalidInput("weight: lambda_" + std::to_string(j + 1) + " must lie in (-1, 1)");
    }
    for (std::size_t i = 0; i < j; ++i) {
      if (lambdas[i] == lambdas[j]) throw InvalidInput("weight: singular points must be distinct");
    }
  }
}

Real weight_eval(const WeightSpec& spec, const Real& x, bool include_gaussian) {
  const Precision bits = x.precision();
  Real w(1, bits);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    const double alpha = spec.alphas[j];
    if (alpha == 0.0) continue;
    Real d = abs(x - spec.mu(j, bits));
    if (d.is_zero()) {
      if (alpha < 0) throw SingularPoint("weight: evaluated at singular point mu_" + std::to_string(j + 1));
      return Real::zero(bits);
    }
    w *= exp(Real(2 * alpha, bits) * log(d));
  }
  if (include_gaussian) w *= exp(-(x * x));
  return w;
}

namespace {

struct Segment {
  Real a;
  Real b;
  int left_mu = -1;
  int right_mu = -1;
};

constexpr double kPieceLength = 2.0;

double truncation_point(const WeightSpec& spec, int max_power, int digits) {
  double mu_max = 0;
  double alpha_max = 0;
  const double scale = std::sqrt(2.0 * spec.n);
  for (std::size_t j = 0; j < spec.size(); ++j) {
    mu_max = std::max(mu_max, std::fabs(spec.lambdas[j]) * scale);
    alpha_max = std::max(alpha_max, spec.alphas[j]);
  }
  const double p = max_power + 2.0 * alpha_max + 2.0;
  double x = mu_max + 2.0;
  for (int i = 0; i < 60; ++i) {
    x = std::sqrt(digits * std::log(10.0) + p * std::log(x + mu_max + 1.0));
  }
  return std::max(x, mu_max + 2.0);
}

std::vector<Segment> build_segments(const WeightSpec& spec, double cutoff, Precision bits) {
  std::vector<std::pair<Real, int>> points;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    points.emplace_back(spec.mu(j, bits), static_cast<int>(j));
  }
  std::sort(points.begin(), points.end(),
            [](const auto& l, const auto& r) { return l.first < r.first; });

  std::vector<Segment> coarse;
  Real left(-cutoff, bits);
  int left_mu = -1;
  for (const auto& [pos, idx] : points) {
    coarse.push_back({left, pos, left_mu, idx});
    left = pos;
    left_mu = idx;
  }
  coarse.push_back({left, Real(cutoff, bits), left_mu, -1});

  std::vector<Segment> pieces;
  for (const Segment& s : coarse) {
    const double len = (s.b - s.a).to_double();
    const int count = std::max(1, static_cast<int>(std::ceil(len / kPieceLength)));
    Real step = (s.b - s.a) / count;
    for (int i = 0; i < count; ++i) {
      Segment p;
      p.a = i == 0 ? s.a : s.a + step * i;
      p.b = i == count - 1 ? s.b : s.a + step * (i + 1);
      p.left_mu = i == 0 ? s.left_mu : -1;
      p.right_mu = i == count - 1 ? s.right_mu : -1;
      pieces.push_back(std::move(p));
    }
  }
  return pieces;
}

}  // namespace

WeightedIntegrals integrate_weighted(const WeightSpec& spec, int count, int max_power,
                                     const WeightedIntegrand& f, const PrecisionContext& ctx) {
  spec.validate(Regime::any);
  ctx.validate();
  const Precision bits = ctx.working_bits();
  const int tail_digits = ctx.digits + ctx.guard_digits;
  const double cutoff = truncation_point(spec, max_power, tail_digits);

  std::vector<Real> mus;
  std::vector<Real> two_alpha;
  for (std::size_t j = 0; j < spec.size(); ++j) {
    mus.push_back(spec.mu(j, bits));
    two_alpha.emplace_back(2 * spec.alphas[j], bits);
  }

  WeightedIntegrals total;
  total.values.assign(count, Real::zero(bits));
  total.abs_values.assign(count, 0.0L);

  for (const Segment& seg : build_segments(spec, cutoff, bits)) {
    quad::TanhSinhOptions opt;
    opt.bits = bits;
    opt.rel_tol = ctx.target_tol;
    opt.tail_digits = tail_digits;
    if (seg.left_mu >= 0) opt.left_exponent = std::min(0.0, 2 * spec.alphas[seg.left_mu]);
    if (seg.right_mu >= 0) opt.right_exponent = std::min(0.0, 2 * spec.alphas[seg.right_mu]);

    auto integrand = [&](const quad::Node& node, std::span<Real> out) {
      Real logw = -(node.x * node.x);
      for (std::size_t j = 0; j < mus.size(); ++j) {
        if (spec.alphas[j] == 0.0) continue;
        const int jj = static_cast<int>(j);
        Real d = jj == seg.left_mu    ? node.to_left
                 : jj == seg.right_mu ? node.to_right
                                      : abs(node.x - mus[j]);
        logw += two_alpha[j] * log(d);
      }
      f(node.x, exp(logw), out);
    };
    quad::TanhSinhResult r = quad::tanh_sinh(seg.a, seg.b, count, integrand, opt);
    for (int k = 0; k < count; ++k) {
      total.values[k] += r.values[k];
      total.abs_values[k] += r.abs_values[k];
    }
    total.achieved_tol = std::max(total.achieved_tol, r.rel_change);
    total.level = std::max(total.level, r.level);
  }
  total.achieved_tol =
      std::max(total.achieved_tol, std::pow(10.0L, -static_cast<long double>(tail_digits)));
  return total;
}

MomentTable moment_table(const WeightSpec& spec, int K, const PrecisionContext& ctx) {
  spec.validate(Regime::any);
  if (K < 0) throw InvalidInput("moments: K must be non-negative");
  auto powers = [](const Real& x, const Real& w, std::span<Real> out) {
    out[0] = w;
    for (std::size_t k = 1; k < out.size(); ++k) out[k] = out[k - 1] * x;
  };
  WeightedIntegrals wi = integrate_weighted(spec, K + 1, K, powers, ctx);

  MomentTable table;
  table.values = std::move(wi.values);
  table.K = K;
  table.spec = spec;
  table.achieved_tol = wi.achieved_tol;
  table.digits = ctx.digits;
  table.quadrature_level = wi.level;
  if (!(table.values[0] > 0)) {
    throw PrecisionUnreachable("moments: M_0 is not positive", wi.level);
  }
  return table;
}

Real symmetric_moment_oracle(double alpha, int k, Precision bits) {
  if (!(alpha > -0.5)) throw InvalidInput("moment oracle: alpha must exceed -1/2");
  if (k < 0) throw InvalidInput("moment oracle: k must be non-negative");
  if (k % 2 != 0) return Real::zero(bits);
  Real arg = Real(alpha, bits) + Real(k + 1, bits) / 2;
  return exp(log_gamma(arg));
}

MomentSource::MomentSource(WeightSpec spec, int guard_digits)
    : spec_(std::move(spec)), guard_digits_(guard_digits) {}

const MomentTable& MomentSource::table(int digits, int K) {
  auto it = cache_.find(digits);
  if (it != cache_.end() && it->second.K >= K) return it->second;
  const int k_needed = it != cache_.end() ? std::max(K, it->second.K) : K;
  MomentTable t = moment_table(spec_, k_needed, PrecisionContext::with_digits(digits, guard_digits_));
  cache_[digits] = std::move(t);
  return cache_[digits];
}

}  // namespace fhlab
