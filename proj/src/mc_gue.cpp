#include "fhlab/mc_gue.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <iostream>
#include <numbers>

#include "fhlab/precision.hpp"

namespace fhlab {

namespace {

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Fixed-order pairwise sum.
double pairwise_sum(const double* v, std::size_t count) {
  if (count <= 8) {
    double s = 0;
    for (std::size_t i = 0; i < count; ++i) s += v[i];
    return s;
  }
  std::size_t half = count / 2;
  return pairwise_sum(v, half) + pairwise_sum(v + half, count - half);
}

}  // namespace

SampleRng::SampleRng(std::uint64_t seed, std::uint64_t index)
    : state_(splitmix(seed) ^ splitmix(index * 0xd1b54a32d192ed03ULL + 1)) {}

std::uint64_t SampleRng::next_u64() {
  state_ += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SampleRng::uniform() {
  return static_cast<double>((next_u64() >> 11) + 1) * 0x1.0p-53;
}

double SampleRng::normal() {
  if (has_spare_) {
    has_spare_ = false;
    return spare_;
  }
  double r = std::sqrt(-2.0 * std::log(uniform()));
  double theta = 2.0 * std::numbers::pi * uniform();
  spare_ = r * std::sin(theta);
  has_spare_ = true;
  return r * std::cos(theta);
}

double SampleRng::chi_2k(int k) {
  double log_prod = 0;
  for (int i = 0; i < k; ++i) log_prod += std::log(uniform());
  return std::sqrt(-2.0 * log_prod);
}

std::vector<double> sample_spectrum(int n, SampleRng& rng) {
  if (n < 1) throw InvalidInput("sample_spectrum: n must be positive");
  Eigen::VectorXd diag(n);
  Eigen::VectorXd sub(std::max(n - 1, 0));
  for (;;) {
    for (int i = 0; i < n; ++i) diag[i] = rng.normal() / std::numbers::sqrt2;
    for (int i = 0; i < n - 1; ++i) sub[i] = rng.chi_2k(n - 1 - i) / 2.0;
    if (n == 1) return {diag[0]};
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
    if (solver.info() == Eigen::Success) {
      const Eigen::VectorXd& ev = solver.eigenvalues();
      return std::vector<double>(ev.data(), ev.data() + ev.size());
    }
    std::clog << "sample_spectrum: eigensolver failed, resampling\n";
  }
}

McEstimate mc_average_log(const WeightSpec& spec, long samples, std::uint64_t seed) {
  spec.validate(Regime::any);
  if (samples < 1000) throw InvalidInput("mc: at least 1000 samples are required");
  McEstimate est;
  est.seed = seed;
  if (spec.all_alpha_zero()) {
    est.samples = samples;
    return est;
  }

  const double scale = std::sqrt(2.0 * spec.n);
  std::vector<double> logs;
  logs.reserve(samples);
  for (long s = 0; s < samples; ++s) {
    SampleRng rng(seed, static_cast<std::uint64_t>(s));
    std::vector<double> x = sample_spectrum(spec.n, rng);
    double total = 0;
    bool hit = false;
    for (std::size_t j = 0; j < spec.size() && !hit; ++j) {
      if (spec.alphas[j] == 0.0) continue;
      const double mu = spec.lambdas[j] * scale;
      double acc = 0;
      for (double xi : x) {
        double d = std::fabs(xi - mu);
        if (d == 0.0) {
          hit = true;
          break;
        }
        acc += std::log(d);
      }
      total += 2.0 * spec.alphas[j] * acc;
    }
    if (hit) {
      ++est.discarded;
      std::clog << "mc: sample " << s << " hit a singular point, discarded\n";
      continue;
    }
    logs.push_back(total);
  }
  if (logs.empty()) throw PrecisionUnreachable("mc: every sample was discarded", 0);

  const double shift = *std::max_element(logs.begin(), logs.end());
  std::vector<double> scaled(logs.size());
  for (std::size_t i = 0; i < logs.size(); ++i) scaled[i] = std::exp(logs[i] - shift);
  const double count = static_cast<double>(scaled.size());
  const double mean = pairwise_sum(scaled.data(), scaled.size()) / count;
  std::vector<double> sq(scaled.size());
  for (std::size_t i = 0; i < scaled.size(); ++i) sq[i] = (scaled[i] - mean) * (scaled[i] - mean);
  const double var = pairwise_sum(sq.data(), sq.size()) / (count - 1);

  est.samples = static_cast<long>(scaled.size());
  est.mean_log = shift + std::log(mean);
  est.stderr_rel = std::sqrt(var / count) / mean;
  return est;
}

}  // namespace fhlab
