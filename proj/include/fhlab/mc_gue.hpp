#ifndef FHLAB_MC_GUE_HPP_
#define FHLAB_MC_GUE_HPP_

#include <cstdint>
#include <vector>

#include "fhlab/weights.hpp"

namespace fhlab {

/// splitmix64 stream; one independent stream per (seed, sample index).
class SampleRng {
 public:
  SampleRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on (0, 1].
  double uniform();
  /// Standard normal by Box-Muller (both variates of a pair are used).
  double normal();
  /// Chi variable with 2k degrees of freedom: sqrt(-2 ln prod_{i<=k} U_i).
  double chi_2k(int k);

 private:
  std::uint64_t state_;
  bool has_spare_ = false;
  double spare_ = 0;
};

/// Eigenvalues, ascending, of one GUE(n) draw with density
/// prod_{i<j} (x_i - x_j)^2 prod_k exp(-x_k^2): tridiagonal model with
/// diagonal N(0, 1/2) and off-diagonal chi_{2k}/2, k = n-1..1.
/// Resamples from the same stream if the eigensolver fails.
std::vector<double> sample_spectrum(int n, SampleRng& rng);

struct McEstimate {
  /// ln of the sample mean of prod_j |det(H - mu_j)|^(2 alpha_j).
  double mean_log = 0;
  /// Standard error of the mean divided by the mean.
  double stderr_rel = 0;
  /// Samples that entered the mean.
  long samples = 0;
  long discarded = 0;
  std::uint64_t seed = 0;
};

/// Monte Carlo estimate of E prod_j |det(H - mu_j)|^(2 alpha_j) over GUE(n),
/// n = spec.n. Requires samples >= 1000. Deterministic for fixed inputs.
McEstimate mc_average_log(const WeightSpec& spec, long samples, std::uint64_t seed);

}  // namespace fhlab

#endif  // FHLAB_MC_GUE_HPP_
