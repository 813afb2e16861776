#pragma once

#include <complex>
#include <cstdint>
#include <vector>

#include "pas/constellation.hpp"
#include "pas/parallel.hpp"
#include "pas/rng.hpp"

namespace pas {

using Complex = std::complex<double>;

struct ChannelConfig {
  double snr_db = 0.0;   // per 2D symbol, signal power 1
  std::uint64_t seed = 0;

  double noise_variance() const;  // total per complex sample
};

// y = x + w with circular complex Gaussian w; deterministic under the seed.
std::vector<Complex> transmit(const std::vector<Complex>& symbols, const ChannelConfig& config);
void add_noise(std::vector<Complex>& symbols, double noise_variance, Rng& rng);

// Per-bit LLRs of one block of 2D symbols under a product 1D metric with the
// given amplitude priors (signs uniform).  Output order per 2D symbol:
// (sign, amp bits...) for the I dimension, then the same for Q.
// L = log P(bit=0|y) - log P(bit=1|y), exact log-sum-exp, clipped to +/-50.
std::vector<float> demap(const std::vector<Complex>& received, double snr_db,
                         const SymbolMap& map, const AmplitudeDistribution& priors,
                         Exec exec = Exec::serial);

// Single 1D demap; writes 1 + bits_per_amplitude LLRs.
void demap_1d(double y, double sigma2_1d, const SymbolMap& map,
              const std::vector<double>& log_priors, float* out);

// Least-squares scalar fit: SNR of y against reference x after removing a
// complex gain, in dB, capped at 100 dB for (near-)exact matches.
double effective_snr_db(const std::vector<Complex>& sent, const std::vector<Complex>& received);

// Mergeable partial sums behind effective_snr_db, for parallel sweeps.
struct SnrAccumulator {
  double xx = 0.0, yy = 0.0;
  Complex xy{0.0, 0.0};

  void add(const Complex& x, const Complex& y) {
    xx += std::norm(x);
    yy += std::norm(y);
    xy += y * std::conj(x);
  }
  void merge(const SnrAccumulator& o) {
    xx += o.xx;
    yy += o.yy;
    xy += o.xy;
  }
  double snr_db() const;
};

}  // namespace pas
