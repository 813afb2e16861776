#include "pas/channel.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

#include <algorithm>
#include <cmath>

#include "pas/errors.hpp"

namespace pas {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_threads(int n) {
#ifdef _OPENMP
  if (n > 0) omp_set_num_threads(n);
#else
  (void)n;
#endif
}

double ChannelConfig::noise_variance() const { return std::pow(10.0, -snr_db / 10.0); }

void add_noise(std::vector<Complex>& symbols, double noise_variance, Rng& rng) {
  const double s = std::sqrt(noise_variance / 2.0);
  for (Complex& x : symbols) x += Complex(s * rng.gaussian(), s * rng.gaussian());
}

std::vector<Complex> transmit(const std::vector<Complex>& symbols, const ChannelConfig& config) {
  std::vector<Complex> out = symbols;
  if (config.noise_variance() > 0.0) {
    Rng rng(config.seed);
    add_noise(out, config.noise_variance(), rng);
  }
  return out;
}

void demap_1d(double y, double sigma2_1d, const SymbolMap& map,
              const std::vector<double>& log_priors, float* out) {
  const auto& alpha = map.alphabet;
  const int num_levels = alpha.size();
  const int amp_bits = alpha.bits_per_amplitude;
  if (num_levels > 16) throw ConfigError("demapper supports at most 16 amplitude levels");
  const double inv = 1.0 / (2.0 * sigma2_1d);

  // log weight of each (sign, level) hypothesis; signs uniform
  double lw[2][16];
  double peak = -1e300;
  for (int s = 0; s < 2; ++s)
    for (int j = 0; j < num_levels; ++j) {
      const double d = y - map.coordinate(s, j);
      const double w = log_priors[j] - d * d * inv;
      lw[s][j] = w;
      peak = std::max(peak, w);
    }

  // bit 0: sign.  bits 1..amp_bits: Gray label of the level, MSB first.
  for (int bit = 0; bit <= amp_bits; ++bit) {
    double num = 0.0, den = 0.0;  // bit=0 / bit=1 masses, scaled by exp(-peak)
    for (int s = 0; s < 2; ++s)
      for (int j = 0; j < num_levels; ++j) {
        const int b = bit == 0 ? s : (alpha.label(j) >> (amp_bits - bit)) & 1;
        (b ? den : num) += std::exp(lw[s][j] - peak);
      }
    double llr;
    if (num == 0.0)
      llr = -50.0;
    else if (den == 0.0)
      llr = 50.0;
    else
      llr = std::log(num) - std::log(den);
    out[bit] = static_cast<float>(std::clamp(llr, -50.0, 50.0));
  }
}

std::vector<float> demap(const std::vector<Complex>& received, double snr_db,
                         const SymbolMap& map, const AmplitudeDistribution& priors,
                         Exec exec) {
  if (priors.probs.size() != map.alphabet.levels.size())
    throw ConfigError("priors length does not match alphabet");
  const int bits_per_1d = 1 + map.alphabet.bits_per_amplitude;
  const double sigma2 = std::max(std::pow(10.0, -snr_db / 10.0), 1e-30);
  const double sigma2_1d = sigma2 / 2.0;
  std::vector<double> log_priors(priors.probs.size());
  for (std::size_t j = 0; j < priors.probs.size(); ++j)
    log_priors[j] = priors.probs[j] > 0.0 ? std::log(priors.probs[j]) : -1e30;

  std::vector<float> llrs(received.size() * 2 * bits_per_1d);
  const std::int64_t count = static_cast<std::int64_t>(received.size());
  if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
    for (std::int64_t i = 0; i < count; ++i) {
      float* out = llrs.data() + 2 * bits_per_1d * i;
      demap_1d(received[i].real(), sigma2_1d, map, log_priors, out);
      demap_1d(received[i].imag(), sigma2_1d, map, log_priors, out + bits_per_1d);
    }
  } else {
    for (std::int64_t i = 0; i < count; ++i) {
      float* out = llrs.data() + 2 * bits_per_1d * i;
      demap_1d(received[i].real(), sigma2_1d, map, log_priors, out);
      demap_1d(received[i].imag(), sigma2_1d, map, log_priors, out + bits_per_1d);
    }
  }
  return llrs;
}

double SnrAccumulator::snr_db() const {
  if (xx <= 0.0) throw ConfigError("effective SNR undefined for zero reference signal");
  const double signal = std::norm(xy) / xx;       // |alpha|^2 * ||x||^2
  const double noise = yy - signal;               // ||y - alpha x||^2
  if (noise <= signal * 1e-10) return 100.0;
  return std::min(100.0, 10.0 * std::log10(signal / noise));
}

double effective_snr_db(const std::vector<Complex>& sent,
                        const std::vector<Complex>& received) {
  if (sent.size() != received.size() || sent.empty())
    throw DataError("effective SNR: length mismatch");
  SnrAccumulator acc;
  for (std::size_t i = 0; i < sent.size(); ++i) acc.add(sent[i], received[i]);
  return acc.snr_db();
}

}  // namespace pas
