#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pas/constellation.hpp"

namespace pas {

// H(A) - k/n in bits per amplitude; a negative value beyond tolerance means
// the codec claims more bits than its entropy supports.
double rate_loss(double h_amplitude_bits, int k, int n);

// BMD-rate AIR with the finite-blocklength penalty, all in bits per 4D
// symbol: bmd_rate_4d - 4 * (H(A) - k/n).
double air_n_4d(double bmd_rate_4d, double h_amplitude_bits, int k, int n);

double ber(std::span<const std::uint8_t> measured, std::span<const std::uint8_t> reference);

// Strict: pass iff ber < 4.5e-3 (the assumed outer staircase-code limit).
constexpr double kHdFecBerThreshold = 4.5e-3;
bool hd_fec_pass(double ber_value);

// Marginal prior of each bit level of a 1D label (sign, amp bits...).
struct BitPriors {
  std::vector<double> p_one;  // P(bit = 1) per 1D bit level

  static BitPriors from(const AmplitudeAlphabet& alphabet, const AmplitudeDistribution& dist);
  // H(C) of one 1D label = sum of binary entropies
  double entropy_1d() const;
};

// Monte-Carlo estimator of the bit-metric decoding rate
//   H(C) - sum_i H(C_i | Y),
// with H(C) from the marginal bit priors and H(C_i|Y) as the sample mean of
// log2(1 + exp(-(1-2c) L)) over transmitted bits; clamped below at zero.
// Partial accumulators merge deterministically for parallel sweeps.
class BmdAccumulator {
 public:
  BmdAccumulator() = default;
  explicit BmdAccumulator(BitPriors priors);

  // llrs: per-1D-bit LLRs of whole 2D symbols (2 * bits_per_1d each);
  // sent_bits aligned with llrs.
  void add(std::span<const float> llrs, std::span<const std::uint8_t> sent_bits);
  void merge(const BmdAccumulator& other);

  double bmd_rate_4d() const;
  std::uint64_t samples_per_level() const { return count_; }

 private:
  BitPriors priors_;
  std::vector<double> cond_sum_;  // per bit level
  std::uint64_t count_ = 0;       // 1D labels accumulated
};

// One simulated sweep point.
struct SimRecord {
  double snr_db = 0.0;
  double ber_pre_fec = 0.0;
  double ber_post_fec = 0.0;
  double ber_post_shaping = 0.0;
  double bmd_rate_4d = 0.0;
  double rate_loss_4d = 0.0;
  double air_n_4d = 0.0;
  double effective_snr_db = 0.0;
  long blocks = 0;  // codewords accumulated at this point
};

std::string sim_csv_header();
std::string sim_csv_row(const SimRecord& rec);

}  // namespace pas
