#include "pas/metrics.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>

#include "pas/errors.hpp"

namespace pas {

double rate_loss(double h_amplitude_bits, int k, int n) {
  const double loss = h_amplitude_bits - static_cast<double>(k) / n;
  if (loss < -1e-12)
    throw ConfigError("negative rate loss: H(A)=" + std::to_string(h_amplitude_bits) +
                      " below k/n=" + std::to_string(static_cast<double>(k) / n));
  return std::max(loss, 0.0);
}

double air_n_4d(double bmd_rate_4d, double h_amplitude_bits, int k, int n) {
  return bmd_rate_4d - 4.0 * rate_loss(h_amplitude_bits, k, n);
}

double ber(std::span<const std::uint8_t> measured, std::span<const std::uint8_t> reference) {
  if (measured.size() != reference.size() || measured.empty())
    throw DataError("ber: length mismatch (" + std::to_string(measured.size()) + " vs " +
                    std::to_string(reference.size()) + ")");
  std::size_t errors = 0;
  for (std::size_t i = 0; i < measured.size(); ++i)
    errors += (measured[i] ^ reference[i]) & 1u;
  return static_cast<double>(errors) / measured.size();
}

bool hd_fec_pass(double ber_value) { return ber_value < kHdFecBerThreshold; }

namespace {
double h2(double p) {
  if (p <= 0.0 || p >= 1.0) return 0.0;
  return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}
}  // namespace

BitPriors BitPriors::from(const AmplitudeAlphabet& alphabet, const AmplitudeDistribution& dist) {
  BitPriors bp;
  bp.p_one.assign(1 + alphabet.bits_per_amplitude, 0.0);
  bp.p_one[0] = 0.5;  // signs are uniform in this architecture
  for (int j = 0; j < alphabet.size(); ++j) {
    const unsigned label = alphabet.label(j);
    for (int t = 0; t < alphabet.bits_per_amplitude; ++t)
      if ((label >> (alphabet.bits_per_amplitude - 1 - t)) & 1u)
        bp.p_one[1 + t] += dist.probs[j];
  }
  return bp;
}

double BitPriors::entropy_1d() const {
  double h = 0.0;
  for (double p : p_one) h += h2(p);
  return h;
}

BmdAccumulator::BmdAccumulator(BitPriors priors) : priors_(std::move(priors)) {
  cond_sum_.assign(priors_.p_one.size(), 0.0);
}

void BmdAccumulator::add(std::span<const float> llrs, std::span<const std::uint8_t> sent_bits) {
  if (llrs.size() != sent_bits.size())
    throw DataError("bmd accumulator: LLR/bit length mismatch");
  const std::size_t levels = cond_sum_.size();
  if (llrs.size() % levels != 0)
    throw DataError("bmd accumulator: input not a whole number of 1D labels");
  for (std::size_t i = 0; i < llrs.size(); ++i) {
    const double z = (sent_bits[i] ? -1.0 : 1.0) * llrs[i];
    // log2(1 + exp(-z)), stable on both tails
    const double v = z > 0.0 ? std::log1p(std::exp(-z)) : -z + std::log1p(std::exp(z));
    cond_sum_[i % levels] += v / std::numbers::ln2;
  }
  count_ += llrs.size() / levels;
}

void BmdAccumulator::merge(const BmdAccumulator& other) {
  if (cond_sum_.empty()) {
    *this = other;
    return;
  }
  if (other.count_ == 0) return;
  for (std::size_t i = 0; i < cond_sum_.size(); ++i) cond_sum_[i] += other.cond_sum_[i];
  count_ += other.count_;
}

double BmdAccumulator::bmd_rate_4d() const {
  if (count_ == 0) return 0.0;
  double cond = 0.0;
  for (double s : cond_sum_) cond += s / count_;
  const double per_1d = priors_.entropy_1d() - cond;
  return std::max(4.0 * per_1d, 0.0);
}

std::string sim_csv_header() {
  return "snr_db,ber_pre_fec,ber_post_fec,ber_post_shaping,bmd_rate_4d,rate_loss_4d,"
         "air_n_4d,effective_snr_db,blocks";
}

std::string sim_csv_row(const SimRecord& r) {
  char buf[320];
  std::snprintf(buf, sizeof(buf), "%.4f,%.8g,%.8g,%.8g,%.8g,%.8g,%.8g,%.6g,%ld", r.snr_db,
                r.ber_pre_fec, r.ber_post_fec, r.ber_post_shaping, r.bmd_rate_4d,
                r.rate_loss_4d, r.air_n_4d, r.effective_snr_db, r.blocks);
  return buf;
}

}  // namespace pas
