#pragma once

#include <complex>
#include <utility>
#include <vector>

#include "pas/channel.hpp"
#include "pas/dm.hpp"
#include "pas/ldpc.hpp"

namespace pas {

// Bit-budget arithmetic of one shaped codeword: shaper blocks fill the
// amplitude label bits, remaining systematic bits and the parity bits become
// the sign bits, one per 1D symbol.
struct PasFrameLayout {
  int codeword_len = 0;        // FEC codeword bits
  Rational fec_rate;
  int bits_per_1d = 0;         // m: 1 sign bit + (m-1) amplitude label bits
  int dm_blocklength = 0;      // n amplitudes per shaper block
  int dm_input_bits = 0;       // k bits per shaper block
  int dm_blocks = 0;           // shaper blocks per codeword
  int amplitudes_per_codeword = 0;
  int amp_label_bits = 0;
  int sign_info_bits = 0;      // uniform systematic bits spent on signs
  int parity_bits = 0;
  int source_bits_per_codeword = 0;

  int symbols_2d_per_codeword() const { return amplitudes_per_codeword / 2; }

  // Codeword position of the sign bit of 1D symbol s: the first
  // sign_info_bits symbols take systematic bits, the rest take parity.
  int sign_bit_position(int s) const {
    return s < sign_info_bits ? amp_label_bits + s
                              : codeword_len - parity_bits + (s - sign_info_bits);
  }

  // Net data rate in bits per 4D symbol, exactly: 4k/n + 4(1 - (1-c) m).
  std::pair<long, long> net_rate_exact() const;  // reduced fraction
  double net_rate_4d() const;
};

// Validates every divisibility and budget identity, naming the violated one.
PasFrameLayout plan_frame(int codeword_len, const Rational& fec_rate,
                          const AmplitudeAlphabet& alphabet, int dm_blocklength,
                          int dm_input_bits);

struct EncodedFrame {
  BitVec codeword;                    // FEC codeword bits as mapped
  AmpVec amplitude_levels;            // per 1D symbol
  std::vector<Complex> symbols;       // 2D symbols, unit mean energy
};

struct PasBlockResult {
  BitVec source_bits;
  BitVec info_bits;  // decoded systematic bits, for post-FEC error counting
  int dm_failures = 0;
  bool fec_converged = false;
};

// Source layout: dm_blocks * k shaper bits, then sign_info_bits uniform bits.
EncodedFrame pas_encode(const PasFrameLayout& layout, const DistributionMatcher& dm,
                        const ParityCheck& code, const SymbolMap& map,
                        std::span<const std::uint8_t> source_bits);

// FEC decode followed by per-block inverse shaping.  A failed inverse shaper
// falls back to the clipped-rank bits of the hard-decision amplitudes and is
// counted in dm_failures.
PasBlockResult pas_decode(const PasFrameLayout& layout, const DistributionMatcher& dm,
                          const ParityCheck& code, std::span<const float> llrs,
                          int max_iter = 50, BpWorkspace* workspace = nullptr);

// Scatter demapper output (per 1D symbol triplets) into codeword bit order.
std::vector<float> llrs_to_codeword_order(const PasFrameLayout& layout,
                                          std::span<const float> symbol_llrs);

}  // namespace pas
