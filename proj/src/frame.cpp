#include "pas/frame.hpp"

#include <numeric>

#include "pas/errors.hpp"

namespace pas {

std::pair<long, long> PasFrameLayout::net_rate_exact() const {
  // 4k/n + 4(1 - (1-c)m) over the common denominator n * den
  const long n = dm_blocklength, k = dm_input_bits;
  const long cn = fec_rate.num, cd = fec_rate.den, m = bits_per_1d;
  long num = 4 * k * cd + (4 * cd - 4 * m * (cd - cn)) * n;
  long den = n * cd;
  const long g = std::gcd(num, den);
  return {num / g, den / g};
}

double PasFrameLayout::net_rate_4d() const {
  auto [num, den] = net_rate_exact();
  return static_cast<double>(num) / den;
}

PasFrameLayout plan_frame(int codeword_len, const Rational& fec_rate,
                          const AmplitudeAlphabet& alphabet, int dm_blocklength,
                          int dm_input_bits) {
  PasFrameLayout L;
  L.codeword_len = codeword_len;
  L.fec_rate = fec_rate;
  L.bits_per_1d = 1 + alphabet.bits_per_amplitude;
  L.dm_blocklength = dm_blocklength;
  L.dm_input_bits = dm_input_bits;

  const int m = L.bits_per_1d;
  if (codeword_len <= 0 || dm_blocklength <= 0)
    throw ConfigError("frame: codeword length and blocklength must be positive");
  if (fec_rate.num <= 0 || fec_rate.den <= 0 || fec_rate.num >= fec_rate.den)
    throw ConfigError("frame: FEC rate must lie in (0,1)");
  if (codeword_len % m != 0)
    throw ConfigError("frame: codeword length " + std::to_string(codeword_len) +
                      " not divisible by bits per 1D symbol " + std::to_string(m));
  L.amplitudes_per_codeword = codeword_len / m;
  if (L.amplitudes_per_codeword % dm_blocklength != 0)
    throw ConfigError("frame: " + std::to_string(L.amplitudes_per_codeword) +
                      " amplitudes per codeword not divisible by shaper blocklength " +
                      std::to_string(dm_blocklength));
  L.dm_blocks = L.amplitudes_per_codeword / dm_blocklength;
  if (static_cast<long>(codeword_len) % fec_rate.den != 0)
    throw ConfigError("frame: codeword length incompatible with FEC rate denominator " +
                      std::to_string(fec_rate.den));
  if ((fec_rate.den - fec_rate.num) * m > fec_rate.den)
    throw ConfigError("frame: infeasible sign budget, (1-c)*m > 1 for rate " +
                      std::to_string(fec_rate.num) + "/" + std::to_string(fec_rate.den));
  const int info_bits = static_cast<int>(static_cast<long>(codeword_len) * fec_rate.num /
                                         fec_rate.den);
  L.parity_bits = codeword_len - info_bits;
  L.amp_label_bits = L.amplitudes_per_codeword * (m - 1);
  L.sign_info_bits = info_bits - L.amp_label_bits;
  if (L.sign_info_bits < 0)
    throw ConfigError("frame: information bits " + std::to_string(info_bits) +
                      " below amplitude label bits " + std::to_string(L.amp_label_bits));
  if (L.sign_info_bits + L.parity_bits != L.amplitudes_per_codeword)
    throw ConfigError("frame: sign budget mismatch, " + std::to_string(L.sign_info_bits) +
                      " + " + std::to_string(L.parity_bits) + " != " +
                      std::to_string(L.amplitudes_per_codeword));
  if (dm_input_bits < 0 || dm_input_bits > dm_blocklength * alphabet.bits_per_amplitude)
    throw ConfigError("frame: shaper input width k=" + std::to_string(dm_input_bits) +
                      " outside [0, n*bits_per_amplitude]");
  L.source_bits_per_codeword = L.dm_blocks * dm_input_bits + L.sign_info_bits;
  return L;
}

EncodedFrame pas_encode(const PasFrameLayout& layout, const DistributionMatcher& dm,
                        const ParityCheck& code, const SymbolMap& map,
                        std::span<const std::uint8_t> source_bits) {
  if (static_cast<int>(source_bits.size()) != layout.source_bits_per_codeword)
    throw DataError("pas encode: expected " + std::to_string(layout.source_bits_per_codeword) +
                    " source bits, got " + std::to_string(source_bits.size()));
  if (dm.block_len() != layout.dm_blocklength || dm.input_bits() != layout.dm_input_bits)
    throw ConfigError("pas encode: shaper does not match the frame layout");
  if (code.n_bits() != layout.codeword_len ||
      code.info_len() != layout.amp_label_bits + layout.sign_info_bits)
    throw ConfigError("pas encode: FEC code does not match the frame layout");

  EncodedFrame f;
  f.amplitude_levels.resize(layout.amplitudes_per_codeword);
  const int n = layout.dm_blocklength, k = layout.dm_input_bits;
  for (int b = 0; b < layout.dm_blocks; ++b)
    dm.encode(source_bits.subspan(static_cast<std::size_t>(b) * k, k),
              std::span<std::uint8_t>(f.amplitude_levels).subspan(
                  static_cast<std::size_t>(b) * n, n));

  // systematic input: amplitude labels then the uniform sign-info bits
  BitVec info(code.info_len());
  const auto& alpha = dm.alphabet();
  const int ab = alpha.bits_per_amplitude;
  for (int s = 0; s < layout.amplitudes_per_codeword; ++s) {
    const unsigned label = alpha.label(f.amplitude_levels[s]);
    for (int t = 0; t < ab; ++t) info[s * ab + t] = (label >> (ab - 1 - t)) & 1u;
  }
  std::copy(source_bits.end() - layout.sign_info_bits, source_bits.end(),
            info.begin() + layout.amp_label_bits);
  f.codeword = code.encode(info);

  f.symbols.resize(layout.symbols_2d_per_codeword());
  for (int t = 0; t < layout.symbols_2d_per_codeword(); ++t) {
    const int si = 2 * t, sq = 2 * t + 1;
    const double re = map.coordinate(f.codeword[layout.sign_bit_position(si)],
                                     f.amplitude_levels[si]);
    const double im = map.coordinate(f.codeword[layout.sign_bit_position(sq)],
                                     f.amplitude_levels[sq]);
    f.symbols[t] = Complex(re, im);
  }
  return f;
}

std::vector<float> llrs_to_codeword_order(const PasFrameLayout& layout,
                                          std::span<const float> symbol_llrs) {
  const int m = layout.bits_per_1d;
  if (static_cast<int>(symbol_llrs.size()) != layout.amplitudes_per_codeword * m)
    throw DataError("llr scatter: expected " +
                    std::to_string(layout.amplitudes_per_codeword * m) + " LLRs, got " +
                    std::to_string(symbol_llrs.size()));
  std::vector<float> cw(layout.codeword_len);
  const int ab = m - 1;
  for (int s = 0; s < layout.amplitudes_per_codeword; ++s) {
    cw[layout.sign_bit_position(s)] = symbol_llrs[s * m];
    for (int t = 0; t < ab; ++t) cw[s * ab + t] = symbol_llrs[s * m + 1 + t];
  }
  return cw;
}

PasBlockResult pas_decode(const PasFrameLayout& layout, const DistributionMatcher& dm,
                          const ParityCheck& code, std::span<const float> llrs,
                          int max_iter, BpWorkspace* workspace) {
  if (static_cast<int>(llrs.size()) != layout.codeword_len)
    throw DataError("pas decode: expected " + std::to_string(layout.codeword_len) +
                    " LLRs, got " + std::to_string(llrs.size()));
  BpWorkspace local;
  BpWorkspace& ws = workspace ? *workspace : local;
  const DecodeResult dec = ws.decode(code, llrs, max_iter);

  PasBlockResult res;
  res.fec_converged = dec.converged;
  res.source_bits.resize(layout.source_bits_per_codeword);
  res.info_bits.assign(dec.bits.begin(),
                       dec.bits.begin() + layout.amp_label_bits + layout.sign_info_bits);

  const auto& alpha = dm.alphabet();
  const int ab = alpha.bits_per_amplitude;
  AmpVec levels(layout.dm_blocklength);
  const int n = layout.dm_blocklength, k = layout.dm_input_bits;
  for (int b = 0; b < layout.dm_blocks; ++b) {
    for (int i = 0; i < n; ++i) {
      const int s = b * n + i;
      unsigned label = 0;
      for (int t = 0; t < ab; ++t) label = (label << 1) | dec.bits[s * ab + t];
      levels[i] = static_cast<std::uint8_t>(alpha.index_of_label(label));
    }
    auto out = std::span<std::uint8_t>(res.source_bits)
                   .subspan(static_cast<std::size_t>(b) * k, k);
    try {
      dm.decode(levels, out);
    } catch (const DmError&) {
      dm.decode_clipped(levels, out);
      res.dm_failures += 1;
    }
  }
  std::copy(dec.bits.begin() + layout.amp_label_bits,
            dec.bits.begin() + layout.amp_label_bits + layout.sign_info_bits,
            res.source_bits.end() - layout.sign_info_bits);
  return res;
}

}  // namespace pas
