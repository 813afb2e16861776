#include "pas/dm.hpp"

#include "pas/errors.hpp"

namespace pas {

UniformDm::UniformDm(AmplitudeAlphabet alphabet, int block_len)
    : alphabet_(std::move(alphabet)), n_(block_len) {
  if (n_ < 1) throw ConfigError("blocklength must be positive");
}

AmplitudeDistribution UniformDm::amplitude_distribution() const {
  AmplitudeDistribution d;
  d.probs.assign(alphabet_.levels.size(), 1.0 / alphabet_.levels.size());
  return d;
}

void UniformDm::encode(std::span<const std::uint8_t> bits,
                       std::span<std::uint8_t> out_levels) const {
  const int b = alphabet_.bits_per_amplitude;
  if (static_cast<int>(bits.size()) != n_ * b || static_cast<int>(out_levels.size()) != n_)
    throw DataError("uniform encode: wrong input or output size");
  for (int i = 0; i < n_; ++i) {
    unsigned label = 0;
    for (int t = 0; t < b; ++t) label = (label << 1) | bits[i * b + t];
    out_levels[i] = static_cast<std::uint8_t>(alphabet_.index_of_label(label));
  }
}

void UniformDm::decode(std::span<const std::uint8_t> levels,
                       std::span<std::uint8_t> out_bits) const {
  const int b = alphabet_.bits_per_amplitude;
  if (static_cast<int>(levels.size()) != n_ || static_cast<int>(out_bits.size()) != n_ * b)
    throw DataError("uniform decode: wrong input or output size");
  for (int i = 0; i < n_; ++i) {
    const unsigned label = alphabet_.label(levels[i]);
    for (int t = 0; t < b; ++t)
      out_bits[i * b + t] = (label >> (b - 1 - t)) & 1u;
  }
}

void UniformDm::decode_clipped(std::span<const std::uint8_t> levels,
                               std::span<std::uint8_t> out_bits) const {
  decode(levels, out_bits);  // every sequence is addressed
}

}  // namespace pas
