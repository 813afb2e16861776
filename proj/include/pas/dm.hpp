#pragma once

#include <memory>
#include <span>

#include "pas/bits.hpp"
#include "pas/constellation.hpp"

namespace pas {

// Fixed-to-fixed amplitude shaper: a bijection between k-bit strings and a
// selected set of length-n amplitude sequences.  Implementations are
// immutable after construction; encode/decode are pure and safe to call
// from concurrent workers.
class DistributionMatcher {
 public:
  virtual ~DistributionMatcher() = default;

  virtual int block_len() const = 0;    // n, amplitudes per block
  virtual int input_bits() const = 0;   // k, bits per block
  virtual const AmplitudeAlphabet& alphabet() const = 0;

  // Amplitude distribution the matcher induces across a long run of blocks;
  // used for demapper priors and for H(A) in rate-loss accounting.
  virtual AmplitudeDistribution amplitude_distribution() const = 0;

  // bits.size() == input_bits(), out.size() == block_len().
  virtual void encode(std::span<const std::uint8_t> bits,
                      std::span<std::uint8_t> out_levels) const = 0;

  // Exact inverse of encode(); throws DmError when the sequence is not an
  // encoder output (outside the codebook or unaddressed rank).
  virtual void decode(std::span<const std::uint8_t> levels,
                      std::span<std::uint8_t> out_bits) const = 0;

  // Deterministic fallback used after a decode failure: the rank of the
  // lexicographically largest addressed sequence that is <= the input,
  // clamped to [0, 2^k - 1].  Agrees with decode() on every valid input.
  virtual void decode_clipped(std::span<const std::uint8_t> levels,
                              std::span<std::uint8_t> out_bits) const = 0;
};

// Pass-through matcher for unshaped transmission: k = n * bits_per_amplitude
// and each amplitude carries its own label bits unchanged.
class UniformDm final : public DistributionMatcher {
 public:
  UniformDm(AmplitudeAlphabet alphabet, int block_len);

  int block_len() const override { return n_; }
  int input_bits() const override { return n_ * alphabet_.bits_per_amplitude; }
  const AmplitudeAlphabet& alphabet() const override { return alphabet_; }
  AmplitudeDistribution amplitude_distribution() const override;

  void encode(std::span<const std::uint8_t> bits,
              std::span<std::uint8_t> out_levels) const override;
  void decode(std::span<const std::uint8_t> levels,
              std::span<std::uint8_t> out_bits) const override;
  void decode_clipped(std::span<const std::uint8_t> levels,
                      std::span<std::uint8_t> out_bits) const override;

 private:
  AmplitudeAlphabet alphabet_;
  int n_;
};

}  // namespace pas
