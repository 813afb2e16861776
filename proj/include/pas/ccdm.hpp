#pragma once

#include <gmpxx.h>

#include <vector>

#include "pas/dm.hpp"

namespace pas {

// Fixed per-block amplitude occurrence counts; every CCDM output block has
// exactly this empirical distribution.
struct Composition {
  std::vector<int> counts;  // aligned with alphabet levels
  AmplitudeAlphabet alphabet;

  int block_len() const;                      // n = sum of counts
  long total_energy() const;                  // sum counts[j] * levels[j]^2
  double mean_energy() const { return static_cast<double>(total_energy()) / block_len(); }
  AmplitudeDistribution distribution() const; // counts / n
};

// n! / prod(counts[j]!)
mpz_class multinomial(const Composition& comp);

// Minimal-mean-energy composition with floor(log2 multinomial) >= k_target,
// searched over largest-remainder quantizations of n * mb_distribution(lambda)
// on an adaptively refined lambda grid; ties broken by lexicographically
// smallest counts.
Composition select_composition(int n, const AmplitudeAlphabet& alphabet, int k_target);

// Constant-composition matcher: bits index the multiset permutations of the
// composition in lexicographic order.
class CcdmCodec final : public DistributionMatcher {
 public:
  // k = -1 picks the maximal width floor(log2 multinomial).
  explicit CcdmCodec(Composition comp, int k = -1);

  const Composition& composition() const { return comp_; }
  const mpz_class& codebook_size() const { return codebook_; }  // multinomial

  int block_len() const override { return n_; }
  int input_bits() const override { return k_; }
  const AmplitudeAlphabet& alphabet() const override { return comp_.alphabet; }
  AmplitudeDistribution amplitude_distribution() const override {
    return comp_.distribution();
  }

  void encode(std::span<const std::uint8_t> bits,
              std::span<std::uint8_t> out_levels) const override;
  void decode(std::span<const std::uint8_t> levels,
              std::span<std::uint8_t> out_bits) const override;
  void decode_clipped(std::span<const std::uint8_t> levels,
                      std::span<std::uint8_t> out_bits) const override;

 private:
  mpz_class rank(std::span<const std::uint8_t> levels, bool clip) const;

  Composition comp_;
  int n_;
  int k_;
  mpz_class codebook_;
  mpz_class two_pow_k_;
};

}  // namespace pas
