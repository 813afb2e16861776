#pragma once

#include <gmpxx.h>

#include <vector>

#include "pas/dm.hpp"

namespace pas {

// Bounded-energy enumeration table for sphere shaping.  T(i,e) counts the
// length-(n-i) amplitude suffixes that keep the total energy sum(a^2) within
// e_max when the first i amplitudes already spent energy e.  With odd levels
// every a^2 is 1 mod 8, so reachable energies at depth i satisfy e == i
// (mod 8); rows are stored sparsely over that residue class.
class EssTrellis {
 public:
  EssTrellis(int n, AmplitudeAlphabet alphabet, long e_max);

  int block_len() const { return n_; }
  long energy_limit() const { return e_max_; }
  const AmplitudeAlphabet& alphabet() const { return alphabet_; }

  // T(i,e); zero when (i,e) cannot be completed within the bound.
  const mpz_class& count(int i, long e) const;

  // |S(n, e_max)| = T(0,0), the number of addressable-energy sequences.
  const mpz_class& sphere_size() const { return count_[0][0]; }

  // floor(log2 T(0,0)): the largest usable input width.
  int max_input_bits() const;

  // Per-amplitude distribution induced by a uniform draw from the full
  // sphere, averaged over positions (forward/backward count pairing).
  AmplitudeDistribution induced_distribution() const;

 private:
  friend class EssCodec;
  long row_cap(int i) const;  // highest feasible energy at depth i

  int n_;
  AmplitudeAlphabet alphabet_;
  long e_max_;
  std::vector<std::vector<mpz_class>> count_;  // count_[i][(e - i) / 8]
};

// Exact counts of length-n sequences per total energy (ascending, step 8,
// starting at n).  Independent of the trellis recursion; cumulative sums
// give |S(n, e)| for every bound at once.
std::vector<mpz_class> energy_histogram(int n, const AmplitudeAlphabet& alphabet);

// Minimal e_max (in the residue class of n mod 8) with |S(n,e_max)| >= 2^k.
long select_emax(int n, const AmplitudeAlphabet& alphabet, int k_target);

// Fixed-length shaper addressing the 2^k lexicographically smallest
// sequences of the sphere.
class EssCodec final : public DistributionMatcher {
 public:
  // k = -1 picks the maximal width floor(log2 |S|).
  explicit EssCodec(EssTrellis trellis, int k = -1);

  const EssTrellis& trellis() const { return trellis_; }

  int block_len() const override { return trellis_.block_len(); }
  int input_bits() const override { return k_; }
  const AmplitudeAlphabet& alphabet() const override { return trellis_.alphabet(); }
  AmplitudeDistribution amplitude_distribution() const override {
    return trellis_.induced_distribution();
  }

  void encode(std::span<const std::uint8_t> bits,
              std::span<std::uint8_t> out_levels) const override;
  void decode(std::span<const std::uint8_t> levels,
              std::span<std::uint8_t> out_bits) const override;
  void decode_clipped(std::span<const std::uint8_t> levels,
                      std::span<std::uint8_t> out_bits) const override;

 private:
  // rank if exact; with clip=true never throws and saturates instead
  mpz_class rank(std::span<const std::uint8_t> levels, bool clip) const;

  EssTrellis trellis_;
  int k_;
  mpz_class two_pow_k_;
};

}  // namespace pas
