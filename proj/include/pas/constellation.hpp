#pragma once

#include <cstdint>
#include <vector>

namespace pas {

// Ordered odd-integer amplitude levels of one real dimension, e.g. {1,3,5,7}
// for the 8-ASK component of 64-QAM.  Amplitude labels follow the binary
// reflected Gray code over the level index, so adjacent levels differ in one
// bit; the sign bit is carried separately (and first) in the 1D symbol label.
struct AmplitudeAlphabet {
  std::vector<int> levels;
  int bits_per_amplitude = 0;

  // {1, 3, ..., 2*num_levels-1}; num_levels must be a power of two.
  static AmplitudeAlphabet ask(int num_levels);

  int size() const { return static_cast<int>(levels.size()); }

  // Gray-code label of a level index, bits_per_amplitude wide.
  unsigned label(int level_index) const;
  // Inverse of label(); exact for every valid label.
  int index_of_label(unsigned label_bits) const;

  bool operator==(const AmplitudeAlphabet&) const = default;
};

struct AmplitudeDistribution {
  std::vector<double> probs;  // aligned with alphabet levels
};

// -sum p log2 p with 0 log 0 = 0
double entropy_bits(const AmplitudeDistribution& dist);

// probs[j] proportional to exp(-lambda * levels[j]^2)
AmplitudeDistribution mb_distribution(const AmplitudeAlphabet& alphabet, double lambda);

// Bisection on the strictly decreasing map lambda -> H(mb(lambda)).
// target_bits must lie in (0, log2 |levels|].
double lambda_for_entropy(const AmplitudeAlphabet& alphabet, double target_bits);

double mean_symbol_energy(const AmplitudeAlphabet& alphabet, const AmplitudeDistribution& dist);

// Maps (sign, level) pairs to real 1D coordinates scaled so that the
// expected 2D symbol energy is 1 under the declared amplitude distribution
// (signs uniform, I and Q independent).
struct SymbolMap {
  AmplitudeAlphabet alphabet;
  double scale = 1.0;

  static SymbolMap unit_energy(const AmplitudeAlphabet& alphabet,
                               const AmplitudeDistribution& dist);

  // sign_bit: 0 -> positive, 1 -> negative
  double coordinate(int sign_bit, int level_index) const {
    const double a = scale * alphabet.levels[level_index];
    return sign_bit ? -a : a;
  }
};

}  // namespace pas
