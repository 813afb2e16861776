#include "pas/constellation.hpp"

#include <cmath>
#include <stdexcept>

#include "pas/errors.hpp"

namespace pas {

AmplitudeAlphabet AmplitudeAlphabet::ask(int num_levels) {
  if (num_levels < 1 || (num_levels & (num_levels - 1)) != 0)
    throw ConfigError("alphabet size must be a power of two, got " + std::to_string(num_levels));
  AmplitudeAlphabet a;
  a.levels.resize(num_levels);
  for (int j = 0; j < num_levels; ++j) a.levels[j] = 2 * j + 1;
  a.bits_per_amplitude = 0;
  while ((1 << a.bits_per_amplitude) < num_levels) ++a.bits_per_amplitude;
  return a;
}

unsigned AmplitudeAlphabet::label(int level_index) const {
  if (level_index < 0 || level_index >= size())
    throw ConfigError("level index " + std::to_string(level_index) + " out of range");
  const unsigned i = static_cast<unsigned>(level_index);
  return i ^ (i >> 1);
}

int AmplitudeAlphabet::index_of_label(unsigned label_bits) const {
  if (label_bits >= static_cast<unsigned>(size()))
    throw ConfigError("amplitude label out of range");
  unsigned i = label_bits;
  for (unsigned shift = 1; shift < static_cast<unsigned>(bits_per_amplitude); shift <<= 1)
    i ^= i >> shift;
  return static_cast<int>(i);
}

double entropy_bits(const AmplitudeDistribution& dist) {
  double h = 0.0;
  for (double p : dist.probs)
    if (p > 0.0) h -= p * std::log2(p);
  return h;
}

AmplitudeDistribution mb_distribution(const AmplitudeAlphabet& alphabet, double lambda) {
  if (lambda < 0.0) throw ConfigError("Maxwell-Boltzmann parameter must be non-negative");
  AmplitudeDistribution d;
  d.probs.resize(alphabet.levels.size());
  // shift exponents by the smallest energy so the normalizer never underflows
  const double e0 = static_cast<double>(alphabet.levels[0]) * alphabet.levels[0];
  double z = 0.0;
  for (std::size_t j = 0; j < d.probs.size(); ++j) {
    const double e = static_cast<double>(alphabet.levels[j]) * alphabet.levels[j];
    d.probs[j] = std::exp(-lambda * (e - e0));
    z += d.probs[j];
  }
  for (double& p : d.probs) p /= z;
  return d;
}

double lambda_for_entropy(const AmplitudeAlphabet& alphabet, double target_bits) {
  const double h_max = std::log2(static_cast<double>(alphabet.size()));
  if (target_bits <= 0.0 || target_bits > h_max)
    throw ConfigError("target entropy out of range (0, " + std::to_string(h_max) + "]");
  double lo = 0.0;        // H(lo) = h_max >= target
  double hi = 1.0;
  while (entropy_bits(mb_distribution(alphabet, hi)) > target_bits) {
    hi *= 2.0;
    if (hi > 1e6) break;  // target ~ 0: any further mass shift is below tolerance
  }
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double h = entropy_bits(mb_distribution(alphabet, mid));
    if (h > target_bits)
      lo = mid;
    else
      hi = mid;
    if (std::abs(h - target_bits) < 1e-9) return mid;
  }
  return 0.5 * (lo + hi);
}

double mean_symbol_energy(const AmplitudeAlphabet& alphabet, const AmplitudeDistribution& dist) {
  double e = 0.0;
  for (std::size_t j = 0; j < dist.probs.size(); ++j)
    e += dist.probs[j] * alphabet.levels[j] * alphabet.levels[j];
  return e;
}

SymbolMap SymbolMap::unit_energy(const AmplitudeAlphabet& alphabet,
                                 const AmplitudeDistribution& dist) {
  if (dist.probs.size() != alphabet.levels.size())
    throw ConfigError("distribution length does not match alphabet");
  const double e1d = mean_symbol_energy(alphabet, dist);
  SymbolMap m;
  m.alphabet = alphabet;
  m.scale = 1.0 / std::sqrt(2.0 * e1d);  // two real dimensions per symbol
  return m;
}

}  // namespace pas
