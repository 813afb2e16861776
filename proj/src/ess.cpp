#include "pas/ess.hpp"

#include <algorithm>

#include "pas/errors.hpp"

namespace pas {

namespace {
const mpz_class kZero = 0;
}

EssTrellis::EssTrellis(int n, AmplitudeAlphabet alphabet, long e_max)
    : n_(n), alphabet_(std::move(alphabet)), e_max_(e_max) {
  if (n < 1) throw ConfigError("blocklength must be positive");
  if (e_max < n)
    throw ConfigError("empty sphere: e_max " + std::to_string(e_max) +
                      " below minimum energy " + std::to_string(n));
  count_.resize(n_ + 1);
  for (int i = 0; i <= n_; ++i) {
    const long cap = row_cap(i);
    count_[i].assign(static_cast<std::size_t>((cap - i) / 8) + 1, kZero);
  }
  for (auto& c : count_[n_]) c = 1;
  for (int i = n_ - 1; i >= 0; --i) {
    const long cap = row_cap(i);
    for (long e = i; e <= cap; e += 8) {
      mpz_class& acc = count_[i][(e - i) / 8];
      for (int lv : alphabet_.levels) {
        const mpz_class& t = count(i + 1, e + static_cast<long>(lv) * lv);
        if (t != 0) acc += t;
      }
    }
  }
}

long EssTrellis::row_cap(int i) const {
  const int amax = alphabet_.levels.back();
  const long reach = static_cast<long>(i) * amax * amax;
  const long budget = e_max_ - (n_ - i);  // the cheapest completion costs n-i
  return std::min(reach, budget);
}

const mpz_class& EssTrellis::count(int i, long e) const {
  if (e < i || e > row_cap(i) || ((e - i) % 8) != 0) return kZero;
  return count_[i][(e - i) / 8];
}

int EssTrellis::max_input_bits() const {
  return static_cast<int>(bit_length(sphere_size())) - 1;
}

AmplitudeDistribution EssTrellis::induced_distribution() const {
  // Forward pass: N(i,e) prefixes reaching node (i,e) along feasible edges.
  std::vector<std::vector<mpz_class>> reach(n_ + 1);
  for (int i = 0; i <= n_; ++i) reach[i].assign(count_[i].size(), kZero);
  reach[0][0] = 1;
  const int num_levels = alphabet_.size();
  std::vector<mpz_class> weight(num_levels, kZero);
  for (int i = 0; i < n_; ++i) {
    const long cap = row_cap(i);
    for (long e = i; e <= cap; e += 8) {
      const mpz_class& np = reach[i][(e - i) / 8];
      if (np == 0) continue;
      for (int j = 0; j < num_levels; ++j) {
        const long lv = alphabet_.levels[j];
        const long e2 = e + lv * lv;
        const mpz_class& suffixes = count(i + 1, e2);
        if (suffixes == 0) continue;
        reach[i + 1][(e2 - (i + 1)) / 8] += np;
        weight[j] += np * suffixes;  // sequences using level j at position i
      }
    }
  }
  // Each position contributes |S| sequences, so sum(weight) = n * |S|.
  const mpz_class denom = mpz_class(n_) * sphere_size();
  AmplitudeDistribution dist;
  dist.probs.resize(num_levels);
  for (int j = 0; j < num_levels; ++j)
    dist.probs[j] = mpq_class(weight[j], denom).get_d();
  return dist;
}

std::vector<mpz_class> energy_histogram(int n, const AmplitudeAlphabet& alphabet) {
  const int amax = alphabet.levels.back();
  const long span = (static_cast<long>(n) * amax * amax - n) / 8;
  std::vector<mpz_class> hist(span + 1, kZero), next;
  hist[0] = 1;  // zero amplitudes, zero energy
  long cur_span = 0;
  for (int i = 1; i <= n; ++i) {
    const long new_span = (static_cast<long>(i) * amax * amax - i) / 8;
    next.assign(new_span + 1, kZero);
    for (long t = 0; t <= cur_span; ++t) {
      if (hist[t] == 0) continue;
      for (int lv : alphabet.levels) {
        const long dt = (static_cast<long>(lv) * lv - 1) / 8;
        next[t + dt] += hist[t];
      }
    }
    hist.swap(next);
    cur_span = new_span;
  }
  return hist;  // hist[t] = count with total energy n + 8t
}

long select_emax(int n, const AmplitudeAlphabet& alphabet, int k_target) {
  if (k_target < 0 || k_target > n * alphabet.bits_per_amplitude)
    throw ConfigError("infeasible shaping width k=" + std::to_string(k_target) +
                      " for n=" + std::to_string(n));
  const auto hist = energy_histogram(n, alphabet);
  mpz_class need = 1;
  need <<= k_target;
  mpz_class total = 0;
  for (std::size_t t = 0; t < hist.size(); ++t) {
    total += hist[t];
    if (total >= need) return n + 8 * static_cast<long>(t);
  }
  throw ConfigError("infeasible shaping width k=" + std::to_string(k_target) +
                    " for n=" + std::to_string(n));
}

EssCodec::EssCodec(EssTrellis trellis, int k) : trellis_(std::move(trellis)) {
  const int k_max = trellis_.max_input_bits();
  k_ = (k < 0) ? k_max : k;
  if (k_ < 0 || k_ > k_max)
    throw ConfigError("input width " + std::to_string(k_) + " exceeds sphere capacity (max " +
                      std::to_string(k_max) + ")");
  two_pow_k_ = 1;
  two_pow_k_ <<= k_;
}

void EssCodec::encode(std::span<const std::uint8_t> bits,
                      std::span<std::uint8_t> out_levels) const {
  const int n = trellis_.block_len();
  if (static_cast<int>(bits.size()) != k_ || static_cast<int>(out_levels.size()) != n)
    throw DataError("ess encode: expected " + std::to_string(k_) + " bits and " +
                    std::to_string(n) + " output slots");
  mpz_class index = bits_to_mpz(bits);
  long e = 0;
  for (int i = 0; i < n; ++i) {
    int chosen = -1;
    for (int j = 0; j < trellis_.alphabet().size(); ++j) {
      const long lv = trellis_.alphabet().levels[j];
      const mpz_class& c = trellis_.count(i + 1, e + lv * lv);
      if (c == 0) continue;
      if (index < c) {
        chosen = j;
        e += lv * lv;
        break;
      }
      index -= c;
    }
    if (chosen < 0) throw DataError("ess encode: index exceeds sphere size");
    out_levels[i] = static_cast<std::uint8_t>(chosen);
  }
}

mpz_class EssCodec::rank(std::span<const std::uint8_t> levels, bool clip) const {
  const int n = trellis_.block_len();
  const auto& alpha = trellis_.alphabet();
  mpz_class rank = 0;
  long e = 0;
  for (int i = 0; i < n; ++i) {
    const int j = levels[i];
    if (j >= alpha.size()) throw DataError("ess decode: level index out of alphabet");
    for (int lower = 0; lower < j; ++lower) {
      const long lv = alpha.levels[lower];
      rank += trellis_.count(i + 1, e + lv * lv);
    }
    const long lv = alpha.levels[j];
    e += lv * lv;
    if (e > trellis_.energy_limit() - (n - 1 - i)) {
      // no completion of this prefix stays inside the sphere
      if (clip) return rank;
      throw DmError(DmError::Kind::outside_sphere,
                    "outside sphere: prefix energy " + std::to_string(e) + " at position " +
                        std::to_string(i) + " exceeds bound " +
                        std::to_string(trellis_.energy_limit()));
    }
  }
  return rank;
}

void EssCodec::decode(std::span<const std::uint8_t> levels,
                      std::span<std::uint8_t> out_bits) const {
  if (static_cast<int>(levels.size()) != trellis_.block_len() ||
      static_cast<int>(out_bits.size()) != k_)
    throw DataError("ess decode: wrong block or output size");
  const mpz_class r = rank(levels, false);
  if (r >= two_pow_k_)
    throw DmError(DmError::Kind::unaddressed, "unaddressed sequence: rank " + r.get_str() +
                                                  " >= 2^" + std::to_string(k_));
  mpz_to_bits(r, out_bits);
}

void EssCodec::decode_clipped(std::span<const std::uint8_t> levels,
                              std::span<std::uint8_t> out_bits) const {
  if (static_cast<int>(levels.size()) != trellis_.block_len() ||
      static_cast<int>(out_bits.size()) != k_)
    throw DataError("ess decode: wrong block or output size");
  mpz_class r = rank(levels, true);
  if (r >= two_pow_k_) r = two_pow_k_ - 1;
  mpz_to_bits(r, out_bits);
}

}  // namespace pas
