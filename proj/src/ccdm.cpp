#include "pas/ccdm.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "pas/errors.hpp"

namespace pas {

int Composition::block_len() const {
  return std::accumulate(counts.begin(), counts.end(), 0);
}

long Composition::total_energy() const {
  long e = 0;
  for (std::size_t j = 0; j < counts.size(); ++j)
    e += static_cast<long>(counts[j]) * alphabet.levels[j] * alphabet.levels[j];
  return e;
}

AmplitudeDistribution Composition::distribution() const {
  AmplitudeDistribution d;
  const double n = block_len();
  d.probs.resize(counts.size());
  for (std::size_t j = 0; j < counts.size(); ++j) d.probs[j] = counts[j] / n;
  return d;
}

mpz_class multinomial(const Composition& comp) {
  mpz_class m;
  mpz_fac_ui(m.get_mpz_t(), comp.block_len());
  mpz_class f;
  for (int c : comp.counts) {
    if (c < 0) throw ConfigError("negative composition count");
    mpz_fac_ui(f.get_mpz_t(), c);
    mpz_divexact(m.get_mpz_t(), m.get_mpz_t(), f.get_mpz_t());
  }
  return m;
}

namespace {

std::vector<int> largest_remainder(int n, const AmplitudeDistribution& dist) {
  const std::size_t m = dist.probs.size();
  std::vector<int> counts(m);
  std::vector<std::pair<double, std::size_t>> frac(m);
  int assigned = 0;
  for (std::size_t j = 0; j < m; ++j) {
    const double ideal = n * dist.probs[j];
    counts[j] = static_cast<int>(ideal);
    frac[j] = {ideal - counts[j], j};
    assigned += counts[j];
  }
  // descending fractional part, lower index wins ties
  std::sort(frac.begin(), frac.end(), [](const auto& a, const auto& b) {
    return a.first != b.first ? a.first > b.first : a.second < b.second;
  });
  for (int r = 0; r < n - assigned; ++r) counts[frac[r].second] += 1;
  return counts;
}

}  // namespace

Composition select_composition(int n, const AmplitudeAlphabet& alphabet, int k_target) {
  if (k_target < 0 || k_target > n * alphabet.bits_per_amplitude)
    throw ConfigError("infeasible shaping width k=" + std::to_string(k_target) +
                      " for n=" + std::to_string(n));
  std::map<std::vector<int>, bool> seen;
  std::vector<std::vector<int>> candidates;
  auto quantize = [&](double lambda) {
    return largest_remainder(n, mb_distribution(alphabet, lambda));
  };
  auto add = [&](std::vector<int> c) {
    if (seen.emplace(c, true).second) candidates.push_back(std::move(c));
  };

  // Walk lambda until all mass sits on the lowest level, splitting any step
  // where neighbouring quantizations differ by more than one in some count.
  double hi = 1.0;
  while (quantize(hi)[0] != n && hi < 1e6) hi *= 2.0;
  const int coarse = 64;
  std::vector<std::pair<double, double>> stack;
  for (int t = 0; t < coarse; ++t)
    stack.push_back({hi * t / coarse, hi * (t + 1) / coarse});
  add(quantize(0.0));
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    auto a = quantize(x);
    auto b = quantize(y);
    add(a);
    add(b);
    if (a == b || y - x < 1e-9) continue;
    const double mid = 0.5 * (x + y);
    stack.push_back({x, mid});
    stack.push_back({mid, y});
  }

  const Composition* best = nullptr;
  std::vector<Composition> pool;
  pool.reserve(candidates.size());
  for (auto& counts : candidates)
    pool.push_back(Composition{counts, alphabet});
  mpz_class need = 1;
  need <<= k_target;
  for (const auto& comp : pool) {
    if (multinomial(comp) < need) continue;
    if (best == nullptr || comp.total_energy() < best->total_energy() ||
        (comp.total_energy() == best->total_energy() && comp.counts < best->counts))
      best = &comp;
  }
  if (best == nullptr)
    throw ConfigError("infeasible shaping width k=" + std::to_string(k_target) +
                      " for n=" + std::to_string(n) + ": no addressable composition");
  return *best;
}

CcdmCodec::CcdmCodec(Composition comp, int k)
    : comp_(std::move(comp)), n_(comp_.block_len()) {
  if (comp_.counts.size() != comp_.alphabet.levels.size())
    throw ConfigError("composition length does not match alphabet");
  codebook_ = multinomial(comp_);
  const int k_max = static_cast<int>(bit_length(codebook_)) - 1;
  k_ = (k < 0) ? k_max : k;
  if (k_ < 0 || k_ > k_max)
    throw ConfigError("input width " + std::to_string(k_) +
                      " exceeds codebook capacity (max " + std::to_string(k_max) + ")");
  two_pow_k_ = 1;
  two_pow_k_ <<= k_;
}

void CcdmCodec::encode(std::span<const std::uint8_t> bits,
                       std::span<std::uint8_t> out_levels) const {
  if (static_cast<int>(bits.size()) != k_ || static_cast<int>(out_levels.size()) != n_)
    throw DataError("ccdm encode: expected " + std::to_string(k_) + " bits and " +
                    std::to_string(n_) + " output slots");
  mpz_class index = bits_to_mpz(bits);
  std::vector<int> remaining = comp_.counts;
  mpz_class pool = codebook_;  // permutations of the remaining multiset
  mpz_class branch;
  for (int i = 0; i < n_; ++i) {
    const int n_rem = n_ - i;
    int chosen = -1;
    for (std::size_t j = 0; j < remaining.size(); ++j) {
      if (remaining[j] == 0) continue;
      // permutations starting with level j: pool * remaining[j] / n_rem
      branch = pool * remaining[j];
      mpz_divexact_ui(branch.get_mpz_t(), branch.get_mpz_t(), n_rem);
      if (index < branch) {
        chosen = static_cast<int>(j);
        pool = branch;
        remaining[j] -= 1;
        break;
      }
      index -= branch;
    }
    if (chosen < 0) throw DataError("ccdm encode: index exceeds codebook size");
    out_levels[i] = static_cast<std::uint8_t>(chosen);
  }
}

mpz_class CcdmCodec::rank(std::span<const std::uint8_t> levels, bool clip) const {
  std::vector<int> remaining = comp_.counts;
  mpz_class pool = codebook_;
  mpz_class r = 0, branch;
  for (int i = 0; i < n_; ++i) {
    const int n_rem = n_ - i;
    const int want = levels[i];
    if (want >= static_cast<int>(remaining.size()))
      throw DataError("ccdm decode: level index out of alphabet");
    for (int j = 0; j < want; ++j) {
      if (remaining[j] == 0) continue;
      branch = pool * remaining[j];
      mpz_divexact_ui(branch.get_mpz_t(), branch.get_mpz_t(), n_rem);
      r += branch;
    }
    if (remaining[want] == 0) {
      // prefix leaves the codebook; everything smaller has been counted
      if (clip) return r;
      throw DmError(DmError::Kind::composition_violation,
                    "composition violation at position " + std::to_string(i));
    }
    branch = pool * remaining[want];
    mpz_divexact_ui(branch.get_mpz_t(), branch.get_mpz_t(), n_rem);
    pool = branch;
    remaining[want] -= 1;
  }
  return r;
}

void CcdmCodec::decode(std::span<const std::uint8_t> levels,
                       std::span<std::uint8_t> out_bits) const {
  if (static_cast<int>(levels.size()) != n_ || static_cast<int>(out_bits.size()) != k_)
    throw DataError("ccdm decode: wrong block or output size");
  // verify the composition up front so the failure mode is unambiguous
  std::vector<int> hist(comp_.counts.size(), 0);
  for (std::uint8_t lv : levels) {
    if (lv >= hist.size()) throw DataError("ccdm decode: level index out of alphabet");
    hist[lv] += 1;
  }
  if (hist != comp_.counts)
    throw DmError(DmError::Kind::composition_violation,
                  "composition violation: block counts differ from codec composition");
  const mpz_class r = rank(levels, false);
  if (r >= two_pow_k_)
    throw DmError(DmError::Kind::unaddressed, "unaddressed sequence: rank " + r.get_str() +
                                                  " >= 2^" + std::to_string(k_));
  mpz_to_bits(r, out_bits);
}

void CcdmCodec::decode_clipped(std::span<const std::uint8_t> levels,
                               std::span<std::uint8_t> out_bits) const {
  if (static_cast<int>(levels.size()) != n_ || static_cast<int>(out_bits.size()) != k_)
    throw DataError("ccdm decode: wrong block or output size");
  mpz_class r = rank(levels, true);
  if (r >= two_pow_k_) r = two_pow_k_ - 1;
  mpz_to_bits(r, out_bits);
}

}  // namespace pas
