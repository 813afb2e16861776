#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace pas {

// xoshiro256++ with splitmix64 seeding.  Streams are derived by mixing the
// master seed with up to three stream indices, so concurrent workers can
// draw independent, reproducible sequences regardless of thread schedule.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) { seed_state(seed, 0, 0, 0); }

  static Rng stream(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0,
                    std::uint64_t c = 0) {
    Rng r(0);
    r.seed_state(seed, a, b, c);
    return r;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // uniform in [0,1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // standard normal via Box-Muller (pair cached)
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    if (u1 <= 0.0) u1 = 0x1.0p-53;
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double th = 6.283185307179586476925287 * uniform();
    spare_ = r * std::sin(th);
    have_spare_ = true;
    return r * std::cos(th);
  }

  int uniform_int(int n) { return static_cast<int>(next() % static_cast<std::uint64_t>(n)); }

  std::vector<std::uint8_t> bits(std::size_t count) {
    std::vector<std::uint8_t> out(count);
    std::uint64_t word = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (i % 64 == 0) word = next();
      out[i] = static_cast<std::uint8_t>((word >> (i % 64)) & 1u);
    }
    return out;
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) { return (x << k) | (x >> (64 - k)); }

  static std::uint64_t splitmix(std::uint64_t& x) {
    std::uint64_t z = (x += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  void seed_state(std::uint64_t seed, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
    std::uint64_t x = seed;
    x ^= 0x2545f4914f6cdd1dull * (a + 1);
    (void)splitmix(x);
    x ^= 0x9e3779b97f4a7c15ull * (b + 1);
    (void)splitmix(x);
    x ^= 0xd6e8feb86659fd93ull * (c + 1);
    s_[0] = splitmix(x);
    s_[1] = splitmix(x);
    s_[2] = splitmix(x);
    s_[3] = splitmix(x);
    if ((s_[0] | s_[1] | s_[2] | s_[3]) == 0) s_[0] = 1;
  }

  std::uint64_t s_[4];
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace pas
