#include "pas/channel.hpp"

#include <cmath>

#include "doctest.h"
#include "pas/errors.hpp"

using namespace pas;

namespace {

SymbolMap uniform_map() {
  const auto a4 = AmplitudeAlphabet::ask(4);
  return SymbolMap::unit_energy(a4, mb_distribution(a4, 0.0));
}

AmplitudeDistribution uniform_priors() { return mb_distribution(AmplitudeAlphabet::ask(4), 0.0); }

}  // namespace

TEST_CASE("awgn transmission") {
  const auto map = uniform_map();
  Rng rng(1);
  std::vector<Complex> x(5000);
  for (auto& s : x)
    s = Complex(map.coordinate(rng.next() & 1, rng.uniform_int(4)),
                map.coordinate(rng.next() & 1, rng.uniform_int(4)));

  SUBCASE("zero noise is the identity") {
    ChannelConfig cfg{1000.0, 42};  // sigma^2 = 1e-100
    const auto y = transmit(x, cfg);
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(std::abs(y[i] - x[i]) < 1e-12);
  }
  SUBCASE("noise power matches the configured variance") {
    ChannelConfig cfg{10.0, 7};
    std::vector<Complex> big(1000000, Complex(0.0, 0.0));
    const auto y = transmit(big, cfg);
    double p = 0.0;
    for (const auto& s : y) p += std::norm(s);
    CHECK(p / big.size() == doctest::Approx(0.1).epsilon(1e-2));
  }
  SUBCASE("same seed, same output") {
    ChannelConfig cfg{12.0, 99};
    const auto y1 = transmit(x, cfg);
    const auto y2 = transmit(x, cfg);
    CHECK(y1 == y2);
  }
}

TEST_CASE("demapper") {
  const auto map = uniform_map();
  const auto priors = uniform_priors();
  const int m = 3;

  SUBCASE("llr signs at a constellation point reproduce its label") {
    for (int s0 = 0; s0 < 2; ++s0)
      for (int j0 = 0; j0 < 4; ++j0)
        for (int s1 = 0; s1 < 2; ++s1)
          for (int j1 = 0; j1 < 4; ++j1) {
            const std::vector<Complex> y{Complex(map.coordinate(s0, j0),
                                                 map.coordinate(s1, j1))};
            const auto llr = demap(y, 30.0, map, priors);
            REQUIRE(llr.size() == 2 * m);
            const unsigned l0 = map.alphabet.label(j0), l1 = map.alphabet.label(j1);
            CHECK((llr[0] < 0) == (s0 == 1));
            CHECK((llr[1] < 0) == (((l0 >> 1) & 1) == 1));
            CHECK((llr[2] < 0) == ((l0 & 1) == 1));
            CHECK((llr[3] < 0) == (s1 == 1));
            CHECK((llr[4] < 0) == (((l1 >> 1) & 1) == 1));
            CHECK((llr[5] < 0) == ((l1 & 1) == 1));
          }
  }
  SUBCASE("zero sample with symmetric priors has zero sign llr") {
    const std::vector<Complex> y{Complex(0.0, 0.0)};
    const auto llr = demap(y, 15.0, map, priors);
    CHECK(llr[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(llr[3] == doctest::Approx(0.0).epsilon(1e-9));
  }
  SUBCASE("priors shift the amplitude-bit llr by exactly the log prior ratio") {
    // 2-level alphabet: one amplitude bit, priors factor out of the mixture
    const auto a2 = AmplitudeAlphabet::ask(2);
    const AmplitudeDistribution shaped{{0.8, 0.2}};
    const AmplitudeDistribution flat{{0.5, 0.5}};
    const auto map2 = SymbolMap::unit_energy(a2, flat);
    for (double yv : {-1.3, -0.2, 0.05, 0.71, 2.0}) {
      const std::vector<Complex> y{Complex(yv, -yv)};
      const auto ls = demap(y, 9.0, map2, shaped);
      const auto lu = demap(y, 9.0, map2, flat);
      const double shift = std::log(0.8 / 0.2);
      CHECK(ls[1] - lu[1] == doctest::Approx(shift).epsilon(1e-6));
      CHECK(ls[3] - lu[3] == doctest::Approx(shift).epsilon(1e-6));
    }
  }
  SUBCASE("hard decisions at 30 dB are effectively error free") {
    Rng rng(5);
    std::vector<Complex> x(100000);
    std::vector<int> sent;
    for (auto& s : x) {
      const int s0 = rng.next() & 1, j0 = rng.uniform_int(4);
      const int s1 = rng.next() & 1, j1 = rng.uniform_int(4);
      s = Complex(map.coordinate(s0, j0), map.coordinate(s1, j1));
      const unsigned l0 = map.alphabet.label(j0), l1 = map.alphabet.label(j1);
      for (int b : {s0, (int)(l0 >> 1) & 1, (int)(l0 & 1), s1, (int)(l1 >> 1) & 1,
                    (int)(l1 & 1)})
        sent.push_back(b);
    }
    const auto y = transmit(x, {30.0, 77});
    const auto llr = demap(y, 30.0, map, priors);
    std::size_t err = 0;
    for (std::size_t i = 0; i < llr.size(); ++i) err += (llr[i] < 0.0f) != (sent[i] == 1);
    CHECK(static_cast<double>(err) / llr.size() < 1e-5);
  }
}

TEST_CASE("effective snr") {
  const auto map = uniform_map();
  Rng rng(31);
  std::vector<Complex> x(1000000);
  for (auto& s : x)
    s = Complex(map.coordinate(rng.next() & 1, rng.uniform_int(4)),
                map.coordinate(rng.next() & 1, rng.uniform_int(4)));

  SUBCASE("identity and pure scaling are capped at 100 dB") {
    CHECK(effective_snr_db(x, x) == doctest::Approx(100.0));
    auto y = x;
    for (auto& s : y) s *= 2.0;
    CHECK(effective_snr_db(x, y) == doctest::Approx(100.0));
  }
  SUBCASE("awgn at 15 dB measures 15 dB") {
    const auto y = transmit(x, {15.0, 4});
    CHECK(effective_snr_db(x, y) == doctest::Approx(15.0).epsilon(0.01));
  }
  SUBCASE("invariant to global complex scaling of the received signal") {
    auto y = transmit(x, {12.0, 5});
    const double ref = effective_snr_db(x, y);
    for (auto& s : y) s *= Complex(-0.3, 1.7);
    CHECK(effective_snr_db(x, y) == doctest::Approx(ref).epsilon(1e-9));
  }
  SUBCASE("degenerate inputs are rejected") {
    CHECK_THROWS_AS(effective_snr_db({}, {}), DataError);
    const std::vector<Complex> zeros(8, Complex(0.0, 0.0));
    CHECK_THROWS_AS(effective_snr_db(zeros, zeros), ConfigError);
  }
}
