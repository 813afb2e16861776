#include "pas/constellation.hpp"

#include <cmath>

#include "doctest.h"
#include "pas/errors.hpp"
#include "pas/rng.hpp"

using namespace pas;

TEST_CASE("maxwell-boltzmann family") {
  const auto a4 = AmplitudeAlphabet::ask(4);

  SUBCASE("lambda 0 is uniform") {
    const auto d = mb_distribution(a4, 0.0);
    for (double p : d.probs) CHECK(p == doctest::Approx(0.25).epsilon(1e-12));
  }
  SUBCASE("large lambda collapses onto the lowest level") {
    const auto a2 = AmplitudeAlphabet::ask(2);
    const auto d = mb_distribution(a2, 100.0);
    CHECK(d.probs[0] == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(d.probs[1] == doctest::Approx(0.0).epsilon(1e-12));
  }
  SUBCASE("bisection hits a target entropy") {
    const double lambda = lambda_for_entropy(a4, 1.90);
    CHECK(entropy_bits(mb_distribution(a4, lambda)) == doctest::Approx(1.90).epsilon(1e-6));
  }
  SUBCASE("entropy strictly decreases in lambda") {
    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
      double l1 = 2.0 * rng.uniform(), l2 = 2.0 * rng.uniform();
      if (l1 == l2) continue;
      if (l1 > l2) std::swap(l1, l2);
      CHECK(entropy_bits(mb_distribution(a4, l1)) > entropy_bits(mb_distribution(a4, l2)));
    }
  }
  SUBCASE("probabilities sum to one") {
    Rng rng(8);
    for (int t = 0; t < 100; ++t) {
      const auto d = mb_distribution(a4, 5.0 * rng.uniform());
      double s = 0.0;
      for (double p : d.probs) s += p;
      CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
    }
  }
}

TEST_CASE("entropy") {
  CHECK(entropy_bits({{0.25, 0.25, 0.25, 0.25}}) == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(entropy_bits({{1.0, 0.0, 0.0, 0.0}}) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(entropy_bits({{0.5, 0.25, 0.125, 0.125}}) == doctest::Approx(1.75).epsilon(1e-12));
}

TEST_CASE("gray amplitude labels") {
  const auto a4 = AmplitudeAlphabet::ask(4);
  CHECK(a4.label(0) == 0b00);  // amplitude 1
  CHECK(a4.label(1) == 0b01);
  CHECK(a4.label(2) == 0b11);
  CHECK(a4.label(3) == 0b10);  // amplitude 7
  for (int j = 0; j < 4; ++j) CHECK(a4.index_of_label(a4.label(j)) == j);
  // adjacent levels differ in exactly one bit
  for (int j = 0; j + 1 < 4; ++j) {
    const unsigned d = a4.label(j) ^ a4.label(j + 1);
    CHECK((d & (d - 1)) == 0);
    CHECK(d != 0);
  }
  CHECK_THROWS_AS(a4.label(4), ConfigError);
  CHECK_THROWS_AS(a4.label(-1), ConfigError);

  const auto a8 = AmplitudeAlphabet::ask(8);
  CHECK(a8.bits_per_amplitude == 3);
  for (int j = 0; j < 8; ++j) CHECK(a8.index_of_label(a8.label(j)) == j);
}

TEST_CASE("alphabet levels are ascending odd integers") {
  const auto a4 = AmplitudeAlphabet::ask(4);
  for (int j = 0; j < a4.size(); ++j) CHECK(a4.levels[j] == 2 * j + 1);
  CHECK_THROWS_AS(AmplitudeAlphabet::ask(3), ConfigError);
}

TEST_CASE("unit-energy symbol map") {
  const auto a4 = AmplitudeAlphabet::ask(4);

  SUBCASE("uniform 64-QAM scale is 1/sqrt(42)") {
    const auto map = SymbolMap::unit_energy(a4, mb_distribution(a4, 0.0));
    CHECK(map.scale == doctest::Approx(1.0 / std::sqrt(42.0)).epsilon(1e-12));
  }
  SUBCASE("empirical mean energy of sampled symbols is 1") {
    const auto dist = mb_distribution(a4, lambda_for_entropy(a4, 1.85));
    const auto map = SymbolMap::unit_energy(a4, dist);
    Rng rng(42);
    double acc = 0.0;
    const int samples = 1000000;
    for (int t = 0; t < samples; ++t) {
      double re = 0.0, im = 0.0;
      for (double* coord : {&re, &im}) {
        const double u = rng.uniform();
        double cum = 0.0;
        int idx = a4.size() - 1;
        for (int j = 0; j < a4.size(); ++j) {
          cum += dist.probs[j];
          if (u < cum) {
            idx = j;
            break;
          }
        }
        *coord = map.coordinate(rng.next() & 1u, idx);
      }
      acc += re * re + im * im;
    }
    CHECK(acc / samples == doctest::Approx(1.0).epsilon(3e-3));
  }
}
