#include "pas/ldpc.hpp"

#include <cmath>
#include <sstream>

#include "doctest.h"
#include "pas/errors.hpp"
#include "pas/rng.hpp"

using namespace pas;

namespace {

// (7,4) Hamming code; column lists zero-padded to the max degree
const char* kHammingAlist =
    "7 3\n"
    "3 4\n"
    "1 1 1 2 2 2 3\n"
    "4 4 4\n"
    "1 0 0\n"
    "2 0 0\n"
    "3 0 0\n"
    "1 2 0\n"
    "1 3 0\n"
    "2 3 0\n"
    "1 2 3\n"
    "1 4 5 7\n"
    "2 4 6 7\n"
    "3 5 6 7\n";

ParityCheck hamming() {
  std::istringstream in(kHammingAlist);
  return load_parity_check(in);
}

std::vector<float> bpsk_llrs(const BitVec& cw, double sigma2, Rng& rng) {
  std::vector<float> llr(cw.size());
  for (std::size_t i = 0; i < cw.size(); ++i) {
    const double y = (cw[i] ? -1.0 : 1.0) + std::sqrt(sigma2) * rng.gaussian();
    llr[i] = static_cast<float>(2.0 * y / sigma2);
  }
  return llr;
}

}  // namespace

TEST_CASE("adjacency list loading") {
  SUBCASE("hamming roundtrip over all infowords") {
    auto code = hamming();
    CHECK(code.n_bits() == 7);
    CHECK(code.n_checks() == 3);
    CHECK(code.info_len() == 4);
    for (int w = 0; w < 16; ++w) {
      BitVec info(4);
      for (int t = 0; t < 4; ++t) info[t] = (w >> t) & 1;
      const BitVec cw = code.encode(info);
      CHECK(code.check(cw));
      // systematic: info values readable at the info positions
      for (int t = 0; t < 4; ++t) CHECK(cw[code.info_positions()[t]] == info[t]);
    }
  }
  SUBCASE("malformed file: bad token") {
    std::istringstream in("7 x\n");
    CHECK_THROWS_WITH_AS(load_parity_check(in), doctest::Contains("line 1"), DataError);
  }
  SUBCASE("malformed file: truncated") {
    std::istringstream in("7 3\n3 4\n1 1 1 2 2 2 3\n");
    CHECK_THROWS_WITH_AS(load_parity_check(in), doctest::Contains("end of file"), DataError);
  }
  SUBCASE("malformed file: degree mismatch") {
    std::string text(kHammingAlist);
    text.replace(text.find("1 1 1 2 2 2 3"), 1, "2");  // column 1 now declares degree 2
    std::istringstream bad(text);
    CHECK_THROWS_WITH_AS(load_parity_check(bad), doctest::Contains("degree"), DataError);
  }
  SUBCASE("malformed file: index out of range") {
    std::string text(kHammingAlist);
    text.replace(text.find("3 5 6 7"), 7, "3 5 6 9");
    std::istringstream bad(text);
    CHECK_THROWS_WITH_AS(load_parity_check(bad), doctest::Contains("out of range"), DataError);
  }
  SUBCASE("inconsistent row and column lists") {
    std::string text(kHammingAlist);
    text.replace(text.find("3 5 6 7"), 7, "3 4 6 7");
    std::istringstream bad(text);
    CHECK_THROWS_AS(load_parity_check(bad), DataError);
  }
  SUBCASE("rank-deficient matrix is reported") {
    // duplicate rows
    std::istringstream in(
        "4 2\n"
        "2 2\n"
        "2 2 0 0\n"
        "2 2\n"
        "1 2\n"
        "1 2\n"
        "0 0\n"
        "0 0\n"
        "1 2\n"
        "1 2\n");
    CHECK_THROWS_WITH_AS(load_parity_check(in), doctest::Contains("rank-deficient"), DataError);
  }
}

TEST_CASE("embedded 64800-bit codes") {
  SUBCASE("rate 4/5 dimensions") {
    auto code = dvbs2_code({4, 5});
    CHECK(code.n_bits() == 64800);
    CHECK(code.info_len() == 51840);
  }
  SUBCASE("rate 3/4 dimensions") {
    auto code = dvbs2_code({3, 4});
    CHECK(code.n_bits() == 64800);
    CHECK(code.info_len() == 48600);
  }
  SUBCASE("unsupported rate") { CHECK_THROWS_AS(dvbs2_code({1, 2}), ConfigError); }
  SUBCASE("every encoder output satisfies all checks") {
    Rng rng(3);
    for (auto rate : {Rational{3, 4}, Rational{4, 5}}) {
      auto code = dvbs2_code(rate);
      for (int t = 0; t < 20; ++t) CHECK(code.check(code.encode(rng.bits(code.info_len()))));
    }
  }
}

TEST_CASE("belief propagation") {
  auto code = hamming();

  SUBCASE("noiseless input converges without iterating") {
    Rng rng(9);
    const BitVec cw = code.encode(rng.bits(4));
    std::vector<float> llr(7);
    for (int i = 0; i < 7; ++i) llr[i] = cw[i] ? -50.0f : 50.0f;
    const auto res = decode(code, llr);
    CHECK(res.converged);
    CHECK(res.iterations <= 1);
    CHECK(res.bits == cw);
  }
  SUBCASE("single flipped bit is corrected") {
    // Position 7 sits in all three checks; at uniform magnitude the first
    // flooding iteration overcorrects the three degree-2 bits into the
    // weight-3 codeword offset, a fixed point of sum-product on this
    // girth-4 graph (unlike ML).  The other six positions decode exactly.
    Rng rng(10);
    for (int pos = 0; pos < 7; ++pos) {
      const BitVec cw = code.encode(rng.bits(4));
      std::vector<float> llr(7);
      for (int i = 0; i < 7; ++i) llr[i] = (cw[i] ? -10.0f : 10.0f) * (i == pos ? -1.0f : 1.0f);
      const auto res = decode(code, llr);
      CHECK(res.converged);
      if (pos != 6) CHECK(res.bits == cw);
    }
  }
  SUBCASE("single weak-confidence error is corrected everywhere") {
    Rng rng(10);
    for (int pos = 0; pos < 7; ++pos) {
      const BitVec cw = code.encode(rng.bits(4));
      std::vector<float> llr(7);
      for (int i = 0; i < 7; ++i)
        llr[i] = (cw[i] ? -10.0f : 10.0f) * (i == pos ? -0.2f : 1.0f);
      const auto res = decode(code, llr);
      CHECK(res.converged);
      CHECK(res.bits == cw);
    }
  }
  SUBCASE("all-zero LLRs do not converge") {
    std::vector<float> llr(7, 0.0f);
    CHECK_FALSE(decode(code, llr).converged);
  }
  SUBCASE("llr length is validated") {
    std::vector<float> llr(6, 1.0f);
    CHECK_THROWS_AS(decode(code, llr), DataError);
  }
}

TEST_CASE("toy code matches maximum-likelihood decoding at high SNR") {
  // length 6, rate 1/2
  std::istringstream in(
      "6 3\n"
      "2 3\n"
      "2 2 1 1 1 1\n"
      "3 3 2\n"
      "1 3\n"
      "1 2\n"
      "2\n"
      "1\n"
      "3\n"
      "2\n"
      "1 2 4\n"
      "2 3 6\n"
      "1 5\n");
  auto code = load_parity_check(in);
  REQUIRE(code.info_len() == 3);

  // codebook for exhaustive ML
  std::vector<BitVec> codebook;
  for (int w = 0; w < 8; ++w) {
    BitVec info(3);
    for (int t = 0; t < 3; ++t) info[t] = (w >> t) & 1;
    codebook.push_back(code.encode(info));
  }

  Rng rng(12);
  const double sigma2 = std::pow(10.0, -0.8);  // 8 dB
  int agree = 0;
  const int trials = 1000;
  for (int t = 0; t < trials; ++t) {
    const BitVec& cw = codebook[rng.uniform_int(8)];
    const auto llr = bpsk_llrs(cw, sigma2, rng);
    const auto res = decode(code, llr, 50);
    // ML over the 8 codewords: maximize correlation sum (1-2c) L
    double best = -1e300;
    const BitVec* ml = nullptr;
    for (const auto& cand : codebook) {
      double corr = 0.0;
      for (int i = 0; i < 6; ++i) corr += (cand[i] ? -1.0 : 1.0) * llr[i];
      if (corr > best) {
        best = corr;
        ml = &cand;
      }
    }
    agree += (res.bits == *ml);
  }
  CHECK(agree >= 990);
}

TEST_CASE("post-FEC error rate is monotone across a small sweep") {
  auto code = dvbs2_code({4, 5});
  BpWorkspace ws;
  Rng rng(21);
  std::vector<double> bers;
  for (double snr : {3.6, 4.0, 4.4, 4.8, 5.2}) {
    const double sigma2 = std::pow(10.0, -snr / 10.0);
    long err = 0, tot = 0;
    for (int c = 0; c < 4; ++c) {
      const BitVec cw = code.encode(rng.bits(code.info_len()));
      const auto llr = bpsk_llrs(cw, sigma2, rng);
      const auto res = ws.decode(code, llr, 50);
      for (int i = 0; i < code.n_bits(); ++i) err += res.bits[i] ^ cw[i];
      tot += code.n_bits();
    }
    bers.push_back(static_cast<double>(err) / tot);
  }
  int inversions = 0;
  for (std::size_t i = 0; i + 1 < bers.size(); ++i)
    if (bers[i + 1] > bers[i] + 1e-6) ++inversions;
  CHECK(inversions <= 1);
  CHECK(bers.back() == 0.0);
}

TEST_CASE("rate 4/5 waterfall: raw errors above 1e-2 fully corrected") {
  auto code = dvbs2_code({4, 5});
  BpWorkspace ws;
  Rng rng(22);
  const double snr = 4.6;  // raw BPSK BER ~1.2e-2 here
  const double sigma2 = std::pow(10.0, -snr / 10.0);
  long pre = 0, post = 0, tot = 0;
  for (int c = 0; c < 20; ++c) {
    const BitVec cw = code.encode(rng.bits(code.info_len()));
    const auto llr = bpsk_llrs(cw, sigma2, rng);
    for (int i = 0; i < code.n_bits(); ++i) pre += (llr[i] < 0.0f ? 1 : 0) ^ cw[i];
    const auto res = ws.decode(code, llr, 50);
    for (int i = 0; i < code.n_bits(); ++i) post += res.bits[i] ^ cw[i];
    tot += code.n_bits();
  }
  CHECK(static_cast<double>(pre) / tot > 1e-2);
  CHECK(post == 0);
}
