#pragma once

// Brute-force reference implementations used only by the tests.  These stay
// deliberately independent of the library's enumeration code paths: sequence
// sets are materialized by exhaustive recursion and ranks are positions in
// the sorted list.

#include <gmpxx.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "pas/constellation.hpp"

namespace oracle {

using Seq = std::vector<std::uint8_t>;

// every length-n level-index sequence with sum of levels^2 <= e_max,
// in lexicographic order
inline std::vector<Seq> bounded_energy_sequences(int n, const pas::AmplitudeAlphabet& alpha,
                                                 long e_max) {
  std::vector<Seq> out;
  Seq cur(n);
  auto rec = [&](auto&& self, int pos, long energy) -> void {
    if (pos == n) {
      out.push_back(cur);
      return;
    }
    for (int j = 0; j < alpha.size(); ++j) {
      const long lv = alpha.levels[j];
      const long e2 = energy + lv * lv;
      if (e2 + (n - pos - 1) > e_max) continue;  // cheapest completion is all ones
      cur[pos] = static_cast<std::uint8_t>(j);
      self(self, pos + 1, e2);
    }
  };
  rec(rec, 0, 0);
  return out;
}

// every permutation of the multiset given by counts, in lexicographic order
inline std::vector<Seq> multiset_permutations(const std::vector<int>& counts) {
  Seq sorted;
  for (std::size_t j = 0; j < counts.size(); ++j)
    sorted.insert(sorted.end(), counts[j], static_cast<std::uint8_t>(j));
  std::vector<Seq> out;
  do {
    out.push_back(sorted);
  } while (std::next_permutation(sorted.begin(), sorted.end()));
  return out;
}

// multinomial via a chain of binomials: C(n,c1) C(n-c1,c2) ...
inline mpz_class multinomial_binomials(const std::vector<int>& counts) {
  unsigned long rem = 0;
  for (int c : counts) rem += static_cast<unsigned long>(c);
  mpz_class result = 1, b;
  for (int c : counts) {
    mpz_bin_uiui(b.get_mpz_t(), rem, static_cast<unsigned long>(c));
    result *= b;
    rem -= static_cast<unsigned long>(c);
  }
  return result;
}

// Gauss-Hermite nodes/weights for integrals of f(t) exp(-t^2); Newton
// iteration on the Hermite recurrence.
inline void gauss_hermite(int m, std::vector<double>& x, std::vector<double>& w) {
  x.assign(m, 0.0);
  w.assign(m, 0.0);
  const double pim4 = 0.7511255444649425;  // pi^(-1/4)
  double z = 0.0;
  for (int i = 0; i < (m + 1) / 2; ++i) {
    if (i == 0)
      z = std::sqrt(2.0 * m + 1.0) - 1.85575 * std::pow(2.0 * m + 1.0, -0.16667);
    else if (i == 1)
      z -= 1.14 * std::pow(m, 0.426) / z;
    else if (i == 2)
      z = 1.86 * z - 0.86 * x[0];
    else if (i == 3)
      z = 1.91 * z - 0.91 * x[1];
    else
      z = 2.0 * z - x[i - 2];
    double pp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p1 = pim4, p2 = 0.0;
      for (int j = 0; j < m; ++j) {
        const double p3 = p2;
        p2 = p1;
        p1 = z * std::sqrt(2.0 / (j + 1)) * p2 - std::sqrt(static_cast<double>(j) / (j + 1)) * p3;
      }
      pp = std::sqrt(2.0 * m) * p2;
      const double z1 = z;
      z = z1 - p1 / pp;
      if (std::abs(z - z1) < 1e-14) break;
    }
    x[i] = z;
    x[m - 1 - i] = -z;
    w[i] = 2.0 / (pp * pp);
    w[m - 1 - i] = w[i];
  }
}

// BMD rate (GMI) of uniform product m-ASK over AWGN by Gauss-Hermite
// quadrature, in bits per 4D symbol.  Direct probability computation,
// independent of the library demapper.
inline double gmi_uniform_ask_4d(const pas::AmplitudeAlphabet& alpha, double snr_db,
                                 int quad_points = 96) {
  const int levels = alpha.size();
  const int num_points = 2 * levels;
  std::vector<double> xs(num_points);
  std::vector<int> labels(num_points);
  double energy = 0.0;
  for (int j = 0; j < levels; ++j) energy += alpha.levels[j] * alpha.levels[j];
  energy /= levels;
  const double scale = 1.0 / std::sqrt(2.0 * energy);
  const int amp_bits = alpha.bits_per_amplitude;
  for (int s = 0; s < 2; ++s)
    for (int j = 0; j < levels; ++j) {
      xs[s * levels + j] = (s ? -1.0 : 1.0) * scale * alpha.levels[j];
      labels[s * levels + j] = (s << amp_bits) | static_cast<int>(alpha.label(j));
    }
  const double sigma2_1d = std::pow(10.0, -snr_db / 10.0) / 2.0;

  std::vector<double> qx, qw;
  gauss_hermite(quad_points, qx, qw);
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);

  const int bits_per_1d = amp_bits + 1;
  double sum_cond = 0.0;  // sum over bit levels of H(C_i | Y), 1D
  for (int bit = 0; bit < bits_per_1d; ++bit) {
    double h = 0.0;
    for (int p = 0; p < num_points; ++p) {
      const int c = (labels[p] >> (bits_per_1d - 1 - bit)) & 1;
      double acc = 0.0;
      for (int t = 0; t < quad_points; ++t) {
        const double y = xs[p] + std::sqrt(2.0 * sigma2_1d) * qx[t];
        double num = 0.0, den = 0.0;
        for (int q = 0; q < num_points; ++q) {
          const double d = y - xs[q];
          const double f = std::exp(-d * d / (2.0 * sigma2_1d));
          den += f;
          if (((labels[q] >> (bits_per_1d - 1 - bit)) & 1) == c) num += f;
        }
        acc += qw[t] * (-std::log2(num / den));
      }
      h += acc * inv_sqrt_pi / num_points;
    }
    sum_cond += h;
  }
  return 4.0 * (bits_per_1d - sum_cond);
}

}  // namespace oracle
