#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "pas/ccdm.hpp"
#include "pas/channel.hpp"
#include "pas/ess.hpp"
#include "pas/frame.hpp"
#include "pas/metrics.hpp"

namespace pas {

enum class Scheme { uniform, ccdm, ess };

std::string scheme_name(Scheme s);
Scheme parse_scheme(const std::string& name);

struct ExperimentConfig {
  Scheme scheme = Scheme::ess;
  int n = 200;                      // shaper blocklength
  int k = -1;                       // -1: derive from the net-rate target
  Rational fec_rate{4, 5};
  double target_net_rate_4d = 9.0;
  int codeword_len = 64800;
  int num_levels = 4;               // amplitude levels per dimension
  double snr_start_db = 8.0;
  double snr_stop_db = 22.0;
  double snr_step_db = 0.5;
  int codewords_per_point = 20;
  std::uint64_t seed = 1;
  int threads = 0;                  // 0: OpenMP default
  bool air_only = false;            // skip FEC decoding, AIR metrics only
  std::optional<long> ess_emax;     // override the derived energy bound

  std::vector<double> snr_points() const;
};

// Everything that is built once per sweep: shaper, code, layout, priors.
struct SimSetup {
  ExperimentConfig config;
  AmplitudeAlphabet alphabet;
  std::shared_ptr<const DistributionMatcher> dm;
  std::shared_ptr<const ParityCheck> code;   // null in air_only mode
  PasFrameLayout layout;
  AmplitudeDistribution priors;              // matcher-induced distribution
  SymbolMap map;
  double h_amplitude = 0.0;                  // H(A) of priors, bits
};

SimSetup build_setup(const ExperimentConfig& config);

// Derives k from the net-rate identity 4k/n + 4(1-(1-c)m) = target.
int derive_dm_input_bits(int n, const Rational& fec_rate, int bits_per_1d,
                         double target_net_rate_4d);

// One sweep point; codewords are processed independently with seeds derived
// from (seed, round(snr*1000), codeword), so results do not depend on the
// execution policy or thread count.
SimRecord simulate_point(const SimSetup& setup, double snr_db, Exec exec);

std::vector<SimRecord> simulate_sweep(const SimSetup& setup, Exec exec,
                                      std::ostream* progress = nullptr);

void write_csv(std::ostream& out, const std::vector<SimRecord>& records);

}  // namespace pas
