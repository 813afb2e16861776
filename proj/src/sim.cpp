#include "pas/sim.hpp"

#include <cmath>
#include <ostream>

#include "pas/errors.hpp"

namespace pas {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::uniform: return "uniform";
    case Scheme::ccdm: return "ccdm";
    case Scheme::ess: return "ess";
  }
  return "?";
}

Scheme parse_scheme(const std::string& name) {
  if (name == "uniform") return Scheme::uniform;
  if (name == "ccdm") return Scheme::ccdm;
  if (name == "ess") return Scheme::ess;
  throw ConfigError("unknown scheme '" + name + "' (uniform, ccdm, ess)");
}

std::vector<double> ExperimentConfig::snr_points() const {
  if (snr_step_db <= 0.0) throw ConfigError("SNR step must be positive");
  std::vector<double> pts;
  for (double s = snr_start_db; s <= snr_stop_db + 1e-9; s += snr_step_db)
    pts.push_back(s);
  if (pts.empty()) throw ConfigError("empty SNR sweep");
  return pts;
}

int derive_dm_input_bits(int n, const Rational& fec_rate, int bits_per_1d,
                         double target_net_rate_4d) {
  const double c = fec_rate.value();
  const double k = n * (target_net_rate_4d - 4.0 * (1.0 - (1.0 - c) * bits_per_1d)) / 4.0;
  const int ki = static_cast<int>(std::lround(k));
  if (std::abs(k - ki) > 1e-6)
    throw ConfigError("net-rate target " + std::to_string(target_net_rate_4d) +
                      " requires non-integer shaper width k=" + std::to_string(k) +
                      " at n=" + std::to_string(n));
  if (ki < 0) throw ConfigError("net-rate target requires negative shaper width");
  return ki;
}

SimSetup build_setup(const ExperimentConfig& config) {
  SimSetup s;
  s.config = config;
  s.alphabet = AmplitudeAlphabet::ask(config.num_levels);
  const int m = 1 + s.alphabet.bits_per_amplitude;

  int k = config.k;
  if (config.scheme == Scheme::uniform) {
    k = config.n * s.alphabet.bits_per_amplitude;
  } else if (k < 0) {
    k = derive_dm_input_bits(config.n, config.fec_rate, m, config.target_net_rate_4d);
  }

  switch (config.scheme) {
    case Scheme::uniform:
      s.dm = std::make_shared<UniformDm>(s.alphabet, config.n);
      break;
    case Scheme::ccdm:
      s.dm = std::make_shared<CcdmCodec>(select_composition(config.n, s.alphabet, k), k);
      break;
    case Scheme::ess: {
      const long emax = config.ess_emax ? *config.ess_emax
                                        : select_emax(config.n, s.alphabet, k);
      s.dm = std::make_shared<EssCodec>(EssTrellis(config.n, s.alphabet, emax), k);
      break;
    }
  }
  s.layout = plan_frame(config.codeword_len, config.fec_rate, s.alphabet, config.n, k);
  s.priors = s.dm->amplitude_distribution();
  s.map = SymbolMap::unit_energy(s.alphabet, s.priors);
  s.h_amplitude = entropy_bits(s.priors);
  if (!config.air_only)
    s.code = std::make_shared<ParityCheck>(dvbs2_code(config.fec_rate));
  return s;
}

namespace {

struct CwStats {
  std::uint64_t pre_err = 0, pre_tot = 0;
  std::uint64_t post_err = 0, post_tot = 0;
  std::uint64_t shape_err = 0, shape_tot = 0;
  BmdAccumulator bmd;
  SnrAccumulator snr;

  void merge(const CwStats& o) {
    pre_err += o.pre_err;
    pre_tot += o.pre_tot;
    post_err += o.post_err;
    post_tot += o.post_tot;
    shape_err += o.shape_err;
    shape_tot += o.shape_tot;
    bmd.merge(o.bmd);
    snr.merge(o.snr);
  }
};

// sent bits per 1D symbol in demapper order (sign, amp label bits)
BitVec symbol_order_bits(const PasFrameLayout& layout, const AmplitudeAlphabet& alpha,
                         const AmpVec& levels, const BitVec& signs) {
  const int m = layout.bits_per_1d;
  const int ab = m - 1;
  BitVec bits(static_cast<std::size_t>(layout.amplitudes_per_codeword) * m);
  for (int s = 0; s < layout.amplitudes_per_codeword; ++s) {
    bits[s * m] = signs[s];
    const unsigned label = alpha.label(levels[s]);
    for (int t = 0; t < ab; ++t) bits[s * m + 1 + t] = (label >> (ab - 1 - t)) & 1u;
  }
  return bits;
}

CwStats run_codeword(const SimSetup& setup, double snr_db, std::uint64_t snr_key, int cw,
                     BpWorkspace* ws) {
  const auto& L = setup.layout;
  const auto& cfg = setup.config;
  CwStats st;
  st.bmd = BmdAccumulator(BitPriors::from(setup.alphabet, setup.priors));

  Rng data_rng = Rng::stream(cfg.seed, snr_key, static_cast<std::uint64_t>(cw), 0);
  Rng noise_rng = Rng::stream(cfg.seed, snr_key, static_cast<std::uint64_t>(cw), 1);
  const double sigma2 = std::pow(10.0, -snr_db / 10.0);

  std::vector<Complex> sent;
  BitVec symbol_bits;  // demapper-order reference bits
  BitVec codeword;
  BitVec source;

  if (cfg.air_only) {
    // amplitudes from the matcher, signs uniform; no FEC framing
    const int n = L.dm_blocklength, k = L.dm_input_bits;
    AmpVec levels(L.amplitudes_per_codeword);
    for (int b = 0; b < L.dm_blocks; ++b) {
      const BitVec bits = data_rng.bits(k);
      setup.dm->encode(bits, std::span<std::uint8_t>(levels).subspan(
                                 static_cast<std::size_t>(b) * n, n));
    }
    const BitVec signs = data_rng.bits(L.amplitudes_per_codeword);
    symbol_bits = symbol_order_bits(L, setup.alphabet, levels, signs);
    sent.resize(L.symbols_2d_per_codeword());
    for (int t = 0; t < L.symbols_2d_per_codeword(); ++t)
      sent[t] = Complex(setup.map.coordinate(signs[2 * t], levels[2 * t]),
                        setup.map.coordinate(signs[2 * t + 1], levels[2 * t + 1]));
  } else {
    source = data_rng.bits(L.source_bits_per_codeword);
    const EncodedFrame f = pas_encode(L, *setup.dm, *setup.code, setup.map, source);
    BitVec signs(L.amplitudes_per_codeword);
    for (int s = 0; s < L.amplitudes_per_codeword; ++s)
      signs[s] = f.codeword[L.sign_bit_position(s)];
    symbol_bits = symbol_order_bits(L, setup.alphabet, f.amplitude_levels, signs);
    sent = f.symbols;
    codeword = f.codeword;
  }

  std::vector<Complex> received = sent;
  if (sigma2 > 0.0) add_noise(received, sigma2, noise_rng);
  for (std::size_t i = 0; i < sent.size(); ++i) st.snr.add(sent[i], received[i]);

  // per-codeword demap stays serial; parallelism lives at the codeword level
  const std::vector<float> llrs = demap(received, snr_db, setup.map, setup.priors);
  st.bmd.add(llrs, symbol_bits);
  for (std::size_t i = 0; i < llrs.size(); ++i)
    st.pre_err += (llrs[i] < 0.0f ? 1u : 0u) ^ symbol_bits[i];
  st.pre_tot += llrs.size();

  if (!cfg.air_only) {
    const std::vector<float> cw_llrs = llrs_to_codeword_order(L, llrs);
    const PasBlockResult res = pas_decode(L, *setup.dm, *setup.code, cw_llrs, 50, ws);
    const int info_len = setup.code->info_len();
    for (int i = 0; i < info_len; ++i)
      st.post_err += res.info_bits[i] ^ codeword[i];
    st.post_tot += info_len;
    for (int i = 0; i < L.source_bits_per_codeword; ++i)
      st.shape_err += res.source_bits[i] ^ source[i];
    st.shape_tot += L.source_bits_per_codeword;
  }
  return st;
}

}  // namespace

SimRecord simulate_point(const SimSetup& setup, double snr_db, Exec exec) {
  const int cw_count = setup.config.codewords_per_point;
  const std::uint64_t snr_key = static_cast<std::uint64_t>(std::llround(snr_db * 1000.0));
  std::vector<CwStats> stats(cw_count);

  if (exec == Exec::openmp) {
#pragma omp parallel
    {
      BpWorkspace ws;
#pragma omp for schedule(dynamic)
      for (int cw = 0; cw < cw_count; ++cw)
        stats[cw] = run_codeword(setup, snr_db, snr_key, cw, &ws);
    }
  } else {
    BpWorkspace ws;
    for (int cw = 0; cw < cw_count; ++cw)
      stats[cw] = run_codeword(setup, snr_db, snr_key, cw, &ws);
  }

  CwStats total;
  for (const CwStats& st : stats) total.merge(st);

  SimRecord rec;
  rec.snr_db = snr_db;
  rec.blocks = cw_count;
  rec.ber_pre_fec = total.pre_tot ? static_cast<double>(total.pre_err) / total.pre_tot : 0.0;
  rec.ber_post_fec =
      total.post_tot ? static_cast<double>(total.post_err) / total.post_tot : 0.0;
  rec.ber_post_shaping =
      total.shape_tot ? static_cast<double>(total.shape_err) / total.shape_tot : 0.0;
  rec.bmd_rate_4d = total.bmd.bmd_rate_4d();
  rec.rate_loss_4d =
      4.0 * rate_loss(setup.h_amplitude, setup.layout.dm_input_bits, setup.layout.dm_blocklength);
  rec.air_n_4d = rec.bmd_rate_4d - rec.rate_loss_4d;
  rec.effective_snr_db = total.snr.snr_db();
  return rec;
}

std::vector<SimRecord> simulate_sweep(const SimSetup& setup, Exec exec,
                                      std::ostream* progress) {
  set_threads(setup.config.threads);
  const auto points = setup.config.snr_points();
  std::vector<SimRecord> records;
  records.reserve(points.size());
  for (std::size_t i = 0; i < points.size(); ++i) {
    records.push_back(simulate_point(setup, points[i], exec));
    if (progress)
      *progress << scheme_name(setup.config.scheme) << " snr=" << points[i] << " dB ("
                << (i + 1) << "/" << points.size() << ")\n";
  }
  return records;
}

void write_csv(std::ostream& out, const std::vector<SimRecord>& records) {
  out << sim_csv_header() << "\n";
  for (const SimRecord& r : records) out << sim_csv_row(r) << "\n";
}

}  // namespace pas
