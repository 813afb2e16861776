// Batch front-end: file-based shaping codecs, frame planning, and AWGN
// coded-modulation sweeps.  Exit codes: 0 ok, 1 data error, 2 config error.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "json.hpp"
#include "pas/errors.hpp"
#include "pas/sim.hpp"

using namespace pas;
using nlohmann::json;

namespace {

Rational parse_rate(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos)
    throw ConfigError("FEC rate must be written as a fraction, e.g. 4/5");
  return {std::stol(text.substr(0, slash)), std::stol(text.substr(slash + 1))};
}

std::vector<std::uint8_t> read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open input file " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot open output file " + path);
  out.write(reinterpret_cast<const char*>(data.data()),
            static_cast<std::streamsize>(data.size()));
}

struct DmArgs {
  std::string mode;  // encode | decode
  std::string scheme = "ess";
  int n = 200;
  int k = -1;
  int levels = 4;
  std::optional<long> emax;
  std::string in_path, out_path;
};

std::shared_ptr<const DistributionMatcher> build_dm(const DmArgs& a,
                                                    const AmplitudeAlphabet& alphabet) {
  const Scheme scheme = parse_scheme(a.scheme);
  if (scheme == Scheme::uniform) return std::make_shared<UniformDm>(alphabet, a.n);
  if (a.k < 0) throw ConfigError("--k is required for shaped schemes");
  if (scheme == Scheme::ccdm)
    return std::make_shared<CcdmCodec>(select_composition(a.n, alphabet, a.k), a.k);
  const long emax = a.emax ? *a.emax : select_emax(a.n, alphabet, a.k);
  return std::make_shared<EssCodec>(EssTrellis(a.n, alphabet, emax), a.k);
}

json dm_sidecar(const DmArgs& a, const DistributionMatcher& dm, std::size_t blocks) {
  json meta{{"scheme", a.scheme},
            {"n", dm.block_len()},
            {"k", dm.input_bits()},
            {"blocks", blocks},
            {"alphabet_levels", dm.alphabet().levels}};
  if (const auto* ess = dynamic_cast<const EssCodec*>(&dm))
    meta["e_max"] = ess->trellis().energy_limit();
  if (const auto* ccdm = dynamic_cast<const CcdmCodec*>(&dm))
    meta["composition"] = ccdm->composition().counts;
  return meta;
}

int run_dm(const DmArgs& a) {
  const auto alphabet = AmplitudeAlphabet::ask(a.levels);
  const auto dm = build_dm(a, alphabet);
  const int n = dm->block_len(), k = dm->input_bits();
  const auto data = read_file(a.in_path);
  int failures = 0;

  if (a.mode == "encode") {
    const std::size_t total_bits = data.size() * 8;
    const std::size_t blocks = k > 0 ? total_bits / k : 0;
    if (blocks == 0) throw DataError("input too small: need at least " +
                                     std::to_string((k + 7) / 8) + " bytes (one block)");
    const std::size_t expect = (blocks * k + 7) / 8;
    if (data.size() != expect)
      throw DataError("input size " + std::to_string(data.size()) + " bytes, expected " +
                      std::to_string(expect) + " for " + std::to_string(blocks) + " block(s) of " +
                      std::to_string(k) + " bits");
    const BitVec bits = unpack_bits(data, blocks * k);
    for (std::size_t i = blocks * k; i < total_bits; ++i)
      if ((data[i / 8] >> (7 - i % 8)) & 1u)
        throw DataError("nonzero padding bits after the last whole block");
    std::vector<std::uint8_t> out(blocks * n);
    for (std::size_t b = 0; b < blocks; ++b)
      dm->encode(std::span<const std::uint8_t>(bits).subspan(b * k, k),
                 std::span<std::uint8_t>(out).subspan(b * n, n));
    write_file(a.out_path, out);
    std::ofstream(a.out_path + ".json") << dm_sidecar(a, *dm, blocks).dump(2) << "\n";
    return 0;
  }

  // decode
  if (data.size() % n != 0)
    throw DataError("input size " + std::to_string(data.size()) +
                    " bytes is not a whole number of " + std::to_string(n) + "-amplitude blocks");
  const std::size_t blocks = data.size() / n;
  if (blocks == 0) throw DataError("empty input");
  for (std::size_t i = 0; i < data.size(); ++i)
    if (data[i] >= static_cast<std::uint8_t>(alphabet.size()))
      throw DataError("byte " + std::to_string(i) + " (block " + std::to_string(i / n) +
                      "): level index " + std::to_string(data[i]) + " outside the alphabet");
  BitVec bits(blocks * k);
  for (std::size_t b = 0; b < blocks; ++b) {
    const auto levels = std::span<const std::uint8_t>(data).subspan(b * n, n);
    auto out = std::span<std::uint8_t>(bits).subspan(b * k, k);
    try {
      dm->decode(levels, out);
    } catch (const DmError& e) {
      std::cerr << "block " << b << ": " << e.what() << "\n";
      dm->decode_clipped(levels, out);
      ++failures;
    }
  }
  write_file(a.out_path, pack_bits(bits));
  std::ofstream(a.out_path + ".json") << dm_sidecar(a, *dm, blocks).dump(2) << "\n";
  if (failures) {
    std::cerr << failures << " of " << blocks << " block(s) failed to invert\n";
    return 1;
  }
  return 0;
}

void apply_config_file(ExperimentConfig& cfg, std::string& out_path, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ConfigError("config file " + path + ": " + e.what());
  }
  if (j.contains("scheme")) cfg.scheme = parse_scheme(j["scheme"].get<std::string>());
  if (j.contains("n")) cfg.n = j["n"].get<int>();
  if (j.contains("k")) cfg.k = j["k"].get<int>();
  if (j.contains("fec_rate")) cfg.fec_rate = parse_rate(j["fec_rate"].get<std::string>());
  if (j.contains("target_net_rate_4d"))
    cfg.target_net_rate_4d = j["target_net_rate_4d"].get<double>();
  if (j.contains("codeword_len")) cfg.codeword_len = j["codeword_len"].get<int>();
  if (j.contains("num_levels")) cfg.num_levels = j["num_levels"].get<int>();
  if (j.contains("snr_start_db")) cfg.snr_start_db = j["snr_start_db"].get<double>();
  if (j.contains("snr_stop_db")) cfg.snr_stop_db = j["snr_stop_db"].get<double>();
  if (j.contains("snr_step_db")) cfg.snr_step_db = j["snr_step_db"].get<double>();
  if (j.contains("codewords_per_point"))
    cfg.codewords_per_point = j["codewords_per_point"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<int>();
  if (j.contains("air_only")) cfg.air_only = j["air_only"].get<bool>();
  if (j.contains("ess_emax")) cfg.ess_emax = j["ess_emax"].get<long>();
  if (j.contains("out")) out_path = j["out"].get<std::string>();
}

void print_plan(const SimSetup& setup) {
  const auto& L = setup.layout;
  std::cout << "scheme                  " << scheme_name(setup.config.scheme) << "\n"
            << "codeword_len            " << L.codeword_len << "\n"
            << "fec_rate                " << L.fec_rate.num << "/" << L.fec_rate.den << "\n"
            << "bits_per_1d             " << L.bits_per_1d << "\n"
            << "dm_blocklength          " << L.dm_blocklength << "\n"
            << "dm_input_bits           " << L.dm_input_bits << "\n"
            << "dm_blocks_per_codeword  " << L.dm_blocks << "\n"
            << "amplitudes_per_codeword " << L.amplitudes_per_codeword << "\n"
            << "symbols_2d_per_codeword " << L.symbols_2d_per_codeword() << "\n"
            << "amp_label_bits          " << L.amp_label_bits << "\n"
            << "uniform_sign_info_bits  " << L.sign_info_bits << "\n"
            << "parity_bits             " << L.parity_bits << "\n"
            << "source_bits_per_codeword " << L.source_bits_per_codeword << "\n";
  if (const auto* ess = dynamic_cast<const EssCodec*>(setup.dm.get()))
    std::cout << "ess_e_max               " << ess->trellis().energy_limit() << "\n";
  if (const auto* ccdm = dynamic_cast<const CcdmCodec*>(setup.dm.get())) {
    std::cout << "ccdm_composition       ";
    for (int c : ccdm->composition().counts) std::cout << " " << c;
    std::cout << "\n";
  }
  const auto [num, den] = L.net_rate_exact();
  std::cout << "h_amplitude_bits        " << setup.h_amplitude << "\n"
            << "rate_loss_4d            "
            << 4.0 * (setup.h_amplitude - static_cast<double>(L.dm_input_bits) / L.dm_blocklength)
            << "\n"
            << "net_rate_4d             " << num << "/" << den << " = " << L.net_rate_4d()
            << " bit/4D-sym\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"probabilistic amplitude shaping toolkit"};
  app.require_subcommand(1);

  DmArgs dm_args;
  auto* dm_cmd = app.add_subcommand("dm", "encode or decode shaping blocks on files");
  dm_cmd->add_option("mode", dm_args.mode, "encode or decode")
      ->check(CLI::IsMember({"encode", "decode"}))
      ->required();
  dm_cmd->add_option("--scheme", dm_args.scheme, "uniform, ccdm or ess");
  dm_cmd->add_option("--n", dm_args.n, "shaper blocklength (amplitudes)");
  dm_cmd->add_option("--k", dm_args.k, "input bits per block");
  dm_cmd->add_option("--levels", dm_args.levels, "amplitude levels per dimension");
  long emax_flag = -1;
  dm_cmd->add_option("--emax", emax_flag, "energy bound override (ess)");
  dm_cmd->add_option("--in", dm_args.in_path, "input file")->required();
  dm_cmd->add_option("--out", dm_args.out_path, "output file")->required();

  ExperimentConfig cfg;
  std::string config_path, out_path = "sweep.csv";
  bool serial = false;
  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (flags win)");
    cmd->add_option_function<std::string>(
        "--scheme", [&](const std::string& s) { cfg.scheme = parse_scheme(s); });
    cmd->add_option("--n", cfg.n, "shaper blocklength");
    cmd->add_option("--k", cfg.k, "shaper input bits (default: from net-rate target)");
    cmd->add_option_function<std::string>(
        "--fec-rate", [&](const std::string& s) { cfg.fec_rate = parse_rate(s); });
    cmd->add_option("--target-net-rate", cfg.target_net_rate_4d, "bits per 4D symbol");
    cmd->add_option("--codeword-len", cfg.codeword_len);
    cmd->add_option("--levels", cfg.num_levels, "amplitude levels per dimension");
  };
  auto* plan_cmd = app.add_subcommand("frame-plan", "print the codeword bit-budget table");
  add_common(plan_cmd);

  auto* sim_cmd = app.add_subcommand("sim", "run an AWGN sweep and write CSV records");
  add_common(sim_cmd);
  sim_cmd->add_option("--snr-start", cfg.snr_start_db, "sweep start (dB)");
  sim_cmd->add_option("--snr-stop", cfg.snr_stop_db, "sweep stop (dB)");
  sim_cmd->add_option("--snr-step", cfg.snr_step_db, "sweep step (dB)");
  sim_cmd->add_option("--codewords", cfg.codewords_per_point, "codewords per sweep point");
  sim_cmd->add_option("--seed", cfg.seed);
  sim_cmd->add_option("--threads", cfg.threads, "worker threads (0 = OpenMP default)");
  sim_cmd->add_flag("--air-only", cfg.air_only, "skip FEC decoding, AIR metrics only");
  sim_cmd->add_flag("--serial", serial, "run the serial reference path");
  sim_cmd->add_option("--out", out_path, "CSV output path, '-' for stdout");

  // apply the config file before flag values: reparse after loading
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (dm_cmd->parsed()) {
      if (emax_flag >= 0) dm_args.emax = emax_flag;
      return run_dm(dm_args);
    }
    if (!config_path.empty()) {
      // config first, then flags override: parse flags again on top
      ExperimentConfig fresh;
      cfg = fresh;
      apply_config_file(cfg, out_path, config_path);
      app.clear();
      app.parse(argc, argv);
    }
    if (plan_cmd->parsed()) {
      ExperimentConfig plan_cfg = cfg;
      plan_cfg.air_only = true;  // planning never needs the code graph
      print_plan(build_setup(plan_cfg));
      return 0;
    }
    if (sim_cmd->parsed()) {
      const auto setup = build_setup(cfg);
      const auto records =
          simulate_sweep(setup, serial ? Exec::serial : Exec::openmp, &std::cerr);
      if (out_path == "-") {
        write_csv(std::cout, records);
      } else {
        std::ofstream out(out_path);
        if (!out) throw DataError("cannot open output file " + out_path);
        write_csv(out, records);
        std::cerr << "wrote " << records.size() << " records to " << out_path << "\n";
      }
      return 0;
    }
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  } catch (const DmError& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return 1;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const CLI::ParseError& e) {
    std::cerr << "config error: flag parsing failed after config load\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
