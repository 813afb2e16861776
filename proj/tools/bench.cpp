// Serial-vs-OpenMP benchmark for the data-parallel kernels: batch soft
// demapping, batch LDPC decoding, shaper batch encoding, and one full sweep
// point.  Prints wall times and the speedup of the OpenMP path.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "CLI11.hpp"
#include "pas/sim.hpp"

using namespace pas;
using Clock = std::chrono::steady_clock;

namespace {

double timed(const std::function<void()>& fn) {
  const auto t0 = Clock::now();
  fn();
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

void report(const std::string& name, double serial_s, double openmp_s) {
  std::printf("%-28s serial %8.3f s   openmp %8.3f s   speedup %.2fx\n", name.c_str(),
              serial_s, openmp_s, serial_s / openmp_s);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int symbols = 2'000'000;
  int codewords = 8;
  int dm_blocks = 2000;
  int threads = 0;
  app.add_option("--symbols", symbols, "2D symbols for the demap benchmark");
  app.add_option("--codewords", codewords, "codewords for the BP benchmark");
  app.add_option("--dm-blocks", dm_blocks, "blocks for the shaper benchmark");
  app.add_option("--threads", threads, "worker threads (0 = OpenMP default)");
  CLI11_PARSE(app, argc, argv);
  set_threads(threads);
  std::printf("threads available: %d\n\n", max_threads());

  const auto a4 = AmplitudeAlphabet::ask(4);
  const auto dist = mb_distribution(a4, lambda_for_entropy(a4, 1.87));
  const auto map = SymbolMap::unit_energy(a4, dist);

  {  // demap
    Rng rng(1);
    std::vector<Complex> x(symbols);
    for (auto& s : x)
      s = Complex(map.coordinate(rng.next() & 1, rng.uniform_int(4)),
                  map.coordinate(rng.next() & 1, rng.uniform_int(4)));
    const auto y = transmit(x, {14.0, 2});
    std::vector<float> sink;
    const double ts = timed([&] { sink = demap(y, 14.0, map, dist, Exec::serial); });
    const double tp = timed([&] { sink = demap(y, 14.0, map, dist, Exec::openmp); });
    report("demap " + std::to_string(symbols) + " syms", ts, tp);
  }

  {  // batch BP decode near the waterfall, as the sweep engine runs it
    ExperimentConfig cfg;
    cfg.scheme = Scheme::ess;
    cfg.n = 200;
    cfg.fec_rate = {4, 5};
    cfg.codewords_per_point = codewords;
    cfg.seed = 3;
    const auto setup = build_setup(cfg);
    SimRecord sink;
    const double ts = timed([&] { sink = simulate_point(setup, 14.3, Exec::serial); });
    const double tp = timed([&] { sink = simulate_point(setup, 14.3, Exec::openmp); });
    report("sweep point " + std::to_string(codewords) + " codewords", ts, tp);
  }

  {  // shaper encode batches
    EssCodec ess(EssTrellis(200, a4, select_emax(200, a4, 370)), 370);
    CcdmCodec ccdm(select_composition(200, a4, 370), 370);
    for (const DistributionMatcher* dm : {(const DistributionMatcher*)&ess,
                                          (const DistributionMatcher*)&ccdm}) {
      std::vector<BitVec> inputs(dm_blocks);
      Rng rng(4);
      for (auto& b : inputs) b = rng.bits(dm->input_bits());
      std::vector<AmpVec> outputs(dm_blocks, AmpVec(dm->block_len()));
      auto run = [&](Exec exec) {
        if (exec == Exec::openmp) {
#pragma omp parallel for schedule(static)
          for (int i = 0; i < dm_blocks; ++i) dm->encode(inputs[i], outputs[i]);
        } else {
          for (int i = 0; i < dm_blocks; ++i) dm->encode(inputs[i], outputs[i]);
        }
      };
      const double ts = timed([&] { run(Exec::serial); });
      const double tp = timed([&] { run(Exec::openmp); });
      report((dm == &ess ? "ess encode " : "ccdm encode ") + std::to_string(dm_blocks) +
                 " blocks",
             ts, tp);
    }
  }
  return 0;
}
