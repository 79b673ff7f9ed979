// Times the parallel kernels against their serial references on generated
// graphs, and insists the answers agree.
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "cycledepth/cycles.hpp"
#include "cycledepth/harness.hpp"
#include "cycledepth/treewidth.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace cycledepth;
using clock_type = std::chrono::steady_clock;

double time_ms(const std::function<void()>& f) {
  const auto t0 = clock_type::now();
  f();
  const auto t1 = clock_type::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count();
}

void row(const std::string& name, int n, double serial_ms, double parallel_ms,
         bool agree) {
  std::cout << std::left << std::setw(22) << name << std::right << std::setw(4) << n
            << std::setw(12) << std::fixed << std::setprecision(1) << serial_ms
            << std::setw(12) << parallel_ms << std::setw(9) << std::setprecision(2)
            << (parallel_ms > 0 ? serial_ms / parallel_ms : 0.0)
            << (agree ? "" : "   MISMATCH") << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial-vs-parallel kernel timings"};
  int tw_n = 16;
  int cycle_n = 17;
  std::uint64_t seed = 1;
  int threads = 0;
  double density = 0.25;
  app.add_option("--tw-n", tw_n, "vertex count for the treewidth kernel");
  app.add_option("--cycle-n", cycle_n, "vertex count for the longest-cycle kernel");
  app.add_option("--seed", seed, "generator seed");
  app.add_option("--threads", threads, "thread count (0 = all available)");
  app.add_option("--edge-density", density, "chord density for the generator");
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  const int used = threads > 0 ? threads : omp_get_max_threads();
#else
  const int used = 1;
  std::cout << "(built without OpenMP; parallel paths run serially)\n";
#endif
  std::cout << "threads: " << used << "\n\n";
  std::cout << std::left << std::setw(22) << "kernel" << std::right << std::setw(4) << "n"
            << std::setw(12) << "serial ms" << std::setw(12) << "parallel ms"
            << std::setw(9) << "speedup" << "\n";

  GeneratorSpec spec;
  spec.model = GeneratorModel::random_2connected;
  spec.seed = seed;
  spec.edge_density = density;

  {
    spec.n = tw_n;
    Graph g = generate(spec);
    int serial_tw = 0, parallel_tw = 0;
    const double s = time_ms([&]() { serial_tw = treewidth_exact_serial(g, tw_n); });
    const double p =
        time_ms([&]() { parallel_tw = treewidth_exact_parallel(g, tw_n, used); });
    row("treewidth", tw_n, s, p, serial_tw == parallel_tw);
  }

  {
    spec.n = cycle_n;
    Graph g = generate(spec);
    CycleOptions serial_opts, parallel_opts;
    serial_opts.dp_limit = parallel_opts.dp_limit = cycle_n;
    serial_opts.threads = 1;
    parallel_opts.threads = used;
    std::optional<Cycle> a, b;
    const double s = time_ms([&]() { a = longest_cycle(g, serial_opts); });
    const double p = time_ms([&]() { b = longest_cycle(g, parallel_opts); });
    const bool agree = a.has_value() == b.has_value() &&
                       (!a || a->vertices == b->vertices);
    row("longest cycle", cycle_n, s, p, agree);
  }

  return 0;
}
