// Serial vs OpenMP timings for the batch kernels. Also checks that both
// paths return identical vectors; a mismatch exits 1.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcmkit/completion.hpp"
#include "pcmkit/builtin.hpp"
#include "pcmkit/generator.hpp"
#include "pcmkit/indices.hpp"
#include "pcmkit/kernels.hpp"
#include "pcmkit/random_index.hpp"

using namespace pcmkit;

namespace {

template <class F>
double best_of(int reps, F&& f) {
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

bool mismatch = false;

void row(const char* name, double serial, double parallel, bool same) {
  std::printf("%-28s %10.4f %10.4f %8.2fx  %s\n", name, serial, parallel, serial / parallel,
              same ? "identical" : "MISMATCH");
  mismatch |= !same;
}

}  // namespace

int main(int argc, char** argv) {
  const std::size_t count = argc > 1 ? std::strtoul(argv[1], nullptr, 10) : 20000;
  const int reps = 3;
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif
  std::printf("%-28s %10s %10s %9s\n", "kernel", "serial s", "parallel s", "speedup");

  GeneratorSpec spec;
  spec.n = 8;
  spec.seed = 1;
  const auto batch = generate(spec, count);
  for (IndexKind kind : {IndexKind::ci, IndexKind::gci, IndexKind::im}) {
    const auto f = index_function(kind);
    std::vector<double> a, b;
    const double ts = best_of(reps, [&] { a = kernels::score_batch_serial(batch, f); });
    const double tp = best_of(reps, [&] { b = kernels::score_batch_parallel(batch, f); });
    row(("score_batch " + std::string(to_string(kind)) + " n=8").c_str(), ts, tp, a == b);
  }

  {
    RandomIndexEntry a, b;
    const double ts = best_of(1, [&] { a = simulate_random_index(7, count, 5, Exec::serial); });
    const double tp = best_of(1, [&] { b = simulate_random_index(7, count, 5, Exec::parallel); });
    row("random index n=7", ts, tp, a.ri == b.ri);
  }

  {
    const auto inc = builtin::incomplete4();
    const auto f = index_function(IndexKind::ci);
    OracleGrid g;
    g.resolution = 301;
    g.refinements = 1;
    CompletionResult a, b;
    const double ts = best_of(1, [&] { a = grid_oracle(inc, f, g, Exec::serial); });
    const double tp = best_of(1, [&] { b = grid_oracle(inc, f, g, Exec::parallel); });
    row("grid oracle 301^2", ts, tp, a.filled == b.filled);
  }
  return mismatch ? 1 : 0;
}
