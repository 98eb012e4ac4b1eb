// Compares the serial reference path of the theorem verification with the
// OpenMP fan-out over families and pairs.  The per-family solves dominate
// the runtime and are independent, so the workload scales with the thread
// count until the largest family serializes the tail.
#include <cstdio>
#include <cstdlib>

#include "sdual/greens.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace sdual;

namespace {

double run_once(GroupKind g, Int size, int threads) {
  clear_green_caches();  // cold solves every time
  VerifyReport r = verify_theorems(g, size, threads);
  if (!r.ok()) {
    std::fprintf(stderr, "verification failed, benchmark aborted\n");
    std::exit(2);
  }
  return r.seconds;
}

}  // namespace

int main(int argc, char** argv) {
  Int sp_size = argc > 1 ? std::atoll(argv[1]) : 12;
  Int so_size = argc > 2 ? std::atoll(argv[2]) : 9;
  int max_threads = 1;
#ifdef _OPENMP
  max_threads = omp_get_max_threads();
#endif
  if (const char* s = std::getenv("SPRINGER_DUAL_THREADS")) {
    int t = std::atoi(s);
    if (t >= 1) max_threads = t;
  }

  std::printf("workload: Sp up to %lld, SO up to %lld\n",
              static_cast<long long>(sp_size), static_cast<long long>(so_size));
  std::printf("%-10s %12s %12s %10s\n", "threads", "Sp [s]", "SO [s]",
              "speedup");
  double base = 0;
  for (int t = 1; t <= max_threads; t *= 2) {
    double sp = run_once(GroupKind::Sp, sp_size, t);
    double so = run_once(GroupKind::SO, so_size, t);
    if (t == 1) base = sp + so;
    std::printf("%-10d %12.4f %12.4f %9.2fx\n", t, sp, so,
                base / (sp + so));
  }
  return 0;
}
