// Timing comparison of the OpenMP kernel-matrix build / composition against
// the serial reference loops.

#include <chrono>
#include <cstdio>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "halfline/slicing.hpp"

using namespace halfline;

namespace {

template <typename F>
double time_ms(F&& f, int reps) {
  // warm-up run, then best of reps
  f();
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const auto t1 = std::chrono::steady_clock::now();
    best = std::min(best, std::chrono::duration<double, std::milli>(t1 - t0).count());
  }
  return best;
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run the same loops\n");
#endif
  const SystemSpec spec(1.0, 1.0, 2.0, Potential::harmonic(1.0));
  std::printf("%-8s %6s %12s %12s %8s\n", "stage", "n", "serial/ms", "parallel/ms",
              "speedup");
  for (int panels : {4, 8, 16}) {
    QuadratureSpec quad;
    quad.panels = panels;
    quad.x_max = 12.0;
    const int n = quad.total_nodes();

    const double ts = time_ms([&] { build_kernel_matrix_serial(spec, quad, 0.1); }, 3);
    const double tp = time_ms([&] { build_kernel_matrix(spec, quad, 0.1); }, 3);
    std::printf("%-8s %6d %12.2f %12.2f %8.2f\n", "build", n, ts, tp, ts / tp);

    const auto k = build_kernel_matrix(spec, quad, 0.1);
    const double cs = time_ms([&] { compose_serial(k, k); }, 3);
    const double cp = time_ms([&] { compose(k, k); }, 3);
    std::printf("%-8s %6d %12.2f %12.2f %8.2f\n", "compose", n, cs, cp, cs / cp);
  }
  return 0;
}
