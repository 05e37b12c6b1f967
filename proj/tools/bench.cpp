// Compares the serial reference implementations against the OpenMP kernels:
// the monochromatic-triangle scan and the constraint-Ramsey refutation.
#include <chrono>
#include <cstdio>
#include <cmath>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcspan/graph_core.hpp"
#include "pcspan/instances.hpp"
#include "pcspan/ramsey.hpp"

using namespace pcspan;
using clk = std::chrono::steady_clock;

namespace {

double ms_since(clk::time_point t0) {
  return std::chrono::duration<double, std::milli>(clk::now() - t0).count();
}

void bench_scan(int n, int reps) {
  EdgeColoredGraph g = random_mono_c3_free(n, std::max(2, 2 * static_cast<int>(std::sqrt(n))), 42);
  set_threads(1);
  auto t0 = clk::now();
  for (int r = 0; r < reps; ++r) {
    auto hit = find_monochromatic_triangle_serial(g);
    if (hit) std::printf("unexpected triangle\n");
  }
  double serial = ms_since(t0) / reps;
  int tmax = 1;
#ifdef _OPENMP
  tmax = omp_get_max_threads();
#endif
  set_threads(tmax);
  t0 = clk::now();
  for (int r = 0; r < reps; ++r) {
    auto hit = find_monochromatic_triangle(g);
    if (hit) std::printf("unexpected triangle\n");
  }
  double par = ms_since(t0) / reps;
  set_threads(1);
  std::printf("mono-scan      n=%4d   serial %8.2f ms   threads=%d %8.2f ms   speedup %.2fx\n", n,
              serial, tmax, par, par > 0 ? serial / par : 0.0);
}

void bench_ramsey(int k, int reps) {
  set_threads(1);
  auto t0 = clk::now();
  RamseyResult r1;
  for (int r = 0; r < reps; ++r) r1 = compute_constraint_ramsey(k);
  double serial = ms_since(t0) / reps;
  int tmax = 1;
#ifdef _OPENMP
  tmax = omp_get_max_threads();
#endif
  set_threads(tmax);
  t0 = clk::now();
  RamseyResult r2;
  for (int r = 0; r < reps; ++r) r2 = compute_constraint_ramsey(k);
  double par = ms_since(t0) / reps;
  set_threads(1);
  bool agree = r1.value == r2.value && r1.exact == r2.exact;
  std::printf("ramsey k=%d     value=%d serial %8.2f ms   threads=%d %8.2f ms   speedup %.2fx  %s\n",
              k, r1.value, serial, tmax, par, par > 0 ? serial / par : 0.0,
              agree ? "identical" : "MISMATCH");
}

}  // namespace

int main(int argc, char** argv) {
  int scale = argc > 1 ? std::stoi(argv[1]) : 1;
  for (int n : {200, 400}) bench_scan(n * scale, 5);
  for (int k : {2, 3}) bench_ramsey(k, 3);
  return 0;
}
