// Compares the serial and OpenMP paths of every kernel on fixed workloads.
// Results must agree bit for bit; the timing columns show what the parallel
// split buys on this machine.

#include <chrono>
#include <cstdio>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "puv/kernels.hpp"

namespace {

using Clock = std::chrono::steady_clock;

template <class F>
double time_of(F&& f) {
  auto t0 = Clock::now();
  f();
  auto t1 = Clock::now();
  return std::chrono::duration<double>(t1 - t0).count();
}

void report(const std::string& name, double serial_s, double parallel_s, bool equal) {
  std::printf("%-34s %10.3fs %10.3fs %8.2fx   %s\n", name.c_str(), serial_s, parallel_s,
              serial_s / parallel_s, equal ? "identical" : "MISMATCH");
}

}  // namespace

int main() {
#ifdef _OPENMP
  std::printf("OpenMP enabled, max threads: %d\n", omp_get_max_threads());
#else
  std::printf("built without OpenMP; both columns run serial code\n");
#endif
  std::printf("%-34s %11s %11s %9s\n", "kernel", "serial", "parallel", "speedup");

  {
    puv::BigInt a, b;
    double ts = time_of([&] { a = puv::count_s1_fillings(5, puv::ExecMode::Serial); });
    double tp = time_of([&] { b = puv::count_s1_fillings(5, puv::ExecMode::Parallel); });
    report("matrix scan n=5 (2^25)", ts, tp, a == b);
  }
  {
    std::uint64_t a = 0, b = 0;
    double ts = time_of(
        [&] { a = puv::count_roundtrip_failures(6, 20000, 7, puv::ExecMode::Serial); });
    double tp = time_of(
        [&] { b = puv::count_roundtrip_failures(6, 20000, 7, puv::ExecMode::Parallel); });
    report("bijection round trip n=6 x20000", ts, tp, a == b);
  }
  {
    std::uint64_t a = 0, b = 0;
    double ts = time_of(
        [&] { a = puv::count_symmetry_mismatches(6, 20000, 7, puv::ExecMode::Serial); });
    double tp = time_of(
        [&] { b = puv::count_symmetry_mismatches(6, 20000, 7, puv::ExecMode::Parallel); });
    report("two-construction check n=6 x20000", ts, tp, a == b);
  }
  {
    puv::VarianceProfile<double> p({1.0, 2.0, 0.5}, {2.0, 3.0, 1.5});
    puv::MonteCarloResult a, b;
    double ts = time_of([&] { a = puv::monte_carlo(p, 4000000, 42, puv::ExecMode::Serial); });
    double tp = time_of([&] { b = puv::monte_carlo(p, 4000000, 42, puv::ExecMode::Parallel); });
    report("monte carlo 4e6 samples", ts, tp, a.estimate == b.estimate);
  }
  return 0;
}
