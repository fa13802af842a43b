// Compares the OpenMP kernels against their serial references on the same
// inputs, reports wall times, and insists on bitwise-identical results.

#include <chrono>
#include <cstdio>
#include <cstring>

#include "qes/matrix.hpp"
#include "qes/reference.hpp"
#include "qes/sectors.hpp"
#include "qes/spectral.hpp"
#include "qes/threads.hpp"

namespace {

using clock_type = std::chrono::steady_clock;

double seconds_since(clock_type::time_point start) {
  return std::chrono::duration<double>(clock_type::now() - start).count();
}

qes::Model second_harmonic() {
  qes::Model model;
  model.nu = {qes::make_rat(1, 2)};
  model.mu = {qes::Rat(1)};
  model.n = {2};
  model.m = {1};
  return qes::validate(model);
}

qes::Model cascade3() {
  qes::Model model;
  model.nu = {qes::Rat(1), qes::Rat(2), qes::Rat(4)};
  model.mu = {qes::Rat(7)};
  model.n = {1, 1, 1};
  model.m = {1};
  return qes::validate(model);
}

bool bench_eigenvalues(long r, double tol) {
  const qes::Model model = second_harmonic();
  qes::SectorLabel sector{{0}, {r}, r};
  const qes::TridiagonalH1 matrix = qes::build_tridiagonal(model, sector);

  auto start = clock_type::now();
  const qes::Spectrum parallel = qes::eigenvalues(matrix, tol);
  const double t_parallel = seconds_since(start);

  start = clock_type::now();
  const qes::Spectrum serial = qes::reference::eigenvalues_serial(matrix, tol);
  const double t_serial = seconds_since(start);

  const bool equal = parallel.eigenvalues == serial.eigenvalues &&
                     parallel.certified_width == serial.certified_width;
  std::printf("eigenvalues  r=%-6ld parallel %8.3fs  serial %8.3fs  speedup %5.2fx  %s\n", r,
              t_parallel, t_serial, t_serial / t_parallel,
              equal ? "bitwise-equal" : "MISMATCH");
  return equal;
}

bool bench_enumerate(long max_photons) {
  const qes::Model model = cascade3();

  auto start = clock_type::now();
  const auto parallel = qes::enumerate_sectors(model, max_photons);
  const double t_parallel = seconds_since(start);

  start = clock_type::now();
  const auto serial = qes::reference::enumerate_sectors_serial(model, max_photons);
  const double t_serial = seconds_since(start);

  const bool equal = parallel == serial;
  std::printf("enumerate    B=%-6ld parallel %8.3fs  serial %8.3fs  speedup %5.2fx  %s (%zu sectors)\n",
              max_photons, t_parallel, t_serial, t_serial / t_parallel,
              equal ? "bitwise-equal" : "MISMATCH", parallel.size());
  return equal;
}

}  // namespace

int main(int argc, char** argv) {
  qes::init_threads_from_env();
  const bool quick = argc > 1 && std::strcmp(argv[1], "--quick") == 0;
  std::printf("threads: %d\n", qes::thread_count());

  bool ok = true;
  ok = bench_eigenvalues(1000, 1e-12) && ok;
  if (!quick) ok = bench_eigenvalues(10000, 1e-12) && ok;
  ok = bench_enumerate(quick ? 30 : 60) && ok;
  return ok ? 0 : 1;
}
