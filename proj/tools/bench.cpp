// serial vs OpenMP kernel comparison: chunked reductions and dense matmul
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdio>
#include <random>
#include <vector>

#include "porthos/kernels.hpp"

using namespace porthos;
using cplx = std::complex<double>;
using clock_type = std::chrono::steady_clock;

namespace {

double ms_since(clock_type::time_point t0) {
  return std::chrono::duration<double, std::milli>(clock_type::now() - t0).count();
}

void bench_sum(std::uint64_t count) {
  auto term = [](std::uint64_t i) {
    const double x = static_cast<double>(i % 9973) * 1e-4;
    return cplx{std::sin(x), std::cos(x)};
  };
  auto t0 = clock_type::now();
  const cplx serial = kernels::chunked_sum_serial<cplx>(count, term);
  const double t_serial = ms_since(t0);
  t0 = clock_type::now();
  const cplx parallel = kernels::chunked_sum<cplx>(count, term);
  const double t_parallel = ms_since(t0);
  const bool identical = serial == parallel;  // bit-stable by construction
  std::printf("chunked_sum  count=%llu  serial=%8.2f ms  parallel=%8.2f ms  speedup=%.2fx  bit-identical=%s\n",
              static_cast<unsigned long long>(count), t_serial, t_parallel,
              t_serial / t_parallel, identical ? "yes" : "NO");
}

void bench_matmul(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> a(static_cast<std::size_t>(n) * n), b(a.size()), c1(a.size()), c2(a.size());
  for (auto& v : a) v = {static_cast<double>(rng() % 1000) * 1e-3, static_cast<double>(rng() % 1000) * 1e-3};
  for (auto& v : b) v = {static_cast<double>(rng() % 1000) * 1e-3, static_cast<double>(rng() % 1000) * 1e-3};
  auto t0 = clock_type::now();
  kernels::matmul_serial(a.data(), b.data(), c1.data(), n);
  const double t_serial = ms_since(t0);
  t0 = clock_type::now();
  kernels::matmul(a.data(), b.data(), c2.data(), n);
  const double t_parallel = ms_since(t0);
  const bool identical = c1 == c2;
  std::printf("matmul       n=%-8d serial=%8.2f ms  parallel=%8.2f ms  speedup=%.2fx  bit-identical=%s\n",
              n, t_serial, t_parallel, t_serial / t_parallel, identical ? "yes" : "NO");
}

}  // namespace

int main() {
  for (std::uint64_t count : {1'000'000ull, 10'000'000ull, 50'000'000ull}) bench_sum(count);
  for (int n : {64, 128, 256, 384}) bench_matmul(n, 7);
  return 0;
}
