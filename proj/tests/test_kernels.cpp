#include <doctest.h>

#include <complex>
#include <random>
#include <vector>

#include "porthos/kernels.hpp"

using namespace porthos;
using cplx = std::complex<double>;

TEST_CASE("parallel reduction is bit-identical to serial") {
  auto term = [](std::uint64_t i) {
    return cplx{std::sin(1e-3 * static_cast<double>(i)), 1.0 / (1.0 + static_cast<double>(i))};
  };
  for (std::uint64_t count : {0ull, 1ull, 63ull, 64ull, 65ull, 100'000ull}) {
    const cplx a = kernels::chunked_sum_serial<cplx>(count, term);
    const cplx b = kernels::chunked_sum<cplx>(count, term);
    CHECK(a == b);  // exact: same chunk boundaries, same in-chunk order
  }
}

TEST_CASE("reduction sums correctly") {
  auto term = [](std::uint64_t i) { return static_cast<double>(i); };
  CHECK(kernels::chunked_sum_serial<double>(1001, term) == 500500.0);
  CHECK(kernels::chunked_sum<double>(1001, term) == 500500.0);
}

TEST_CASE("parallel matmul is bit-identical to serial and correct") {
  std::mt19937_64 rng(5);
  for (int n : {1, 2, 7, 33}) {
    std::vector<cplx> a(static_cast<std::size_t>(n) * n), b(a.size()), c1(a.size()), c2(a.size());
    for (auto& v : a) v = {static_cast<double>(rng() % 100) * 0.01, static_cast<double>(rng() % 100) * 0.01};
    for (auto& v : b) v = {static_cast<double>(rng() % 100) * 0.01, static_cast<double>(rng() % 100) * 0.01};
    kernels::matmul_serial(a.data(), b.data(), c1.data(), n);
    kernels::matmul(a.data(), b.data(), c2.data(), n);
    CHECK(c1 == c2);
    // reference triple loop in j-inner order for correctness (not bit order)
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        cplx acc{};
        for (int k = 0; k < n; ++k)
          acc += a[static_cast<std::size_t>(i) * n + k] * b[static_cast<std::size_t>(k) * n + j];
        worst = std::max(worst, std::abs(acc - c1[static_cast<std::size_t>(i) * n + j]));
      }
    CHECK(worst <= 1e-12);
  }
}
