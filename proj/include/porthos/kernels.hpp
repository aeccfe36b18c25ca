#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace porthos::kernels {

// Number of chunks is fixed so reductions are bit-stable across thread counts:
// each chunk is summed serially in index order, chunk partials are combined in
// chunk order.
inline constexpr std::uint64_t kChunks = 64;

template <typename Scalar, typename Term>
Scalar chunked_sum_serial(std::uint64_t count, Term&& term) {
  const std::uint64_t nchunks = count < kChunks ? (count ? count : 1) : kChunks;
  std::vector<Scalar> partial(nchunks, Scalar{});
  for (std::uint64_t c = 0; c < nchunks; ++c) {
    const std::uint64_t lo = count * c / nchunks;
    const std::uint64_t hi = count * (c + 1) / nchunks;
    Scalar acc{};
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    partial[c] = acc;
  }
  Scalar total{};
  for (const Scalar& s : partial) total += s;
  return total;
}

template <typename Scalar, typename Term>
Scalar chunked_sum(std::uint64_t count, Term&& term) {
  const std::uint64_t nchunks = count < kChunks ? (count ? count : 1) : kChunks;
  std::vector<Scalar> partial(nchunks, Scalar{});
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < static_cast<std::int64_t>(nchunks); ++c) {
    const std::uint64_t lo = count * static_cast<std::uint64_t>(c) / nchunks;
    const std::uint64_t hi = count * (static_cast<std::uint64_t>(c) + 1) / nchunks;
    Scalar acc{};
    for (std::uint64_t i = lo; i < hi; ++i) acc += term(i);
    partial[static_cast<std::size_t>(c)] = acc;
  }
  Scalar total{};
  for (const Scalar& s : partial) total += s;
  return total;
}

// Dense complex matrix product, c = a * b, all row-major n x n.
void matmul_serial(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* c, int n);
void matmul(const std::complex<double>* a, const std::complex<double>* b,
            std::complex<double>* c, int n);

}  // namespace porthos::kernels
