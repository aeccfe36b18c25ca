#include <doctest.h>

#include <random>

#include "porthos/matrix.hpp"

using namespace porthos;

namespace {

TracialElement random_dense(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> a(static_cast<std::size_t>(n) * n);
  for (auto& v : a)
    v = {static_cast<double>(rng() % 2000) * 1e-3 - 1.0,
         static_cast<double>(rng() % 2000) * 1e-3 - 1.0};
  return TracialElement::dense(n, std::move(a));
}

TracialElement random_diag(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<cplx> d(static_cast<std::size_t>(n));
  for (auto& v : d)
    v = {static_cast<double>(rng() % 2000) * 1e-3 - 1.0,
         static_cast<double>(rng() % 2000) * 1e-3 - 1.0};
  return TracialElement::diagonal(n, std::move(d));
}

double max_entry_diff(const TracialElement& a, const TracialElement& b) {
  double worst = 0.0;
  for (int i = 0; i < a.dim(); ++i)
    for (int j = 0; j < a.dim(); ++j) worst = std::max(worst, std::abs(a.at(i, j) - b.at(i, j)));
  return worst;
}

}  // namespace

TEST_CASE("diagonal products dispatch consistently with dense") {
  const int n = 6;
  const TracialElement d1 = random_diag(n, 1), d2 = random_diag(n, 2);
  const TracialElement m1 = random_dense(n, 3), m2 = random_dense(n, 4);
  for (const auto& [a, b] : std::vector<std::pair<TracialElement, TracialElement>>{
           {d1, d2}, {d1, m1}, {m1, d2}, {m1, m2}}) {
    const TracialElement fast = a * b;
    const TracialElement ref = a.to_dense() * b.to_dense();
    CHECK(max_entry_diff(fast, ref) <= 1e-13);
  }
  CHECK((d1 * d2).is_diagonal());
  CHECK_FALSE((d1 * m1).is_diagonal());
}

TEST_CASE("adjoint, trace, frobenius") {
  const TracialElement m = random_dense(5, 7);
  const TracialElement ms = m.adjoint();
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) CHECK(ms.at(i, j) == std::conj(m.at(j, i)));
  cplx tr{};
  for (int i = 0; i < 5; ++i) tr += m.at(i, i);
  CHECK(std::abs(m.trace_raw() - tr) <= 1e-14);
  double fro2 = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) fro2 += std::norm(m.at(i, j));
  CHECK(m.frobenius() == doctest::Approx(std::sqrt(fro2)).epsilon(1e-12));
}

TEST_CASE("set promotes diagonal storage on off-diagonal writes") {
  TracialElement d = TracialElement::identity(3);
  CHECK(d.is_diagonal());
  d.set(0, 0, {2.0, 0.0});
  CHECK(d.is_diagonal());
  d.set(0, 2, {1.0, 0.0});
  CHECK_FALSE(d.is_diagonal());
  CHECK(d.at(0, 2) == cplx{1.0, 0.0});
  CHECK(d.at(0, 0) == cplx{2.0, 0.0});
}

TEST_CASE("mixed-layout sums") {
  const TracialElement d = random_diag(4, 11);
  const TracialElement m = random_dense(4, 12);
  const TracialElement s1 = d + m;
  const TracialElement s2 = m + d;
  CHECK(max_entry_diff(s1, s2) == 0.0);
  CHECK(max_entry_diff(s1, d.to_dense() + m) <= 1e-15);
}

TEST_CASE("matrix powers") {
  const TracialElement m = random_dense(4, 13);
  const TracialElement eye = TracialElement::identity(4);
  CHECK(max_entry_diff(matrix_power(m, 0), eye) == 0.0);
  CHECK(max_entry_diff(matrix_power(m, 3), m * (m * m)) <= 1e-12);
}

TEST_CASE("kronecker product") {
  const TracialElement a = random_dense(2, 21);
  const TracialElement b = random_dense(3, 22);
  const TracialElement k = kronecker(a, b);
  REQUIRE(k.dim() == 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j)
      CHECK(std::abs(k.at(i, j) - a.at(i / 3, j / 3) * b.at(i % 3, j % 3)) <= 1e-15);
  CHECK(kronecker(random_diag(2, 23), random_diag(3, 24)).is_diagonal());
}

TEST_CASE("dimension mismatches throw") {
  const TracialElement a = random_dense(3, 31);
  const TracialElement b = random_dense(4, 32);
  CHECK_THROWS_AS(a * b, std::invalid_argument);
  TracialElement c = a;
  CHECK_THROWS_AS(c += b, std::invalid_argument);
}
