#include <doctest.h>

#include <random>

#include "porthos/families.hpp"
#include "porthos/tracial.hpp"

using namespace porthos;

namespace {

TracialElement random_hermitian(int n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TracialElement x = TracialElement::dense(n);
  for (int i = 0; i < n; ++i) {
    x.set(i, i, {2.0 * uniform_double(rng()) - 1.0, 0.0});
    for (int j = i + 1; j < n; ++j) {
      const cplx v{2.0 * uniform_double(rng()) - 1.0, 2.0 * uniform_double(rng()) - 1.0};
      x.set(i, j, v);
      x.set(j, i, std::conj(v));
    }
  }
  return x;
}

}  // namespace

TEST_CASE("eigenvalues of known matrices") {
  const TracialElement a = TracialElement::dense(2, {cplx{2, 0}, cplx{1, 0}, cplx{1, 0}, cplx{2, 0}});
  auto ea = hermitian_eigenvalues(a);
  REQUIRE(ea.eigenvalues.size() == 2);
  CHECK(ea.eigenvalues[0] == doctest::Approx(1.0).epsilon(1e-10));
  CHECK(ea.eigenvalues[1] == doctest::Approx(3.0).epsilon(1e-10));
  // genuinely complex Hermitian: [[0, i], [-i, 0]] has spectrum {-1, 1}
  const TracialElement b = TracialElement::dense(2, {cplx{0, 0}, cplx{0, 1}, cplx{0, -1}, cplx{0, 0}});
  auto eb = hermitian_eigenvalues(b);
  CHECK(eb.eigenvalues[0] == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(eb.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("eigenvalues preserve trace and Frobenius mass") {
  const TracialElement x = random_hermitian(7, 42);
  const auto e = hermitian_eigenvalues(x);
  double sum = 0.0, sum2 = 0.0;
  for (double lam : e.eigenvalues) {
    sum += lam;
    sum2 += lam * lam;
  }
  CHECK(sum == doctest::Approx(x.trace_raw().real()).epsilon(1e-10));
  CHECK(sum2 == doctest::Approx(x.frobenius() * x.frobenius()).epsilon(1e-10));
  CHECK(e.residual <= 1e-10 * x.frobenius());
}

TEST_CASE("non-Hermitian input is rejected") {
  TracialElement x = TracialElement::dense(2, {cplx{0, 0}, cplx{1, 0}, cplx{0, 0}, cplx{0, 0}});
  CHECK_THROWS_AS(hermitian_eigenvalues(x), std::invalid_argument);
}

TEST_CASE("the two Schatten paths agree") {
  const TracialFamily fam = random_control(4, 6, 9);
  for (const auto& x : fam.elements) {
    // ||x||_2 is the normalized Frobenius norm
    CHECK(schatten_norm_even(x, 2) ==
          doctest::Approx(x.frobenius() / std::sqrt(6.0)).epsilon(1e-10));
    for (int p : {2, 4, 6})
      CHECK(schatten_norm_general(x, p) == doctest::Approx(schatten_norm_even(x, p)).epsilon(1e-9));
  }
}

TEST_CASE("norm basics") {
  const TracialElement eye = TracialElement::identity(5);
  CHECK(schatten_norm_even(eye, 4) == doctest::Approx(1.0));
  CHECK(schatten_norm_general(eye, 3.5) == doctest::Approx(1.0));
  const TracialElement two = cplx{2.0, 0.0} * eye;
  CHECK(schatten_norm_even(two, 6) == doctest::Approx(2.0));
  CHECK_THROWS_AS(schatten_norm_even(eye, 3), std::invalid_argument);
  CHECK_THROWS_AS(schatten_norm_general(eye, 0.5), std::invalid_argument);
}

TEST_CASE("star word moments") {
  const TracialFamily fam = random_control(3, 4, 17);
  const StarPattern pattern = StarPattern::alternating(4);
  const std::vector<int> g{0, 2, 1, 2};
  const auto& d = fam.elements;
  const TracialElement word = d[0].adjoint() * d[2] * d[1].adjoint() * d[2];
  CHECK(std::abs(star_word_moment(fam, g, pattern) - normalized_trace(word)) <= 1e-12);
  CHECK_THROWS_AS(star_word_moment(fam, {0, 1}, pattern), std::invalid_argument);
  CHECK_THROWS_AS(star_word_moment(fam, {0, 1, 2, 9}, StarPattern::alternating(4)),
                  std::invalid_argument);
}

TEST_CASE("orthogonality: rademacher passes, random fails with witness") {
  const TracialFamily rad = rademacher(4, {cplx{1, 0}, cplx{0.5, 0.5}, cplx{-2, 0}, cplx{0, 1}});
  CHECK(is_p_orthogonal(rad, 2, 1e-10).orthogonal);
  CHECK(is_p_orthogonal(rad, 4, 1e-10).orthogonal);
  const auto bad = is_p_orthogonal(random_control(3, 4, 23), 2, 1e-10);
  CHECK_FALSE(bad.orthogonal);
  REQUIRE(bad.witness.has_value());
  CHECK(bad.witness->size() == 2);
  // vacuous below p elements
  CHECK(is_p_orthogonal(random_control(3, 4, 23), 6, 1e-10).orthogonal);
}

TEST_CASE("main inequality on commutative families") {
  const TracialFamily rad = rademacher(5, {cplx{1, 0}, cplx{2, 0}, cplx{0, 1}, cplx{-1, 1}, cplx{0.3, 0}});
  const auto r = check_main_inequality(rad, 4);
  CHECK(r.pass);
  CHECK(r.commutative);
  CHECK(r.constant == doctest::Approx(6.0 * std::acos(-1.0)));
  CHECK(r.lhs <= r.rhs * (1 + 1e-9));
  CHECK(r.lhs <= r.commutative_rhs * (1 + 1e-9));
  CHECK(r.s_dp <= r.norm_sym * (1 + 1e-12));
}

TEST_CASE("h norm") {
  TracialFamily fam;
  fam.dim = 3;
  fam.elements.push_back(TracialElement::identity(3));
  fam.elements.push_back(cplx{2.0, 0.0} * TracialElement::identity(3));
  // (1^4 + 2^4)^{1/4}
  CHECK(h_norm(fam, 4) == doctest::Approx(std::pow(17.0, 0.25)).epsilon(1e-12));
}

TEST_CASE("word bound checks its inputs") {
  std::vector<TracialFamily> fams;
  for (int k = 0; k < 4; ++k) fams.push_back(random_control(2, 3, 30 + static_cast<std::uint64_t>(k)));
  Permutation ident;
  ident.images = {0, 1};
  const auto r = lemma36_check(fams, ident, 2.0);
  CHECK(r.pass);
  CHECK(r.lhs <= r.rhs * (1 + 1e-9));
  Permutation bad;
  bad.images = {0, 1, 2};  // needs 6 families
  CHECK_THROWS_AS(lemma36_check(fams, bad, 2.0), std::invalid_argument);
  std::vector<TracialFamily> mismatched = fams;
  mismatched[1] = random_control(3, 3, 99);
  CHECK_THROWS_AS(lemma36_check(mismatched, ident, 2.0), std::invalid_argument);
}
