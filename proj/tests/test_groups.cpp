#include <doctest.h>

#include "porthos/groups.hpp"

using namespace porthos;

TEST_CASE("free word reduction") {
  // a b b^{-1} a^{-1} a -> a
  FreeWord w{{{0, 1}, {1, 1}, {1, -1}, {0, -1}, {0, 1}}};
  CHECK(reduce(w).letters == std::vector<std::pair<int, int>>{{0, 1}});
  const FreeWord a{{{0, 1}}}, b{{{1, 1}}};
  const FreeWord ab = free_multiply(a, b);
  CHECK(free_multiply(ab, free_inverse(ab)).letters.empty());
  CHECK_THROWS_AS(reduce(FreeWord{{{0, 2}}}), std::invalid_argument);
}

TEST_CASE("group element variants") {
  const GroupElement z = GroupElement::integer(5);
  CHECK((z * z.inverse()).is_identity());
  const GroupElement m = GroupElement::mod(7, 5);
  CHECK(m.mod_value().value == 2);
  CHECK((m * GroupElement::mod(3, 5)).is_identity());
  const GroupElement g = GroupElement::generator(1);
  CHECK((g * g.inverse()).is_identity());
  CHECK_THROWS_AS(z * m, std::invalid_argument);
  CHECK_THROWS_AS(m * GroupElement::mod(1, 7), std::invalid_argument);
  CHECK(z.key() != GroupElement::integer(-5).key());
  CHECK(GroupElement::generator(0).key() != GroupElement::generator(0).inverse().key());
}

TEST_CASE("alternating products in Z") {
  // pattern -,+,-,+ gives -t1 + t2 - t3 + t4
  const StarPattern pattern = StarPattern::alternating(4);
  std::vector<GroupElement> ts;
  for (long long v : {1, 2, 3, 4}) ts.push_back(GroupElement::integer(v));
  const GroupElement prod = alternating_product(ts, pattern);
  CHECK(prod.integer_value() == -1 + 2 - 3 + 4);
  CHECK_THROWS_AS(alternating_product(ts, StarPattern::alternating(3)), std::invalid_argument);
}

TEST_CASE("dissociateness of lacunary and dense sets") {
  std::vector<GroupElement> powers;
  for (int k = 0; k <= 5; ++k) powers.push_back(GroupElement::integer(1ll << k));
  CHECK(is_p_dissociate(powers, 4).dissociate);
  CHECK(is_p_dissociate(powers, 6).dissociate);

  std::vector<GroupElement> dense;
  for (long long v : {1, 2, 3, 4}) dense.push_back(GroupElement::integer(v));
  const auto r = is_p_dissociate(dense, 4);
  CHECK_FALSE(r.dissociate);
  REQUIRE(r.witness.has_value());
  CHECK(alternating_product(*r.witness, StarPattern::alternating(4)).is_identity());

  // vacuous when the set is smaller than p
  CHECK(is_p_dissociate(dense, 6).dissociate);
  CHECK_THROWS_AS(is_p_dissociate(dense, 3), std::invalid_argument);
}

TEST_CASE("free generators are dissociate") {
  std::vector<GroupElement> gens;
  for (int i = 0; i < 5; ++i) gens.push_back(GroupElement::generator(i));
  CHECK(is_p_dissociate(gens, 4).dissociate);
}

TEST_CASE("family dissociateness over transversals") {
  auto z = [](long long v) { return GroupElement::integer(v); };
  CHECK(family_dissociate({{z(1)}, {z(2)}, {z(4)}, {z(8), z(9)}}, 4));
  CHECK_FALSE(family_dissociate({{z(1)}, {z(2)}, {z(3)}, {z(4)}}, 4));
  CHECK_THROWS_AS(family_dissociate({{z(1)}, {z(1)}}, 4), std::invalid_argument);
}

TEST_CASE("multiplicity counts") {
  auto z = [](long long v) { return GroupElement::integer(v); };
  CHECK(count_Nq({z(1), z(2), z(4), z(8)}, 2).n_q == 1);
  const auto r = count_Nq({z(1), z(2), z(3)}, 2);
  CHECK(r.n_q == 2);  // 2 - 1 = 3 - 2 and 1 - 2 = 2 - 3
  REQUIRE(r.argmax_t.has_value());
  CHECK(std::abs(r.argmax_t->integer_value()) == 1);
  CHECK(count_Nq({z(1)}, 2).n_q == 0);  // too few elements
}
