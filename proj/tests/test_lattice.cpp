#include <doctest.h>

#include "porthos/partition.hpp"

using namespace porthos;

TEST_CASE("restricted growth strings are canonical") {
  const SetPartition a = SetPartition::from_blocks(4, {{2, 4}, {1, 3}});
  const SetPartition b = SetPartition::from_blocks(4, {{1, 3}, {4, 2}});
  CHECK(a == b);
  CHECK(a.rgs() == std::vector<int>{0, 1, 0, 1});
  CHECK(a.block_count() == 2);
  CHECK(a.blocks() == std::vector<std::vector<int>>{{1, 3}, {2, 4}});
  CHECK(SetPartition::singletons(3).rgs() == std::vector<int>{0, 1, 2});
  CHECK(SetPartition::one_block(3).rgs() == std::vector<int>{0, 0, 0});
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(SetPartition::from_blocks(3, {{1, 2}, {2, 3}}), std::invalid_argument);
}

TEST_CASE("enumeration matches Bell numbers") {
  const std::vector<std::size_t> bell{1, 2, 5, 15, 52, 203, 877, 4140, 21147, 115975};
  for (int n = 1; n <= 10; ++n) {
    const auto all = enumerate_partitions(n);
    CHECK(all.size() == bell[static_cast<std::size_t>(n - 1)]);
    // strictly increasing in lexicographic order implies no duplicates
    for (std::size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1] < all[i]);
  }
  CHECK_THROWS_AS(enumerate_partitions(13), size_error);
  CHECK_THROWS_AS(enumerate_partitions(0), size_error);
}

TEST_CASE("refinement order") {
  const SetPartition fine = SetPartition::from_blocks(4, {{1}, {2}, {3, 4}});
  const SetPartition coarse = SetPartition::from_blocks(4, {{1, 2}, {3, 4}});
  CHECK(refines(fine, coarse));
  CHECK_FALSE(refines(coarse, fine));
  CHECK(refines(fine, fine));
  const SetPartition other = SetPartition::from_blocks(4, {{1, 3}, {2}, {4}});
  CHECK_FALSE(refines(other, coarse));
}

TEST_CASE("partition of a function's fibers") {
  const SetPartition pi = partition_of_function<int>({7, 3, 7, 1, 3});
  CHECK(pi == SetPartition::from_blocks(5, {{1, 3}, {2, 5}, {4}}));
}

TEST_CASE("profile counts block sizes") {
  const SetPartition pi = SetPartition::from_blocks(5, {{1, 2, 3}, {4}, {5}});
  const auto prof = pi.profile();
  CHECK(prof[1] == 2);
  CHECK(prof[3] == 1);
  CHECK(prof[2] == 0);
}

TEST_CASE("closed-form Mobius values") {
  CHECK(mobius_closed_form(SetPartition::singletons(5)) == 1);
  CHECK(mobius_closed_form(SetPartition::one_block(4)) == -6);   // (-1)^3 3!
  CHECK(mobius_closed_form(SetPartition::one_block(5)) == 24);   // (-1)^4 4!
  CHECK(mobius_closed_form(SetPartition::from_blocks(4, {{1, 2}, {3, 4}})) == 1);
  CHECK(mobius_closed_form(SetPartition::from_blocks(4, {{1, 2, 3}, {4}})) == 2);
}

TEST_CASE("recursive Mobius agrees with the closed form") {
  for (int n = 1; n <= 6; ++n) {
    const SetPartition zero = SetPartition::singletons(n);
    for (const auto& pi : enumerate_partitions(n))
      CHECK(mobius_recursive(zero, pi) == mobius_closed_form(pi));
  }
}

TEST_CASE("recursive Mobius on general intervals sums to zero") {
  // sum_{sigma <= rho <= pi} mu(sigma, rho) = 0 whenever sigma < pi
  const int n = 5;
  const auto all = enumerate_partitions(n);
  for (const auto& sigma : all)
    for (const auto& pi : all) {
      if (!refines(sigma, pi) || sigma == pi) continue;
      BigInt total = 0;
      for (const auto& rho : all)
        if (refines(sigma, rho) && refines(rho, pi)) total += mobius_recursive(sigma, rho);
      CHECK(total == 0);
    }
}

TEST_CASE("recursive Mobius rejects bad input") {
  const SetPartition a = SetPartition::from_blocks(3, {{1, 2}, {3}});
  const SetPartition b = SetPartition::from_blocks(3, {{1, 3}, {2}});
  CHECK_THROWS_AS(mobius_recursive(a, b), std::invalid_argument);
}

TEST_CASE("absolute Mobius mass is n!") {
  for (int n = 1; n <= 6; ++n) CHECK(sum_abs_mobius(n) == factorial(static_cast<unsigned>(n)));
}

TEST_CASE("Mobius inversion round trip") {
  auto phi = [](const SetPartition& pi) {
    std::vector<BigRat> v(2, BigRat(0));
    const auto& rgs = pi.rgs();
    for (std::size_t k = 0; k < rgs.size(); ++k) {
      v[0] += BigRat(static_cast<long long>((k + 2) * (rgs[k] + 1)), 7);
      v[1] += BigRat(static_cast<long long>(rgs[k]) - 1, 2);
    }
    return v;
  };
  CHECK(verify_inversion(4, phi, InversionDirection::Down));
  CHECK(verify_inversion(4, phi, InversionDirection::Up));
  auto phid = [](const SetPartition& pi) {
    std::vector<double> v(1, 0.0);
    for (int label : pi.rgs()) v[0] += 0.25 * (label + 1);
    return v;
  };
  CHECK(verify_inversion(5, phid, InversionDirection::Down));
  CHECK(verify_inversion(5, phid, InversionDirection::Up));
}
