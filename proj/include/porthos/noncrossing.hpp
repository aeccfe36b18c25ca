#pragma once

#include <vector>

#include "porthos/bigint.hpp"
#include "porthos/errors.hpp"
#include "porthos/partition.hpp"

namespace porthos {

// Partition of {1..n} (n even) into two-element blocks.
struct PairPartition {
  int n = 0;
  std::vector<std::pair<int, int>> pairs;  // 1-based, first < second
};

// Bijection of {0..q-1}; images[k] = pi(k).
struct Permutation {
  std::vector<int> images;
  int size() const { return static_cast<int>(images.size()); }
};

// The pair partition of {1..2q} read off the sequence
// [1, pi(1), 2, pi(2), ..., q, pi(q)]: positions holding the same value are
// paired. Every pair joins an odd and an even position.
PairPartition pair_partition_of_permutation(const Permutation& perm);

bool is_noncrossing(const PairPartition& p);
bool is_noncrossing(const SetPartition& p);

// Permutations whose induced pair partition is non-crossing; Catalan-many.
// Guard: q <= 8.
std::vector<Permutation> enumerate_Snc(int q);

// Smallest k with {k,k+1} a block of the (non-crossing) pair partition.
int find_interval_pair(const PairPartition& p);

// Removes the pair {k,k+1} and relabels; used for the recursive peel.
PairPartition remove_interval_pair(const PairPartition& p, int k);

BigInt catalan(int q);

struct Constants {
  BigInt alpha_p;  // number of pair partitions of {1..p}
  double k_p;      // circular-family moment constant, <= 2
  double delta;    // 8 / (3 pi)
};

Constants constants(int p);

// All partitions of {1..p} into pairs, by enumeration. Guard: p <= 12 even.
std::vector<PairPartition> enumerate_pair_partitions(int p);

}  // namespace porthos
