#pragma once

#include <functional>
#include <vector>

#include "porthos/bigint.hpp"
#include "porthos/errors.hpp"

namespace porthos {

// A partition of {1..n}. Internally a restricted growth string: label[k] is
// the block of element k+1, blocks numbered by order of first appearance.
// This makes equality and enumeration order canonical.
class SetPartition {
 public:
  explicit SetPartition(std::vector<int> rgs);

  // blocks: 1-based index sets, pairwise disjoint, union {1..n}.
  static SetPartition from_blocks(int n, const std::vector<std::vector<int>>& blocks);
  static SetPartition singletons(int n);  // minimal element
  static SetPartition one_block(int n);   // maximal element

  int n() const { return static_cast<int>(rgs_.size()); }
  int block_count() const { return num_blocks_; }
  const std::vector<int>& rgs() const { return rgs_; }

  // Canonical block lists: blocks sorted by least element, elements ascending.
  std::vector<std::vector<int>> blocks() const;

  // profile()[i] = number of blocks of size i, 1 <= i <= n.
  std::vector<int> profile() const;

  bool operator==(const SetPartition& o) const { return rgs_ == o.rgs_; }
  bool operator<(const SetPartition& o) const { return rgs_ < o.rgs_; }

 private:
  std::vector<int> rgs_;
  int num_blocks_ = 0;
};

// All partitions of {1..n} in restricted-growth-string lexicographic order.
// Guard: n <= 12.
std::vector<SetPartition> enumerate_partitions(int n);

// sigma <= pi in the refinement order.
bool refines(const SetPartition& sigma, const SetPartition& pi);

// The fiber partition of a function given by its value list.
template <typename T>
SetPartition partition_of_function(const std::vector<T>& values) {
  if (values.empty()) throw std::invalid_argument("partition_of_function: empty value list");
  std::vector<int> rgs(values.size());
  std::vector<T> seen;
  for (std::size_t k = 0; k < values.size(); ++k) {
    int label = -1;
    for (std::size_t j = 0; j < seen.size(); ++j)
      if (seen[j] == values[k]) { label = static_cast<int>(j); break; }
    if (label < 0) {
      label = static_cast<int>(seen.size());
      seen.push_back(values[k]);
    }
    rgs[k] = label;
  }
  return SetPartition(std::move(rgs));
}

// mu(0,pi) by the product formula over the block profile.
BigInt mobius_closed_form(const SetPartition& pi);

// mu(sigma,pi) from the defining recursion over the interval [sigma,pi].
// Guard: pi.n() <= 9. Requires refines(sigma, pi).
BigInt mobius_recursive(const SetPartition& sigma, const SetPartition& pi);

// Sum of |mu(0,pi)| over all of P_n; equals n!. Guard: n <= 10.
BigInt sum_abs_mobius(int n);

enum class InversionDirection { Down, Up };

// Mobius-inversion round trip: build Psi by summation over the down-set
// (Down) or up-set (Up) of each partition, invert with mu, compare with Phi.
// Exact for BigRat values; 1e-12 relative for double. Guard: n <= 8.
bool verify_inversion(int n, const std::function<std::vector<BigRat>(const SetPartition&)>& phi,
                      InversionDirection direction);
bool verify_inversion(int n, const std::function<std::vector<double>(const SetPartition&)>& phi,
                      InversionDirection direction);

}  // namespace porthos
