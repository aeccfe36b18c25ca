#include "porthos/noncrossing.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

namespace porthos {

PairPartition pair_partition_of_permutation(const Permutation& perm) {
  const int q = perm.size();
  if (q < 1) throw std::invalid_argument("pair_partition_of_permutation: empty permutation");
  std::vector<int> omega(static_cast<std::size_t>(2 * q));
  for (int k = 0; k < q; ++k) {
    omega[static_cast<std::size_t>(2 * k)] = k;
    omega[static_cast<std::size_t>(2 * k + 1)] = perm.images[static_cast<std::size_t>(k)];
  }
  PairPartition pp;
  pp.n = 2 * q;
  std::vector<int> first(static_cast<std::size_t>(q), -1);
  for (int pos = 0; pos < 2 * q; ++pos) {
    const int v = omega[static_cast<std::size_t>(pos)];
    if (first[static_cast<std::size_t>(v)] < 0)
      first[static_cast<std::size_t>(v)] = pos;
    else
      pp.pairs.emplace_back(first[static_cast<std::size_t>(v)] + 1, pos + 1);
  }
  std::sort(pp.pairs.begin(), pp.pairs.end());
  return pp;
}

namespace {

bool crossing_blocks(const std::vector<std::vector<int>>& blocks) {
  // a < b < c < d with {a,c} in one block and {b,d} in another
  const int nb = static_cast<int>(blocks.size());
  for (int u = 0; u < nb; ++u)
    for (int v = 0; v < nb; ++v) {
      if (u == v) continue;
      for (int a : blocks[static_cast<std::size_t>(u)])
        for (int c : blocks[static_cast<std::size_t>(u)]) {
          if (a >= c) continue;
          for (int b : blocks[static_cast<std::size_t>(v)])
            for (int d : blocks[static_cast<std::size_t>(v)])
              if (a < b && b < c && c < d) return true;
        }
    }
  return false;
}

}  // namespace

bool is_noncrossing(const PairPartition& p) {
  std::vector<std::vector<int>> blocks;
  for (const auto& [a, b] : p.pairs) blocks.push_back({a, b});
  return !crossing_blocks(blocks);
}

bool is_noncrossing(const SetPartition& p) { return !crossing_blocks(p.blocks()); }

std::vector<Permutation> enumerate_Snc(int q) {
  if (q < 1 || q > 8) throw size_error("enumerate_Snc: q must be in [1,8]");
  std::vector<int> images(static_cast<std::size_t>(q));
  std::iota(images.begin(), images.end(), 0);
  std::vector<Permutation> out;
  do {
    Permutation perm{images};
    if (is_noncrossing(pair_partition_of_permutation(perm))) out.push_back(perm);
  } while (std::next_permutation(images.begin(), images.end()));
  return out;
}

int find_interval_pair(const PairPartition& p) {
  if (!is_noncrossing(p)) throw std::invalid_argument("find_interval_pair: crossing pair partition");
  int best = -1;
  for (const auto& [a, b] : p.pairs)
    if (b == a + 1 && (best < 0 || a < best)) best = a;
  if (best < 0) throw std::invalid_argument("find_interval_pair: no interval pair found");
  return best;
}

PairPartition remove_interval_pair(const PairPartition& p, int k) {
  PairPartition out;
  out.n = p.n - 2;
  for (const auto& [a, b] : p.pairs) {
    if (a == k && b == k + 1) continue;
    auto shift = [k](int x) { return x > k + 1 ? x - 2 : x; };
    out.pairs.emplace_back(shift(a), shift(b));
  }
  std::sort(out.pairs.begin(), out.pairs.end());
  return out;
}

BigInt catalan(int q) {
  return binomial(static_cast<unsigned>(2 * q), static_cast<unsigned>(q)) / (q + 1);
}

Constants constants(int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("constants: p must be even >= 2");
  Constants c;
  // p! / (2^{p/2} (p/2)!)
  BigInt denom = factorial(static_cast<unsigned>(p / 2));
  denom <<= p / 2;
  c.alpha_p = factorial(static_cast<unsigned>(p)) / denom;
  const double cat = (binomial(static_cast<unsigned>(p), static_cast<unsigned>(p / 2)) /
                      BigInt(1 + p / 2)).convert_to<double>();
  c.k_p = std::pow(cat, 1.0 / p);
  c.delta = 8.0 / (3.0 * std::numbers::pi);
  return c;
}

namespace {

void pair_up(std::vector<int>& free_points, PairPartition& cur,
             std::vector<PairPartition>& out) {
  if (free_points.empty()) {
    out.push_back(cur);
    return;
  }
  const int a = free_points.front();
  for (std::size_t j = 1; j < free_points.size(); ++j) {
    const int b = free_points[j];
    std::vector<int> rest;
    for (std::size_t i = 1; i < free_points.size(); ++i)
      if (i != j) rest.push_back(free_points[i]);
    cur.pairs.emplace_back(a, b);
    pair_up(rest, cur, out);
    cur.pairs.pop_back();
  }
}

}  // namespace

std::vector<PairPartition> enumerate_pair_partitions(int p) {
  if (p < 2 || p > 12 || p % 2 != 0)
    throw size_error("enumerate_pair_partitions: p must be even in [2,12]");
  std::vector<int> points(static_cast<std::size_t>(p));
  std::iota(points.begin(), points.end(), 1);
  std::vector<PairPartition> out;
  PairPartition cur;
  cur.n = p;
  pair_up(points, cur, out);
  return out;
}

}  // namespace porthos
