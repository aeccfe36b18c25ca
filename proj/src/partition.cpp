#include "porthos/partition.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace porthos {

SetPartition::SetPartition(std::vector<int> rgs) : rgs_(std::move(rgs)) {
  if (rgs_.empty()) throw std::invalid_argument("SetPartition: empty ground set");
  int mx = -1;
  for (std::size_t k = 0; k < rgs_.size(); ++k) {
    if (rgs_[k] < 0 || rgs_[k] > mx + 1)
      throw std::invalid_argument("SetPartition: not a restricted growth string");
    mx = std::max(mx, rgs_[k]);
  }
  num_blocks_ = mx + 1;
}

SetPartition SetPartition::from_blocks(int n, const std::vector<std::vector<int>>& blocks) {
  if (n < 1) throw std::invalid_argument("SetPartition: n must be positive");
  std::vector<int> owner(static_cast<std::size_t>(n), -1);
  for (std::size_t b = 0; b < blocks.size(); ++b) {
    if (blocks[b].empty()) throw std::invalid_argument("SetPartition: empty block");
    for (int e : blocks[b]) {
      if (e < 1 || e > n) throw std::invalid_argument("SetPartition: element out of range");
      if (owner[static_cast<std::size_t>(e - 1)] != -1)
        throw std::invalid_argument("SetPartition: blocks not disjoint");
      owner[static_cast<std::size_t>(e - 1)] = static_cast<int>(b);
    }
  }
  std::vector<int> rgs(static_cast<std::size_t>(n));
  std::vector<int> relabel(blocks.size(), -1);
  int next = 0;
  for (int k = 0; k < n; ++k) {
    int b = owner[static_cast<std::size_t>(k)];
    if (b < 0) throw std::invalid_argument("SetPartition: element not covered");
    if (relabel[static_cast<std::size_t>(b)] < 0) relabel[static_cast<std::size_t>(b)] = next++;
    rgs[static_cast<std::size_t>(k)] = relabel[static_cast<std::size_t>(b)];
  }
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::singletons(int n) {
  std::vector<int> rgs(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) rgs[static_cast<std::size_t>(k)] = k;
  return SetPartition(std::move(rgs));
}

SetPartition SetPartition::one_block(int n) {
  return SetPartition(std::vector<int>(static_cast<std::size_t>(n), 0));
}

std::vector<std::vector<int>> SetPartition::blocks() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(num_blocks_));
  for (int k = 0; k < n(); ++k) out[static_cast<std::size_t>(rgs_[static_cast<std::size_t>(k)])].push_back(k + 1);
  return out;  // first-appearance labeling means blocks are already sorted by least element
}

std::vector<int> SetPartition::profile() const {
  std::vector<int> size(static_cast<std::size_t>(num_blocks_), 0);
  for (int v : rgs_) ++size[static_cast<std::size_t>(v)];
  std::vector<int> r(static_cast<std::size_t>(n()) + 1, 0);
  for (int s : size) ++r[static_cast<std::size_t>(s)];
  return r;
}

std::vector<SetPartition> enumerate_partitions(int n) {
  if (n < 1 || n > 12) throw size_error("enumerate_partitions: n must be in [1,12]");
  std::vector<SetPartition> out;
  std::vector<int> a(static_cast<std::size_t>(n), 0);
  // lexicographic successor over restricted growth strings
  while (true) {
    out.emplace_back(a);
    int k = n - 1;
    for (; k > 0; --k) {
      int mx = 0;
      for (int j = 0; j < k; ++j) mx = std::max(mx, a[static_cast<std::size_t>(j)]);
      if (a[static_cast<std::size_t>(k)] <= mx) break;
    }
    if (k == 0) break;
    ++a[static_cast<std::size_t>(k)];
    for (int j = k + 1; j < n; ++j) a[static_cast<std::size_t>(j)] = 0;
  }
  return out;
}

bool refines(const SetPartition& sigma, const SetPartition& pi) {
  if (sigma.n() != pi.n()) throw std::invalid_argument("refines: mismatched ground sets");
  const auto& s = sigma.rgs();
  const auto& p = pi.rgs();
  // sigma <= pi iff equal sigma-labels force equal pi-labels; check via the
  // pi-label of each sigma-block's first element.
  std::vector<int> rep(static_cast<std::size_t>(sigma.block_count()), -1);
  for (std::size_t k = 0; k < s.size(); ++k) {
    int b = s[k];
    if (rep[static_cast<std::size_t>(b)] < 0)
      rep[static_cast<std::size_t>(b)] = p[k];
    else if (rep[static_cast<std::size_t>(b)] != p[k])
      return false;
  }
  return true;
}

BigInt mobius_closed_form(const SetPartition& pi) {
  BigInt m = 1;
  const auto r = pi.profile();
  for (int i = 1; i <= pi.n(); ++i) {
    if (r[static_cast<std::size_t>(i)] == 0) continue;
    BigInt base = factorial(static_cast<unsigned>(i - 1));
    if (i % 2 == 0) base = -base;
    for (int e = 0; e < r[static_cast<std::size_t>(i)]; ++e) m *= base;
  }
  return m;
}

BigInt mobius_recursive(const SetPartition& sigma, const SetPartition& pi) {
  if (pi.n() > 9) throw size_error("mobius_recursive: n must be <= 9");
  if (!refines(sigma, pi)) throw std::invalid_argument("mobius_recursive: sigma does not refine pi");
  // Collect the interval [sigma, pi], then run the defining recursion in
  // refinement order (block count strictly decreases going up).
  auto all = enumerate_partitions(pi.n());
  std::vector<SetPartition> interval;
  for (const auto& rho : all)
    if (refines(sigma, rho) && refines(rho, pi)) interval.push_back(rho);
  std::stable_sort(interval.begin(), interval.end(),
                   [](const SetPartition& a, const SetPartition& b) {
                     return a.block_count() > b.block_count();
                   });
  std::vector<BigInt> mu(interval.size());
  for (std::size_t j = 0; j < interval.size(); ++j) {
    if (interval[j] == sigma) {
      mu[j] = 1;
      continue;
    }
    BigInt acc = 0;
    for (std::size_t i = 0; i < j; ++i)
      if (refines(interval[i], interval[j]) && !(interval[i] == interval[j])) acc += mu[i];
    mu[j] = -acc;
  }
  return mu.back();  // pi sorts last: it has the minimal block count in the interval
}

BigInt sum_abs_mobius(int n) {
  if (n < 1 || n > 10) throw size_error("sum_abs_mobius: n must be in [1,10]");
  BigInt total = 0;
  for (const auto& pi : enumerate_partitions(n)) total += abs(mobius_closed_form(pi));
  return total;
}

namespace {

// mu over all comparable pairs of the full lattice, indexed into `parts`.
std::vector<std::vector<BigInt>> mobius_table(const std::vector<SetPartition>& parts) {
  const std::size_t m = parts.size();
  std::vector<std::vector<char>> leq(m, std::vector<char>(m, 0));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) leq[i][j] = refines(parts[i], parts[j]) ? 1 : 0;
  std::vector<std::size_t> order(m);
  for (std::size_t i = 0; i < m; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return parts[a].block_count() > parts[b].block_count();
  });
  std::vector<std::vector<BigInt>> mu(m, std::vector<BigInt>(m, 0));
  for (std::size_t si = 0; si < m; ++si) {
    for (std::size_t oj = 0; oj < m; ++oj) {
      std::size_t pj = order[oj];
      if (!leq[si][pj]) continue;
      if (pj == si) {
        mu[si][pj] = 1;
        continue;
      }
      BigInt acc = 0;
      for (std::size_t oi = 0; oi < oj; ++oi) {
        std::size_t ri = order[oi];
        if (leq[si][ri] && leq[ri][pj] && ri != pj) acc += mu[si][ri];
      }
      mu[si][pj] = -acc;
    }
  }
  return mu;
}

template <typename V>
bool values_match(const std::vector<V>& a, const std::vector<V>& b);

template <>
bool values_match(const std::vector<BigRat>& a, const std::vector<BigRat>& b) {
  return a == b;
}

template <>
bool values_match(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    double scale = std::max({std::abs(a[i]), std::abs(b[i]), 1.0});
    if (std::abs(a[i] - b[i]) > 1e-12 * scale) return false;
  }
  return true;
}

template <typename V>
bool verify_inversion_impl(int n, const std::function<std::vector<V>(const SetPartition&)>& phi,
                           InversionDirection direction) {
  if (n < 1 || n > 8) throw size_error("verify_inversion: n must be in [1,8]");
  auto parts = enumerate_partitions(n);
  const std::size_t m = parts.size();
  auto mu = mobius_table(parts);
  std::vector<std::vector<V>> phiv(m);
  for (std::size_t i = 0; i < m; ++i) phiv[i] = phi(parts[i]);
  const std::size_t dim = phiv[0].size();

  auto below = [&](std::size_t i, std::size_t j) { return refines(parts[i], parts[j]); };
  for (std::size_t s = 0; s < m; ++s) {
    std::vector<V> recovered(dim, V(0));
    if (direction == InversionDirection::Down) {
      // Psi(sigma) = sum_{pi <= sigma} Phi(pi);  Phi(sigma) = sum_{pi <= sigma} mu(pi,sigma) Psi(pi)
      for (std::size_t p = 0; p < m; ++p) {
        if (!below(p, s)) continue;
        std::vector<V> psi(dim, V(0));
        for (std::size_t q = 0; q < m; ++q)
          if (below(q, p))
            for (std::size_t d = 0; d < dim; ++d) psi[d] += phiv[q][d];
        V coeff = static_cast<V>(mu[p][s]);
        for (std::size_t d = 0; d < dim; ++d) recovered[d] += coeff * psi[d];
      }
    } else {
      for (std::size_t p = 0; p < m; ++p) {
        if (!below(s, p)) continue;
        std::vector<V> psi(dim, V(0));
        for (std::size_t q = 0; q < m; ++q)
          if (below(p, q))
            for (std::size_t d = 0; d < dim; ++d) psi[d] += phiv[q][d];
        V coeff = static_cast<V>(mu[s][p]);
        for (std::size_t d = 0; d < dim; ++d) recovered[d] += coeff * psi[d];
      }
    }
    if (!values_match<V>(recovered, phiv[s])) return false;
  }
  return true;
}

}  // namespace

bool verify_inversion(int n, const std::function<std::vector<BigRat>(const SetPartition&)>& phi,
                      InversionDirection direction) {
  return verify_inversion_impl<BigRat>(n, phi, direction);
}

bool verify_inversion(int n, const std::function<std::vector<double>(const SetPartition&)>& phi,
                      InversionDirection direction) {
  return verify_inversion_impl<double>(n, phi, direction);
}

}  // namespace porthos
