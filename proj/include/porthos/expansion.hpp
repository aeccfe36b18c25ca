#pragma once

#include <map>
#include <utility>
#include <vector>

#include "porthos/bigint.hpp"
#include "porthos/kernels.hpp"
#include "porthos/partition.hpp"

namespace porthos {

// Which positions of a word carry an adjoint/inverse/conjugate. The
// alternating pattern flags positions 1,3,5,... (1-based); for odd length the
// final position is flagged, which is exactly the omega-convention for
// length-q words.
struct StarPattern {
  std::vector<bool> adjoint_flags;

  static StarPattern alternating(int length) {
    StarPattern p;
    p.adjoint_flags.resize(static_cast<std::size_t>(length));
    for (int k = 0; k < length; ++k) p.adjoint_flags[static_cast<std::size_t>(k)] = (k % 2 == 0);
    return p;
  }
  static StarPattern none(int length) {
    StarPattern p;
    p.adjoint_flags.assign(static_cast<std::size_t>(length), false);
    return p;
  }
  int length() const { return static_cast<int>(adjoint_flags.size()); }
  bool flagged(int k) const { return adjoint_flags[static_cast<std::size_t>(k)]; }
};

// phi(F_1,...,F_n) = Phi(0) - sum_{0 < pi} mu(0,pi) Psi(pi): one signed term
// per non-minimal partition.
struct ExpansionIdentity {
  int n = 0;
  std::vector<std::pair<SetPartition, BigInt>> terms;
};

// Multiset of block sizes, kept sorted descending.
using PartitionType = std::vector<int>;

PartitionType type_of(const SetPartition& pi);

// Guard: 2 <= n <= 10.
ExpansionIdentity build_identity(int n);

// Coefficient table of the commutative power-sum identity
//   (sum d)^p = sum_injective + sum_lambda c_lambda prod_j (sum d^j)^{r_j}.
// The injective term (type 1^p) carries +1 and is not listed.
std::map<PartitionType, BigInt> commutative_coefficients(int p);

// a_r = sum of |mu(0,pi)| over pi > 0 with r singleton blocks, and the
// binomial-factorial bound C(p,r)(p-r)!. Guard: p <= 10, 0 <= r <= p-1.
std::pair<BigInt, BigInt> coefficient_bounds(int p, int r);

inline constexpr std::uint64_t kOracleGuard = 10'000'000;

// Sum of the oracle over all g constant on the blocks of pi, i.e. over the
// |I|^nu(pi) choices of one index per block. The oracle receives the full
// 0-based index word of length pi.n().
template <typename Scalar, typename Oracle>
Scalar evaluate_psi(const SetPartition& pi, Oracle&& oracle, int index_set_size,
                    bool parallel = true) {
  const int nu = pi.block_count();
  const int n = pi.n();
  const std::uint64_t m = static_cast<std::uint64_t>(index_set_size);
  std::uint64_t count = 1;
  for (int b = 0; b < nu; ++b) {
    count *= m;
    if (count > kOracleGuard) throw size_error("evaluate_psi: enumeration guard exceeded");
  }
  const auto& rgs = pi.rgs();
  auto term = [&](std::uint64_t rank) -> Scalar {
    std::vector<int> block_index(static_cast<std::size_t>(nu));
    std::uint64_t r = rank;
    for (int b = 0; b < nu; ++b) {
      block_index[static_cast<std::size_t>(b)] = static_cast<int>(r % m);
      r /= m;
    }
    std::vector<int> g(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) g[static_cast<std::size_t>(k)] = block_index[static_cast<std::size_t>(rgs[static_cast<std::size_t>(k)])];
    return oracle(g);
  };
  return parallel ? kernels::chunked_sum<Scalar>(count, term)
                  : kernels::chunked_sum_serial<Scalar>(count, term);
}

// Sum of the oracle over injective g only; zero when |I| < n.
template <typename Scalar, typename Oracle>
Scalar evaluate_phi0(Oracle&& oracle, int n, int index_set_size, bool parallel = true) {
  if (index_set_size < n) return Scalar{};
  const int m = index_set_size;
  std::uint64_t count = 1;
  for (int k = 0; k < n; ++k) {
    count *= static_cast<std::uint64_t>(m - k);
    if (count > kOracleGuard) throw size_error("evaluate_phi0: enumeration guard exceeded");
  }
  auto term = [&](std::uint64_t rank) -> Scalar {
    // decode rank as mixed radix (m, m-1, ..., m-n+1), then map each digit to
    // the digit-th unused index in ascending order
    std::vector<int> digit(static_cast<std::size_t>(n));
    std::uint64_t r = rank;
    for (int k = n - 1; k >= 0; --k) {
      const std::uint64_t radix = static_cast<std::uint64_t>(m - k);
      digit[static_cast<std::size_t>(k)] = static_cast<int>(r % radix);
      r /= radix;
    }
    std::vector<int> g(static_cast<std::size_t>(n));
    std::vector<bool> used(static_cast<std::size_t>(m), false);
    for (int k = 0; k < n; ++k) {
      int want = digit[static_cast<std::size_t>(k)];
      int idx = -1;
      for (int j = 0; j < m; ++j) {
        if (used[static_cast<std::size_t>(j)]) continue;
        if (want-- == 0) { idx = j; break; }
      }
      used[static_cast<std::size_t>(idx)] = true;
      g[static_cast<std::size_t>(k)] = idx;
    }
    return oracle(g);
  };
  return parallel ? kernels::chunked_sum<Scalar>(count, term)
                  : kernels::chunked_sum_serial<Scalar>(count, term);
}

}  // namespace porthos
