#include "porthos/expansion.hpp"

#include <algorithm>

namespace porthos {

PartitionType type_of(const SetPartition& pi) {
  PartitionType t;
  for (const auto& b : pi.blocks()) t.push_back(static_cast<int>(b.size()));
  std::sort(t.begin(), t.end(), std::greater<int>());
  return t;
}

ExpansionIdentity build_identity(int n) {
  if (n < 2 || n > 10) throw size_error("build_identity: n must be in [2,10]");
  ExpansionIdentity id;
  id.n = n;
  const SetPartition zero = SetPartition::singletons(n);
  for (auto& pi : enumerate_partitions(n)) {
    if (pi == zero) continue;
    BigInt mu = mobius_closed_form(pi);
    id.terms.emplace_back(std::move(pi), std::move(mu));
  }
  return id;
}

namespace {

// mu(0, pi) for any pi of the given type, and the number of set partitions of
// that type: n! / (prod lambda_j! * prod mult_s!).
BigInt mu_of_type(const PartitionType& lambda) {
  BigInt m = 1;
  for (int part : lambda) {
    BigInt f = factorial(static_cast<unsigned>(part - 1));
    if (part % 2 == 0) f = -f;
    m *= f;
  }
  return m;
}

BigInt count_of_type(int n, const PartitionType& lambda) {
  BigInt c = factorial(static_cast<unsigned>(n));
  for (int part : lambda) c /= factorial(static_cast<unsigned>(part));
  int run = 1;
  for (std::size_t i = 1; i <= lambda.size(); ++i) {
    if (i < lambda.size() && lambda[i] == lambda[i - 1]) {
      ++run;
    } else {
      c /= factorial(static_cast<unsigned>(run));
      run = 1;
    }
  }
  return c;
}

void integer_partitions(int n, int max_part, PartitionType& cur,
                        std::vector<PartitionType>& out) {
  if (n == 0) {
    out.push_back(cur);
    return;
  }
  for (int part = std::min(n, max_part); part >= 1; --part) {
    cur.push_back(part);
    integer_partitions(n - part, part, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::map<PartitionType, BigInt> commutative_coefficients(int p) {
  if (p < 2 || p > 10 || p % 2 != 0)
    throw std::invalid_argument("commutative_coefficients: p must be even in [2,10]");
  std::vector<PartitionType> lambdas;
  PartitionType cur;
  integer_partitions(p, p, cur, lambdas);
  std::map<PartitionType, BigInt> table;
  for (const auto& lambda : lambdas) {
    if (static_cast<int>(lambda.size()) == p) continue;  // injective term, coefficient +1
    table[lambda] = -mu_of_type(lambda) * count_of_type(p, lambda);
  }
  return table;
}

std::pair<BigInt, BigInt> coefficient_bounds(int p, int r) {
  if (p < 2 || p > 10 || p % 2 != 0)
    throw std::invalid_argument("coefficient_bounds: p must be even in [2,10]");
  if (r < 0 || r > p - 1) throw std::invalid_argument("coefficient_bounds: r out of range");
  const SetPartition zero = SetPartition::singletons(p);
  BigInt a = 0;
  for (const auto& pi : enumerate_partitions(p)) {
    if (pi == zero) continue;
    if (pi.profile()[1] != r) continue;
    a += abs(mobius_closed_form(pi));
  }
  BigInt bound = binomial(static_cast<unsigned>(p), static_cast<unsigned>(r)) *
                 factorial(static_cast<unsigned>(p - r));
  return {a, bound};
}

}  // namespace porthos
