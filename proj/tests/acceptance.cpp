// one pass/fail line per acceptance criterion; exit status is the number of
// failures
#include <chrono>
#include <cmath>
#include <cstdio>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "porthos/families.hpp"
#include "porthos/groups.hpp"
#include "porthos/harness.hpp"

using namespace porthos;
using clock_type = std::chrono::steady_clock;

namespace {

int failures = 0;

void report(int num, const char* what, bool pass, double seconds) {
  std::printf("criterion %2d: %s  (%.1f s)  %s\n", num, pass ? "PASS" : "FAIL", seconds, what);
  if (!pass) ++failures;
}

template <typename Body>
void criterion(int num, const char* what, double time_limit_s, Body&& body) {
  const auto t0 = clock_type::now();
  bool pass = false;
  try {
    pass = body();
  } catch (const std::exception& e) {
    std::printf("criterion %2d: exception: %s\n", num, e.what());
  }
  const double s = std::chrono::duration<double>(clock_type::now() - t0).count();
  report(num, what, pass && s < time_limit_s, s);
}

bool subset_collision(const std::vector<long long>& vals, int p) {
  const int m = static_cast<int>(vals.size());
  std::vector<std::pair<std::uint32_t, long long>> subsets;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    int card = 0;
    long long sum = 0;
    for (int i = 0; i < m; ++i)
      if ((mask >> i) & 1) {
        ++card;
        sum += vals[static_cast<std::size_t>(i)];
      }
    if (card == p / 2) subsets.emplace_back(mask, sum);
  }
  for (const auto& [ma, sa] : subsets)
    for (const auto& [mb, sb] : subsets)
      if ((ma & mb) == 0 && sa == sb) return true;
  return false;
}

}  // namespace

int main() {
  criterion(1, "closed-form Mobius equals the defining recursion, n <= 7", 60.0, [] {
    for (int n = 1; n <= 7; ++n) {
      const SetPartition zero = SetPartition::singletons(n);
      for (const auto& pi : enumerate_partitions(n))
        if (mobius_closed_form(pi) != mobius_recursive(zero, pi)) return false;
    }
    return true;
  });

  criterion(2, "sum of |mu| over P_n equals n!, n <= 8", 60.0, [] {
    for (int n = 1; n <= 8; ++n)
      if (sum_abs_mobius(n) != factorial(static_cast<unsigned>(n))) return false;
    return true;
  });

  criterion(3, "p=4 coefficients {+6,-8,-3,+6}; p=6 identity on 25 rational substitutions", 60.0, [] {
    const std::map<PartitionType, BigInt> want{{{4}, 6}, {{3, 1}, -8}, {{2, 2}, -3}, {{2, 1, 1}, 6}};
    if (commutative_coefficients(4) != want) return false;
    const int p = 6, m = 7;
    const auto coeffs = commutative_coefficients(p);
    std::mt19937_64 rng(2026);
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<BigRat> d(m);
      for (auto& v : d)
        v = BigRat(static_cast<long long>(rng() % 19) - 9, static_cast<long long>(rng() % 9) + 1);
      BigRat total = 0;
      for (const auto& v : d) total += v;
      BigRat lhs = 1;
      for (int k = 0; k < p; ++k) lhs *= total;
      std::vector<BigRat> elem(static_cast<std::size_t>(p) + 1, BigRat(0));
      elem[0] = 1;
      for (const auto& v : d)
        for (int k = p; k >= 1; --k)
          elem[static_cast<std::size_t>(k)] += v * elem[static_cast<std::size_t>(k - 1)];
      BigRat rhs = BigRat(factorial(static_cast<unsigned>(p))) * elem[static_cast<std::size_t>(p)];
      for (const auto& [type, c] : coeffs) {
        BigRat term(c);
        for (int s : type) {
          BigRat ps = 0;
          for (const auto& v : d) {
            BigRat w = 1;
            for (int k = 0; k < s; ++k) w *= v;
            ps += w;
          }
          term *= ps;
        }
        rhs += term;
      }
      if (lhs != rhs) return false;
    }
    return true;
  });

  criterion(4, "matrix expansion round trip, 20 seeded families, rel err <= 1e-9", 120.0, [] {
    std::mt19937_64 rng(11);
    for (int t = 0; t < 20; ++t) {
      const int dim = 2 + t % 5;
      const int m = 2 + t % 4;
      const int p = 2 * (1 + t % 3);
      const TracialFamily fam = random_control(m, dim, rng());
      const TracialElement f = fam.sum();
      const double direct = normalized_trace(matrix_power(f.adjoint() * f, p / 2)).real();
      const StarPattern pattern = StarPattern::alternating(p);
      auto oracle = [&](const std::vector<int>& g) { return star_word_moment(fam, g, pattern); };
      cplx expansion = evaluate_phi0<cplx>(oracle, p, m);
      for (const auto& [pi, mu] : build_identity(p).terms)
        expansion -= mu.convert_to<double>() * evaluate_psi<cplx>(pi, oracle, m);
      if (std::abs(expansion - cplx{direct, 0.0}) > 1e-9 * std::max(std::abs(direct), 1.0))
        return false;
    }
    return true;
  });

  criterion(5, "main inequality on martingale, spin, and circulant families", 300.0, [] {
    std::mt19937_64 rng(12);
    for (int t = 0; t < 20; ++t) {
      const auto r = check_main_inequality(dyadic_martingale(1 + t % 6, rng()), t % 2 ? 6 : 4);
      if (!r.pass || !r.commutative) return false;
    }
    for (int n = 1; n <= 6; ++n)
      if (!check_main_inequality(spin_system(n), 4).pass) return false;
    const std::vector<int> lambda{1, 2, 4, 8, 16};
    std::vector<std::vector<int>> blocks;
    for (int v : lambda) blocks.push_back({v});
    std::vector<GroupElement> set;
    for (int v : lambda) set.push_back(GroupElement::integer(v));
    if (!is_p_dissociate(set, 4).dissociate) return false;
    for (int t = 0; t < 10; ++t) {
      std::map<int, cplx> coeffs;
      for (int v : lambda) coeffs[v] = gaussian_pair(rng(), rng());
      const auto r = check_main_inequality(cyclic_fourier(256, blocks, coeffs), 4);
      if (!r.pass || !r.commutative) return false;
    }
    return true;
  });

  criterion(6, "spin moment sum equals 2n - n^2, n <= 6", 120.0, [] {
    const StarPattern pattern = StarPattern::alternating(4);
    const std::map<int, double> spot{{2, 0.0}, {3, -3.0}, {4, -8.0}};
    for (int n = 1; n <= 6; ++n) {
      const TracialFamily fam = spin_system(n);
      cplx psi{};
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) psi += star_word_moment(fam, {i, j, i, j}, pattern);
      const double expected = 2.0 * n - static_cast<double>(n) * n;
      if (std::abs(psi - cplx{expected, 0.0}) > 1e-10) return false;
      if (spot.count(n) && std::abs(expected - spot.at(n)) > 0) return false;
    }
    return true;
  });

  criterion(7, "card(S^nc_q) equals Catalan(q), q = 2..6", 120.0, [] {
    const std::map<int, std::size_t> want{{2, 2}, {3, 5}, {4, 14}, {5, 42}, {6, 132}};
    for (const auto& [q, count] : want) {
      if (enumerate_Snc(q).size() != count) return false;
      if (catalan(q) != BigInt(static_cast<unsigned long long>(count))) return false;
    }
    return true;
  });

  criterion(8, "pair-partition count alpha_p matches the formula", 60.0, [] {
    const std::map<int, unsigned long long> want{{2, 1}, {4, 3}, {6, 15}, {8, 105}};
    for (const auto& [p, count] : want) {
      if (enumerate_pair_partitions(p).size() != count) return false;
      if (constants(p).alpha_p != BigInt(count)) return false;
    }
    return true;
  });

  criterion(9, "scalar-lemma root satisfies 1/t* <= 2p for even p <= 40", 5.0, [] {
    for (int p = 2; p <= 40; p += 2)
      if (!sublemma23_margin(p).pass) return false;
    return true;
  });

  criterion(10, "dissociate sets: powers of two pass (two oracles), {1,2,3,4} fails", 60.0, [] {
    for (int k = 2; k <= 7; ++k) {
      std::vector<GroupElement> set;
      std::vector<long long> vals;
      for (int i = 0; i <= k; ++i) {
        set.push_back(GroupElement::integer(1ll << i));
        vals.push_back(1ll << i);
      }
      for (int p : {4, 6}) {
        const bool exhaustive = is_p_dissociate(set, p).dissociate;
        const bool oracle =
            static_cast<int>(vals.size()) < p || !subset_collision(vals, p);
        if (!exhaustive || exhaustive != oracle) return false;
      }
    }
    std::vector<GroupElement> dense;
    for (long long v : {1, 2, 3, 4}) dense.push_back(GroupElement::integer(v));
    const auto r = is_p_dissociate(dense, 4);
    if (r.dissociate || !r.witness) return false;
    return alternating_product(*r.witness, StarPattern::alternating(4)).is_identity() &&
           subset_collision({1, 2, 3, 4}, 4);
  });

  criterion(11, "lacunary circulant bound: N_2 = 1 and 10 seeded families pass", 120.0, [] {
    std::vector<GroupElement> set;
    const std::vector<int> lambda{1, 2, 4, 8, 16};
    for (int v : lambda) set.push_back(GroupElement::mod(v, 256));
    if (count_Nq(set, 2).n_q != 1) return false;
    std::mt19937_64 rng(13);
    for (int t = 0; t < 10; ++t) {
      std::map<int, cplx> coeffs;
      for (int v : lambda) coeffs[v] = gaussian_pair(rng(), rng());
      const VerificationRecord rec = corollary42_check(256, lambda, coeffs, 4);
      if (!rec.pass) return false;
      if (!rec.quantities.at("projection_count_le_arithmetic").get<bool>()) return false;
    }
    return true;
  });

  criterion(12, "dyadic-block family in Z_1024: exhaustive orthogonality, then the bound", 120.0, [] {
    std::mt19937_64 rng(14);
    std::vector<std::vector<int>> blocks;
    std::map<int, cplx> coeffs;
    for (int i : {0, 2, 4, 6, 8}) {
      const int lo = 1 << i, size = 1 << i;
      std::vector<int> support;
      if (size <= 32) {
        for (int t = lo; t < lo + size; ++t) support.push_back(t);
      } else {
        std::set<int> chosen;
        while (static_cast<int>(chosen.size()) < 32)
          chosen.insert(lo + static_cast<int>(rng() % static_cast<std::uint64_t>(size)));
        support.assign(chosen.begin(), chosen.end());
      }
      for (int t : support) coeffs[t] = gaussian_pair(rng(), rng());
      blocks.push_back(std::move(support));
    }
    const TracialFamily fam = cyclic_fourier(1024, blocks, coeffs);
    if (!is_p_orthogonal(fam, 4, 1e-10).orthogonal) return false;
    const auto r = check_main_inequality(fam, 4);
    return r.pass && r.commutative;
  });

  criterion(13, "non-crossing word bound on 10 random tuples; Schatten paths agree", 120.0, [] {
    std::mt19937_64 rng(15);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<TracialFamily> families;
      for (int k = 0; k < 4; ++k) families.push_back(random_control(3, 4, rng()));
      Permutation perm;
      perm.images = trial % 2 ? std::vector<int>{1, 0} : std::vector<int>{0, 1};
      if (!lemma36_check(families, perm, trial % 4 < 2 ? 1.0 : 2.0).pass) return false;
    }
    for (const auto& x : random_control(5, 5, rng()).elements) {
      const double even = schatten_norm_even(x, 2);
      if (std::abs(even - schatten_norm_general(x, 2.0)) > 1e-9 * std::max(even, 1.0))
        return false;
    }
    return true;
  });

  criterion(14, "tensor-coordinate expansion exact; sign-average bound holds", 120.0, [] {
    const std::vector<std::tuple<std::vector<int>, int, int>> cases{
        {{2, 3}, 2, 2}, {{2, 3, 2, 3}, 3, 4}, {{3, 3, 3, 3}, 2, 4}};
    std::uint64_t seed = 16;
    for (const auto& [dims, m, p] : cases) {
      const VerificationRecord rec = tensor_identity_check(dims, m, p, seed++);
      if (!rec.pass || !rec.quantities.at("identity_exact").get<bool>()) return false;
    }
    return true;
  });

  // the two remaining criteria share the full suite runs
  SuiteConfig cfg;
  cfg.suite = "all";
  cfg.seed = 42;
  VerificationReport first, second;
  double suite_seconds = 0.0;
  {
    const auto t0 = clock_type::now();
    first = run_suite(cfg);
    suite_seconds = std::chrono::duration<double>(clock_type::now() - t0).count();
    second = run_suite(cfg);
  }

  criterion(15, "negative controls present, expected-fail, and the suite passes", 60.0, [&] {
    bool found_random = false, found_remark = false;
    for (const auto& rec : first.records) {
      if (rec.name == "control/random_not_orthogonal")
        found_random = rec.expected_fail && rec.pass && !rec.witness.is_null();
      if (rec.name == "control/no_lower_bound") found_remark = rec.expected_fail && rec.pass;
    }
    return found_random && found_remark && first.aggregate_pass;
  });

  {
    const bool identical = first.to_json(false).dump() == second.to_json(false).dump();
    report(16, "repeated full runs identical modulo timing; suite under 10 minutes",
           identical && first.aggregate_pass && suite_seconds < 600.0, suite_seconds);
  }

  std::printf("%s (%d failure%s)\n", failures ? "ACCEPTANCE FAIL" : "ACCEPTANCE PASS", failures,
              failures == 1 ? "" : "s");
  return failures;
}
