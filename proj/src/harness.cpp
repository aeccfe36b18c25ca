#include "porthos/harness.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <random>

#include "porthos/families.hpp"
#include "porthos/groups.hpp"

namespace porthos {

using nlohmann::json;

json VerificationRecord::to_json(bool with_runtime) const {
  json j{{"name", name},
         {"inputs", inputs},
         {"quantities", quantities},
         {"pass", pass},
         {"expected_fail", expected_fail}};
  if (!witness.is_null()) j["witness"] = witness;
  if (with_runtime) j["runtime_ms"] = runtime_ms;
  return j;
}

json VerificationReport::to_json(bool with_runtime) const {
  json recs = json::array();
  for (const auto& r : records) recs.push_back(r.to_json(with_runtime));
  return json{{"schema_version", kReportSchemaVersion},
              {"version", version},
              {"seed", seed},
              {"suite", suite},
              {"aggregate_pass", aggregate_pass},
              {"records", std::move(recs)}};
}

SublemmaMargin sublemma23_margin(int p) {
  if (p < 2 || p > 40 || p % 2 != 0)
    throw std::invalid_argument("sublemma23_margin: p must be even in [2,40]");
  // f(t) = sum_{k=1..p} C(p,k) k! t^k, strictly increasing on t > 0
  std::vector<double> coeff(static_cast<std::size_t>(p) + 1, 0.0);
  for (int k = 1; k <= p; ++k)
    coeff[static_cast<std::size_t>(k)] =
        (binomial(static_cast<unsigned>(p), static_cast<unsigned>(k)) *
         factorial(static_cast<unsigned>(k)))
            .convert_to<double>();
  auto f = [&](double t) {
    double acc = 0.0;
    for (int k = p; k >= 1; --k) acc = (acc + coeff[static_cast<std::size_t>(k)]) * t;
    return acc;
  };
  double lo = 1.0 / (4.0 * p), hi = 1.0;
  if (f(lo) >= 1.0 || f(hi) < 1.0) throw numerical_error("sublemma23_margin: bracket invalid");
  while (hi - lo > 1e-12 * lo) {
    const double mid = 0.5 * (lo + hi);
    (f(mid) < 1.0 ? lo : hi) = mid;
  }
  SublemmaMargin out;
  out.t_star = 0.5 * (lo + hi);
  out.inv_t_star = 1.0 / out.t_star;
  out.bound = 2.0 * p;
  out.ratio = out.inv_t_star / out.bound;
  out.pass = out.ratio <= 1.0 + 1e-9;
  return out;
}

namespace {

void validate_projections(const std::vector<TracialElement>& projections, int dim) {
  if (projections.empty()) throw std::invalid_argument("theorem41_check: no projections");
  TracialElement sum = projections.front();
  for (std::size_t j = 1; j < projections.size(); ++j) sum += projections[j];
  const TracialElement eye = TracialElement::identity(dim, sum.is_diagonal());
  if ((sum - eye).frobenius() > 1e-10 * std::sqrt(static_cast<double>(dim)))
    throw std::invalid_argument("theorem41_check: projections do not sum to identity");
  for (const auto& proj : projections) {
    if (proj.dim() != dim) throw std::invalid_argument("theorem41_check: projection dimension mismatch");
    if ((proj * proj - proj).frobenius() > 1e-8 * std::max(1.0, proj.frobenius()))
      throw std::invalid_argument("theorem41_check: projection not idempotent");
    if ((proj - proj.adjoint()).frobenius() > 1e-8 * std::max(1.0, proj.frobenius()))
      throw std::invalid_argument("theorem41_check: projection not self-adjoint");
  }
}

// N(d) = max over projections of the number of injective star words x_g with
// P_j x_g numerically nonzero.
std::uint64_t projection_count(const TracialFamily& d,
                               const std::vector<TracialElement>& projections, int q) {
  const int m = d.size();
  std::uint64_t words = 1;
  for (int k = 0; k < q; ++k) {
    words *= static_cast<std::uint64_t>(m);
    if (words > 1'000'000) throw size_error("theorem41_check: enumeration guard exceeded");
  }
  const StarPattern pattern = StarPattern::alternating(q);
  std::vector<std::uint64_t> count(projections.size(), 0);
  std::vector<int> g(static_cast<std::size_t>(q));
  for (std::uint64_t rank = 0; rank < words; ++rank) {
    std::uint64_t r = rank;
    bool injective = true;
    for (int k = 0; k < q; ++k) {
      g[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::uint64_t>(m));
      r /= static_cast<std::uint64_t>(m);
      for (int j = 0; j < k; ++j)
        injective = injective && g[static_cast<std::size_t>(j)] != g[static_cast<std::size_t>(k)];
    }
    if (!injective) continue;
    TracialElement word;
    double scale = 1.0;
    bool first = true;
    for (int k = 0; k < q; ++k) {
      const TracialElement& el = d.elements[static_cast<std::size_t>(g[static_cast<std::size_t>(k)])];
      scale *= el.frobenius();
      TracialElement factor = pattern.flagged(k) ? el.adjoint() : el;
      word = first ? std::move(factor) : word * factor;
      first = false;
    }
    for (std::size_t j = 0; j < projections.size(); ++j)
      if ((projections[j] * word).frobenius() > 1e-10 * scale) ++count[j];
  }
  std::uint64_t best = 0;
  for (std::uint64_t c : count) best = std::max(best, c);
  return best;
}

}  // namespace

VerificationRecord theorem41_check(const TracialFamily& d,
                                   const std::vector<TracialElement>& projections, int p) {
  if (p < 4 || p % 2 != 0) throw std::invalid_argument("theorem41_check: p must be even > 2");
  d.validate();
  validate_projections(projections, d.dim);
  const int q = p / 2;
  const std::uint64_t n_d = projection_count(d, projections, q);
  const double lhs = schatten_norm_even(d.sum(), p);
  const double s = square_function_norms(d, p).s_dp;
  const double constant = std::pow(4.0 * static_cast<double>(n_d), 1.0 / p) +
                          static_cast<double>(p) * 9.0 * std::numbers::pi / 8.0;
  const double rhs = constant * s;
  VerificationRecord rec;
  rec.name = "theorem41";
  rec.inputs = json{{"p", p}, {"index_count", d.size()}, {"dim", d.dim},
                    {"projections", projections.size()}};
  const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? HUGE_VAL : 0.0);
  rec.quantities = json{{"N_d", n_d}, {"lhs", lhs}, {"s_dp", s},
                        {"constant", constant}, {"rhs", rhs}, {"ratio", ratio}};
  rec.pass = ratio <= 1.0 + 1e-9;
  return rec;
}

VerificationRecord corollary42_check(int modulus, const std::vector<int>& lambda,
                                     const std::map<int, cplx>& coeffs, int p) {
  if (p < 4 || p % 2 != 0) throw std::invalid_argument("corollary42_check: p must be even > 2");
  const int q = p / 2;
  std::vector<GroupElement> set;
  for (int t : lambda) set.push_back(GroupElement::mod(t, modulus));
  const NqResult nq = count_Nq(set, q);

  std::vector<std::vector<int>> blocks;
  for (int t : lambda) blocks.push_back({t});
  const TracialFamily fam = cyclic_fourier(modulus, blocks, coeffs);

  const double lhs = schatten_norm_even(fam.sum(), p);
  const double s = square_function_norms(fam, p).s_dp;
  const double constant = std::pow(4.0 * static_cast<double>(nq.n_q), 1.0 / p) +
                          static_cast<double>(p) * 9.0 * std::numbers::pi / 8.0;
  const double rhs = constant * s;

  // cross-check against the Fourier-mode count: P_j here is the L_2 projection
  // onto frequency j, so P_j x_g is the j-th Fourier coefficient of the word
  std::uint64_t n_d = 0;
  {
    std::vector<std::uint64_t> count(static_cast<std::size_t>(modulus), 0);
    const int m = fam.size();
    std::uint64_t words = 1;
    for (int k = 0; k < q; ++k) {
      words *= static_cast<std::uint64_t>(m);
      if (words > 1'000'000) throw size_error("corollary42_check: enumeration guard exceeded");
    }
    const StarPattern word_pattern = StarPattern::alternating(q);
    std::vector<int> g(static_cast<std::size_t>(q));
    for (std::uint64_t rank = 0; rank < words; ++rank) {
      std::uint64_t r = rank;
      bool injective = true;
      for (int k = 0; k < q; ++k) {
        g[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::uint64_t>(m));
        r /= static_cast<std::uint64_t>(m);
        for (int i = 0; i < k; ++i)
          injective = injective && g[static_cast<std::size_t>(i)] != g[static_cast<std::size_t>(k)];
      }
      if (!injective) continue;
      TracialElement word;
      double scale = 1.0;
      bool first = true;
      for (int k = 0; k < q; ++k) {
        const TracialElement& el = fam.elements[static_cast<std::size_t>(g[static_cast<std::size_t>(k)])];
        scale *= el.frobenius() / std::sqrt(static_cast<double>(modulus));
        TracialElement factor = word_pattern.flagged(k) ? el.adjoint() : el;
        word = first ? std::move(factor) : word * factor;
        first = false;
      }
      const auto& diag = word.data();
      for (int j = 0; j < modulus; ++j) {
        cplx coeff{};
        for (int xi = 0; xi < modulus; ++xi) {
          const double ang = -2.0 * std::numbers::pi * static_cast<double>(j) * xi / modulus;
          coeff += diag[static_cast<std::size_t>(xi)] * std::polar(1.0, ang);
        }
        if (std::abs(coeff) / modulus > 1e-10 * scale) ++count[static_cast<std::size_t>(j)];
      }
    }
    for (std::uint64_t c : count) n_d = std::max(n_d, c);
  }

  VerificationRecord rec;
  rec.name = "corollary42";
  rec.inputs = json{{"modulus", modulus}, {"set", lambda}, {"p", p}};
  const double ratio = rhs > 0.0 ? lhs / rhs : (lhs > 0.0 ? HUGE_VAL : 0.0);
  rec.quantities = json{{"N_q", nq.n_q}, {"N_d_projection", n_d},
                        {"lhs", lhs}, {"s_ap", s}, {"constant", constant},
                        {"rhs", rhs}, {"ratio", ratio},
                        {"projection_count_le_arithmetic", n_d <= nq.n_q}};
  rec.pass = ratio <= 1.0 + 1e-9 && n_d <= nq.n_q;
  return rec;
}

namespace {

// coordinate tensor with exact rational entries; empty means "zero of unknown
// shape" so it can seed an accumulation
struct RatTensor {
  std::vector<BigRat> c;
  RatTensor& operator+=(const RatTensor& o) {
    if (c.empty()) {
      c = o.c;
      return *this;
    }
    if (o.c.empty()) return *this;
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
};

BigRat rat_pow(const BigRat& x, int k) {
  BigRat r = 1;
  for (int i = 0; i < k; ++i) r *= x;
  return r;
}

}  // namespace

VerificationRecord tensor_identity_check(const std::vector<int>& dims, int family_size, int p,
                                         std::uint64_t seed) {
  if (p < 2 || p > 4 || static_cast<int>(dims.size()) != p)
    throw std::invalid_argument("tensor_identity_check: need one dimension per factor, p <= 4");
  for (int d : dims)
    if (d < 1 || d > 3) throw size_error("tensor_identity_check: coordinate dims must be <= 3");
  if (family_size < 1 || family_size > 3)
    throw size_error("tensor_identity_check: family size must be <= 3");

  std::mt19937_64 rng(seed);
  auto rand_rat = [&]() {
    const long long num = static_cast<long long>(rng() % 19) - 9;
    const long long den = static_cast<long long>(rng() % 9) + 1;
    return BigRat(num, den);
  };

  // d[k][i] is the i-th family member in the k-th factor space
  std::vector<std::vector<std::vector<BigRat>>> d(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    d[static_cast<std::size_t>(k)].resize(static_cast<std::size_t>(family_size));
    for (int i = 0; i < family_size; ++i) {
      auto& vec = d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)];
      vec.resize(static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]));
      for (auto& v : vec) v = rand_rat();
    }
  }
  std::vector<std::vector<BigRat>> f(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    auto& fk = f[static_cast<std::size_t>(k)];
    fk.assign(static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]), BigRat(0));
    for (int i = 0; i < family_size; ++i)
      for (std::size_t j = 0; j < fk.size(); ++j)
        fk[j] += d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][j];
  }

  std::size_t total = 1;
  for (int dim : dims) total *= static_cast<std::size_t>(dim);
  auto tensor_of = [&](const std::vector<const std::vector<BigRat>*>& slots) {
    RatTensor t;
    t.c.assign(total, BigRat(0));
    for (std::size_t flat = 0; flat < total; ++flat) {
      std::size_t r = flat;
      BigRat prod = 1;
      for (int k = p - 1; k >= 0; --k) {
        const std::size_t dk = static_cast<std::size_t>(dims[static_cast<std::size_t>(k)]);
        prod *= (*slots[static_cast<std::size_t>(k)])[r % dk];
        r /= dk;
      }
      t.c[flat] = std::move(prod);
    }
    return t;
  };

  std::vector<const std::vector<BigRat>*> slots(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) slots[static_cast<std::size_t>(k)] = &f[static_cast<std::size_t>(k)];
  const RatTensor lhs_tensor = tensor_of(slots);

  auto oracle = [&](const std::vector<int>& g) {
    std::vector<const std::vector<BigRat>*> sel(static_cast<std::size_t>(p));
    for (int k = 0; k < p; ++k)
      sel[static_cast<std::size_t>(k)] =
          &d[static_cast<std::size_t>(k)][static_cast<std::size_t>(g[static_cast<std::size_t>(k)])];
    return tensor_of(sel);
  };

  RatTensor phi0 = evaluate_phi0<RatTensor>(oracle, p, family_size, /*parallel=*/false);
  if (phi0.c.empty()) phi0.c.assign(total, BigRat(0));
  RatTensor expansion = phi0;
  for (const auto& [pi, mu] : build_identity(p).terms) {
    RatTensor psi = evaluate_psi<RatTensor>(pi, oracle, family_size, /*parallel=*/false);
    if (psi.c.empty()) continue;
    const BigRat coeff(mu);
    for (std::size_t i = 0; i < total; ++i) expansion.c[i] -= coeff * psi.c[i];
  }
  bool exact = true;
  for (std::size_t i = 0; i < total; ++i) exact = exact && expansion.c[i] == lhs_tensor.c[i];

  // S_k by exact expectation over all sign vectors, Euclidean norm
  std::vector<double> s_k(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    BigRat acc = 0;
    const std::size_t signs = std::size_t{1} << family_size;
    for (std::size_t eps = 0; eps < signs; ++eps) {
      BigRat norm2 = 0;
      for (int j = 0; j < dims[static_cast<std::size_t>(k)]; ++j) {
        BigRat coord = 0;
        for (int i = 0; i < family_size; ++i) {
          const BigRat& v =
              d[static_cast<std::size_t>(k)][static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
          if ((eps >> i) & 1)
            coord -= v;
          else
            coord += v;
        }
        norm2 += coord * coord;
      }
      acc += rat_pow(norm2, p / 2);
    }
    acc /= BigRat(static_cast<long long>(signs));
    s_k[static_cast<std::size_t>(k)] = std::pow(acc.convert_to<double>(), 1.0 / p);
  }
  std::vector<double> f_norm(static_cast<std::size_t>(p));
  for (int k = 0; k < p; ++k) {
    BigRat n2 = 0;
    for (const auto& v : f[static_cast<std::size_t>(k)]) n2 += v * v;
    f_norm[static_cast<std::size_t>(k)] = std::sqrt(n2.convert_to<double>());
  }
  // right side: sum over subsets A with |A| <= p-2
  double rhs = 0.0;
  for (std::uint32_t mask = 0; mask < (1u << p); ++mask) {
    const int card = std::popcount(mask);
    if (card > p - 2) continue;
    double term = factorial(static_cast<unsigned>(p - card)).convert_to<double>();
    for (int k = 0; k < p; ++k)
      term *= (mask >> k) & 1 ? f_norm[static_cast<std::size_t>(k)] : s_k[static_cast<std::size_t>(k)];
    rhs += term;
  }
  // Euclidean crossnorm of the deviation is a valid lower bound for the
  // projective norm on the left side
  double dev2 = 0.0;
  for (std::size_t i = 0; i < total; ++i) {
    const double v = (lhs_tensor.c[i] - phi0.c[i]).convert_to<double>();
    dev2 += v * v;
  }
  const double lower = std::sqrt(dev2);

  VerificationRecord rec;
  rec.name = "tensor_identity";
  rec.inputs = json{{"dims", dims}, {"family_size", family_size}, {"p", p}, {"seed", seed}};
  rec.quantities = json{{"identity_exact", exact},
                        {"max_coordinate_error", 0.0},
                        {"euclidean_lower", lower},
                        {"rhs", rhs},
                        {"s_k", s_k}};
  rec.pass = exact && lower <= rhs * (1.0 + 1e-9);
  return rec;
}

}  // namespace porthos
