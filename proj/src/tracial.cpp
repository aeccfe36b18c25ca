#include "porthos/tracial.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace porthos {

TracialElement TracialFamily::sum() const {
  validate();
  TracialElement s = elements.front();
  for (std::size_t i = 1; i < elements.size(); ++i) s += elements[i];
  return s;
}

void TracialFamily::validate() const {
  if (elements.empty()) throw std::invalid_argument("TracialFamily: empty family");
  for (const auto& e : elements) {
    if (e.dim() != dim) throw std::invalid_argument("TracialFamily: dimension mismatch");
    if (!e.all_finite()) throw std::invalid_argument("TracialFamily: non-finite entry");
  }
}

cplx normalized_trace(const TracialElement& x) {
  return x.trace_raw() / static_cast<double>(x.dim());
}

double schatten_norm_even(const TracialElement& x, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("schatten_norm_even: p must be even >= 2");
  const TracialElement y = x.adjoint() * x;
  const TracialElement z = matrix_power(y, p / 2);
  const double t = normalized_trace(z).real();
  return std::pow(std::max(t, 0.0), 1.0 / p);
}

SpectralDecomposition hermitian_eigenvalues(const TracialElement& x) {
  const int n = x.dim();
  SpectralDecomposition out;
  const double fro = x.frobenius();
  if (x.is_diagonal()) {
    for (const auto& v : x.data())
      if (std::abs(v.imag()) > 1e-12 * std::max(fro, 1e-300))
        throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
    for (const auto& v : x.data()) out.eigenvalues.push_back(v.real());
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.residual = 0.0;
    return out;
  }
  {
    const TracialElement diff = x - x.adjoint();
    if (diff.frobenius() > 1e-12 * std::max(fro, 1e-300))
      throw std::invalid_argument("hermitian_eigenvalues: input not Hermitian");
  }
  std::vector<cplx> h = x.data();
  auto at = [&](int i, int j) -> cplx& { return h[static_cast<std::size_t>(i) * n + j]; };
  auto off_mass = [&]() {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        if (i != j) s += std::norm(at(i, j));
    return std::sqrt(s);
  };
  const double target = 1e-12 * std::max(fro, 1e-300);
  int sweep = 0;
  while (off_mass() > target) {
    if (++sweep > 100) throw numerical_error("hermitian_eigenvalues: Jacobi did not converge");
    for (int p = 0; p < n; ++p)
      for (int q = p + 1; q < n; ++q) {
        const cplx hpq = at(p, q);
        const double g = std::abs(hpq);
        if (g <= target / n) continue;
        const double phi = std::arg(hpq);
        const double a = at(p, p).real();
        const double b = at(q, q).real();
        const double theta = 0.5 * std::atan2(2.0 * g, a - b);
        const double c = std::cos(theta), s = std::sin(theta);
        const cplx eip = std::polar(1.0, phi);   // e^{i phi}
        const cplx emip = std::conj(eip);
        // H <- U* H U with U the phased rotation on the (p,q) plane
        for (int i = 0; i < n; ++i) {
          const cplx hip = at(i, p), hiq = at(i, q);
          at(i, p) = c * hip + s * emip * hiq;
          at(i, q) = -s * hip + c * emip * hiq;
        }
        for (int j = 0; j < n; ++j) {
          const cplx hpj = at(p, j), hqj = at(q, j);
          at(p, j) = c * hpj + s * eip * hqj;
          at(q, j) = -s * hpj + c * eip * hqj;
        }
      }
  }
  for (int i = 0; i < n; ++i) out.eigenvalues.push_back(at(i, i).real());
  std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
  out.residual = off_mass();
  return out;
}

double schatten_norm_general(const TracialElement& x, double t) {
  if (t < 1.0) throw std::invalid_argument("schatten_norm_general: t must be >= 1");
  const auto eig = hermitian_eigenvalues(x.adjoint() * x);
  double acc = 0.0;
  for (double lam : eig.eigenvalues) acc += std::pow(std::sqrt(std::max(lam, 0.0)), t);
  return std::pow(acc / x.dim(), 1.0 / t);
}

namespace {

TracialElement one_sided_sum(const TracialFamily& d, bool star_left) {
  TracialElement acc = star_left ? d.elements.front().adjoint() * d.elements.front()
                                 : d.elements.front() * d.elements.front().adjoint();
  for (std::size_t i = 1; i < d.elements.size(); ++i)
    acc += star_left ? d.elements[i].adjoint() * d.elements[i]
                     : d.elements[i] * d.elements[i].adjoint();
  return acc;
}

double even_root_trace(const TracialElement& hermitian_sum, int p) {
  // || X^{1/2} ||_p = tau(X^{p/2})^{1/p} for even p
  const double t = normalized_trace(matrix_power(hermitian_sum, p / 2)).real();
  return std::pow(std::max(t, 0.0), 1.0 / p);
}

double general_root_trace(const TracialElement& hermitian_sum, double s) {
  const auto eig = hermitian_eigenvalues(hermitian_sum);
  double acc = 0.0;
  for (double lam : eig.eigenvalues) acc += std::pow(std::sqrt(std::max(lam, 0.0)), s);
  return std::pow(acc / hermitian_sum.dim(), 1.0 / s);
}

}  // namespace

SquareFunctionNorms square_function_norms(const TracialFamily& d, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("square_function_norms: p must be even >= 2");
  d.validate();
  const TracialElement left = one_sided_sum(d, true);
  const TracialElement right = one_sided_sum(d, false);
  SquareFunctionNorms out;
  out.norm_sym = even_root_trace(left + right, p);
  out.s_dp = std::max(even_root_trace(left, p), even_root_trace(right, p));
  return out;
}

double square_function_general(const TracialFamily& d, double s) {
  d.validate();
  return std::max(general_root_trace(one_sided_sum(d, true), s),
                  general_root_trace(one_sided_sum(d, false), s));
}

cplx star_word_moment(const TracialFamily& d, const std::vector<int>& g,
                      const StarPattern& pattern) {
  if (static_cast<int>(g.size()) != pattern.length())
    throw std::invalid_argument("star_word_moment: word/pattern length mismatch");
  TracialElement prod;
  bool first = true;
  for (std::size_t k = 0; k < g.size(); ++k) {
    const int idx = g[k];
    if (idx < 0 || idx >= d.size()) throw std::invalid_argument("star_word_moment: index out of range");
    TracialElement factor = pattern.flagged(static_cast<int>(k)) ? d.elements[static_cast<std::size_t>(idx)].adjoint()
                                                                 : d.elements[static_cast<std::size_t>(idx)];
    prod = first ? std::move(factor) : prod * factor;
    first = false;
  }
  return normalized_trace(prod);
}

namespace {

bool next_injective(std::vector<int>& g, std::vector<bool>& used, int m) {
  // lexicographic successor over injective words; returns false when exhausted
  const int p = static_cast<int>(g.size());
  int k = p - 1;
  while (k >= 0) {
    used[static_cast<std::size_t>(g[static_cast<std::size_t>(k)])] = false;
    int next = g[static_cast<std::size_t>(k)] + 1;
    while (next < m && used[static_cast<std::size_t>(next)]) ++next;
    if (next < m) {
      g[static_cast<std::size_t>(k)] = next;
      used[static_cast<std::size_t>(next)] = true;
      for (int j = k + 1; j < p; ++j) {
        int v = 0;
        while (used[static_cast<std::size_t>(v)]) ++v;
        g[static_cast<std::size_t>(j)] = v;
        used[static_cast<std::size_t>(v)] = true;
      }
      return true;
    }
    --k;
  }
  return false;
}

bool first_injective(std::vector<int>& g, std::vector<bool>& used, int m) {
  const int p = static_cast<int>(g.size());
  if (m < p) return false;
  for (int k = 0; k < p; ++k) {
    g[static_cast<std::size_t>(k)] = k;
    used[static_cast<std::size_t>(k)] = true;
  }
  return true;
}

}  // namespace

OrthogonalityResult is_p_orthogonal(const TracialFamily& d, int p, double tol) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("is_p_orthogonal: p must be even >= 2");
  d.validate();
  const int m = d.size();
  OrthogonalityResult out;
  if (m < p) {
    out.orthogonal = true;  // vacuous
    return out;
  }
  if (falling(static_cast<unsigned>(m), static_cast<unsigned>(p)) > BigInt(kOracleGuard))
    throw size_error("is_p_orthogonal: enumeration guard exceeded");
  std::vector<double> fro(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) fro[static_cast<std::size_t>(i)] = d.elements[static_cast<std::size_t>(i)].frobenius();
  const StarPattern pattern = StarPattern::alternating(p);
  std::vector<int> g(static_cast<std::size_t>(p));
  std::vector<bool> used(static_cast<std::size_t>(m), false);
  bool more = first_injective(g, used, m);
  while (more) {
    double scale = 1.0;
    for (int v : g) scale *= fro[static_cast<std::size_t>(v)];
    const double moment = std::abs(star_word_moment(d, g, pattern));
    if (moment > tol * scale) {
      out.orthogonal = false;
      out.witness = g;
      return out;
    }
    more = next_injective(g, used, m);
  }
  out.orthogonal = true;
  return out;
}

MainInequalityResult check_main_inequality(const TracialFamily& d, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("check_main_inequality: p must be even >= 2");
  d.validate();
  MainInequalityResult r;
  r.lhs = schatten_norm_even(d.sum(), p);
  const auto sq = square_function_norms(d, p);
  r.s_dp = sq.s_dp;
  r.norm_sym = sq.norm_sym;
  r.constant = 1.5 * std::numbers::pi * p;
  r.rhs = r.constant * r.s_dp;
  r.ratio = r.rhs > 0.0 ? r.lhs / r.rhs : (r.lhs > 0.0 ? HUGE_VAL : 0.0);
  r.pass = r.ratio <= 1.0 + 1e-9;
  r.commutative = true;
  for (const auto& e : d.elements) r.commutative = r.commutative && e.is_diagonal();
  if (r.commutative) {
    const double s_norm = even_root_trace(one_sided_sum(d, true), p);
    r.commutative_rhs = 2.0 * p * s_norm;
    r.commutative_ratio = r.commutative_rhs > 0.0 ? r.lhs / r.commutative_rhs
                                                  : (r.lhs > 0.0 ? HUGE_VAL : 0.0);
    r.pass = r.pass && r.commutative_ratio <= 1.0 + 1e-9;
  }
  return r;
}

double h_norm(const TracialFamily& d, int p) {
  if (p < 2 || p % 2 != 0) throw std::invalid_argument("h_norm: p must be even >= 2");
  d.validate();
  double acc = 0.0;
  for (const auto& e : d.elements) acc += std::pow(schatten_norm_even(e, p), p);
  return std::pow(acc, 1.0 / p);
}

Lemma36Result lemma36_check(const std::vector<TracialFamily>& families,
                            const Permutation& perm, double t) {
  const int p = static_cast<int>(families.size());
  const int q = perm.size();
  if (p != 2 * q) throw std::invalid_argument("lemma36_check: need 2q families");
  if (t < 1.0) throw std::invalid_argument("lemma36_check: t must be >= 1");
  if (!is_noncrossing(pair_partition_of_permutation(perm)))
    throw std::invalid_argument("lemma36_check: permutation is not non-crossing");
  for (const auto& f : families) f.validate();
  const int m = families.front().size();
  const int dim = families.front().dim;
  for (const auto& f : families)
    if (f.size() != m || f.dim != dim)
      throw std::invalid_argument("lemma36_check: families must share index set and dimension");
  std::uint64_t count = 1;
  for (int k = 0; k < q; ++k) {
    count *= static_cast<std::uint64_t>(m);
    if (count > 1'000'000) throw size_error("lemma36_check: enumeration guard exceeded");
  }
  TracialElement acc;
  bool first_term = true;
  std::vector<int> idx(static_cast<std::size_t>(q), 0);
  for (std::uint64_t rank = 0; rank < count; ++rank) {
    std::uint64_t r = rank;
    for (int k = 0; k < q; ++k) {
      idx[static_cast<std::size_t>(k)] = static_cast<int>(r % static_cast<std::uint64_t>(m));
      r /= static_cast<std::uint64_t>(m);
    }
    TracialElement prod;
    bool first = true;
    for (int k = 0; k < q; ++k) {
      const TracialElement& a =
          families[static_cast<std::size_t>(2 * k)].elements[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])];
      const TracialElement& b =
          families[static_cast<std::size_t>(2 * k + 1)]
              .elements[static_cast<std::size_t>(idx[static_cast<std::size_t>(perm.images[static_cast<std::size_t>(k)])])];
      prod = first ? a * b : prod * (a * b);
      first = false;
    }
    acc = first_term ? std::move(prod) : acc + prod;
    first_term = false;
  }
  Lemma36Result out;
  out.lhs = schatten_norm_general(acc, t);
  out.rhs = 1.0;
  for (const auto& f : families) out.rhs *= square_function_general(f, static_cast<double>(p) * t);
  out.ratio = out.rhs > 0.0 ? out.lhs / out.rhs : (out.lhs > 0.0 ? HUGE_VAL : 0.0);
  out.pass = out.ratio <= 1.0 + 1e-9;
  return out;
}

}  // namespace porthos
