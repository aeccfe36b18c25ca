#include "porthos/families.hpp"

#include <cmath>
#include <numbers>
#include <random>
#include <set>

namespace porthos {

double uniform_double(std::uint64_t word) {
  return static_cast<double>(word >> 11) * 0x1.0p-53;
}

cplx gaussian_pair(std::uint64_t w1, std::uint64_t w2) {
  // Box-Muller; explicit so results do not depend on the standard library's
  // distribution implementation
  const double u1 = uniform_double(w1);
  const double u2 = uniform_double(w2);
  const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
  const double a = 2.0 * std::numbers::pi * u2;
  return {r * std::cos(a), r * std::sin(a)};
}

TracialFamily dyadic_martingale(int depth, std::uint64_t seed) {
  if (depth < 1 || depth > 12) throw std::invalid_argument("dyadic_martingale: depth must be in [1,12]");
  const int atoms = 1 << depth;
  std::mt19937_64 rng(seed);
  std::vector<double> f(static_cast<std::size_t>(atoms));
  for (auto& v : f) v = 2.0 * uniform_double(rng()) - 1.0;

  auto conditional = [&](int level) {
    // E_level f: average over blocks of 2^{depth-level} atoms
    std::vector<double> e(static_cast<std::size_t>(atoms));
    const int block = 1 << (depth - level);
    for (int b = 0; b < atoms; b += block) {
      double mean = 0.0;
      for (int j = 0; j < block; ++j) mean += f[static_cast<std::size_t>(b + j)];
      mean /= block;
      for (int j = 0; j < block; ++j) e[static_cast<std::size_t>(b + j)] = mean;
    }
    return e;
  };

  TracialFamily fam;
  fam.dim = atoms;
  std::vector<double> prev = conditional(0);
  for (int n = 1; n <= depth; ++n) {
    std::vector<double> cur = conditional(n);
    std::vector<cplx> diag(static_cast<std::size_t>(atoms));
    for (int a = 0; a < atoms; ++a)
      diag[static_cast<std::size_t>(a)] = cur[static_cast<std::size_t>(a)] - prev[static_cast<std::size_t>(a)];
    fam.elements.push_back(TracialElement::diagonal(atoms, std::move(diag)));
    prev = std::move(cur);
  }
  return fam;
}

TracialFamily spin_system(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("spin_system: n must be in [1,8]");
  const TracialElement X = TracialElement::dense(2, {cplx{0, 0}, cplx{1, 0}, cplx{1, 0}, cplx{0, 0}});
  const TracialElement Z = TracialElement::diagonal(2, {cplx{1, 0}, cplx{-1, 0}});
  const TracialElement I2 = TracialElement::identity(2);
  TracialFamily fam;
  fam.dim = 1 << n;
  for (int k = 1; k <= n; ++k) {
    TracialElement x = TracialElement::identity(1);
    for (int j = 1; j <= n; ++j) {
      const TracialElement& factor = j < k ? Z : (j == k ? X : I2);
      x = kronecker(x, factor);
    }
    fam.elements.push_back(std::move(x));
  }
  return fam;
}

TracialFamily cyclic_fourier(int modulus, const std::vector<std::vector<int>>& blocks,
                             const std::map<int, cplx>& coeffs) {
  if (modulus < 1 || modulus > 4096) throw std::invalid_argument("cyclic_fourier: modulus must be in [1,4096]");
  std::set<int> seen;
  for (const auto& block : blocks)
    for (int t : block) {
      const int tm = ((t % modulus) + modulus) % modulus;
      if (!seen.insert(tm).second) throw std::invalid_argument("cyclic_fourier: overlapping blocks");
    }
  TracialFamily fam;
  fam.dim = modulus;
  for (const auto& block : blocks) {
    std::vector<cplx> diag(static_cast<std::size_t>(modulus), cplx{});
    for (int t : block) {
      auto it = coeffs.find(t);
      const cplx a = it == coeffs.end() ? cplx{} : it->second;
      const long long tm = ((static_cast<long long>(t) % modulus) + modulus) % modulus;
      for (int xi = 0; xi < modulus; ++xi) {
        const double ang = 2.0 * std::numbers::pi * static_cast<double>(tm * xi % modulus) / modulus;
        diag[static_cast<std::size_t>(xi)] += a * std::polar(1.0, ang);
      }
    }
    fam.elements.push_back(TracialElement::diagonal(modulus, std::move(diag)));
  }
  return fam;
}

TracialElement shift_power_dense(int modulus, int t) {
  TracialElement s = TracialElement::dense(modulus);
  const int tm = ((t % modulus) + modulus) % modulus;
  for (int j = 0; j < modulus; ++j) s.set((j + tm) % modulus, j, cplx{1.0, 0.0});
  return s;
}

TracialElement fourier_mode_projection(int modulus, int j) {
  if (j < 0 || j >= modulus) throw std::invalid_argument("fourier_mode_projection: mode out of range");
  std::vector<cplx> diag(static_cast<std::size_t>(modulus), cplx{});
  diag[static_cast<std::size_t>(j)] = {1.0, 0.0};
  return TracialElement::diagonal(modulus, std::move(diag));
}

TracialFamily rademacher(int n, const std::vector<cplx>& coeffs) {
  if (n < 1 || n > 12) throw std::invalid_argument("rademacher: n must be in [1,12]");
  if (static_cast<int>(coeffs.size()) != n)
    throw std::invalid_argument("rademacher: need one coefficient per sign variable");
  const int atoms = 1 << n;
  TracialFamily fam;
  fam.dim = atoms;
  for (int i = 0; i < n; ++i) {
    std::vector<cplx> diag(static_cast<std::size_t>(atoms));
    for (int w = 0; w < atoms; ++w) {
      const double sign = (w >> i) & 1 ? -1.0 : 1.0;
      diag[static_cast<std::size_t>(w)] = coeffs[static_cast<std::size_t>(i)] * sign;
    }
    fam.elements.push_back(TracialElement::diagonal(atoms, std::move(diag)));
  }
  return fam;
}

TracialFamily random_control(int count, int dim, std::uint64_t seed) {
  if (count < 1 || dim < 1) throw std::invalid_argument("random_control: count and dim must be positive");
  std::mt19937_64 rng(seed);
  TracialFamily fam;
  fam.dim = dim;
  for (int e = 0; e < count; ++e) {
    std::vector<cplx> a(static_cast<std::size_t>(dim) * dim);
    for (auto& v : a) v = gaussian_pair(rng(), rng());
    fam.elements.push_back(TracialElement::dense(dim, std::move(a)));
  }
  return fam;
}

}  // namespace porthos
