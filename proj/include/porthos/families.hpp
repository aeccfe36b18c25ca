#pragma once

#include <cstdint>
#include <map>

#include "porthos/tracial.hpp"

namespace porthos {

// Dyadic martingale differences d_n = E_n f - E_{n-1} f of a seeded function f
// on 2^depth atoms, as diagonal matrices. sum d_n = f - E_0 f exactly.
TracialFamily dyadic_martingale(int depth, std::uint64_t seed);

// Jordan-Wigner spin system: n anti-commuting self-adjoint unitaries in
// dimension 2^n, x_k = Z^(k-1) (x) X (x) 1^(n-k).
TracialFamily spin_system(int n);

// Circulant family over Z_N, realized in the Fourier basis where every
// shift power is diagonal: d_i has diagonal sum_{t in Lambda_i} a_t w^{t xi}.
// Word traces and Schatten norms agree with the dense circulant picture.
TracialFamily cyclic_fourier(int modulus, const std::vector<std::vector<int>>& blocks,
                             const std::map<int, cplx>& coeffs);

// Dense circulant realization of a single shift power (small N; test oracle).
TracialElement shift_power_dense(int modulus, int t);

// Rank-one projection onto Fourier mode j, in the same basis cyclic_fourier
// uses (so it is diagonal).
TracialElement fourier_mode_projection(int modulus, int j);

// Independent signs: d_i = a_i eps_i on the 2^n sign vectors, diagonal.
TracialFamily rademacher(int n, const std::vector<cplx>& coeffs);

// Seeded complex Gaussian matrices; generically not p-orthogonal.
TracialFamily random_control(int count, int dim, std::uint64_t seed);

// Deterministic helpers shared by the generators and the harness.
double uniform_double(std::uint64_t word);                  // [0,1) from a PRNG word
cplx gaussian_pair(std::uint64_t w1, std::uint64_t w2);     // standard complex Gaussian

}  // namespace porthos
