#pragma once

#include <optional>
#include <vector>

#include "porthos/expansion.hpp"
#include "porthos/matrix.hpp"
#include "porthos/noncrossing.hpp"

namespace porthos {

// A finite family (d_i) of N x N matrices under the normalized trace.
struct TracialFamily {
  int dim = 0;
  std::vector<TracialElement> elements;

  int size() const { return static_cast<int>(elements.size()); }
  TracialElement sum() const;
  void validate() const;  // nonempty, uniform dimension, finite entries
};

struct SpectralDecomposition {
  std::vector<double> eigenvalues;  // ascending
  double residual = 0.0;            // off-diagonal Frobenius mass left behind
};

cplx normalized_trace(const TracialElement& x);

// tau((x*x)^{p/2})^{1/p} via matrix powers; no eigendecomposition.
double schatten_norm_even(const TracialElement& x, int p);

// Cyclic Jacobi rotations, 1e-12 relative off-diagonal target, 100 sweeps max.
SpectralDecomposition hermitian_eigenvalues(const TracialElement& x);

// ((1/N) sum s_j^t)^{1/t} with s_j the singular values, via the eigensolver.
// Independent of the even-p path.
double schatten_norm_general(const TracialElement& x, double t);

struct SquareFunctionNorms {
  double norm_sym;  // || (sum d*d + dd*)^{1/2} ||_p
  double s_dp;      // max of the two one-sided norms
};

SquareFunctionNorms square_function_norms(const TracialFamily& d, int p);

// S(d, s) = max one-sided norm for a general exponent s >= 1 (eigenvalue path).
double square_function_general(const TracialFamily& d, double s);

cplx star_word_moment(const TracialFamily& d, const std::vector<int>& g,
                      const StarPattern& pattern);

struct OrthogonalityResult {
  bool orthogonal = false;
  std::optional<std::vector<int>> witness;  // 0-based index word
};

// Exhaustive check of tau(d*_{g1} d_{g2} ... d_{gp}) over injective g, with a
// scale-aware zero test: |moment| <= tol * prod_k ||d_{g(k)}||_F.
// Vacuously true when |I| < p. Guard: falling(|I|, p) <= 1e7.
OrthogonalityResult is_p_orthogonal(const TracialFamily& d, int p, double tol);

struct MainInequalityResult {
  double lhs = 0.0;         // || sum d_i ||_p
  double s_dp = 0.0;        // S(d, p)
  double norm_sym = 0.0;    // symmetric square-function norm
  double constant = 0.0;    // (3 pi / 2) p
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
  bool commutative = false;       // all elements simultaneously diagonal
  double commutative_rhs = 0.0;   // 2p ||S||_p, diagonal families only
  double commutative_ratio = 0.0;
};

MainInequalityResult check_main_inequality(const TracialFamily& d, int p);

// (sum_i ||d_i||_p^p)^{1/p}
double h_norm(const TracialFamily& d, int p);

struct Lemma36Result {
  double lhs = 0.0;
  double rhs = 0.0;
  double ratio = 0.0;
  bool pass = false;
};

// The non-crossing word bound: p = 2q families, perm in S^nc_q, exponent t.
// lhs is the t-norm of the brute-force sum, rhs the product of the pt-scale
// square-function norms. Guard: |I|^q <= 1e6.
Lemma36Result lemma36_check(const std::vector<TracialFamily>& families,
                            const Permutation& perm, double t);

}  // namespace porthos
