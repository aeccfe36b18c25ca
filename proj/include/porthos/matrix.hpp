#pragma once

#include <complex>
#include <vector>

#include "porthos/errors.hpp"

namespace porthos {

using cplx = std::complex<double>;

// A square complex matrix, either dense row-major or diagonal. The diagonal
// layout exists so large commutative families (circulants in the Fourier
// basis, dyadic martingales, Rademacher systems) stay O(N) per product.
class TracialElement {
 public:
  TracialElement() = default;

  static TracialElement dense(int dim);
  static TracialElement dense(int dim, std::vector<cplx> row_major);
  static TracialElement diagonal(int dim, std::vector<cplx> diag);
  static TracialElement identity(int dim, bool diag = true);

  int dim() const { return dim_; }
  bool is_diagonal() const { return diagonal_; }
  const std::vector<cplx>& data() const { return a_; }
  std::vector<cplx>& data() { return a_; }

  cplx at(int i, int j) const {
    if (diagonal_) return i == j ? a_[static_cast<std::size_t>(i)] : cplx{};
    return a_[static_cast<std::size_t>(i) * dim_ + j];
  }
  void set(int i, int j, cplx v);

  TracialElement adjoint() const;
  TracialElement to_dense() const;

  cplx trace_raw() const;  // un-normalized trace
  double frobenius() const;
  bool all_finite() const;

  TracialElement& operator+=(const TracialElement& o);
  TracialElement& operator-=(const TracialElement& o);
  friend TracialElement operator+(TracialElement a, const TracialElement& b) { return a += b; }
  friend TracialElement operator-(TracialElement a, const TracialElement& b) { return a -= b; }
  friend TracialElement operator*(const TracialElement& a, const TracialElement& b);
  friend TracialElement operator*(cplx s, TracialElement a);

 private:
  int dim_ = 0;
  bool diagonal_ = true;
  std::vector<cplx> a_;
};

// a^k by repeated multiplication, k >= 0.
TracialElement matrix_power(const TracialElement& a, int k);

// Kronecker product (dense unless both diagonal).
TracialElement kronecker(const TracialElement& a, const TracialElement& b);

}  // namespace porthos
