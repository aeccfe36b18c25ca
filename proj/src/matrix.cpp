#include "porthos/matrix.hpp"

#include <cmath>

#include "porthos/kernels.hpp"

namespace porthos {

TracialElement TracialElement::dense(int dim) {
  TracialElement x;
  x.dim_ = dim;
  x.diagonal_ = false;
  x.a_.assign(static_cast<std::size_t>(dim) * dim, cplx{});
  return x;
}

TracialElement TracialElement::dense(int dim, std::vector<cplx> row_major) {
  if (static_cast<std::size_t>(dim) * dim != row_major.size())
    throw std::invalid_argument("TracialElement::dense: size mismatch");
  TracialElement x;
  x.dim_ = dim;
  x.diagonal_ = false;
  x.a_ = std::move(row_major);
  return x;
}

TracialElement TracialElement::diagonal(int dim, std::vector<cplx> diag) {
  if (static_cast<std::size_t>(dim) != diag.size())
    throw std::invalid_argument("TracialElement::diagonal: size mismatch");
  TracialElement x;
  x.dim_ = dim;
  x.diagonal_ = true;
  x.a_ = std::move(diag);
  return x;
}

TracialElement TracialElement::identity(int dim, bool diag) {
  if (diag) return diagonal(dim, std::vector<cplx>(static_cast<std::size_t>(dim), cplx{1.0, 0.0}));
  TracialElement x = dense(dim);
  for (int i = 0; i < dim; ++i) x.a_[static_cast<std::size_t>(i) * dim + i] = {1.0, 0.0};
  return x;
}

void TracialElement::set(int i, int j, cplx v) {
  if (diagonal_) {
    if (i == j) {
      a_[static_cast<std::size_t>(i)] = v;
      return;
    }
    *this = to_dense();
  }
  a_[static_cast<std::size_t>(i) * dim_ + j] = v;
}

TracialElement TracialElement::adjoint() const {
  TracialElement x = *this;
  if (diagonal_) {
    for (auto& v : x.a_) v = std::conj(v);
    return x;
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = 0; j < dim_; ++j)
      x.a_[static_cast<std::size_t>(j) * dim_ + i] =
          std::conj(a_[static_cast<std::size_t>(i) * dim_ + j]);
  return x;
}

TracialElement TracialElement::to_dense() const {
  if (!diagonal_) return *this;
  TracialElement x = dense(dim_);
  for (int i = 0; i < dim_; ++i) x.a_[static_cast<std::size_t>(i) * dim_ + i] = a_[static_cast<std::size_t>(i)];
  return x;
}

cplx TracialElement::trace_raw() const {
  cplx t{};
  if (diagonal_) {
    for (const auto& v : a_) t += v;
  } else {
    for (int i = 0; i < dim_; ++i) t += a_[static_cast<std::size_t>(i) * dim_ + i];
  }
  return t;
}

double TracialElement::frobenius() const {
  double s = 0.0;
  for (const auto& v : a_) s += std::norm(v);
  return std::sqrt(s);
}

bool TracialElement::all_finite() const {
  for (const auto& v : a_)
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
  return true;
}

TracialElement& TracialElement::operator+=(const TracialElement& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("TracialElement: dimension mismatch");
  if (diagonal_ == o.diagonal_) {
    for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += o.a_[i];
    return *this;
  }
  if (diagonal_) *this = to_dense();
  const TracialElement od = o.to_dense();
  for (std::size_t i = 0; i < a_.size(); ++i) a_[i] += od.a_[i];
  return *this;
}

TracialElement& TracialElement::operator-=(const TracialElement& o) {
  return *this += cplx{-1.0, 0.0} * o;
}

TracialElement operator*(cplx s, TracialElement a) {
  for (auto& v : a.a_) v *= s;
  return a;
}

TracialElement operator*(const TracialElement& a, const TracialElement& b) {
  if (a.dim_ != b.dim_) throw std::invalid_argument("TracialElement: dimension mismatch");
  const int n = a.dim_;
  if (a.diagonal_ && b.diagonal_) {
    std::vector<cplx> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = a.a_[static_cast<std::size_t>(i)] * b.a_[static_cast<std::size_t>(i)];
    return TracialElement::diagonal(n, std::move(d));
  }
  if (a.diagonal_) {
    TracialElement c = b.to_dense();
    for (int i = 0; i < n; ++i) {
      const cplx s = a.a_[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) c.a_[static_cast<std::size_t>(i) * n + j] *= s;
    }
    return c;
  }
  if (b.diagonal_) {
    TracialElement c = a;
    for (int j = 0; j < n; ++j) {
      const cplx s = b.a_[static_cast<std::size_t>(j)];
      for (int i = 0; i < n; ++i) c.a_[static_cast<std::size_t>(i) * n + j] *= s;
    }
    return c;
  }
  TracialElement c = TracialElement::dense(n);
  kernels::matmul(a.a_.data(), b.a_.data(), c.a_.data(), n);
  return c;
}

TracialElement matrix_power(const TracialElement& a, int k) {
  if (k < 0) throw std::invalid_argument("matrix_power: negative exponent");
  TracialElement r = TracialElement::identity(a.dim(), a.is_diagonal());
  for (int i = 0; i < k; ++i) r = r * a;
  return r;
}

TracialElement kronecker(const TracialElement& a, const TracialElement& b) {
  const int na = a.dim(), nb = b.dim();
  if (a.is_diagonal() && b.is_diagonal()) {
    std::vector<cplx> d(static_cast<std::size_t>(na) * nb);
    for (int i = 0; i < na; ++i)
      for (int j = 0; j < nb; ++j)
        d[static_cast<std::size_t>(i) * nb + j] = a.data()[static_cast<std::size_t>(i)] * b.data()[static_cast<std::size_t>(j)];
    return TracialElement::diagonal(na * nb, std::move(d));
  }
  TracialElement c = TracialElement::dense(na * nb);
  for (int i1 = 0; i1 < na; ++i1)
    for (int j1 = 0; j1 < na; ++j1) {
      const cplx aij = a.at(i1, j1);
      if (aij == cplx{}) continue;
      for (int i2 = 0; i2 < nb; ++i2)
        for (int j2 = 0; j2 < nb; ++j2)
          c.set(i1 * nb + i2, j1 * nb + j2, aij * b.at(i2, j2));
    }
  return c;
}

}  // namespace porthos
