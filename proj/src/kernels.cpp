#include "porthos/kernels.hpp"

namespace porthos::kernels {

void matmul_serial(const std::complex<double>* a, const std::complex<double>* b,
                   std::complex<double>* c, int n) {
  for (int i = 0; i < n; ++i) {
    std::complex<double>* ci = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) ci[j] = {0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const std::complex<double> aik = a[static_cast<std::size_t>(i) * n + k];
      const std::complex<double>* bk = b + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

void matmul(const std::complex<double>* a, const std::complex<double>* b,
            std::complex<double>* c, int n) {
#pragma omp parallel for schedule(static)
  for (int i = 0; i < n; ++i) {
    std::complex<double>* ci = c + static_cast<std::size_t>(i) * n;
    for (int j = 0; j < n; ++j) ci[j] = {0.0, 0.0};
    for (int k = 0; k < n; ++k) {
      const std::complex<double> aik = a[static_cast<std::size_t>(i) * n + k];
      const std::complex<double>* bk = b + static_cast<std::size_t>(k) * n;
      for (int j = 0; j < n; ++j) ci[j] += aik * bk[j];
    }
  }
}

}  // namespace porthos::kernels
