#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace porthos {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

inline BigInt factorial(unsigned n) {
  BigInt f = 1;
  for (unsigned i = 2; i <= n; ++i) f *= i;
  return f;
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigInt b = 1;
  for (unsigned i = 0; i < k; ++i) {
    b *= n - i;
    b /= i + 1;
  }
  return b;
}

// Falling factorial n(n-1)...(n-k+1).
inline BigInt falling(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt f = 1;
  for (unsigned i = 0; i < k; ++i) f *= n - i;
  return f;
}

}  // namespace porthos
