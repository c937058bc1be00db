#pragma once

#include <string>
#include <vector>

#include "cesaro/common.hpp"

namespace cesaro {

/// Dense N×N matrix with 1-based accessors.
template <class T>
struct TruncatedMatrix {
  Index N = 0;
  std::vector<T> data;
  std::string provenance;

  TruncatedMatrix() = default;
  TruncatedMatrix(Index n, std::string source) : N(n), data(n * n, T(0)), provenance(std::move(source)) {}

  T& operator()(Index n, Index m) { return data[(n - 1) * N + (m - 1)]; }
  const T& operator()(Index n, Index m) const { return data[(n - 1) * N + (m - 1)]; }
};

template <class T>
TruncatedMatrix<T> identity_matrix(Index N) {
  TruncatedMatrix<T> I(N, "identity");
  for (Index n = 1; n <= N; ++n) I(n, n) = T(1);
  return I;
}

template <class T>
TruncatedMatrix<T> multiply(const TruncatedMatrix<T>& a, const TruncatedMatrix<T>& b) {
  if (a.N != b.N) throw DomainError("matrix dimensions differ");
  TruncatedMatrix<T> c(a.N, a.provenance + "*" + b.provenance);
  for (Index n = 1; n <= a.N; ++n) {
    for (Index j = 1; j <= a.N; ++j) {
      const T& x = a(n, j);
      if (x == T(0)) continue;
      for (Index m = 1; m <= a.N; ++m) {
        if (b(j, m) == T(0)) continue;
        c(n, m) += x * b(j, m);
      }
    }
  }
  return c;
}

/// Applies an N×N matrix to a length-N vector.
template <class T>
std::vector<T> apply(const TruncatedMatrix<T>& a, const std::vector<T>& x) {
  if (x.size() != a.N) throw DomainError("vector length does not match matrix");
  std::vector<T> y(a.N, T(0));
  for (Index n = 1; n <= a.N; ++n) {
    for (Index m = 1; m <= a.N; ++m) y[n - 1] += a(n, m) * x[m - 1];
  }
  return y;
}

}  // namespace cesaro
