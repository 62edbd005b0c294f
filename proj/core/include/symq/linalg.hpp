#pragma once

// Dense exact linear algebra over Q and Q(q).

#include <stdexcept>
#include <vector>

#include "symq/qcoeff.hpp"

namespace symq {

template <class T>
using Matrix = std::vector<std::vector<T>>;

inline bool is_zero_value(const Rational& x) { return x == 0; }
inline bool is_zero_value(const QRat& x) { return x.is_zero(); }

class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Gauss-Jordan inverse; the pivot in each column is the first nonzero
/// entry at or below the diagonal.
template <class T>
Matrix<T> invert(Matrix<T> a) {
  const std::size_t n = a.size();
  Matrix<T> inv(n, std::vector<T>(n, T(0)));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = T(1);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && is_zero_value(a[pivot][col])) ++pivot;
    if (pivot == n) throw SingularMatrix("matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const T scale = T(1) / a[col][col];
    for (std::size_t k = 0; k < n; ++k) {
      if (!is_zero_value(a[col][k])) a[col][k] *= scale;
      if (!is_zero_value(inv[col][k])) inv[col][k] *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || is_zero_value(a[r][col])) continue;
      const T factor = a[r][col];
      for (std::size_t k = 0; k < n; ++k) {
        if (!is_zero_value(a[col][k])) a[r][k] -= factor * a[col][k];
        if (!is_zero_value(inv[col][k])) inv[r][k] -= factor * inv[col][k];
      }
    }
  }
  return inv;
}

}  // namespace symq
