#pragma once

// Dense little matrices over Q(q); weight spaces are tiny, so plain
// Gauss-Jordan is all we need.

#include <qshuffle/laurent.hpp>

#include <stdexcept>
#include <vector>

namespace qsh {

template <typename T>
using Mat = std::vector<std::vector<T>>;

template <typename T>
Mat<T> mat_identity(std::size_t n, const T& one, const T& zero) {
  Mat<T> m(n, std::vector<T>(n, zero));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = one;
  return m;
}

inline Mat<RationalQ> rq_identity(std::size_t n) {
  return mat_identity<RationalQ>(n, RationalQ::one(), RationalQ{});
}

inline Mat<RationalQ> rq_mul(const Mat<RationalQ>& a, const Mat<RationalQ>& b) {
  const std::size_t n = a.size(), m = b.empty() ? 0 : b[0].size(), k = b.size();
  Mat<RationalQ> r(n, std::vector<RationalQ>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      RationalQ s;
      for (std::size_t t = 0; t < k; ++t) s += a[i][t] * b[t][j];
      r[i][j] = s;
    }
  return r;
}

/// Gauss-Jordan inverse; throws on singular input.
inline Mat<RationalQ> rq_inverse(Mat<RationalQ> a) {
  const std::size_t n = a.size();
  Mat<RationalQ> inv = rq_identity(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col].is_zero()) ++piv;
    if (piv == n) throw std::runtime_error("rq_inverse: singular matrix");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    const RationalQ d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col].is_zero()) continue;
      const RationalQ f = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

/// Solve a x = b for a single right-hand side.
inline std::vector<RationalQ> rq_solve(const Mat<RationalQ>& a, const std::vector<RationalQ>& b) {
  Mat<RationalQ> inv = rq_inverse(a);
  std::vector<RationalQ> x(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) {
    RationalQ s;
    for (std::size_t j = 0; j < b.size(); ++j) s += inv[i][j] * b[j];
    x[i] = s;
  }
  return x;
}

}  // namespace qsh
