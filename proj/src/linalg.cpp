#include "gincoh/linalg.hpp"

#include <utility>

#include "gincoh/error.hpp"

namespace gincoh::linalg {

std::size_t rank(IntMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  Integer prev_pivot = 1;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    for (std::size_t i = r + 1; i < m; ++i) {
      for (std::size_t j = col + 1; j < n; ++j) {
        rows[i][j] = (rows[r][col] * rows[i][j] - rows[i][col] * rows[r][j]);
        mpz_divexact(rows[i][j].get_mpz_t(), rows[i][j].get_mpz_t(), prev_pivot.get_mpz_t());
      }
      rows[i][col] = 0;
    }
    prev_pivot = rows[r][col];
    ++r;
  }
  return r;
}

std::size_t rank(QMatrix rows) {
  if (rows.empty()) return 0;
  const std::size_t m = rows.size();
  const std::size_t n = rows.front().size();
  std::size_t r = 0;
  for (std::size_t col = 0; col < n && r < m; ++col) {
    std::size_t pivot = r;
    while (pivot < m && rows[pivot][col] == 0) ++pivot;
    if (pivot == m) continue;
    std::swap(rows[pivot], rows[r]);
    const Rational inv = 1 / rows[r][col];
    for (std::size_t i = r + 1; i < m; ++i) {
      if (rows[i][col] == 0) continue;
      const Rational factor = rows[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) {
        if (rows[r][j] != 0) rows[i][j] -= factor * rows[r][j];
      }
    }
    ++r;
  }
  return r;
}

Rational determinant(QMatrix a) {
  const std::size_t n = a.size();
  Rational det = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      std::swap(a[pivot], a[col]);
      det = -det;
    }
    det *= a[col][col];
    const Rational inv = 1 / a[col][col];
    for (std::size_t i = col + 1; i < n; ++i) {
      if (a[i][col] == 0) continue;
      const Rational factor = a[i][col] * inv;
      for (std::size_t j = col; j < n; ++j) a[i][j] -= factor * a[col][j];
    }
  }
  return det;
}

QMatrix inverse(const QMatrix& square) {
  const std::size_t n = square.size();
  QMatrix a = square;
  QMatrix inv(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == 0) ++pivot;
    if (pivot == n) throw Error(ErrorCode::kSingularMatrix, "matrix is singular");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    const Rational scale = 1 / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] *= scale;
      inv[col][j] *= scale;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      const Rational factor = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= factor * a[col][j];
        inv[i][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

QMatrix multiply(const QMatrix& a, const QMatrix& b) {
  if (a.empty()) return {};
  const std::size_t inner = b.size();
  if (a.front().size() != inner) throw Error(ErrorCode::kInvalidArgument, "matrix shapes do not match");
  const std::size_t cols = inner == 0 ? 0 : b.front().size();
  QMatrix out(a.size(), std::vector<Rational>(cols));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < inner; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) out[i][j] += a[i][k] * b[k][j];
    }
  return out;
}

}  // namespace gincoh::linalg
