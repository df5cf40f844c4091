#pragma once

#include <cstddef>
#include <vector>

#include "gincoh/ring.hpp"

namespace gincoh::linalg {

// Dense row-major matrices; every routine here is exact.
using IntMatrix = std::vector<std::vector<Integer>>;
using QMatrix = std::vector<std::vector<Rational>>;

// Rank by fraction-free (Bareiss) elimination.
std::size_t rank(IntMatrix rows);
// Rank by Gaussian elimination over Q.
std::size_t rank(QMatrix rows);

Rational determinant(QMatrix square);
// Throws Error(kSingularMatrix) if not invertible.
QMatrix inverse(const QMatrix& square);
QMatrix multiply(const QMatrix& a, const QMatrix& b);

}  // namespace gincoh::linalg
