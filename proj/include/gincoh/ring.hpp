#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace gincoh {

using Integer = mpz_class;
using Rational = mpq_class;

// Exponent vector of a monomial in K[x_1..x_n]. Positions are 0-based
// (position k holds the exponent of x_{k+1}).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t n) : exponents_(n, 0) {}
  explicit Monomial(std::vector<int> exponents);

  // x_i for 1 <= i <= n.
  static Monomial variable(std::size_t n, std::size_t i);

  std::size_t ambient() const { return exponents_.size(); }
  int degree() const { return degree_; }
  int operator[](std::size_t k) const { return exponents_[k]; }
  std::span<const int> exponents() const { return exponents_; }

  bool is_one() const { return degree_ == 0; }
  bool is_squarefree() const;
  bool divides(const Monomial& other) const;

  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // this / divisor; requires divisor.divides(*this).
  Monomial quotient(const Monomial& divisor) const;
  // Same exponents in a ring with more variables (n' >= n).
  Monomial embed(std::size_t n) const;

  Monomial& operator*=(const Monomial& other);
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }
  bool operator==(const Monomial& other) const { return exponents_ == other.exponents_; }

  std::string to_string() const;

 private:
  std::vector<int> exponents_;
  int degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept;
};

// The only order the library uses: degree-refining reverse lexicographic
// with x_1 > x_2 > ... > x_n.
enum class TermOrder { kDegRevLex };

std::strong_ordering compare(const Monomial& u, const Monomial& v,
                             TermOrder order = TermOrder::kDegRevLex);

struct TermGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return compare(a, b) == std::strong_ordering::greater;
  }
};

// Sparse polynomial with exact rational coefficients; terms are kept in
// descending degrevlex order and no stored coefficient is zero.
class Polynomial {
 public:
  using TermMap = std::map<Monomial, Rational, TermGreater>;

  explicit Polynomial(std::size_t n = 0) : n_(n) {}
  explicit Polynomial(const Monomial& m, const Rational& c = 1);
  static Polynomial constant(std::size_t n, const Rational& c);

  std::size_t ambient() const { return n_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const TermMap& terms() const { return terms_; }

  // Requires a nonzero polynomial.
  const Monomial& leading_monomial() const;
  const Rational& leading_coefficient() const;
  int degree() const;
  bool is_homogeneous() const;
  bool is_monomial() const { return terms_.size() == 1; }

  void add_term(const Monomial& m, const Rational& c);
  // this += c * m * g
  void add_multiple(const Polynomial& g, const Rational& c, const Monomial& m);

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Rational& c);
  Polynomial& operator*=(const Monomial& m);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& c) { return a *= c; }
  friend Polynomial operator*(Polynomial a, const Monomial& m) { return a *= m; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  bool operator==(const Polynomial& other) const;

  Polynomial monic() const;
  // Multiplies by the positive rational that makes the coefficients coprime
  // integers (same ideal generator, smaller numbers).
  Polynomial primitive() const;
  Rational evaluate(std::span<const Rational> point) const;

  std::string to_string() const;

 private:
  std::size_t n_;
  TermMap terms_;
};

// Parses `3/2*x1^2*x3 - x2` style text over variables x1..xn.
// Throws Error(kParse) naming the 1-based column of the offending character.
Polynomial parse_polynomial(std::string_view text, std::size_t n);

// Square matrix of rationals used as a linear change of coordinates
// x_i -> sum_j g(i, j) x_j.
class RationalMatrix {
 public:
  explicit RationalMatrix(std::size_t n = 0) : n_(n), entries_(n * n) {}
  static RationalMatrix identity(std::size_t n);
  // Dense integer matrix with entries uniform in [-bound, bound], redrawn
  // until nonsingular. The seed is recorded on the result.
  static RationalMatrix random_invertible(std::size_t n, std::uint64_t seed,
                                          std::int64_t bound = 10000);

  std::size_t size() const { return n_; }
  Rational& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  std::optional<std::uint64_t> seed() const { return seed_; }

  Rational determinant() const;
  RationalMatrix inverse() const;
  friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
  bool operator==(const RationalMatrix& other) const { return n_ == other.n_ && entries_ == other.entries_; }

 private:
  std::size_t n_;
  std::vector<Rational> entries_;
  std::optional<std::uint64_t> seed_;
};

// Substitutes x_i -> sum_j g(i, j) x_j and expands. Throws kSingularMatrix
// for singular g, kAmbientMismatch when sizes differ.
Polynomial apply_coordinate_change(const Polynomial& f, const RationalMatrix& g);

// splitmix64 step; used to derive independent seeds from one user seed.
std::uint64_t mix_seed(std::uint64_t seed);

}  // namespace gincoh
