#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "gincoh/monomial.hpp"
#include "gincoh/ring.hpp"

namespace gincoh {

// Graded ideal given by homogeneous generators (zero generators dropped).
class PolynomialIdeal {
 public:
  explicit PolynomialIdeal(std::size_t n = 0) : n_(n) {}
  // Throws kInvalidArgument for a non-homogeneous generator and
  // kAmbientMismatch for a generator in another ring.
  PolynomialIdeal(std::size_t n, std::vector<Polynomial> generators);
  static PolynomialIdeal from_monomial(const MonomialIdeal& ideal);

  std::size_t ambient() const { return n_; }
  const std::vector<Polynomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_monomial() const;
  // Requires is_monomial().
  MonomialIdeal as_monomial() const;

 private:
  std::size_t n_;
  std::vector<Polynomial> generators_;
};

struct GroebnerBasis {
  std::vector<Polynomial> elements;
  TermOrder order = TermOrder::kDegRevLex;
  bool reduced = false;
};

// Remainder of multivariate division of f by `divisors` (full reduction).
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       TermOrder order = TermOrder::kDegRevLex);

struct BuchbergerOptions {
  // Hilbert series of R/I when known in advance. Lets the engine drop the
  // remaining pairs of a degree once enough leading monomials are found and
  // stop as soon as the leading ideal has the right Hilbert series.
  const HilbertSeries* hilbert_hint = nullptr;
};

// Reduced Groebner basis (monic, degrevlex). The zero ideal gives an empty
// basis. Every input generator is checked to reduce to zero.
GroebnerBasis buchberger(const PolynomialIdeal& ideal, const BuchbergerOptions& options = {});

MonomialIdeal leading_ideal(const GroebnerBasis& basis, std::size_t n);
MonomialIdeal initial_ideal(const PolynomialIdeal& ideal);

// Equality of ideals, decided by mutual normal-form membership.
bool same_ideal(const PolynomialIdeal& a, const PolynomialIdeal& b);

PolynomialIdeal change_coordinates(const PolynomialIdeal& ideal, const RationalMatrix& g);

// Union over r of I : x_n^r via the degrevlex device: divide each reduced
// Groebner basis element by its largest power of x_n.
PolynomialIdeal saturate_by_last_variable(const PolynomialIdeal& ideal);

struct SaturationResult {
  PolynomialIdeal ideal;
  std::vector<std::uint64_t> seeds;  // the two coordinate changes that agreed
};

// I : m^infinity. Computed in seeded random coordinates and certified by a
// second, independent draw; disagreement throws kGenericity.
SaturationResult saturation(const PolynomialIdeal& ideal, std::uint64_t seed);

struct GinOptions {
  // Extra coordinate draws allowed after the first two disagree.
  int retry_budget = 3;
};

struct GinResult {
  MonomialIdeal ideal;
  std::uint64_t seed = 0;
  // Per-draw seeds actually used (the first two agree unless retries ran).
  std::vector<std::uint64_t> draw_seeds;
};

// Generic initial ideal under degrevlex: the initial ideal after a random
// dense integer coordinate change, accepted once two independent draws give
// the same answer. The result is checked to be strongly stable.
GinResult gin(const PolynomialIdeal& ideal, std::uint64_t seed, const GinOptions& options = {});

// Seed of the k-th coordinate draw derived from a user seed.
std::uint64_t draw_seed(std::uint64_t seed, int k);

}  // namespace gincoh
