#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gincoh/graded.hpp"
#include "gincoh/ring.hpp"

namespace gincoh {

// Monomial ideal stored by its minimal generating set G(I), sorted by
// increasing degree and, within a degree, decreasing degrevlex.
// The zero ideal has no generators; the unit ideal is generated by 1.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t n = 0) : n_(n) {}
  // Minimalizes the given monomials.
  MonomialIdeal(std::size_t n, std::vector<Monomial> generators);
  static MonomialIdeal unit(std::size_t n);

  std::size_t ambient() const { return n_; }
  const std::vector<Monomial>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }
  bool is_unit() const { return generators_.size() == 1 && generators_.front().is_one(); }
  bool is_squarefree() const;
  int max_degree() const;

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  bool operator==(const MonomialIdeal& other) const {
    return n_ == other.n_ && generators_ == other.generators_;
  }
  std::string to_string() const;

 private:
  std::size_t n_;
  std::vector<Monomial> generators_;
};

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> monomials);
// All monomials of degree d in n variables, in descending degrevlex order.
std::vector<Monomial> monomials_of_degree(std::size_t n, int d);
MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// I : u
MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u);

// max{i : x_i | u}, 1-based. Throws kInvalidArgument for u = 1.
std::size_t m_of(const Monomial& u);

// A generator u, a variable x_i dividing it and j < i with x_j u / x_i not in
// the ideal (indices 1-based).
struct StabilityWitness {
  Monomial generator;
  std::size_t i = 0;
  std::size_t j = 0;
};

std::optional<StabilityWitness> strong_stability_violation(const MonomialIdeal& ideal);
inline bool is_strongly_stable(const MonomialIdeal& ideal) { return !strong_stability_violation(ideal); }

// The union over r of I : x_s^r (s is 1-based).
MonomialIdeal colon_saturate_variable(const MonomialIdeal& ideal, std::size_t s);
// I : m^infinity, as the intersection of the per-variable saturations.
MonomialIdeal saturate(const MonomialIdeal& ideal);

// Hilbert series of R/I as numerator(t) / (1 - t)^n.
struct HilbertSeries {
  std::size_t n = 0;
  std::vector<Integer> numerator;  // coefficient of t^k at index k

  std::int64_t value_at(int degree) const;
  std::vector<BinomialTerm> closed_form() const;
  bool operator==(const HilbertSeries& other) const;
};

// Inclusion-exclusion over lcms, evaluated by the recursion
// N(I + (u)) = N(I) - t^deg(u) N(I : u).
HilbertSeries hilbert_series(const MonomialIdeal& ideal);
// The literal sum over all subsets of G(I); throws kCapacity above `cap`
// generators.
HilbertSeries hilbert_series_by_subsets(const MonomialIdeal& ideal, std::size_t cap = 20);

HilbertFunction hilbert_function(const MonomialIdeal& ideal, Window window);

// dim R/I; -1 for the unit ideal.
int krull_dimension(const MonomialIdeal& ideal);

// Ideal generated by the degree-d monomials of I.
MonomialIdeal component_ideal(const MonomialIdeal& ideal, int d);

// One step M_k / M_{k-1} = upper / lower of the dimension filtration of a
// strongly stable quotient. With R' = K[x_1..x_s], the layer is
// (J^sat / J) (x) K[x_{s+1}..x_n], CM of dimension n - s. s = 0 marks the
// free layer R / 0.
struct FiltrationLayer {
  MonomialIdeal lower;
  MonomialIdeal upper;
  std::size_t s = 0;
  int dimension = 0;
  std::map<int, std::int64_t> socle;  // Hilbert function of J^sat / J over R'
};

struct DimensionFiltration {
  std::size_t n = 0;
  std::vector<FiltrationLayer> layers;
};

DimensionFiltration dimension_filtration(const MonomialIdeal& ideal);

// Hilbert function contributed to R/I by one layer (convolution of the socle
// with a polynomial ring in n - s variables).
std::vector<BinomialTerm> layer_hilbert_terms(const FiltrationLayer& layer, std::size_t n);

// -(n + D + 2) .. D with D the largest generator degree.
Window default_cohomology_window(const MonomialIdeal& ideal);

// Local cohomology of R/I for strongly stable I, read off the dimension
// filtration: the layer of dimension d contributes all of H^d.
CohomologyTable local_cohomology_strongly_stable(const MonomialIdeal& ideal, Window window);

// Betti numbers of R/I for strongly stable I:
// beta_{i,i+j}(I) = sum over generators u of degree j of C(m(u) - 1, i).
// Throws kNotStronglyStable otherwise.
BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal);

}  // namespace gincoh
