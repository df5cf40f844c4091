#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "gincoh/graded.hpp"
#include "gincoh/groebner.hpp"
#include "gincoh/monomial.hpp"

// Brute-force engines used as ground truth for the formula-based modules.
namespace gincoh::oracles {

inline constexpr std::size_t kKoszulMaxVariables = 10;
inline constexpr std::size_t kCechMaxVariables = 8;

// Standard monomials of R/I in one degree.
struct GradedPieceBasis {
  int degree = 0;
  std::vector<Monomial> basis;
};

GradedPieceBasis standard_monomials(const MonomialIdeal& ideal, int degree);

// Betti numbers of R/I from the homology of the Koszul complex K(x; R/I).
// Monomial ideals are handled multidegree by multidegree inside the lcm box;
// other ideals degree by degree over a Groebner basis. Internal degrees are
// swept up to `degree_bound` (default: a bound that is always sufficient);
// with a smaller bound the two top columns must be empty, otherwise
// kCapacity is raised.
BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> degree_bound = std::nullopt);
BettiTable koszul_betti(const PolynomialIdeal& ideal, std::optional<int> degree_bound = std::nullopt);

// Dimensions of H^0..H^n of the Cech complex of R/I in one multidegree
// (entries of `a` may be negative).
std::vector<std::int64_t> cech_multidegree(const MonomialIdeal& ideal, const std::vector<int>& a);

// Z^n-graded Cech cohomology of R/I collected by total degree. Multidegrees
// are grouped into classes on which the complex is constant (the negative
// support N and the clipped nonnegative part); a class with |N| = k and
// nonnegative part of degree p contributes C(p - e - 1, k - 1) copies in
// total degree e, so the result carries an exact closed form.
CohomologyTable cech_local_cohomology(const MonomialIdeal& ideal, Window window);

// The same table summed literally over every multidegree of a box: each
// coordinate in [-(1 + max exponent + n) - widen, max generator degree +
// widen]. The result covers the part of `window` whose fibres lie entirely
// inside the box (possibly empty).
CohomologyTable cech_by_box(const MonomialIdeal& ideal, Window window, int widen = 0);

struct CechClassSummary {
  std::vector<std::int64_t> cochains;    // dimension of C^k for the class
  std::vector<std::int64_t> cohomology;  // dimension of H^k for the class
};
// Per-class data (for Euler characteristic checks).
std::vector<CechClassSummary> cech_classes(const MonomialIdeal& ideal);

HilbertFunction brute_hilbert(const MonomialIdeal& ideal, Window window);
HilbertFunction brute_hilbert(const PolynomialIdeal& ideal, Window window);

struct DepthDim {
  int depth = 0;
  int dim = 0;
};
// depth = n - pd(R/I) from koszul_betti; dim from the (initial) monomial
// ideal. kInvalidArgument for the unit ideal.
DepthDim depth_and_dim(const MonomialIdeal& ideal, std::optional<int> degree_bound = std::nullopt);
DepthDim depth_and_dim(const PolynomialIdeal& ideal, std::optional<int> degree_bound = std::nullopt);

}  // namespace gincoh::oracles
