#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gincoh/graded.hpp"
#include "gincoh/linalg.hpp"
#include "gincoh/monomial.hpp"

namespace gincoh {

inline constexpr std::size_t kMaxVertices = 16;

// Vertex subsets of [n] as bit masks: bit k stands for vertex k + 1.
using Face = std::uint32_t;

// Facet list on [n]. The void complex has no facets at all; the irrelevant
// complex has the single facet {} (the empty face).
class SimplicialComplex {
 public:
  explicit SimplicialComplex(std::size_t n = 0) : n_(n) {}
  // Keeps the inclusion-maximal sets. Throws kCapacity for n > kMaxVertices
  // and kInvalidArgument for a face outside [n].
  SimplicialComplex(std::size_t n, std::vector<Face> faces);
  // 1-based vertex lists.
  static SimplicialComplex from_vertex_lists(std::size_t n, const std::vector<std::vector<int>>& facets);
  static SimplicialComplex void_complex(std::size_t n) { return SimplicialComplex(n); }
  static SimplicialComplex irrelevant(std::size_t n) { return SimplicialComplex(n, {Face{0}}); }
  static SimplicialComplex simplex(std::size_t n);

  std::size_t vertex_count() const { return n_; }
  const std::vector<Face>& facets() const { return facets_; }
  bool is_void() const { return facets_.empty(); }
  bool is_irrelevant() const { return facets_.size() == 1 && facets_.front() == 0; }
  bool contains(Face f) const;
  // -1 for the irrelevant complex, and also for the void complex.
  int dimension() const;
  // Every face, sorted by size then value.
  std::vector<Face> faces() const;
  // f_{-1}, f_0, ..., f_dim (empty for the void complex).
  std::vector<std::int64_t> f_vector() const;
  // Faces inside W (restriction to a vertex subset, same ambient n).
  SimplicialComplex restrict_to(Face w) const;

  std::vector<std::vector<int>> facet_lists() const;
  std::string to_string() const;
  bool operator==(const SimplicialComplex& other) const = default;

 private:
  std::size_t n_;
  std::vector<Face> facets_;
};

Monomial face_monomial(std::size_t n, Face f);
Face support_of(const Monomial& m);

// Minimal nonfaces. The void complex gives the unit ideal.
MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex);
// Throws kNotSquarefree for a non-squarefree ideal; the unit ideal gives
// the void complex.
SimplicialComplex complex_of(const MonomialIdeal& ideal);

SimplicialComplex alexander_dual(const SimplicialComplex& complex);

// dim H~_k over Q at index k + 1, for k = -1 .. dim (empty for void).
std::vector<std::int64_t> reduced_homology(const SimplicialComplex& complex);

// beta_{i,j}(K[Delta]) = sum over |W| = j of dim H~_{j-i-1}(Delta|W).
// The void complex gives the empty table (K[Delta] = 0).
BettiTable hochster_betti(const SimplicialComplex& complex);

// u^sigma = x_{i1} x_{i2+1} ... x_{id+d-1} for u = x_{i1} ... x_{id},
// i1 <= ... <= id. The result lives in max(n, id + d - 1) variables.
// kInvalidArgument for u = 1.
Monomial sigma(const Monomial& u);

// Squarefree exchange: u in G(I), x_i | u, x_j does not divide u, j < i
// imply x_j u / x_i in I. Returns a failing (u, i, j).
std::optional<StabilityWitness> shifted_violation(const MonomialIdeal& ideal);
inline bool is_shifted(const MonomialIdeal& ideal) { return !shifted_violation(ideal); }

struct ShiftedComplex {
  SimplicialComplex complex;
  MonomialIdeal gin;               // gin(I_Delta)
  MonomialIdeal ideal;             // I_{Delta^s}
  std::vector<std::uint64_t> seeds;
};

// Symmetric algebraic shifting. kAmbientGrowth when some u^sigma needs a
// variable past x_n, kNotStronglyStable when the image is not shifted.
// The void complex shifts to itself.
ShiftedComplex shifted_complex(const SimplicialComplex& complex, std::uint64_t seed);

// How Betti numbers of the dual enter the closed formula for local
// cohomology of K[Delta] in degrees -j <= 0.
enum class EnricoConvention {
  // H^i_{-j} = [j = 0] b_{i,n} + sum_{h >= 1} C(j-1, h-1) b_{i-h,n-h}
  // with b = beta(I_{Delta*}). Agrees with the Cech oracle.
  kVerified,
  // H^i_{-j} = sum_h C(n,h) C(h+j-1, j) beta_{i-h+1,n-h}(K[Delta*]),
  // C(-1, 0) = 1; kept for comparison only.
  kPrinted,
};

struct EnricoResult {
  EnricoConvention convention = EnricoConvention::kVerified;
  CohomologyTable table;
  CohomologyTable oracle;  // Cech oracle on I_Delta
  std::vector<TableEntryDiff> diff;
};

EnricoResult local_cohomology_enrico(const SimplicialComplex& complex, Window window,
                                     EnricoConvention convention = EnricoConvention::kVerified);

// The (n+1) x (n+1) matrix A with H^T = A B: entry (j, h) is C(j-1, h-1)
// (verified) or C(h+j-1, j) (printed), and 1 at (0, 0) in both.
linalg::QMatrix enrico_matrix(std::size_t n, EnricoConvention convention);

// B (rows h = 0..n, columns i = 0..n) built from the Betti numbers of the
// dual: b_{h,i} = beta_{i-h,n-h}(I_{Delta*}) (verified) or
// C(n,h) beta_{i-h+1,n-h}(K[Delta*]) (printed). `betti` must carry the
// matching subject (ideal or quotient).
linalg::QMatrix enrico_b_matrix(const BettiTable& betti, std::size_t n, EnricoConvention convention);

// H^T = A B as a matrix with rows j = 0..n and columns i = 0..n.
linalg::QMatrix cohomology_matrix(const linalg::QMatrix& b, std::size_t n, EnricoConvention convention);

// B = A^{-1} H^T.
linalg::QMatrix recover_b_matrix(const linalg::QMatrix& cohomology, std::size_t n, EnricoConvention convention);

// Betti numbers of the dual read back from local cohomology in degrees
// 0, -1, .., -n (the window must cover them). Verified convention:
// beta_{ij}(I_{Delta*}) = b_{n-j, i+n-j}; printed convention:
// beta_{ij}(K[Delta*]) = b_{n-j, i+n-j-1} / C(n, n-j). Throws kInconsistent
// when an extracted value is not a nonnegative integer.
BettiTable betti_from_cohomology(const CohomologyTable& table, std::size_t n,
                                 EnricoConvention convention = EnricoConvention::kVerified);
// The same extraction starting from a B matrix.
BettiTable betti_from_b_matrix(const linalg::QMatrix& b, std::size_t n, EnricoConvention convention);

}  // namespace gincoh
