#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gincoh/graded.hpp"
#include "gincoh/groebner.hpp"
#include "gincoh/monomial.hpp"
#include "gincoh/simplicial.hpp"

namespace gincoh {

struct ComponentwiseLinearity {
  bool verdict = false;
  BettiTable ideal_betti{BettiTable::Subject::kIdeal};    // beta(I)
  BettiTable shifted_betti{BettiTable::Subject::kIdeal};  // beta of the shifted ideal
  std::optional<BettiTable::Key> first_difference;
  MonomialIdeal shifted_ideal;
  std::vector<std::uint64_t> seeds;
};

// I is componentwise linear iff its Betti table equals that of its
// symmetric shift. kNotSquarefree for non-squarefree input.
ComponentwiseLinearity is_componentwise_linear(const MonomialIdeal& ideal, std::uint64_t seed);

struct SeqCMVerdict {
  bool verdict = false;
  std::string route;               // which decider produced the verdict
  SimplicialComplex dual;          // Delta*
  ComponentwiseLinearity certificate;
};

// K[Delta] is sequentially CM iff I_{Delta*} is componentwise linear.
// kInvalidArgument for the void complex.
SeqCMVerdict is_sequentially_cm(const SimplicialComplex& complex, std::uint64_t seed);

// Two local cohomology tables of R/I-type modules compared entry by entry.
struct ComparisonReport {
  Window window;
  std::optional<CohomologyTable> left;  // absent for non-monomial input
  CohomologyTable right;
  std::vector<TableEntryDiff> diffs;    // left != right
  std::vector<TableEntryDiff> sbarra_violations;  // left > right (never expected)
  std::optional<bool> equal;
  bool widened_checked = false;
  MonomialIdeal gin;  // the ideal behind the right side
  std::vector<std::uint64_t> seeds;
};

// max of the default windows of the two ideals.
Window comparison_window(const MonomialIdeal& a, const MonomialIdeal& b);

// Left: Cech oracle on R/I. Right: filtration formula on R/gin(I). The
// verdict is recomputed on a window widened by n + 1 on both sides;
// disagreement throws kWindowInstability.
ComparisonReport main_theorem_check(const MonomialIdeal& ideal, std::uint64_t seed,
                                    std::optional<Window> window = std::nullopt);
// Non-monomial ideals only get the right side.
ComparisonReport main_theorem_check(const PolynomialIdeal& ideal, std::uint64_t seed,
                                    std::optional<Window> window = std::nullopt);

struct Theorem41Report {
  ComparisonReport comparison;  // left: K[Delta], right: K[Delta^s]
  SeqCMVerdict verdict;
  SimplicialComplex shifted;
};

// Compares local cohomology of K[Delta] and K[Delta^s] (both by the Cech
// oracle) and checks the result against is_sequentially_cm. A mixed answer
// throws kInconsistent.
Theorem41Report theorem41_check(const SimplicialComplex& complex, std::uint64_t seed,
                                std::optional<Window> window = std::nullopt);

}  // namespace gincoh
