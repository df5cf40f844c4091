#include "gincoh/seqcm.hpp"

#include <algorithm>

#include "gincoh/error.hpp"
#include "gincoh/oracles.hpp"

namespace gincoh {

namespace {

Window widen(Window w, std::size_t n) {
  const int by = static_cast<int>(n) + 1;
  return {w.lo - by, w.hi + by};
}

std::vector<TableEntryDiff> violations(const CohomologyTable& left, const CohomologyTable& right) {
  std::vector<TableEntryDiff> out;
  for (const auto& d : diff_tables(left, right))
    if (d.left > d.right) out.push_back(d);
  return out;
}

// Fills diffs / equality / violations and replays the verdict on a wider
// window (both tables carry exact closed forms).
void compare_into(ComparisonReport& report, std::size_t n) {
  const CohomologyTable& left = *report.left;
  report.diffs = diff_tables(left, report.right);
  report.equal = report.diffs.empty();
  const Window wide = widen(report.window, n);
  const CohomologyTable wide_left = left.rewindowed(wide);
  const CohomologyTable wide_right = report.right.rewindowed(wide);
  const bool wide_equal = diff_tables(wide_left, wide_right).empty();
  report.widened_checked = true;
  if (wide_equal != *report.equal) {
    throw Error(ErrorCode::kWindowInstability,
                "comparison verdict changes when the window [" + std::to_string(report.window.lo) + ", " +
                    std::to_string(report.window.hi) + "] is widened");
  }
  report.sbarra_violations = violations(wide_left, wide_right);
}

MonomialIdeal gin_or_trivial(const MonomialIdeal& ideal, std::uint64_t seed, std::vector<std::uint64_t>& seeds) {
  if (ideal.is_zero() || ideal.is_unit()) return ideal;
  GinResult g = gin(PolynomialIdeal::from_monomial(ideal), seed);
  seeds = g.draw_seeds;
  return g.ideal;
}

}  // namespace

ComponentwiseLinearity is_componentwise_linear(const MonomialIdeal& ideal, std::uint64_t seed) {
  if (!ideal.is_squarefree()) throw Error(ErrorCode::kNotSquarefree, ideal.to_string() + " is not squarefree");
  const SimplicialComplex complex = complex_of(ideal);
  ShiftedComplex shifted = shifted_complex(complex, seed);
  ComponentwiseLinearity out;
  out.ideal_betti = hochster_betti(complex).to_ideal();
  out.shifted_betti = hochster_betti(shifted.complex).to_ideal();
  out.first_difference = first_difference(out.ideal_betti, out.shifted_betti);
  out.verdict = !out.first_difference.has_value();
  out.shifted_ideal = std::move(shifted.ideal);
  out.seeds = std::move(shifted.seeds);
  return out;
}

SeqCMVerdict is_sequentially_cm(const SimplicialComplex& complex, std::uint64_t seed) {
  if (complex.is_void()) throw Error(ErrorCode::kInvalidArgument, "the void complex has K[Delta] = 0");
  SeqCMVerdict out;
  out.route = "componentwise-linear-dual";
  out.dual = alexander_dual(complex);
  out.certificate = is_componentwise_linear(stanley_reisner_ideal(out.dual), seed);
  out.verdict = out.certificate.verdict;
  return out;
}

Window comparison_window(const MonomialIdeal& a, const MonomialIdeal& b) {
  const Window wa = default_cohomology_window(a);
  const Window wb = default_cohomology_window(b);
  return {std::min(wa.lo, wb.lo), std::max(wa.hi, wb.hi)};
}

ComparisonReport main_theorem_check(const MonomialIdeal& ideal, std::uint64_t seed, std::optional<Window> window) {
  ComparisonReport report;
  report.gin = gin_or_trivial(ideal, seed, report.seeds);
  report.window = window.value_or(comparison_window(ideal, report.gin));
  report.left = oracles::cech_local_cohomology(ideal, report.window);
  report.right = local_cohomology_strongly_stable(report.gin, report.window);
  compare_into(report, ideal.ambient());
  return report;
}

ComparisonReport main_theorem_check(const PolynomialIdeal& ideal, std::uint64_t seed, std::optional<Window> window) {
  if (ideal.is_monomial()) return main_theorem_check(ideal.as_monomial(), seed, window);
  ComparisonReport report;
  GinResult g = gin(ideal, seed);
  report.gin = g.ideal;
  report.seeds = g.draw_seeds;
  if (window) {
    report.window = *window;
  } else {
    int d = report.gin.max_degree();
    for (const auto& f : ideal.generators()) d = std::max(d, f.degree());
    report.window = {-(static_cast<int>(ideal.ambient()) + d + 2), d};
  }
  report.right = local_cohomology_strongly_stable(report.gin, report.window);
  return report;
}

Theorem41Report theorem41_check(const SimplicialComplex& complex, std::uint64_t seed, std::optional<Window> window) {
  if (complex.is_void()) throw Error(ErrorCode::kInvalidArgument, "the void complex has K[Delta] = 0");
  const MonomialIdeal ideal = stanley_reisner_ideal(complex);
  ShiftedComplex shifted = shifted_complex(complex, seed);

  Theorem41Report out;
  ComparisonReport& report = out.comparison;
  report.gin = shifted.gin;
  report.seeds = shifted.seeds;
  report.window = window.value_or(comparison_window(ideal, shifted.ideal));
  report.left = oracles::cech_local_cohomology(ideal, report.window);
  report.right = oracles::cech_local_cohomology(shifted.ideal, report.window);
  compare_into(report, complex.vertex_count());
  out.shifted = std::move(shifted.complex);
  out.verdict = is_sequentially_cm(complex, seed);
  if (out.verdict.verdict != *report.equal) {
    throw Error(ErrorCode::kInconsistent, "for " + complex.to_string() + " the Betti criterion says " +
                                              (out.verdict.verdict ? "true" : "false") +
                                              " but the cohomology tables are " +
                                              (*report.equal ? "equal" : "different"));
  }
  return out;
}

}  // namespace gincoh
