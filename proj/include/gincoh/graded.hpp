#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "gincoh/ring.hpp"

namespace gincoh {

// C(a, b), zero whenever b < 0 or a < b (including every negative a).
Integer binomial(long a, long b);
std::int64_t binomial64(long a, long b);

// Inclusive range of internal degrees.
struct Window {
  int lo = 0;
  int hi = 0;
  bool contains(int d) const { return lo <= d && d <= hi; }
  std::size_t size() const { return hi >= lo ? static_cast<std::size_t>(hi - lo + 1) : 0; }
  bool operator==(const Window&) const = default;
};

// One summand of a closed-form graded dimension count:
//   kPoint: coefficient at degree == anchor
//   kUp:    coefficient * C(e - anchor + width - 1, width - 1) for e >= anchor
//           (polynomial ring in `width` variables shifted to start at anchor)
//   kDown:  coefficient * C(anchor - e - 1, width - 1) for e <= anchor - width
//           (top local cohomology of a polynomial ring in `width` variables,
//           shifted by anchor)
struct BinomialTerm {
  enum class Shape { kPoint, kUp, kDown };
  Shape shape = Shape::kPoint;
  int anchor = 0;
  int width = 0;
  std::int64_t coefficient = 0;

  std::int64_t value_at(int e) const;
  bool operator==(const BinomialTerm&) const = default;
};

// Degree -> dimension over a finite window, optionally with a closed form
// that is exact in every degree (and agrees with the window values).
class HilbertFunction {
 public:
  HilbertFunction() = default;
  HilbertFunction(Window window, std::vector<std::int64_t> values);
  // Evaluates the closed form on the window.
  HilbertFunction(Window window, std::vector<BinomialTerm> closed_form);

  Window window() const { return window_; }
  const std::vector<std::int64_t>& values() const { return values_; }
  const std::optional<std::vector<BinomialTerm>>& closed_form() const { return closed_form_; }

  // Window value, or closed-form value outside the window. Throws
  // kInvalidArgument outside the window when there is no closed form.
  std::int64_t at(int degree) const;
  bool is_zero_on_window() const;
  // Re-evaluates on another window (requires a closed form).
  HilbertFunction rewindowed(Window w) const;

 private:
  Window window_;
  std::vector<std::int64_t> values_;
  std::optional<std::vector<BinomialTerm>> closed_form_;
};

// Hilbert functions of H^i_m(M) for i = 0..n on a shared window.
class CohomologyTable {
 public:
  CohomologyTable() = default;
  CohomologyTable(std::size_t n, Window window, std::vector<HilbertFunction> modules);

  std::size_t ambient() const { return n_; }
  Window window() const { return window_; }
  const std::vector<HilbertFunction>& modules() const { return modules_; }
  const HilbertFunction& module(std::size_t i) const { return modules_.at(i); }
  std::int64_t at(std::size_t i, int degree) const { return modules_.at(i).at(degree); }
  CohomologyTable rewindowed(Window w) const;

 private:
  std::size_t n_ = 0;
  Window window_;
  std::vector<HilbertFunction> modules_;
};

struct TableEntryDiff {
  std::size_t i = 0;
  int degree = 0;
  std::int64_t left = 0;
  std::int64_t right = 0;
};

// Entries (on the shared window) where the tables differ.
std::vector<TableEntryDiff> diff_tables(const CohomologyTable& left, const CohomologyTable& right);

// Graded Betti numbers beta_{i,j} of either R/I or I.
class BettiTable {
 public:
  enum class Subject { kQuotient, kIdeal };
  using Key = std::pair<int, int>;

  explicit BettiTable(Subject subject = Subject::kQuotient) : subject_(subject) {}

  Subject subject() const { return subject_; }
  std::int64_t get(int i, int j) const;
  void set(int i, int j, std::int64_t value);
  void add(int i, int j, std::int64_t value) { set(i, j, get(i, j) + value); }
  const std::map<Key, std::int64_t>& entries() const { return entries_; }
  // Largest i with a nonzero entry; -1 for an empty table.
  int projective_dimension() const;
  bool empty() const { return entries_.empty(); }

  // beta_{i,j}(I) = beta_{i+1,j}(R/I). The unit ideal (R/I = 0) is the
  // ideal table {(0,0): 1} and the empty quotient table.
  BettiTable to_ideal() const;
  BettiTable to_quotient() const;

  bool operator==(const BettiTable& other) const = default;

 private:
  Subject subject_;
  std::map<Key, std::int64_t> entries_;
};

// True iff every entry of a is <= the matching entry of b.
bool entrywise_leq(const BettiTable& a, const BettiTable& b);
// First key (in (i, j) order) where the tables differ.
std::optional<BettiTable::Key> first_difference(const BettiTable& a, const BettiTable& b);

}  // namespace gincoh
