#include "gincoh/graded.hpp"

#include <algorithm>
#include <set>

#include "gincoh/error.hpp"

namespace gincoh {

Integer binomial(long a, long b) {
  if (b < 0 || a < b) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
  return out;
}

std::int64_t binomial64(long a, long b) {
  const Integer value = binomial(a, b);
  if (!value.fits_slong_p()) throw Error(ErrorCode::kCapacity, "binomial coefficient exceeds 64 bits");
  return value.get_si();
}

std::int64_t BinomialTerm::value_at(int e) const {
  switch (shape) {
    case Shape::kPoint:
      return e == anchor ? coefficient : 0;
    case Shape::kUp:
      if (e < anchor) return 0;
      return coefficient * binomial64(e - anchor + width - 1, width - 1);
    case Shape::kDown:
      if (e > anchor - width) return 0;
      return coefficient * binomial64(anchor - e - 1, width - 1);
  }
  return 0;
}

namespace {

std::int64_t evaluate(const std::vector<BinomialTerm>& terms, int e) {
  std::int64_t total = 0;
  for (const auto& t : terms) total += t.value_at(e);
  return total;
}

}  // namespace

HilbertFunction::HilbertFunction(Window window, std::vector<std::int64_t> values)
    : window_(window), values_(std::move(values)) {
  if (values_.size() != window_.size()) throw Error(ErrorCode::kInvalidArgument, "window/value size mismatch");
}

HilbertFunction::HilbertFunction(Window window, std::vector<BinomialTerm> closed_form)
    : window_(window), closed_form_(std::move(closed_form)) {
  values_.reserve(window_.size());
  for (int e = window_.lo; e <= window_.hi; ++e) values_.push_back(evaluate(*closed_form_, e));
}

std::int64_t HilbertFunction::at(int degree) const {
  if (window_.contains(degree)) return values_[static_cast<std::size_t>(degree - window_.lo)];
  if (closed_form_) return evaluate(*closed_form_, degree);
  throw Error(ErrorCode::kInvalidArgument, "degree " + std::to_string(degree) + " outside window without closed form");
}

bool HilbertFunction::is_zero_on_window() const {
  return std::all_of(values_.begin(), values_.end(), [](std::int64_t v) { return v == 0; });
}

HilbertFunction HilbertFunction::rewindowed(Window w) const {
  if (!closed_form_) {
    std::vector<std::int64_t> vals;
    for (int e = w.lo; e <= w.hi; ++e) vals.push_back(at(e));
    return HilbertFunction(w, std::move(vals));
  }
  return HilbertFunction(w, *closed_form_);
}

CohomologyTable::CohomologyTable(std::size_t n, Window window, std::vector<HilbertFunction> modules)
    : n_(n), window_(window), modules_(std::move(modules)) {
  if (modules_.size() != n_ + 1) throw Error(ErrorCode::kInvalidArgument, "cohomology table needs n+1 modules");
}

CohomologyTable CohomologyTable::rewindowed(Window w) const {
  std::vector<HilbertFunction> mods;
  for (const auto& m : modules_) mods.push_back(m.rewindowed(w));
  return CohomologyTable(n_, w, std::move(mods));
}

std::vector<TableEntryDiff> diff_tables(const CohomologyTable& left, const CohomologyTable& right) {
  if (left.ambient() != right.ambient()) throw Error(ErrorCode::kAmbientMismatch, "cohomology tables of different rings");
  const Window w{std::max(left.window().lo, right.window().lo), std::min(left.window().hi, right.window().hi)};
  std::vector<TableEntryDiff> out;
  for (std::size_t i = 0; i <= left.ambient(); ++i) {
    for (int e = w.lo; e <= w.hi; ++e) {
      const auto a = left.at(i, e);
      const auto b = right.at(i, e);
      if (a != b) out.push_back({i, e, a, b});
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t BettiTable::get(int i, int j) const {
  auto it = entries_.find({i, j});
  return it == entries_.end() ? 0 : it->second;
}

void BettiTable::set(int i, int j, std::int64_t value) {
  if (value < 0) throw Error(ErrorCode::kInvalidArgument, "negative Betti number");
  if (value == 0) {
    entries_.erase({i, j});
  } else {
    entries_[{i, j}] = value;
  }
}

int BettiTable::projective_dimension() const {
  int out = -1;
  for (const auto& [key, v] : entries_) out = std::max(out, key.first);
  return out;
}

BettiTable BettiTable::to_ideal() const {
  if (subject_ == Subject::kIdeal) return *this;
  BettiTable out(Subject::kIdeal);
  if (entries_.empty()) {
    out.set(0, 0, 1);
    return out;
  }
  for (const auto& [key, v] : entries_) {
    if (key.first == 0) continue;
    out.set(key.first - 1, key.second, v);
  }
  return out;
}

BettiTable BettiTable::to_quotient() const {
  if (subject_ == Subject::kQuotient) return *this;
  BettiTable out(Subject::kQuotient);
  if (entries_.size() == 1 && get(0, 0) == 1) return out;
  out.set(0, 0, 1);
  for (const auto& [key, v] : entries_) out.set(key.first + 1, key.second, v);
  return out;
}

namespace {

std::set<BettiTable::Key> union_keys(const BettiTable& a, const BettiTable& b) {
  std::set<BettiTable::Key> keys;
  for (const auto& [k, v] : a.entries()) keys.insert(k);
  for (const auto& [k, v] : b.entries()) keys.insert(k);
  return keys;
}

}  // namespace

bool entrywise_leq(const BettiTable& a, const BettiTable& b) {
  for (const auto& k : union_keys(a, b)) {
    if (a.get(k.first, k.second) > b.get(k.first, k.second)) return false;
  }
  return true;
}

std::optional<BettiTable::Key> first_difference(const BettiTable& a, const BettiTable& b) {
  for (const auto& k : union_keys(a, b)) {
    if (a.get(k.first, k.second) != b.get(k.first, k.second)) return k;
  }
  return std::nullopt;
}

}  // namespace gincoh
