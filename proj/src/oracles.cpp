#include "gincoh/oracles.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

#include "gincoh/error.hpp"
#include "gincoh/linalg.hpp"

namespace gincoh::oracles {

namespace {

using Mask = std::uint32_t;

void require_variables(std::size_t n, std::size_t cap, const char* what) {
  if (n > cap) {
    throw Error(ErrorCode::kCapacity, std::string(what) + " oracle is capped at n <= " + std::to_string(cap) +
                                          " (got n = " + std::to_string(n) + ")");
  }
}

std::vector<int> max_exponents(const MonomialIdeal& ideal) {
  std::vector<int> m(ideal.ambient(), 0);
  for (const auto& g : ideal.generators())
    for (std::size_t k = 0; k < m.size(); ++k) m[k] = std::max(m[k], g[k]);
  return m;
}

// Number of elements of `set` below position `t`.
int rank_below(Mask set, std::size_t t) {
  return std::popcount(set & ((Mask{1} << t) - 1));
}

std::size_t rank_of(const linalg::IntMatrix& m) {
  if (m.empty() || m.front().empty()) return 0;
  return linalg::rank(m);
}

// Cech cochain / cohomology dimensions in multidegree a.
CechClassSummary cech_at(const MonomialIdeal& ideal, const std::vector<int>& a) {
  const std::size_t n = ideal.ambient();
  Mask negative = 0;
  for (std::size_t k = 0; k < n; ++k)
    if (a[k] < 0) negative |= Mask{1} << k;

  auto nonzero = [&](Mask s) {
    for (const auto& g : ideal.generators()) {
      bool below = true;
      for (std::size_t k = 0; k < n && below; ++k) {
        if (s & (Mask{1} << k)) continue;
        below = g[k] <= a[k];
      }
      if (below) return false;
    }
    return true;
  };

  std::vector<std::vector<Mask>> cells(n + 1);
  const Mask full = (n == 32) ? ~Mask{0} : (Mask{1} << n) - 1;
  const Mask free = full & ~negative;
  // Enumerate the supersets of `negative`.
  for (Mask extra = free;; extra = (extra - 1) & free) {
    const Mask s = negative | extra;
    if (nonzero(s)) cells[static_cast<std::size_t>(std::popcount(s))].push_back(s);
    if (extra == 0) break;
  }
  for (auto& c : cells) std::sort(c.begin(), c.end());

  std::vector<std::size_t> ranks(n + 1, 0);  // ranks[k] = rank of d^k: C^k -> C^{k+1}
  for (std::size_t k = 0; k < n; ++k) {
    const auto& src = cells[k];
    const auto& dst = cells[k + 1];
    if (src.empty() || dst.empty()) continue;
    linalg::IntMatrix m(dst.size(), std::vector<Integer>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t t = 0; t < n; ++t) {
        const Mask bit = Mask{1} << t;
        if (src[c] & bit) continue;
        auto it = std::lower_bound(dst.begin(), dst.end(), src[c] | bit);
        if (it == dst.end() || *it != (src[c] | bit)) continue;
        m[static_cast<std::size_t>(it - dst.begin())][c] = (rank_below(src[c], t) % 2 == 0) ? 1 : -1;
      }
    }
    ranks[k] = rank_of(m);
  }

  CechClassSummary out;
  out.cochains.resize(n + 1);
  out.cohomology.resize(n + 1);
  for (std::size_t k = 0; k <= n; ++k) {
    const auto dim = static_cast<std::int64_t>(cells[k].size());
    const auto in = k > 0 ? static_cast<std::int64_t>(ranks[k - 1]) : 0;
    out.cochains[k] = dim;
    out.cohomology[k] = dim - static_cast<std::int64_t>(ranks[k]) - in;
  }
  return out;
}

// Calls visit(a, |N|, p) once per class representative: negative entries
// are -1, nonnegative entries range below the largest exponent.
template <class Visit>
void for_each_class(const MonomialIdeal& ideal, Visit visit) {
  const std::size_t n = ideal.ambient();
  const auto m = max_exponents(ideal);
  for (Mask negative = 0; negative < (Mask{1} << n); ++negative) {
    std::vector<std::size_t> free;
    bool empty_range = false;
    for (std::size_t k = 0; k < n; ++k) {
      if (negative & (Mask{1} << k)) continue;
      if (m[k] == 0) empty_range = true;
      free.push_back(k);
    }
    if (empty_range) continue;
    std::vector<int> a(n, -1);
    for (auto k : free) a[k] = 0;
    const int width = std::popcount(negative);
    while (true) {
      int p = 0;
      for (auto k : free) p += a[k];
      visit(a, width, p);
      std::size_t pos = 0;
      while (pos < free.size() && a[free[pos]] == m[free[pos]] - 1) a[free[pos++]] = 0;
      if (pos == free.size()) break;
      ++a[free[pos]];
    }
  }
}

std::vector<Monomial> standard_basis(const MonomialIdeal& ideal, int degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  for (auto& m : monomials_of_degree(ideal.ambient(), degree))
    if (!ideal.contains(m)) out.push_back(std::move(m));
  return out;
}

void check_bound(const BettiTable& table, int bound, int required) {
  if (bound >= required) return;
  for (const auto& [key, value] : table.entries()) {
    if (value != 0 && key.second >= bound - 1) {
      throw Error(ErrorCode::kCapacity, "Koszul degree bound " + std::to_string(bound) +
                                            " too small: Betti numbers do not stabilize");
    }
  }
  if (bound < 1) throw Error(ErrorCode::kCapacity, "Koszul degree bound too small");
}

}  // namespace

GradedPieceBasis standard_monomials(const MonomialIdeal& ideal, int degree) {
  return {degree, standard_basis(ideal, degree)};
}

BettiTable koszul_betti(const MonomialIdeal& ideal, std::optional<int> degree_bound) {
  const std::size_t n = ideal.ambient();
  require_variables(n, kKoszulMaxVariables, "Koszul");
  BettiTable table(BettiTable::Subject::kQuotient);
  if (ideal.is_unit()) return table;

  const auto lcm = max_exponents(ideal);
  int required = 0;
  for (int e : lcm) required += e;
  const int bound = degree_bound.value_or(required);

  std::vector<int> a(n, 0);
  while (true) {
    int total = 0;
    Mask support = 0;
    for (std::size_t k = 0; k < n; ++k) {
      total += a[k];
      if (a[k] > 0) support |= Mask{1} << k;
    }
    if (total <= bound) {
      // Cells e_T (x) x^(a - T), T inside the support, x^(a - T) not in I.
      std::vector<std::vector<Mask>> cells(n + 1);
      for (Mask t = support;; t = (t - 1) & support) {
        std::vector<int> rest = a;
        for (std::size_t k = 0; k < n; ++k)
          if (t & (Mask{1} << k)) --rest[k];
        if (!ideal.contains(Monomial(std::move(rest)))) cells[static_cast<std::size_t>(std::popcount(t))].push_back(t);
        if (t == 0) break;
      }
      for (auto& c : cells) std::sort(c.begin(), c.end());
      std::vector<std::size_t> ranks(n + 2, 0);  // ranks[i] = rank of d_i: K_i -> K_{i-1}
      for (std::size_t i = 1; i <= n; ++i) {
        const auto& src = cells[i];
        const auto& dst = cells[i - 1];
        if (src.empty() || dst.empty()) continue;
        linalg::IntMatrix m(dst.size(), std::vector<Integer>(src.size(), 0));
        for (std::size_t c = 0; c < src.size(); ++c) {
          for (std::size_t t = 0; t < n; ++t) {
            const Mask bit = Mask{1} << t;
            if (!(src[c] & bit)) continue;
            auto it = std::lower_bound(dst.begin(), dst.end(), src[c] & ~bit);
            if (it == dst.end() || *it != (src[c] & ~bit)) continue;
            m[static_cast<std::size_t>(it - dst.begin())][c] = (rank_below(src[c], t) % 2 == 0) ? 1 : -1;
          }
        }
        ranks[i] = rank_of(m);
      }
      for (std::size_t i = 0; i <= n; ++i) {
        const auto b = static_cast<std::int64_t>(cells[i].size()) - static_cast<std::int64_t>(ranks[i]) -
                       static_cast<std::int64_t>(ranks[i + 1]);
        if (b != 0) table.add(static_cast<int>(i), total, b);
      }
    }
    std::size_t pos = 0;
    while (pos < n && a[pos] == lcm[pos]) a[pos++] = 0;
    if (pos == n) break;
    ++a[pos];
  }
  check_bound(table, bound, required);
  return table;
}

BettiTable koszul_betti(const PolynomialIdeal& ideal, std::optional<int> degree_bound) {
  if (ideal.is_monomial()) return koszul_betti(ideal.as_monomial(), degree_bound);
  const std::size_t n = ideal.ambient();
  require_variables(n, kKoszulMaxVariables, "Koszul");
  const GroebnerBasis gb = buchberger(ideal);
  const MonomialIdeal lead = leading_ideal(gb, n);
  BettiTable table(BettiTable::Subject::kQuotient);
  if (lead.is_unit()) return table;

  // beta(R/I) <= beta(R/in(I)), which vanishes past deg lcm G(in(I)).
  int required = 0;
  for (int e : max_exponents(lead)) required += e;
  const int bound = degree_bound.value_or(required);

  std::map<int, std::vector<Monomial>> basis;
  auto basis_of = [&](int d) -> const std::vector<Monomial>& {
    auto it = basis.find(d);
    if (it == basis.end()) it = basis.emplace(d, standard_basis(lead, d)).first;
    return it->second;
  };
  std::unordered_map<Monomial, Polynomial, MonomialHash> nf_cache;
  auto reduce = [&](const Monomial& m) -> const Polynomial& {
    auto it = nf_cache.find(m);
    if (it == nf_cache.end()) it = nf_cache.emplace(m, normal_form(Polynomial(m), gb.elements)).first;
    return it->second;
  };

  std::vector<Mask> subsets_by_size[kKoszulMaxVariables + 1];
  for (Mask t = 0; t < (Mask{1} << n); ++t) subsets_by_size[std::popcount(t)].push_back(t);

  for (int j = 0; j <= bound; ++j) {
    // dims[i] = dim K_{i,j}; ranks[i] = rank of d_i in degree j.
    std::vector<std::int64_t> dims(n + 1, 0);
    std::vector<std::size_t> ranks(n + 2, 0);
    for (std::size_t i = 0; i <= n && static_cast<int>(i) <= j; ++i) {
      dims[i] = static_cast<std::int64_t>(subsets_by_size[i].size() * basis_of(j - static_cast<int>(i)).size());
    }
    for (std::size_t i = 1; i <= n && static_cast<int>(i) <= j; ++i) {
      const auto& src_basis = basis_of(j - static_cast<int>(i));
      const auto& dst_basis = basis_of(j - static_cast<int>(i) + 1);
      if (src_basis.empty() || dst_basis.empty()) continue;
      std::unordered_map<Monomial, std::size_t, MonomialHash> dst_index;
      for (std::size_t k = 0; k < dst_basis.size(); ++k) dst_index.emplace(dst_basis[k], k);
      const auto& src_sets = subsets_by_size[i];
      const auto& dst_sets = subsets_by_size[i - 1];
      linalg::QMatrix m(dst_sets.size() * dst_basis.size(),
                        std::vector<Rational>(src_sets.size() * src_basis.size(), 0));
      for (std::size_t ts = 0; ts < src_sets.size(); ++ts) {
        const Mask t_set = src_sets[ts];
        for (std::size_t t = 0; t < n; ++t) {
          const Mask bit = Mask{1} << t;
          if (!(t_set & bit)) continue;
          const std::size_t td =
              static_cast<std::size_t>(std::lower_bound(dst_sets.begin(), dst_sets.end(), t_set & ~bit) - dst_sets.begin());
          const int sign = rank_below(t_set, t) % 2 == 0 ? 1 : -1;
          for (std::size_t b = 0; b < src_basis.size(); ++b) {
            const Polynomial& image = reduce(src_basis[b] * Monomial::variable(n, t + 1));
            for (const auto& [mono, coeff] : image.terms()) {
              m[td * dst_basis.size() + dst_index.at(mono)][ts * src_basis.size() + b] += sign * coeff;
            }
          }
        }
      }
      ranks[i] = linalg::rank(std::move(m));
    }
    for (std::size_t i = 0; i <= n; ++i) {
      const auto b = dims[i] - static_cast<std::int64_t>(ranks[i]) - static_cast<std::int64_t>(ranks[i + 1]);
      if (b != 0) table.add(static_cast<int>(i), j, b);
    }
  }
  check_bound(table, bound, required);
  return table;
}

std::vector<std::int64_t> cech_multidegree(const MonomialIdeal& ideal, const std::vector<int>& a) {
  require_variables(ideal.ambient(), kCechMaxVariables, "Cech");
  if (a.size() != ideal.ambient()) throw Error(ErrorCode::kAmbientMismatch, "multidegree length differs from n");
  return cech_at(ideal, a).cohomology;
}

std::vector<CechClassSummary> cech_classes(const MonomialIdeal& ideal) {
  require_variables(ideal.ambient(), kCechMaxVariables, "Cech");
  std::vector<CechClassSummary> out;
  for_each_class(ideal, [&](const std::vector<int>& a, int, int) { out.push_back(cech_at(ideal, a)); });
  return out;
}

CohomologyTable cech_local_cohomology(const MonomialIdeal& ideal, Window window) {
  const std::size_t n = ideal.ambient();
  require_variables(n, kCechMaxVariables, "Cech");
  using Key = std::tuple<int, int>;  // anchor, width
  std::vector<std::map<Key, std::int64_t>> collected(n + 1);
  for_each_class(ideal, [&](const std::vector<int>& a, int width, int p) {
    const auto h = cech_at(ideal, a).cohomology;
    for (std::size_t k = 0; k <= n; ++k)
      if (h[k] != 0) collected[k][{p, width}] += h[k];
  });
  std::vector<HilbertFunction> modules;
  for (const auto& c : collected) {
    std::vector<BinomialTerm> terms;
    for (const auto& [key, coeff] : c) {
      const auto [anchor, width] = key;
      terms.push_back({width == 0 ? BinomialTerm::Shape::kPoint : BinomialTerm::Shape::kDown, anchor, width, coeff});
    }
    modules.emplace_back(window, std::move(terms));
  }
  return CohomologyTable(n, window, std::move(modules));
}

CohomologyTable cech_by_box(const MonomialIdeal& ideal, Window window, int widen) {
  const std::size_t n = ideal.ambient();
  require_variables(n, kCechMaxVariables, "Cech");
  const auto m = max_exponents(ideal);
  const int top = std::max(ideal.max_degree(), 0) + widen;
  std::vector<int> lo(n);
  for (std::size_t k = 0; k < n; ++k) lo[k] = -(1 + m[k] + static_cast<int>(n)) - widen;

  // Outside the box only multidegrees with every nonnegative entry below the
  // largest exponent can carry cohomology; that bounds the fibre of e.
  int covered_from = window.lo;
  for (std::size_t i = 0; i < n; ++i) {
    int others = 0;
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) others += m[j] == 0 ? -1 : m[j] - 1;
    covered_from = std::max(covered_from, lo[i] + others);
  }
  const Window covered{covered_from, window.hi};
  std::vector<std::vector<std::int64_t>> values(n + 1, std::vector<std::int64_t>(covered.size(), 0));

  if (covered.size() > 0) {
    std::vector<int> a = lo;
    while (true) {
      int total = 0;
      for (int e : a) total += e;
      if (covered.contains(total)) {
        const auto h = cech_at(ideal, a).cohomology;
        for (std::size_t k = 0; k <= n; ++k) values[k][static_cast<std::size_t>(total - covered.lo)] += h[k];
      }
      std::size_t pos = 0;
      while (pos < n && a[pos] == top) {
        a[pos] = lo[pos];
        ++pos;
      }
      if (pos == n) break;
      ++a[pos];
    }
  }
  std::vector<HilbertFunction> modules;
  for (auto& v : values) modules.emplace_back(covered, std::move(v));
  return CohomologyTable(n, covered, std::move(modules));
}

HilbertFunction brute_hilbert(const MonomialIdeal& ideal, Window window) {
  std::vector<std::int64_t> values;
  for (int d = window.lo; d <= window.hi; ++d)
    values.push_back(static_cast<std::int64_t>(standard_basis(ideal, d).size()));
  return HilbertFunction(window, std::move(values));
}

HilbertFunction brute_hilbert(const PolynomialIdeal& ideal, Window window) {
  return brute_hilbert(leading_ideal(buchberger(ideal), ideal.ambient()), window);
}

DepthDim depth_and_dim(const MonomialIdeal& ideal, std::optional<int> degree_bound) {
  if (ideal.is_unit()) throw Error(ErrorCode::kInvalidArgument, "depth of the zero module is undefined");
  const int pd = koszul_betti(ideal, degree_bound).projective_dimension();
  return {static_cast<int>(ideal.ambient()) - pd, krull_dimension(ideal)};
}

DepthDim depth_and_dim(const PolynomialIdeal& ideal, std::optional<int> degree_bound) {
  const MonomialIdeal lead = initial_ideal(ideal);
  if (lead.is_unit()) throw Error(ErrorCode::kInvalidArgument, "depth of the zero module is undefined");
  const int pd = koszul_betti(ideal, degree_bound).projective_dimension();
  return {static_cast<int>(ideal.ambient()) - pd, krull_dimension(lead)};
}

}  // namespace gincoh::oracles
