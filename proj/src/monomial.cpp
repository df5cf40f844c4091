#include "gincoh/monomial.hpp"

#include <algorithm>
#include <bit>
#include <functional>

#include "gincoh/error.hpp"

namespace gincoh {

namespace {

bool canonical_less(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  return compare(a, b) == std::strong_ordering::greater;
}

using UPoly = std::vector<Integer>;  // dense univariate, index = power of t

void trim(UPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UPoly sub(UPoly a, const UPoly& b) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) a[k] -= b[k];
  trim(a);
  return a;
}

UPoly shift(const UPoly& p, int by) {
  if (p.empty()) return p;
  UPoly out(static_cast<std::size_t>(by), 0);
  out.insert(out.end(), p.begin(), p.end());
  return out;
}

UPoly mul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

bool pairwise_coprime(const std::vector<Monomial>& gens) {
  const std::size_t n = gens.front().ambient();
  std::vector<char> used(n, 0);
  for (const auto& g : gens) {
    for (std::size_t k = 0; k < n; ++k) {
      if (g[k] == 0) continue;
      if (used[k]) return false;
      used[k] = 1;
    }
  }
  return true;
}

UPoly numerator(const std::vector<Monomial>& gens) {
  if (gens.empty()) return {1};
  if (gens.front().is_one()) return {};
  if (pairwise_coprime(gens)) {
    UPoly out{1};
    for (const auto& g : gens) {
      UPoly factor(static_cast<std::size_t>(g.degree()) + 1, 0);
      factor[0] = 1;
      factor.back() -= 1;
      out = mul(out, factor);
    }
    return out;
  }
  // Split off the last (highest-degree) generator.
  const Monomial& u = gens.back();
  const std::size_t n = u.ambient();
  std::vector<Monomial> rest(gens.begin(), gens.end() - 1);
  std::vector<Monomial> quotients;
  quotients.reserve(rest.size());
  for (const auto& g : rest) quotients.push_back(g.quotient(g.gcd(u)));
  const MonomialIdeal colon_ideal = minimalize(n, std::move(quotients));
  return sub(numerator(rest), shift(numerator(colon_ideal.generators()), u.degree()));
}

Monomial truncate(const Monomial& m, std::size_t s) {
  return Monomial(std::vector<int>(m.exponents().begin(), m.exponents().begin() + static_cast<long>(s)));
}

}  // namespace

MonomialIdeal::MonomialIdeal(std::size_t n, std::vector<Monomial> generators) : n_(n) {
  for (const auto& m : generators) {
    if (m.ambient() != n) throw Error(ErrorCode::kAmbientMismatch, "generator outside the ambient ring");
  }
  std::sort(generators.begin(), generators.end(), canonical_less);
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());
  // Sorted by degree, so a divisor always precedes its multiples.
  for (auto& m : generators) {
    const bool redundant =
        std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
    if (!redundant) generators_.push_back(std::move(m));
  }
}

MonomialIdeal MonomialIdeal::unit(std::size_t n) {
  return MonomialIdeal(n, {Monomial(n)});
}

bool MonomialIdeal::is_squarefree() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Monomial& m) { return m.is_squarefree(); });
}

int MonomialIdeal::max_degree() const {
  int d = 0;
  for (const auto& g : generators_) d = std::max(d, g.degree());
  return d;
}

bool MonomialIdeal::contains(const Monomial& m) const {
  return std::any_of(generators_.begin(), generators_.end(), [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

std::string MonomialIdeal::to_string() const {
  if (generators_.empty()) return "(0)";
  std::string out = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) {
    if (k) out += ", ";
    out += generators_[k].to_string();
  }
  return out + ")";
}

MonomialIdeal minimalize(std::size_t n, std::vector<Monomial> monomials) {
  return MonomialIdeal(n, std::move(monomials));
}

std::vector<Monomial> monomials_of_degree(std::size_t n, int d) {
  std::vector<Monomial> out;
  if (d < 0) return out;
  if (n == 0) {
    if (d == 0) out.emplace_back(0);
    return out;
  }
  std::vector<int> e(n, 0);
  std::function<void(std::size_t, int)> rec = [&](std::size_t k, int left) {
    if (k + 1 == n) {
      e[k] = left;
      out.emplace_back(e);
      return;
    }
    for (int v = left; v >= 0; --v) {
      e[k] = v;
      rec(k + 1, left - v);
    }
  };
  rec(0, d);
  std::sort(out.begin(), out.end(), TermGreater{});
  return out;
}

MonomialIdeal operator+(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> all = a.generators();
  all.insert(all.end(), b.generators().begin(), b.generators().end());
  return minimalize(a.ambient(), std::move(all));
}

MonomialIdeal intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> lcms;
  for (const auto& u : a.generators())
    for (const auto& v : b.generators()) lcms.push_back(u.lcm(v));
  return minimalize(a.ambient(), std::move(lcms));
}

MonomialIdeal colon(const MonomialIdeal& ideal, const Monomial& u) {
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) out.push_back(g.quotient(g.gcd(u)));
  return minimalize(ideal.ambient(), std::move(out));
}

std::size_t m_of(const Monomial& u) {
  for (std::size_t k = u.ambient(); k-- > 0;) {
    if (u[k] > 0) return k + 1;
  }
  throw Error(ErrorCode::kInvalidArgument, "m(u) is undefined for u = 1");
}

std::optional<StabilityWitness> strong_stability_violation(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 2; i <= n; ++i) {
      if (u[i - 1] == 0) continue;
      const Monomial without = u.quotient(Monomial::variable(n, i));
      for (std::size_t j = 1; j < i; ++j) {
        if (!ideal.contains(without * Monomial::variable(n, j))) return StabilityWitness{u, i, j};
      }
    }
  }
  return std::nullopt;
}

MonomialIdeal colon_saturate_variable(const MonomialIdeal& ideal, std::size_t s) {
  const std::size_t n = ideal.ambient();
  if (s < 1 || s > n) throw Error(ErrorCode::kInvalidArgument, "variable index outside 1..n");
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    std::vector<int> e(g.exponents().begin(), g.exponents().end());
    e[s - 1] = 0;
    out.emplace_back(std::move(e));
  }
  return minimalize(n, std::move(out));
}

MonomialIdeal saturate(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  if (n == 0) return ideal;
  MonomialIdeal out = colon_saturate_variable(ideal, 1);
  for (std::size_t s = 2; s <= n; ++s) out = intersect(out, colon_saturate_variable(ideal, s));
  return out;
}

// ---------------------------------------------------------------------------

std::int64_t HilbertSeries::value_at(int degree) const {
  Integer total = 0;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    const long dk = degree - static_cast<long>(k);
    if (dk < 0) break;
    if (n == 0) {
      if (dk == 0) total += numerator[k];
    } else {
      total += numerator[k] * binomial(dk + static_cast<long>(n) - 1, static_cast<long>(n) - 1);
    }
  }
  return total.get_si();
}

std::vector<BinomialTerm> HilbertSeries::closed_form() const {
  std::vector<BinomialTerm> out;
  for (std::size_t k = 0; k < numerator.size(); ++k) {
    if (numerator[k] == 0) continue;
    BinomialTerm t;
    t.shape = n == 0 ? BinomialTerm::Shape::kPoint : BinomialTerm::Shape::kUp;
    t.anchor = static_cast<int>(k);
    t.width = static_cast<int>(n);
    t.coefficient = numerator[k].get_si();
    out.push_back(t);
  }
  return out;
}

bool HilbertSeries::operator==(const HilbertSeries& other) const {
  UPoly a = numerator, b = other.numerator;
  trim(a);
  trim(b);
  return n == other.n && a == b;
}

HilbertSeries hilbert_series(const MonomialIdeal& ideal) {
  return {ideal.ambient(), numerator(ideal.generators())};
}

HilbertSeries hilbert_series_by_subsets(const MonomialIdeal& ideal, std::size_t cap) {
  const auto& gens = ideal.generators();
  if (gens.size() > cap) {
    throw Error(ErrorCode::kCapacity, "inclusion-exclusion over " + std::to_string(gens.size()) +
                                          " generators exceeds the cap of " + std::to_string(cap));
  }
  const std::size_t n = ideal.ambient();
  UPoly num;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << gens.size()); ++mask) {
    Monomial l(n);
    for (std::size_t k = 0; k < gens.size(); ++k) {
      if (mask >> k & 1) l = l.lcm(gens[k]);
    }
    const auto d = static_cast<std::size_t>(l.degree());
    if (num.size() <= d) num.resize(d + 1, 0);
    num[d] += (std::popcount(mask) % 2 == 0) ? 1 : -1;
  }
  trim(num);
  return {n, num};
}

HilbertFunction hilbert_function(const MonomialIdeal& ideal, Window window) {
  return HilbertFunction(window, hilbert_series(ideal).closed_form());
}

int krull_dimension(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  if (ideal.is_unit()) return -1;
  if (n > 24) throw Error(ErrorCode::kCapacity, "krull_dimension enumerates variable subsets; n > 24");
  std::vector<std::uint32_t> supports;
  for (const auto& g : ideal.generators()) {
    std::uint32_t mask = 0;
    for (std::size_t k = 0; k < n; ++k)
      if (g[k] > 0) mask |= 1u << k;
    supports.push_back(mask);
  }
  int best = static_cast<int>(n);
  for (std::uint32_t cover = 0; cover < (1u << n); ++cover) {
    const int size = std::popcount(cover);
    if (size >= best) continue;
    if (std::all_of(supports.begin(), supports.end(), [&](std::uint32_t s) { return (s & cover) != 0; })) best = size;
  }
  return static_cast<int>(n) - best;
}

MonomialIdeal component_ideal(const MonomialIdeal& ideal, int d) {
  if (d < 0) throw Error(ErrorCode::kInvalidArgument, "negative degree");
  const std::size_t n = ideal.ambient();
  std::vector<Monomial> out;
  for (const auto& g : ideal.generators()) {
    if (g.degree() > d) continue;
    for (const auto& m : monomials_of_degree(n, d - g.degree())) out.push_back(g * m);
  }
  return minimalize(n, std::move(out));
}

// ---------------------------------------------------------------------------

DimensionFiltration dimension_filtration(const MonomialIdeal& ideal) {
  if (auto w = strong_stability_violation(ideal)) {
    throw Error(ErrorCode::kNotStronglyStable,
                ideal.to_string() + " is not strongly stable: x" + std::to_string(w->j) + "*" +
                    w->generator.to_string() + "/x" + std::to_string(w->i) + " is missing");
  }
  const std::size_t n = ideal.ambient();
  DimensionFiltration out{n, {}};
  if (ideal.is_zero()) {
    out.layers.push_back({ideal, MonomialIdeal::unit(n), 0, static_cast<int>(n), {{0, 1}}});
    return out;
  }
  MonomialIdeal current = ideal;
  while (!current.is_unit()) {
    std::size_t s = 0;
    for (const auto& g : current.generators()) s = std::max(s, m_of(g));
    MonomialIdeal next = colon_saturate_variable(current, s);

    std::vector<Monomial> j_gens, jsat_gens;
    for (const auto& g : current.generators()) j_gens.push_back(truncate(g, s));
    for (const auto& g : next.generators()) jsat_gens.push_back(truncate(g, s));
    const MonomialIdeal j(s, std::move(j_gens));
    const MonomialIdeal jsat(s, std::move(jsat_gens));

    // Hilb(J^sat / J) = (N_J - N_Jsat) / (1 - t)^s, a polynomial since the
    // quotient has finite length.
    UPoly socle = sub(numerator(j.generators()), numerator(jsat.generators()));
    for (std::size_t k = 0; k < s; ++k) {
      Integer running = 0;
      for (auto& c : socle) {
        running += c;
        c = running;
      }
      if (running != 0) throw Error(ErrorCode::kInternal, "J^sat / J does not have finite length");
      trim(socle);
    }
    if (socle.empty()) throw Error(ErrorCode::kInternal, "J^sat does not contain J properly");

    FiltrationLayer layer{current, next, s, static_cast<int>(n - s), {}};
    for (std::size_t a = 0; a < socle.size(); ++a) {
      if (socle[a] < 0) throw Error(ErrorCode::kInternal, "negative socle dimension");
      if (socle[a] != 0) layer.socle[static_cast<int>(a)] = socle[a].get_si();
    }
    if (!out.layers.empty() && out.layers.back().dimension >= layer.dimension) {
      throw Error(ErrorCode::kInternal, "layer dimensions do not increase");
    }
    out.layers.push_back(std::move(layer));
    current = std::move(next);
  }
  return out;
}

std::vector<BinomialTerm> layer_hilbert_terms(const FiltrationLayer& layer, std::size_t n) {
  const int k = static_cast<int>(n - layer.s);
  std::vector<BinomialTerm> out;
  for (const auto& [a, h] : layer.socle) {
    out.push_back({k == 0 ? BinomialTerm::Shape::kPoint : BinomialTerm::Shape::kUp, a, k, h});
  }
  return out;
}

Window default_cohomology_window(const MonomialIdeal& ideal) {
  const int d = ideal.max_degree();
  return {-(static_cast<int>(ideal.ambient()) + d + 2), d};
}

CohomologyTable local_cohomology_strongly_stable(const MonomialIdeal& ideal, Window window) {
  const std::size_t n = ideal.ambient();
  std::vector<std::vector<BinomialTerm>> terms(n + 1);
  if (!ideal.is_unit()) {
    for (const auto& layer : dimension_filtration(ideal).layers) {
      const int k = static_cast<int>(n - layer.s);
      for (const auto& [a, h] : layer.socle) {
        terms[static_cast<std::size_t>(layer.dimension)].push_back(
            {k == 0 ? BinomialTerm::Shape::kPoint : BinomialTerm::Shape::kDown, a, k, h});
      }
    }
  }
  std::vector<HilbertFunction> modules;
  for (auto& t : terms) modules.emplace_back(window, std::move(t));
  return CohomologyTable(n, window, std::move(modules));
}

BettiTable eliahou_kervaire_betti(const MonomialIdeal& ideal) {
  if (!is_strongly_stable(ideal))
    throw Error(ErrorCode::kNotStronglyStable, ideal.to_string() + " is not strongly stable");
  BettiTable out(BettiTable::Subject::kIdeal);
  if (ideal.is_zero()) return out.to_quotient();
  for (const auto& u : ideal.generators()) {
    const int j = u.degree();
    const int m = u.is_one() ? 1 : static_cast<int>(m_of(u));  // the unit ideal resolves as R
    for (int i = 0; i < m; ++i) out.add(i, i + j, binomial64(m - 1, i));
  }
  return out.to_quotient();
}

}  // namespace gincoh
