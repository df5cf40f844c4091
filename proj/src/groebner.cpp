#include "gincoh/groebner.hpp"

#include <algorithm>
#include <map>

#include "gincoh/error.hpp"

namespace gincoh {

PolynomialIdeal::PolynomialIdeal(std::size_t n, std::vector<Polynomial> generators) : n_(n) {
  for (auto& g : generators) {
    if (g.ambient() != n) throw Error(ErrorCode::kAmbientMismatch, "generator outside the ambient ring");
    if (g.is_zero()) continue;
    if (!g.is_homogeneous()) {
      throw Error(ErrorCode::kInvalidArgument, "generator " + g.to_string() + " is not homogeneous");
    }
    generators_.push_back(std::move(g));
  }
}

PolynomialIdeal PolynomialIdeal::from_monomial(const MonomialIdeal& ideal) {
  std::vector<Polynomial> gens;
  for (const auto& m : ideal.generators()) gens.emplace_back(m);
  return PolynomialIdeal(ideal.ambient(), std::move(gens));
}

bool PolynomialIdeal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(), [](const Polynomial& g) { return g.is_monomial(); });
}

MonomialIdeal PolynomialIdeal::as_monomial() const {
  if (!is_monomial()) throw Error(ErrorCode::kInvalidArgument, "ideal is not monomial");
  std::vector<Monomial> gens;
  for (const auto& g : generators_) gens.push_back(g.leading_monomial());
  return MonomialIdeal(n_, std::move(gens));
}

Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors, TermOrder) {
  Polynomial p = f;
  Polynomial remainder(f.ambient());
  while (!p.is_zero()) {
    const Monomial m = p.leading_monomial();
    const Rational c = p.leading_coefficient();
    const Polynomial* reducer = nullptr;
    for (const auto& g : divisors) {
      if (g.leading_monomial().divides(m)) {
        reducer = &g;
        break;
      }
    }
    if (reducer) {
      p.add_multiple(*reducer, -c / reducer->leading_coefficient(), m.quotient(reducer->leading_monomial()));
    } else {
      remainder.add_term(m, c);
      p.add_term(m, -c);
    }
  }
  return remainder;
}

namespace {

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t k = 0; k < a.ambient(); ++k)
    if (a[k] > 0 && b[k] > 0) return false;
  return true;
}

// Homogeneous Buchberger: inputs and S-pairs are consumed degree by degree
// (normal selection within a degree), with the Gebauer-Moeller update.
class Engine {
 public:
  Engine(std::size_t n, const HilbertSeries* hint) : n_(n), hint_(hint) {}

  GroebnerBasis run(const std::vector<Polynomial>& inputs) {
    std::multimap<int, Polynomial> pending;
    for (const auto& g : inputs) pending.emplace(g.degree(), g.monic());

    while (!pending.empty() || !pairs_.empty()) {
      int degree = pending.empty() ? INT32_MAX : pending.begin()->first;
      for (const auto& p : pairs_) degree = std::min(degree, p.lcm.degree());

      long need = -1;  // -1: no hint
      if (hint_) {
        const MonomialIdeal lead = current_leading_ideal();
        if (hilbert_series(lead) == *hint_) break;
        need = hilbert_series(lead).value_at(degree) - hint_->value_at(degree);
        if (need < 0) throw Error(ErrorCode::kInternal, "Hilbert hint is smaller than the leading ideal");
      }

      std::vector<Polynomial> work;
      for (auto it = pending.begin(); it != pending.end() && it->first == degree;) {
        work.push_back(std::move(it->second));
        it = pending.erase(it);
      }
      std::vector<Pair> now;
      std::vector<Pair> later;
      for (auto& p : pairs_) (p.lcm.degree() == degree ? now : later).push_back(std::move(p));
      pairs_ = std::move(later);
      std::sort(now.begin(), now.end(), [](const Pair& a, const Pair& b) { return TermGreater{}(b.lcm, a.lcm); });

      for (std::size_t k = 0; k < work.size() + now.size(); ++k) {
        if (need == 0) break;
        Polynomial p = k < work.size() ? std::move(work[k]) : s_polynomial(now[k - work.size()]);
        Polynomial r = normal_form(p, active_cache_);
        if (r.is_zero()) continue;
        add(r.monic());
        if (need > 0) --need;
      }
    }
    if (hint_ && !(hilbert_series(current_leading_ideal()) == *hint_)) {
      throw Error(ErrorCode::kInternal, "leading ideal does not reach the hinted Hilbert series");
    }
    return interreduce();
  }

 private:
  std::vector<Polynomial> active_polys() const {
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  MonomialIdeal current_leading_ideal() const {
    std::vector<Monomial> lms;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) lms.push_back(polys_[k].leading_monomial());
    return MonomialIdeal(n_, std::move(lms));
  }

  Polynomial s_polynomial(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    Polynomial s(n_);
    s.add_multiple(f, 1 / f.leading_coefficient(), p.lcm.quotient(f.leading_monomial()));
    s.add_multiple(g, -1 / g.leading_coefficient(), p.lcm.quotient(g.leading_monomial()));
    return s;
  }

  void add(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);

    // Gebauer-Moeller: new pairs (h, g) filtered by the chain criterion and
    // the product criterion; old pairs killed when lm(h) sits strictly
    // inside their lcm.
    std::vector<Pair> candidates;
    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k]) candidates.push_back({k, hi, polys_[k].leading_monomial().lcm(lh)});
    }
    std::vector<Pair> kept;
    for (std::size_t a = 0; a < candidates.size(); ++a) {
      const auto& c = candidates[a];
      if (coprime(polys_[c.i].leading_monomial(), lh)) {
        kept.push_back(c);
        continue;
      }
      // Chain criterion: keep one pair per minimal lcm (the earliest).
      bool dominated = false;
      for (std::size_t b = 0; b < candidates.size() && !dominated; ++b) {
        const auto& o = candidates[b];
        dominated = b != a && o.lcm.divides(c.lcm) && (b < a || !(o.lcm == c.lcm));
      }
      if (!dominated) kept.push_back(c);
    }
    std::vector<Pair> fresh;
    for (auto& c : kept) {
      if (!coprime(polys_[c.i].leading_monomial(), lh)) fresh.push_back(std::move(c));
    }

    std::vector<Pair> survivors;
    for (auto& p : pairs_) {
      const bool killed = lh.divides(p.lcm) && !(polys_[p.i].leading_monomial().lcm(lh) == p.lcm) &&
                          !(polys_[p.j].leading_monomial().lcm(lh) == p.lcm);
      if (!killed) survivors.push_back(std::move(p));
    }
    pairs_ = std::move(survivors);
    pairs_.insert(pairs_.end(), fresh.begin(), fresh.end());

    for (std::size_t k = 0; k < hi; ++k) {
      if (active_[k] && lh.divides(polys_[k].leading_monomial())) active_[k] = false;
    }
    active_cache_ = active_polys();
  }

  GroebnerBasis interreduce() const {
    std::vector<Polynomial> minimal = active_polys();
    std::sort(minimal.begin(), minimal.end(), [](const Polynomial& a, const Polynomial& b) {
      return TermGreater{}(b.leading_monomial(), a.leading_monomial());
    });
    GroebnerBasis out;
    out.reduced = true;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<Polynomial> others;
      for (std::size_t l = 0; l < minimal.size(); ++l)
        if (l != k) others.push_back(minimal[l]);
      out.elements.push_back(normal_form(minimal[k], others).monic());
    }
    return out;
  }

  std::size_t n_;
  const HilbertSeries* hint_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Polynomial> active_cache_;
  std::vector<Pair> pairs_;
};

}  // namespace

GroebnerBasis buchberger(const PolynomialIdeal& ideal, const BuchbergerOptions& options) {
  if (ideal.is_zero()) return GroebnerBasis{{}, TermOrder::kDegRevLex, true};
  Engine engine(ideal.ambient(), options.hilbert_hint);
  GroebnerBasis basis = engine.run(ideal.generators());
  for (const auto& g : ideal.generators()) {
    if (!normal_form(g, basis.elements).is_zero()) {
      throw Error(ErrorCode::kInternal, "Groebner basis does not contain generator " + g.to_string());
    }
  }
  return basis;
}

MonomialIdeal leading_ideal(const GroebnerBasis& basis, std::size_t n) {
  std::vector<Monomial> lms;
  for (const auto& g : basis.elements) lms.push_back(g.leading_monomial());
  return MonomialIdeal(n, std::move(lms));
}

MonomialIdeal initial_ideal(const PolynomialIdeal& ideal) {
  if (ideal.is_monomial()) return ideal.as_monomial();
  return leading_ideal(buchberger(ideal), ideal.ambient());
}

bool same_ideal(const PolynomialIdeal& a, const PolynomialIdeal& b) {
  if (a.ambient() != b.ambient()) throw Error(ErrorCode::kAmbientMismatch, "ideals in different rings");
  const auto ga = buchberger(a);
  const auto gb = buchberger(b);
  auto inside = [](const PolynomialIdeal& ideal, const GroebnerBasis& basis) {
    return std::all_of(ideal.generators().begin(), ideal.generators().end(),
                       [&](const Polynomial& f) { return normal_form(f, basis.elements).is_zero(); });
  };
  return inside(a, gb) && inside(b, ga);
}

PolynomialIdeal change_coordinates(const PolynomialIdeal& ideal, const RationalMatrix& g) {
  std::vector<Polynomial> gens;
  for (const auto& f : ideal.generators()) gens.push_back(apply_coordinate_change(f, g));
  return PolynomialIdeal(ideal.ambient(), std::move(gens));
}

PolynomialIdeal saturate_by_last_variable(const PolynomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  if (n == 0 || ideal.is_zero()) return ideal;
  std::vector<Polynomial> divided;
  for (const auto& g : buchberger(ideal).elements) {
    int power = INT32_MAX;
    for (const auto& [m, c] : g.terms()) power = std::min(power, m[n - 1]);
    std::vector<int> e(n, 0);
    e[n - 1] = power;
    const Monomial xn_power(std::move(e));
    Polynomial q(n);
    for (const auto& [m, c] : g.terms()) q.add_term(m.quotient(xn_power), c);
    divided.push_back(std::move(q));
  }
  auto basis = buchberger(PolynomialIdeal(n, std::move(divided)));
  return PolynomialIdeal(n, std::move(basis.elements));
}

std::uint64_t draw_seed(std::uint64_t seed, int k) {
  return mix_seed(seed ^ mix_seed(static_cast<std::uint64_t>(k) + 1));
}

SaturationResult saturation(const PolynomialIdeal& ideal, std::uint64_t seed) {
  const std::size_t n = ideal.ambient();
  auto once = [&](std::uint64_t s) {
    const RationalMatrix g = RationalMatrix::random_invertible(n, s);
    const PolynomialIdeal sat = saturate_by_last_variable(change_coordinates(ideal, g));
    auto basis = buchberger(change_coordinates(sat, g.inverse()));
    return PolynomialIdeal(n, std::move(basis.elements));
  };
  const std::uint64_t s0 = draw_seed(seed, 0);
  const std::uint64_t s1 = draw_seed(seed, 1);
  PolynomialIdeal first = once(s0);
  const PolynomialIdeal second = once(s1);
  if (!same_ideal(first, second)) {
    throw Error(ErrorCode::kGenericity, "saturation disagrees between two random coordinate systems");
  }
  return {std::move(first), {s0, s1}};
}

GinResult gin(const PolynomialIdeal& ideal, std::uint64_t seed, const GinOptions& options) {
  const std::size_t n = ideal.ambient();
  if (ideal.is_zero()) throw Error(ErrorCode::kInvalidArgument, "gin of the zero ideal");
  const HilbertSeries hint = hilbert_series(initial_ideal(ideal));
  BuchbergerOptions bo;
  bo.hilbert_hint = &hint;

  GinResult result;
  result.seed = seed;
  std::vector<MonomialIdeal> draws;
  const int max_draws = 2 + std::max(0, options.retry_budget);
  for (int k = 0; k < max_draws; ++k) {
    const std::uint64_t s = draw_seed(seed, k);
    const RationalMatrix g = RationalMatrix::random_invertible(n, s);
    MonomialIdeal lead = leading_ideal(buchberger(change_coordinates(ideal, g), bo), n);
    result.draw_seeds.push_back(s);
    const bool repeated = std::find(draws.begin(), draws.end(), lead) != draws.end();
    draws.push_back(std::move(lead));
    if (repeated) {
      result.ideal = draws.back();
      if (auto w = strong_stability_violation(result.ideal)) {
        throw Error(ErrorCode::kNotStronglyStable,
                    "certified gin " + result.ideal.to_string() + " is not strongly stable");
      }
      return result;
    }
  }
  throw Error(ErrorCode::kGenericity,
              "no two of " + std::to_string(max_draws) + " random coordinate systems agree on the gin");
}

}  // namespace gincoh
