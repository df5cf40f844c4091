#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "gincoh/acceptance.hpp"
#include "gincoh/groebner.hpp"
#include "gincoh/monomial.hpp"
#include "gincoh/ring.hpp"
#include "gincoh/simplicial.hpp"

namespace testing {

using namespace gincoh;

inline constexpr std::uint64_t kSeed = 20261015;

inline Polynomial poly(std::size_t n, const std::string& text) { return parse_polynomial(text, n); }

inline Monomial mono(std::size_t n, const std::string& text) { return poly(n, text).leading_monomial(); }

inline MonomialIdeal mideal(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Monomial> ms;
  for (const char* g : gens) ms.push_back(mono(n, g));
  return MonomialIdeal(n, std::move(ms));
}

inline PolynomialIdeal pideal(std::size_t n, std::initializer_list<const char*> gens) {
  std::vector<Polynomial> ps;
  for (const char* g : gens) ps.push_back(poly(n, g));
  return PolynomialIdeal(n, std::move(ps));
}

inline SimplicialComplex cx(std::size_t n, const std::vector<std::vector<int>>& facets) {
  return SimplicialComplex::from_vertex_lists(n, facets);
}

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t n, int max_exp) {
  std::uniform_int_distribution<int> e(0, max_exp);
  std::vector<int> v(n);
  for (auto& x : v) x = e(rng);
  return Monomial(v);
}

inline Polynomial random_polynomial(std::mt19937_64& rng, std::size_t n, int terms, int max_exp) {
  std::uniform_int_distribution<int> c(-9, 9);
  Polynomial f(n);
  for (int k = 0; k < terms; ++k) f.add_term(random_monomial(rng, n, max_exp), Rational(c(rng), 1 + (k % 3)));
  return f;
}

// Smallest strongly stable ideal containing the given monomials.
inline MonomialIdeal borel_closure(std::size_t n, std::vector<Monomial> seeds) {
  std::set<std::vector<int>> seen;
  std::vector<Monomial> all;
  while (!seeds.empty()) {
    Monomial u = seeds.back();
    seeds.pop_back();
    std::vector<int> e(u.exponents().begin(), u.exponents().end());
    if (!seen.insert(e).second) continue;
    all.push_back(u);
    for (std::size_t i = 1; i < n; ++i) {
      if (e[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        std::vector<int> f = e;
        --f[i];
        ++f[j];
        seeds.emplace_back(f);
      }
    }
  }
  return MonomialIdeal(n, std::move(all));
}

inline MonomialIdeal random_strongly_stable(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> count(1, 3), deg(1, 3);
  std::uniform_int_distribution<std::size_t> var(0, n - 1);
  std::vector<Monomial> seeds;
  const int k = count(rng);
  for (int t = 0; t < k; ++t) {
    std::vector<int> e(n, 0);
    const int d = deg(rng);
    for (int s = 0; s < d; ++s) ++e[var(rng)];
    seeds.emplace_back(e);
  }
  return borel_closure(n, std::move(seeds));
}

// Random nonvoid complex on [n] (facets of size up to n - 1 so that some
// nonface usually exists).
inline SimplicialComplex random_complex(std::mt19937_64& rng, std::size_t n) {
  // Several faces of size at least two, so that non-shellable unions are common.
  std::uniform_int_distribution<int> count(1, 5);
  std::uniform_int_distribution<Face> mask(0, (Face{1} << n) - 1);
  std::vector<Face> faces;
  const int k = count(rng);
  while (static_cast<int>(faces.size()) < k) {
    const Face f = mask(rng);
    if (std::popcount(f) >= 2 || n < 2) faces.push_back(f);
  }
  return SimplicialComplex(n, std::move(faces));
}

inline const Corpus& corpus() {
  static const Corpus c = load_corpus(GINCOH_CORPUS_DIR);
  return c;
}

inline std::vector<PolynomialIdeal> corpus_ideals() {
  std::vector<PolynomialIdeal> out;
  for (const auto& e : corpus().ideals) out.push_back(std::get<PolynomialIdeal>(e.input));
  return out;
}

inline std::vector<SimplicialComplex> corpus_complexes() {
  std::vector<SimplicialComplex> out;
  for (const auto& e : corpus().complexes) out.push_back(std::get<SimplicialComplex>(e.input));
  return out;
}

}  // namespace testing
