#include "doctest.h"

#include <bit>
#include <set>

#include "gincoh/error.hpp"
#include "gincoh/oracles.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

PolynomialIdeal unit_ideal(std::size_t n) { return PolynomialIdeal(n, {Polynomial::constant(n, 1)}); }

}  // namespace

TEST_CASE("normal form examples") {
  const std::vector<Polynomial> g = {poly(2, "x1")};
  CHECK(normal_form(poly(2, "x1^2"), g).is_zero());
  CHECK(normal_form(poly(2, "x2"), g) == poly(2, "x2"));
  CHECK(normal_form(poly(2, "x1*x2 + x2^2"), g) == poly(2, "x2^2"));
}

TEST_CASE("buchberger examples") {
  GroebnerBasis gb = buchberger(pideal(2, {"x1", "x2"}));
  CHECK(gb.reduced);
  CHECK(gb.elements.size() == 2);
  CHECK(leading_ideal(gb, 2) == mideal(2, {"x1", "x2"}));

  gb = buchberger(pideal(2, {"x1^2", "x1*x2 + x2^2"}));
  CHECK(leading_ideal(gb, 2) == mideal(2, {"x1^2", "x1*x2", "x2^3"}));

  gb = buchberger(pideal(3, {"2*x1*x2 - 4*x3^2"}));
  REQUIRE(gb.elements.size() == 1);
  CHECK(gb.elements[0] == poly(3, "x1*x2 - 2*x3^2"));

  CHECK(buchberger(PolynomialIdeal(3)).elements.empty());
}

TEST_CASE("groebner bases are closed under S-pairs") {
  for (const auto& ideal : corpus_ideals()) {
    const GroebnerBasis gb = buchberger(ideal);
    const auto& g = gb.elements;
    for (std::size_t a = 0; a < g.size(); ++a) {
      CHECK(g[a].leading_coefficient() == 1);
      for (std::size_t b = a + 1; b < g.size(); ++b) {
        const Monomial l = g[a].leading_monomial().lcm(g[b].leading_monomial());
        Polynomial s = g[a] * l.quotient(g[a].leading_monomial());
        s -= g[b] * l.quotient(g[b].leading_monomial());
        CHECK(normal_form(s, g).is_zero());
      }
    }
    for (const auto& f : ideal.generators()) CHECK(normal_form(f, g).is_zero());
  }
}

TEST_CASE("initial ideal examples") {
  CHECK(initial_ideal(pideal(2, {"x1 + x2"})) == mideal(2, {"x1"}));
  CHECK(initial_ideal(pideal(2, {"x1^2", "x1*x2 + x2^2"})) == mideal(2, {"x1^2", "x1*x2", "x2^3"}));
  const MonomialIdeal j = mideal(3, {"x1^2*x3", "x2^3", "x1*x2*x3"});
  CHECK(initial_ideal(PolynomialIdeal::from_monomial(j)) == j);
}

TEST_CASE("saturation by the last variable") {
  CHECK(same_ideal(saturate_by_last_variable(pideal(2, {"x1*x2"})), pideal(2, {"x1"})));
  CHECK(same_ideal(saturate_by_last_variable(pideal(2, {"x1"})), pideal(2, {"x1"})));
  CHECK(same_ideal(saturate_by_last_variable(pideal(2, {"x2^3"})), unit_ideal(2)));
}

TEST_CASE("saturation examples") {
  CHECK(same_ideal(saturation(pideal(2, {"x1", "x2"}), kSeed).ideal, unit_ideal(2)));
  const PolynomialIdeal i = pideal(3, {"x1*x2", "x1*x3"});
  const SaturationResult r = saturation(i, kSeed);
  CHECK(same_ideal(r.ideal, i));
  CHECK(r.seeds.size() == 2);
  CHECK(same_ideal(saturation(pideal(2, {"x1^2", "x1*x2", "x2^3"}), kSeed).ideal, unit_ideal(2)));
}

TEST_CASE("saturation agrees with the monomial routine") {
  std::mt19937_64 rng(kSeed + 10);
  for (int t = 0; t < 20; ++t) {
    const std::size_t n = 2 + rng() % 2;
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) {
      Monomial u = random_monomial(rng, n, 2);
      if (!u.is_one()) gens.push_back(u);
    }
    const MonomialIdeal m(n, gens);
    const PolynomialIdeal sat = saturation(PolynomialIdeal::from_monomial(m), rng()).ideal;
    CHECK(initial_ideal(sat) == saturate(m));
  }
}

TEST_CASE("gin examples") {
  CHECK(gin(pideal(2, {"x1"}), kSeed).ideal == mideal(2, {"x1"}));
  CHECK(gin(pideal(2, {"x1^2", "x2^2"}), kSeed).ideal == mideal(2, {"x1^2", "x1*x2", "x2^3"}));
  CHECK(gin(pideal(2, {"x1*x2"}), kSeed).ideal == mideal(2, {"x1^2"}));
  CHECK(gin(pideal(3, {"x2 + x3"}), kSeed).ideal == mideal(3, {"x1"}));
}

TEST_CASE("gin is the only strongly stable ideal with the Hilbert function of (x1^2, x2^2)") {
  // R/I has Hilbert function 1, 2, 1, 0: two of the three quadrics and any
  // set of cubics. Enumerate them all and keep the strongly stable ones.
  const HilbertFunction target = hilbert_function(mideal(2, {"x1^2", "x2^2"}), {0, 6});
  const auto quadrics = monomials_of_degree(2, 2);
  const auto cubics = monomials_of_degree(2, 3);
  std::set<std::string> found;
  for (int qmask = 0; qmask < 8; ++qmask) {
    if (std::popcount(static_cast<unsigned>(qmask)) != 2) continue;
    for (int cmask = 0; cmask < 16; ++cmask) {
      std::vector<Monomial> gens;
      for (std::size_t k = 0; k < quadrics.size(); ++k)
        if (qmask & (1 << k)) gens.push_back(quadrics[k]);
      for (std::size_t k = 0; k < cubics.size(); ++k)
        if (cmask & (1 << k)) gens.push_back(cubics[k]);
      const MonomialIdeal j(2, gens);
      if (is_strongly_stable(j) && hilbert_function(j, {0, 6}).values() == target.values()) found.insert(j.to_string());
    }
  }
  REQUIRE(found.size() == 1);
  CHECK(*found.begin() == gin(pideal(2, {"x1^2", "x2^2"}), kSeed).ideal.to_string());
}

TEST_CASE("gin preserves Hilbert function, dimension, depth and saturation") {
  for (const auto& ideal : corpus_ideals()) {
    const MonomialIdeal g = gin(ideal, kSeed).ideal;
    CHECK(is_strongly_stable(g));
    CHECK(oracles::brute_hilbert(ideal, {0, 10}).values() == hilbert_function(g, {0, 10}).values());
    const auto a = oracles::depth_and_dim(ideal);
    const auto b = oracles::depth_and_dim(g);
    CHECK(a.dim == b.dim);
    CHECK(a.depth == b.depth);
    const MonomialIdeal gs = gin(saturation(ideal, kSeed).ideal, kSeed).ideal;
    CHECK(gs == saturate(g));
  }
}

TEST_CASE("Macaulay: R/I and R/in(I) share Hilbert functions") {
  for (const auto& ideal : corpus_ideals())
    CHECK(oracles::brute_hilbert(ideal, {0, 10}).values() == hilbert_function(initial_ideal(ideal), {0, 10}).values());
}

TEST_CASE("gin is idempotent and deterministic") {
  for (const auto& ideal : corpus_ideals()) {
    const GinResult a = gin(ideal, kSeed);
    const GinResult b = gin(ideal, kSeed);
    CHECK(a.ideal == b.ideal);
    CHECK(a.draw_seeds == b.draw_seeds);
    CHECK(a.seed == kSeed);
    CHECK(gin(PolynomialIdeal::from_monomial(a.ideal), kSeed + 7).ideal == a.ideal);
    CHECK(gin(ideal, kSeed + 1).ideal == a.ideal);
  }
}

TEST_CASE("ideal construction guards") {
  CHECK_THROWS_AS(pideal(2, {"x1^2 + x2"}), Error);
  try {
    PolynomialIdeal(2, {poly(3, "x1")});
    FAIL("expected an ambient mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kAmbientMismatch);
  }
  CHECK(pideal(2, {"0", "x1"}).generators().size() == 1);
}

TEST_CASE("coordinate change of an ideal keeps its Hilbert function") {
  const PolynomialIdeal i = pideal(3, {"x1*x2 - x3^2", "x1^2*x3"});
  const PolynomialIdeal j = change_coordinates(i, RationalMatrix::random_invertible(3, 4, 5));
  CHECK(oracles::brute_hilbert(i, {0, 8}).values() == oracles::brute_hilbert(j, {0, 8}).values());
}
