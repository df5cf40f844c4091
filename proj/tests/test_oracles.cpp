#include "doctest.h"

#include "gincoh/error.hpp"
#include "gincoh/oracles.hpp"
#include "helpers.hpp"

using namespace testing;
using namespace gincoh::oracles;

namespace {

BettiTable quotient_table(std::initializer_list<std::tuple<int, int, std::int64_t>> entries) {
  BettiTable t;
  for (const auto& [i, j, v] : entries) t.set(i, j, v);
  return t;
}

}  // namespace

TEST_CASE("standard monomials") {
  const GradedPieceBasis b = standard_monomials(mideal(2, {"x1^2", "x1*x2", "x2^3"}), 2);
  CHECK(b.degree == 2);
  REQUIRE(b.basis.size() == 1);
  CHECK(b.basis[0] == mono(2, "x2^2"));
  CHECK(standard_monomials(MonomialIdeal(3), 2).basis.size() == 6);
}

TEST_CASE("Koszul Betti examples") {
  CHECK(koszul_betti(mideal(2, {"x1", "x2"})) == quotient_table({{0, 0, 1}, {1, 1, 2}, {2, 2, 1}}));
  CHECK(koszul_betti(mideal(2, {"x1*x2"})) == quotient_table({{0, 0, 1}, {1, 2, 1}}));
  CHECK(koszul_betti(MonomialIdeal(3)) == quotient_table({{0, 0, 1}}));
  CHECK(koszul_betti(pideal(2, {"x1*x2"})) == koszul_betti(mideal(2, {"x1*x2"})));
  // complete intersection of two quadrics
  CHECK(koszul_betti(pideal(3, {"x1^2 - x2*x3", "x2^2 + x1*x3"})) ==
        quotient_table({{0, 0, 1}, {1, 2, 2}, {2, 4, 1}}));
}

TEST_CASE("Koszul degree bound") {
  // (x1^3): beta_{1,3} needs degree 3
  CHECK_THROWS_AS(koszul_betti(mideal(2, {"x1^3"}), 1), Error);
  try {
    koszul_betti(mideal(2, {"x1^3"}), 1);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapacity);
  }
  CHECK(koszul_betti(mideal(2, {"x1^3"}), 5) == koszul_betti(mideal(2, {"x1^3"})));
}

TEST_CASE("oracle capacity limits") {
  MonomialIdeal big(kKoszulMaxVariables + 1, {Monomial::variable(kKoszulMaxVariables + 1, 1)});
  try {
    koszul_betti(big);
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapacity);
  }
  MonomialIdeal wide(kCechMaxVariables + 1, {Monomial::variable(kCechMaxVariables + 1, 1)});
  try {
    cech_local_cohomology(wide, {-2, 0});
    FAIL("expected a capacity error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kCapacity);
  }
}

TEST_CASE("Cech examples") {
  CohomologyTable h = cech_local_cohomology(mideal(2, {"x1*x2"}), {-6, 3});
  for (int d = -6; d <= 3; ++d) {
    CHECK(h.at(0, d) == 0);
    CHECK(h.at(1, d) == (d == 0 ? 1 : d < 0 ? 2 : 0));
    CHECK(h.at(2, d) == 0);
  }
  h = cech_local_cohomology(mideal(2, {"x1", "x2"}), {-4, 2});
  for (int d = -4; d <= 2; ++d) {
    CHECK(h.at(0, d) == (d == 0 ? 1 : 0));
    CHECK(h.at(1, d) == 0);
  }
  h = cech_local_cohomology(MonomialIdeal(1), {-5, 2});
  for (int d = -5; d <= 2; ++d) {
    CHECK(h.at(0, d) == 0);
    CHECK(h.at(1, d) == (d <= -1 ? 1 : 0));
  }
}

TEST_CASE("Cech per multidegree") {
  // K[x,y]/(xy) in multidegree (-1, 0): x-localized piece survives
  CHECK(cech_multidegree(mideal(2, {"x1*x2"}), {-1, 0}) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(cech_multidegree(mideal(2, {"x1*x2"}), {0, 0}) == std::vector<std::int64_t>{0, 1, 0});
  CHECK(cech_multidegree(MonomialIdeal(2), {-1, -1}) == std::vector<std::int64_t>{0, 0, 1});
  CHECK(cech_multidegree(MonomialIdeal(2), {1, 0}) == std::vector<std::int64_t>{0, 0, 0});
}

TEST_CASE("Cech class summation matches the literal box sum") {
  std::mt19937_64 rng(kSeed + 30);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 3;
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) {
      const Monomial u = random_monomial(rng, n, 2);
      if (!u.is_one()) gens.push_back(u);
    }
    const MonomialIdeal ideal(n, gens);
    const Window w = default_cohomology_window(ideal);
    const CohomologyTable box = cech_by_box(ideal, w, 2);
    const CohomologyTable cls = cech_local_cohomology(ideal, w);
    CHECK(box.window().size() > 0);
    for (int d = box.window().lo; d <= box.window().hi; ++d)
      for (std::size_t i = 0; i <= n; ++i) CHECK(box.at(i, d) == cls.at(i, d));
  }
}

TEST_CASE("Euler characteristic of each Cech class") {
  std::mt19937_64 rng(kSeed + 31);
  for (int t = 0; t < 25; ++t) {
    const std::size_t n = 1 + rng() % 4;
    std::vector<Monomial> gens;
    for (int k = 0; k < 3; ++k) {
      const Monomial u = random_monomial(rng, n, 2);
      if (!u.is_one()) gens.push_back(u);
    }
    for (const auto& c : cech_classes(MonomialIdeal(n, gens))) {
      std::int64_t chain = 0, homology = 0;
      for (std::size_t k = 0; k < c.cochains.size(); ++k) {
        const std::int64_t sign = k % 2 ? -1 : 1;
        chain += sign * c.cochains[k];
        homology += sign * c.cohomology[k];
        CHECK(c.cohomology[k] <= c.cochains[k]);
      }
      CHECK(chain == homology);
    }
  }
}

TEST_CASE("Cech oracle agrees with the filtration formula") {
  std::mt19937_64 rng(kSeed + 32);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const MonomialIdeal ideal = random_strongly_stable(rng, n);
    const Window w = default_cohomology_window(ideal);
    CHECK(diff_tables(cech_local_cohomology(ideal, w), local_cohomology_strongly_stable(ideal, w)).empty());
  }
}

TEST_CASE("brute-force Hilbert functions") {
  using V = std::vector<std::int64_t>;
  CHECK(brute_hilbert(MonomialIdeal(3), {0, 3}).values() == V{1, 3, 6, 10});
  CHECK(brute_hilbert(mideal(2, {"x1*x2"}), {0, 3}).values() == V{1, 2, 2, 2});
  CHECK(brute_hilbert(mideal(2, {"x1^2", "x1*x2", "x2^3"}), {0, 3}).values() == V{1, 2, 1, 0});
  CHECK(brute_hilbert(pideal(2, {"x1^2", "x1*x2 + x2^2"}), {0, 3}).values() == V{1, 2, 1, 0});
}

TEST_CASE("depth and dimension") {
  auto dd = depth_and_dim(mideal(2, {"x1*x2"}));
  CHECK(dd.depth == 1);
  CHECK(dd.dim == 1);
  dd = depth_and_dim(MonomialIdeal(3));
  CHECK(dd.depth == 3);
  CHECK(dd.dim == 3);
  dd = depth_and_dim(mideal(4, {"x1*x3", "x1*x4", "x2*x3", "x2*x4"}));
  CHECK(dd.depth == 1);
  CHECK(dd.dim == 2);
  dd = depth_and_dim(pideal(4, {"x1*x3 - x2^2", "x2*x4 - x3^2", "x1*x4 - x2*x3"}));
  CHECK(dd.depth == 2);
  CHECK(dd.dim == 2);
  CHECK_THROWS_AS(depth_and_dim(MonomialIdeal::unit(2)), Error);
}

TEST_CASE("Koszul oracle agrees with Hochster's formula on random complexes") {
  std::mt19937_64 rng(kSeed + 33);
  for (int t = 0; t < 30; ++t) {
    const SimplicialComplex c = random_complex(rng, 2 + rng() % 4);
    CHECK(koszul_betti(stanley_reisner_ideal(c)) == hochster_betti(c));
  }
}

TEST_CASE("Stanley-Reisner cohomology vanishes in positive degrees") {
  for (const auto& c : corpus_complexes()) {
    if (c.vertex_count() > kCechMaxVariables) continue;
    const MonomialIdeal ideal = stanley_reisner_ideal(c);
    const CohomologyTable h = cech_local_cohomology(ideal, {1, 4});
    for (std::size_t i = 0; i <= c.vertex_count(); ++i) CHECK(h.module(i).is_zero_on_window());
  }
}
