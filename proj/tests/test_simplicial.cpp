#include "doctest.h"

#include "gincoh/error.hpp"
#include "gincoh/oracles.hpp"
#include "helpers.hpp"

using namespace testing;

namespace {

std::int64_t euler_of_faces(const SimplicialComplex& c) {
  const auto f = c.f_vector();
  std::int64_t chi = 0;
  // f[0] counts the empty face (dimension -1)
  for (std::size_t k = 0; k < f.size(); ++k) chi += (k % 2 ? 1 : -1) * f[k];
  return chi;
}

}  // namespace

TEST_CASE("void and irrelevant complexes are distinct") {
  const auto v = SimplicialComplex::void_complex(3);
  const auto e = SimplicialComplex::irrelevant(3);
  CHECK(v.is_void());
  CHECK(!e.is_void());
  CHECK(e.is_irrelevant());
  CHECK(!(v == e));
  CHECK(stanley_reisner_ideal(v).is_unit());
  CHECK(stanley_reisner_ideal(e) == mideal(3, {"x1", "x2", "x3"}));
  CHECK(e.f_vector() == std::vector<std::int64_t>{1});
  CHECK(v.f_vector().empty());
}

TEST_CASE("facets are kept maximal") {
  const auto c = cx(4, {{1, 2}, {1}, {2, 3}, {1, 2, 3}});
  CHECK(c.facet_lists() == std::vector<std::vector<int>>{{1, 2, 3}});
  CHECK(c.dimension() == 2);
  CHECK(c.to_string() == "<{1,2,3}>");
  CHECK_THROWS_AS(cx(2, {{3}}), Error);
  CHECK_THROWS_AS(SimplicialComplex(kMaxVertices + 1, {Face{1}}), Error);
}

TEST_CASE("Stanley-Reisner ideals") {
  CHECK(stanley_reisner_ideal(cx(2, {{1}, {2}})) == mideal(2, {"x1*x2"}));
  CHECK(stanley_reisner_ideal(SimplicialComplex::simplex(2)).is_zero());
  CHECK(complex_of(mideal(3, {"x1*x2", "x1*x3"})) == cx(3, {{1}, {2, 3}}));
  CHECK_THROWS_AS(complex_of(mideal(2, {"x1^2"})), Error);
  for (const auto& c : corpus_complexes()) CHECK(complex_of(stanley_reisner_ideal(c)) == c);
}

TEST_CASE("Alexander duality") {
  CHECK(alexander_dual(cx(2, {{1}, {2}})).is_irrelevant());
  CHECK(alexander_dual(SimplicialComplex::simplex(3)).is_void());
  CHECK(alexander_dual(SimplicialComplex::void_complex(3)) == SimplicialComplex::simplex(3));
  for (const auto& c : corpus_complexes()) CHECK(alexander_dual(alexander_dual(c)) == c);
  std::mt19937_64 rng(kSeed + 40);
  for (int t = 0; t < 50; ++t) {
    const SimplicialComplex c = random_complex(rng, 1 + rng() % 6);
    CHECK(alexander_dual(alexander_dual(c)) == c);
  }
}

TEST_CASE("reduced homology") {
  using V = std::vector<std::int64_t>;
  CHECK(reduced_homology(cx(3, {{1, 2}, {1, 3}, {2, 3}})) == V{0, 0, 1});
  CHECK(reduced_homology(cx(2, {{1}, {2}})) == V{0, 1});
  CHECK(reduced_homology(SimplicialComplex::simplex(3)) == V{0, 0, 0, 0});
  CHECK(reduced_homology(SimplicialComplex::irrelevant(2)) == V{1});
  // six-vertex real projective plane: no rational homology
  CHECK(reduced_homology(cx(6, {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                                {2, 3, 5}, {3, 4, 6}, {2, 4, 5}, {3, 5, 6}, {2, 4, 6}})) == V{0, 0, 0, 0});
}

TEST_CASE("homology Euler characteristic matches face counts") {
  for (const auto& c : corpus_complexes()) {
    const auto h = reduced_homology(c);
    std::int64_t chi = 0;
    for (std::size_t k = 0; k < h.size(); ++k) chi += (k % 2 ? 1 : -1) * h[k];
    CHECK(chi == euler_of_faces(c));
  }
}

TEST_CASE("Hochster Betti examples") {
  BettiTable t = hochster_betti(cx(2, {{1}, {2}}));
  CHECK(t.get(0, 0) == 1);
  CHECK(t.get(1, 2) == 1);
  CHECK(t.entries().size() == 2);
  t = hochster_betti(SimplicialComplex::simplex(3));
  CHECK(t.entries().size() == 1);
  CHECK(t.get(0, 0) == 1);
  t = hochster_betti(SimplicialComplex::irrelevant(2));
  CHECK(t.get(1, 1) == 2);
  CHECK(t.get(2, 2) == 1);
  CHECK(t == oracles::koszul_betti(mideal(2, {"x1", "x2"})));
  CHECK(hochster_betti(SimplicialComplex::void_complex(2)).empty());
}

TEST_CASE("sigma") {
  CHECK(sigma(mono(2, "x1^2")) == mono(2, "x1*x2"));
  CHECK(sigma(mono(4, "x1*x3")) == mono(4, "x1*x4"));
  CHECK(sigma(mono(2, "x2")) == mono(2, "x2"));
  CHECK(sigma(mono(2, "x2^2")).ambient() == 3);
  CHECK_THROWS_AS(sigma(Monomial(2)), Error);
}

TEST_CASE("shifted ideals") {
  CHECK(is_shifted(mideal(3, {"x1*x2", "x1*x3"})));
  CHECK(!is_shifted(mideal(3, {"x2*x3"})));
  const auto w = shifted_violation(mideal(3, {"x1*x3"}));
  REQUIRE(w.has_value());
  CHECK(w->i == 3);
  CHECK(w->j == 2);
}

TEST_CASE("shifted complex examples") {
  const auto two_points = cx(2, {{1}, {2}});
  const ShiftedComplex s = shifted_complex(two_points, kSeed);
  CHECK(s.gin == mideal(2, {"x1^2"}));
  CHECK(s.ideal == mideal(2, {"x1*x2"}));
  CHECK(s.complex == two_points);
  CHECK(shifted_complex(SimplicialComplex::simplex(3), kSeed).complex == SimplicialComplex::simplex(3));
  CHECK(shifted_complex(SimplicialComplex::void_complex(3), kSeed).complex.is_void());
}

TEST_CASE("shifting on the corpus") {
  for (const auto& c : corpus_complexes()) {
    const ShiftedComplex s = shifted_complex(c, kSeed);
    // shifted complexes are fixed
    CHECK(shifted_complex(s.complex, kSeed + 1).complex == s.complex);
    CHECK(is_shifted(s.ideal));
    // f-vector, equivalently the Hilbert function of K[Delta]
    CHECK(s.complex.f_vector() == c.f_vector());
    CHECK(hilbert_function(stanley_reisner_ideal(c), {0, 8}).values() ==
          hilbert_function(s.ideal, {0, 8}).values());
    // duality and shifting commute
    CHECK(shifted_complex(alexander_dual(c), kSeed).complex == alexander_dual(s.complex));
    // Betti numbers can only grow
    CHECK(entrywise_leq(hochster_betti(c).to_ideal(), hochster_betti(s.complex).to_ideal()));
  }
}

TEST_CASE("closed formula under the verified convention") {
  for (std::size_t n = 2; n <= 4; ++n) {
    const EnricoResult r = local_cohomology_enrico(SimplicialComplex::irrelevant(n), {-6, 2});
    CHECK(r.diff.empty());
    for (int d = -6; d <= 2; ++d) {
      CHECK(r.table.at(0, d) == (d == 0 ? 1 : 0));
      for (std::size_t i = 1; i <= n; ++i) CHECK(r.table.at(i, d) == 0);
    }
  }
  const EnricoResult two = local_cohomology_enrico(cx(2, {{1}, {2}}), {-5, 2});
  CHECK(two.diff.empty());
  CHECK(two.oracle.at(1, 0) == 1);
  for (int d = -5; d <= -1; ++d) CHECK(two.oracle.at(1, d) == 2);

  const EnricoResult full = local_cohomology_enrico(SimplicialComplex::simplex(3), {-8, 2});
  CHECK(full.diff.empty());
  CHECK(diff_tables(full.oracle, local_cohomology_strongly_stable(MonomialIdeal(3), {-8, 2})).empty());

  for (const auto& c : corpus_complexes()) {
    const Window w = default_cohomology_window(stanley_reisner_ideal(c));
    CHECK(local_cohomology_enrico(c, w).diff.empty());
  }
}

TEST_CASE("closed formula as printed disagrees with the oracle") {
  // Two points: the printed weights give 6 in H^1 at degree 0 where the oracle has 1.
  const EnricoResult r = local_cohomology_enrico(cx(2, {{1}, {2}}), {-4, 0}, EnricoConvention::kPrinted);
  CHECK(!r.diff.empty());
  CHECK(r.oracle.at(1, 0) == 1);
  // The irrelevant complex on [n] is also off: the printed weights spread
  // beta_{1,n}(K[Delta*]) = 1 over every h with a factor C(n, h).
  const EnricoResult e = local_cohomology_enrico(SimplicialComplex::irrelevant(3), {-4, 0}, EnricoConvention::kPrinted);
  CHECK(e.oracle.at(0, 0) == 1);
  CHECK(!e.diff.empty());
}

TEST_CASE("closed formula matrices") {
  for (std::size_t n = 0; n <= 12; ++n) {
    CHECK(linalg::determinant(enrico_matrix(n, EnricoConvention::kVerified)) != 0);
    CHECK(linalg::determinant(enrico_matrix(n, EnricoConvention::kPrinted)) != 0);
  }
  const auto a = enrico_matrix(4, EnricoConvention::kVerified);
  CHECK(a[0][0] == 1);
  for (std::size_t j = 1; j <= 4; ++j) {
    CHECK(a[j][0] == 0);
    CHECK(a[0][j] == 0);
  }
  std::mt19937_64 rng(kSeed + 41);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 2 + t % 5;
    linalg::QMatrix b(n + 1, std::vector<Rational>(n + 1));
    for (auto& row : b)
      for (auto& x : row) x = static_cast<long>(rng() % 7);
    for (auto conv : {EnricoConvention::kVerified, EnricoConvention::kPrinted}) {
      const auto h = cohomology_matrix(b, n, conv);
      CHECK(recover_b_matrix(h, n, conv) == b);
    }
  }
}

TEST_CASE("Betti numbers of the dual are recovered from cohomology") {
  for (const auto& c : corpus_complexes()) {
    const std::size_t n = c.vertex_count();
    const EnricoResult r = local_cohomology_enrico(c, {-static_cast<int>(n) - 2, 0});
    CHECK(betti_from_cohomology(r.table, n) == hochster_betti(alexander_dual(c)).to_ideal());
  }
  CHECK_THROWS_AS(betti_from_cohomology(local_cohomology_enrico(cx(3, {{1}, {2, 3}}), {-1, 0}).table, 3), Error);
}
