#include "doctest.h"

#include "gincoh/error.hpp"
#include "gincoh/linalg.hpp"
#include "helpers.hpp"

using namespace testing;

TEST_CASE("degrevlex compare") {
  CHECK(compare(mono(2, "x1"), mono(2, "x2")) == std::strong_ordering::greater);
  CHECK(compare(mono(3, "x2^2"), mono(3, "x1*x3")) == std::strong_ordering::greater);
  const Monomial u = mono(3, "x1*x2^2*x3");
  CHECK(compare(u, u) == std::strong_ordering::equal);
  // degree first
  CHECK(compare(mono(2, "x2^3"), mono(2, "x1^2")) == std::strong_ordering::greater);
}

TEST_CASE("order is multiplicative") {
  std::mt19937_64 rng(kSeed);
  int checked = 0;
  for (int t = 0; t < 2000; ++t) {
    const std::size_t n = 1 + rng() % 5;
    const Monomial u = random_monomial(rng, n, 3), v = random_monomial(rng, n, 3), w = random_monomial(rng, n, 3);
    const auto c = compare(u, v);
    CHECK(compare(u * w, v * w) == c);
    if (c == std::strong_ordering::greater) ++checked;
  }
  CHECK(checked > 500);
}

TEST_CASE("coordinate change examples") {
  const Polynomial x1 = poly(2, "x1");
  CHECK(apply_coordinate_change(x1, RationalMatrix::identity(2)) == x1);

  RationalMatrix swap(2);
  swap(0, 1) = 1;
  swap(1, 0) = 1;
  CHECK(apply_coordinate_change(x1, swap) == poly(2, "x2"));

  RationalMatrix g(2);
  g(0, 0) = 1;
  g(0, 1) = 1;
  g(1, 1) = 1;
  CHECK(apply_coordinate_change(poly(2, "x1*x2"), g) == poly(2, "x1*x2 + x2^2"));

  CHECK_THROWS_AS(apply_coordinate_change(x1, RationalMatrix(2)), Error);
  CHECK_THROWS_AS(apply_coordinate_change(x1, RationalMatrix::identity(3)), Error);
}

TEST_CASE("arithmetic examples") {
  CHECK(poly(2, "x1 + x2") + poly(2, "-x2") == poly(2, "x1"));
  CHECK(poly(2, "x1") * poly(2, "x1") == poly(2, "x1^2"));
  CHECK((Polynomial(2) * poly(2, "x1 + 3*x2^2")).is_zero());
  CHECK((poly(2, "x1 - x2") * Rational(0)).is_zero());
}

TEST_CASE("arithmetic laws hold pointwise") {
  std::mt19937_64 rng(kSeed + 1);
  std::uniform_int_distribution<int> c(-20, 20);
  for (int t = 0; t < 200; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Polynomial f = random_polynomial(rng, n, 4, 3), g = random_polynomial(rng, n, 4, 3),
                     h = random_polynomial(rng, n, 3, 2);
    std::vector<Rational> p(n);
    for (auto& x : p) x = Rational(c(rng), 1 + rng() % 5);
    CHECK((f + g).evaluate(p) == f.evaluate(p) + g.evaluate(p));
    CHECK((f * g).evaluate(p) == f.evaluate(p) * g.evaluate(p));
    CHECK(f + g == g + f);
    CHECK(f * g == g * f);
    CHECK((f + g) + h == f + (g + h));
    CHECK((f * g) * h == f * (g * h));
    CHECK(f * (g + h) == f * g + f * h);
    CHECK((f - f).is_zero());
  }
}

TEST_CASE("no zero coefficient is stored and terms descend") {
  std::mt19937_64 rng(kSeed + 2);
  for (int t = 0; t < 100; ++t) {
    const Polynomial f = random_polynomial(rng, 3, 6, 3) * random_polynomial(rng, 3, 3, 2);
    const Monomial* prev = nullptr;
    for (const auto& [m, coeff] : f.terms()) {
      CHECK(coeff != 0);
      CHECK(m.ambient() == 3);
      if (prev) CHECK(compare(*prev, m) == std::strong_ordering::greater);
      prev = &m;
    }
  }
}

TEST_CASE("coordinate change round trip") {
  std::mt19937_64 rng(kSeed + 3);
  for (int t = 0; t < 40; ++t) {
    const std::size_t n = 1 + rng() % 4;
    const Polynomial f = random_polynomial(rng, n, 4, 3);
    const RationalMatrix g = RationalMatrix::random_invertible(n, rng(), 20);
    CHECK(g.determinant() != 0);
    CHECK(apply_coordinate_change(apply_coordinate_change(f, g), g.inverse()) == f);
  }
}

TEST_CASE("random matrices are reproducible") {
  const RationalMatrix a = RationalMatrix::random_invertible(4, 99);
  const RationalMatrix b = RationalMatrix::random_invertible(4, 99);
  CHECK(a == b);
  CHECK(a.seed() == std::optional<std::uint64_t>(99));
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) {
      CHECK(abs(a(i, j)) <= 10000);
      CHECK(a(i, j).get_den() == 1);
    }
  CHECK(a * a.inverse() == RationalMatrix::identity(4));
}

TEST_CASE("polynomial parsing") {
  CHECK(poly(3, "3/2*x1^2*x3 - x2").to_string() == "3/2*x1^2*x3 - x2");
  CHECK(poly(2, "x1*x1") == poly(2, "x1^2"));
  CHECK(poly(2, "0").is_zero());
  try {
    poly(2, "x1 +* x2");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  CHECK_THROWS_AS(poly(2, "x3"), Error);
}

TEST_CASE("exact linear algebra") {
  using linalg::QMatrix;
  const QMatrix a = {{2, 1}, {4, 2}};
  CHECK(linalg::rank(a) == 1);
  CHECK(linalg::determinant(a) == 0);
  CHECK_THROWS_AS(linalg::inverse(a), Error);
  const QMatrix b = {{1, 2}, {3, 4}};
  CHECK(linalg::determinant(b) == -2);
  const QMatrix id = {{1, 0}, {0, 1}};
  CHECK(linalg::multiply(b, linalg::inverse(b)) == id);
  linalg::IntMatrix z = {{Integer(6), Integer(4)}, {Integer(9), Integer(6)}};
  CHECK(linalg::rank(z) == 1);
}

TEST_CASE("seed mixing differs per draw") {
  CHECK(mix_seed(1) != mix_seed(2));
  CHECK(draw_seed(5, 0) != draw_seed(5, 1));
  CHECK(draw_seed(5, 1) == draw_seed(5, 1));
}
