#include "gincoh/ring.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <random>
#include <sstream>

#include "gincoh/error.hpp"
#include "gincoh/linalg.hpp"

namespace gincoh {

namespace {

void require_same_ambient(std::size_t a, std::size_t b) {
  if (a != b) {
    throw Error(ErrorCode::kAmbientMismatch,
                "ambient mismatch: " + std::to_string(a) + " vs " + std::to_string(b) + " variables");
  }
}

// mpq_class(num, den) does not reduce; GMP arithmetic expects reduced input.
Rational canonical(Rational c) {
  c.canonicalize();
  return c;
}

// Adds a reduced coefficient without re-reducing it.
void accumulate(Polynomial::TermMap& terms, const Monomial& m, const Rational& c) {
  auto [it, inserted] = terms.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms.erase(it);
  }
}

}  // namespace

Monomial::Monomial(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  for (int e : exponents_) {
    if (e < 0) throw Error(ErrorCode::kInvalidArgument, "negative exponent");
    degree_ += e;
  }
}

Monomial Monomial::variable(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) {
    throw Error(ErrorCode::kInvalidArgument, "variable index x" + std::to_string(i) + " outside 1.." + std::to_string(n));
  }
  Monomial m(n);
  m.exponents_[i - 1] = 1;
  m.degree_ = 1;
  return m;
}

bool Monomial::is_squarefree() const {
  return std::all_of(exponents_.begin(), exponents_.end(), [](int e) { return e <= 1; });
}

bool Monomial::divides(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient());
  if (degree_ > other.degree_) return false;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] > other.exponents_[k]) return false;
  }
  return true;
}

Monomial Monomial::lcm(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient());
  Monomial out(ambient());
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    out.exponents_[k] = std::max(exponents_[k], other.exponents_[k]);
    out.degree_ += out.exponents_[k];
  }
  return out;
}

Monomial Monomial::gcd(const Monomial& other) const {
  require_same_ambient(ambient(), other.ambient());
  Monomial out(ambient());
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    out.exponents_[k] = std::min(exponents_[k], other.exponents_[k]);
    out.degree_ += out.exponents_[k];
  }
  return out;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  if (!divisor.divides(*this)) {
    throw Error(ErrorCode::kInvalidArgument, divisor.to_string() + " does not divide " + to_string());
  }
  Monomial out = *this;
  for (std::size_t k = 0; k < exponents_.size(); ++k) out.exponents_[k] -= divisor.exponents_[k];
  out.degree_ -= divisor.degree_;
  return out;
}

Monomial Monomial::embed(std::size_t n) const {
  if (n < ambient()) throw Error(ErrorCode::kInvalidArgument, "cannot embed into a smaller ring");
  Monomial out = *this;
  out.exponents_.resize(n, 0);
  return out;
}

Monomial& Monomial::operator*=(const Monomial& other) {
  require_same_ambient(ambient(), other.ambient());
  for (std::size_t k = 0; k < exponents_.size(); ++k) exponents_[k] += other.exponents_[k];
  degree_ += other.degree_;
  return *this;
}

std::string Monomial::to_string() const {
  std::string out;
  for (std::size_t k = 0; k < exponents_.size(); ++k) {
    if (exponents_[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += 'x' + std::to_string(k + 1);
    if (exponents_[k] > 1) out += '^' + std::to_string(exponents_[k]);
  }
  return out.empty() ? "1" : out;
}

std::size_t MonomialHash::operator()(const Monomial& m) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (int e : m.exponents()) {
    h ^= static_cast<std::size_t>(e) + 0x9e3779b97f4a7c15ull;
    h *= 1099511628211ull;
  }
  return h;
}

std::strong_ordering compare(const Monomial& u, const Monomial& v, TermOrder) {
  require_same_ambient(u.ambient(), v.ambient());
  if (u.degree() != v.degree()) return u.degree() <=> v.degree();
  for (std::size_t k = u.ambient(); k-- > 0;) {
    if (u[k] != v[k]) {
      // Smaller exponent in the last differing variable means larger.
      return u[k] < v[k] ? std::strong_ordering::greater : std::strong_ordering::less;
    }
  }
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------

Polynomial::Polynomial(const Monomial& m, const Rational& c) : n_(m.ambient()) {
  if (c != 0) terms_.emplace(m, canonical(c));
}

Polynomial Polynomial::constant(std::size_t n, const Rational& c) {
  return Polynomial(Monomial(n), c);
}

const Monomial& Polynomial::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no leading monomial");
  return terms_.begin()->first;
}

const Rational& Polynomial::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::kInvalidArgument, "zero polynomial has no leading coefficient");
  return terms_.begin()->second;
}

int Polynomial::degree() const {
  return terms_.empty() ? -1 : terms_.begin()->first.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  const int d = degree();
  return std::all_of(terms_.begin(), terms_.end(), [d](const auto& t) { return t.first.degree() == d; });
}

void Polynomial::add_term(const Monomial& m, const Rational& c) {
  require_same_ambient(n_, m.ambient());
  if (c == 0) return;
  accumulate(terms_, m, canonical(c));
}

void Polynomial::add_multiple(const Polynomial& g, const Rational& c, const Monomial& m) {
  require_same_ambient(n_, g.n_);
  require_same_ambient(n_, m.ambient());
  if (c == 0) return;
  const Rational cc = canonical(c);
  Rational product;
  for (const auto& [mg, cg] : g.terms_) {
    product = cc * cg;
    accumulate(terms_, mg * m, product);
  }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  require_same_ambient(n_, other.n_);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, c);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  require_same_ambient(n_, other.n_);
  for (const auto& [m, c] : other.terms_) accumulate(terms_, m, -c);
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  const Rational cc = canonical(c);
  for (auto& [m, coeff] : terms_) coeff *= cc;
  return *this;
}

Polynomial& Polynomial::operator*=(const Monomial& m) {
  require_same_ambient(n_, m.ambient());
  // Multiplication by a monomial preserves the order, so the map can be
  // rebuilt with end hints.
  TermMap shifted;
  for (auto& [mono, c] : terms_) shifted.emplace_hint(shifted.end(), mono * m, std::move(c));
  terms_ = std::move(shifted);
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ambient(a.n_, b.n_);
  Polynomial out(a.n_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) accumulate(out.terms_, ma * mb, ca * cb);
  }
  return out;
}

bool Polynomial::operator==(const Polynomial& other) const {
  return n_ == other.n_ && terms_ == other.terms_;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial out = *this;
  const Rational inv = 1 / leading_coefficient();
  out *= inv;
  return out;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den = 1;
  Integer num = 0;
  for (const auto& [m, c] : terms_) {
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    mpz_gcd(num.get_mpz_t(), num.get_mpz_t(), c.get_num_mpz_t());
  }
  Rational scale(den, num);
  scale.canonicalize();
  if (leading_coefficient() < 0) scale = -scale;
  Polynomial out = *this;
  out *= scale;
  return out;
}

Rational Polynomial::evaluate(std::span<const Rational> point) const {
  require_same_ambient(n_, point.size());
  std::vector<Rational> at(point.begin(), point.end());
  for (auto& x : at) x.canonicalize();
  Rational total = 0;
  for (const auto& [m, c] : terms_) {
    Rational term = c;
    for (std::size_t k = 0; k < n_; ++k) {
      for (int e = 0; e < m[k]; ++e) term *= at[k];
    }
    total += term;
  }
  return total;
}

std::string Polynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational magnitude = abs(c);
    if (first) {
      if (c < 0) out += '-';
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    if (m.is_one()) {
      out += magnitude.get_str();
    } else if (magnitude == 1) {
      out += m.to_string();
    } else {
      out += magnitude.get_str() + "*" + m.to_string();
    }
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

class PolynomialParser {
 public:
  PolynomialParser(std::string_view text, std::size_t n) : text_(text), n_(n) {}

  Polynomial parse() {
    Polynomial out(n_);
    skip_space();
    if (pos_ == text_.size()) fail("empty polynomial");
    bool first = true;
    while (pos_ < text_.size()) {
      int sign = 1;
      if (peek() == '+' || peek() == '-') {
        sign = peek() == '-' ? -1 : 1;
        ++pos_;
        skip_space();
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      auto [m, c] = parse_term();
      out.add_term(m, sign * c);
      skip_space();
    }
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& msg) const {
    throw Error(ErrorCode::kParse, msg + " at column " + std::to_string(pos_ + 1) + " of \"" + std::string(text_) + "\"");
  }

  std::string digits() {
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) out += text_[pos_++];
    if (out.empty()) fail("expected digits");
    return out;
  }

  std::pair<Monomial, Rational> parse_term() {
    Monomial m(n_);
    Rational c = 1;
    bool need_factor = true;
    while (need_factor) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        Integer num(digits());
        Integer den = 1;
        skip_space();
        if (peek() == '/') {
          ++pos_;
          skip_space();
          den = Integer(digits());
          if (den == 0) fail("zero denominator");
        }
        Rational q(num, den);
        q.canonicalize();
        c *= q;
      } else if (peek() == 'x') {
        ++pos_;
        const std::size_t start = pos_;
        const std::string index = digits();
        const unsigned long i = std::stoul(index);
        if (i < 1 || i > n_) {
          pos_ = start;
          fail("variable x" + index + " outside x1..x" + std::to_string(n_));
        }
        int power = 1;
        skip_space();
        if (peek() == '^') {
          ++pos_;
          skip_space();
          power = std::stoi(digits());
        }
        std::vector<int> e(n_, 0);
        e[i - 1] = power;
        m *= Monomial(std::move(e));
      } else {
        fail("expected coefficient or variable");
      }
      skip_space();
      if (peek() == '*') {
        ++pos_;
      } else {
        need_factor = false;
      }
    }
    return {m, c};
  }

  std::string_view text_;
  std::size_t n_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, std::size_t n) {
  return PolynomialParser(text, n).parse();
}

// ---------------------------------------------------------------------------

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix g(n);
  for (std::size_t i = 0; i < n; ++i) g(i, i) = 1;
  return g;
}

std::uint64_t mix_seed(std::uint64_t seed) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

RationalMatrix RationalMatrix::random_invertible(std::size_t n, std::uint64_t seed, std::int64_t bound) {
  // mt19937_64 output is fixed by the standard; the reduction to the range
  // is done by hand so that draws are identical across standard libraries.
  std::mt19937_64 engine(seed);
  const std::uint64_t range = static_cast<std::uint64_t>(2 * bound + 1);
  const std::uint64_t limit = (UINT64_MAX / range) * range;
  auto draw = [&] {
    std::uint64_t r;
    do {
      r = engine();
    } while (r >= limit);
    return static_cast<std::int64_t>(r % range) - bound;
  };
  while (true) {
    RationalMatrix g(n);
    for (auto& e : g.entries_) e = static_cast<long>(draw());
    if (g.determinant() != 0) {
      g.seed_ = seed;
      return g;
    }
  }
}

Rational RationalMatrix::determinant() const {
  linalg::QMatrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  return linalg::determinant(std::move(m));
}

RationalMatrix RationalMatrix::inverse() const {
  linalg::QMatrix m(n_, std::vector<Rational>(n_));
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) m[i][j] = (*this)(i, j);
  const auto inv = linalg::inverse(m);
  RationalMatrix out(n_);
  for (std::size_t i = 0; i < n_; ++i)
    for (std::size_t j = 0; j < n_; ++j) out(i, j) = inv[i][j];
  return out;
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_ambient(a.n_, b.n_);
  RationalMatrix out(a.n_);
  for (std::size_t i = 0; i < a.n_; ++i)
    for (std::size_t k = 0; k < a.n_; ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < a.n_; ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Polynomial apply_coordinate_change(const Polynomial& f, const RationalMatrix& g) {
  const std::size_t n = f.ambient();
  require_same_ambient(n, g.size());
  if (g.determinant() == 0) throw Error(ErrorCode::kSingularMatrix, "coordinate change is singular");

  std::vector<std::vector<Polynomial>> powers(n);  // powers[i][e] = L_i^e
  for (std::size_t i = 0; i < n; ++i) {
    Polynomial linear(n);
    for (std::size_t j = 0; j < n; ++j) linear.add_term(Monomial::variable(n, j + 1), g(i, j));
    powers[i] = {Polynomial::constant(n, 1), linear};
  }
  auto power = [&](std::size_t i, int e) -> const Polynomial& {
    auto& cache = powers[i];
    while (static_cast<int>(cache.size()) <= e) cache.push_back(cache.back() * cache[1]);
    return cache[e];
  };

  Polynomial out(n);
  for (const auto& [m, c] : f.terms()) {
    Polynomial term = Polynomial::constant(n, c);
    for (std::size_t i = 0; i < n; ++i) {
      if (m[i] > 0) term = term * power(i, m[i]);
    }
    out += term;
  }
  return out;
}

}  // namespace gincoh
