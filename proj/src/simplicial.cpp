#include "gincoh/simplicial.hpp"

#include <algorithm>
#include <bit>

#include "gincoh/error.hpp"
#include "gincoh/groebner.hpp"
#include "gincoh/oracles.hpp"

namespace gincoh {

namespace {

Face full_set(std::size_t n) { return n == 32 ? ~Face{0} : (Face{1} << n) - 1; }

void require_vertices(std::size_t n) {
  if (n > kMaxVertices) {
    throw Error(ErrorCode::kCapacity,
                "simplicial routines are capped at " + std::to_string(kMaxVertices) + " vertices (got " +
                    std::to_string(n) + ")");
  }
}

// Membership table over all subsets of [n].
std::vector<char> face_table(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  std::vector<char> table(std::size_t{1} << n, 0);
  for (Face f : complex.facets()) {
    for (Face sub = f;; sub = (sub - 1) & f) {
      table[sub] = 1;
      if (sub == 0) break;
    }
  }
  return table;
}

SimplicialComplex from_table(std::size_t n, const std::vector<char>& table) {
  std::vector<Face> facets;
  for (Face s = 0; s < table.size(); ++s) {
    if (!table[s]) continue;
    bool maximal = true;
    for (std::size_t v = 0; v < n && maximal; ++v) {
      const Face bit = Face{1} << v;
      if (!(s & bit) && table[s | bit]) maximal = false;
    }
    if (maximal) facets.push_back(s);
  }
  return SimplicialComplex(n, std::move(facets));
}

int position_in(Face set, std::size_t v) { return std::popcount(set & ((Face{1} << v) - 1)); }

// Reduced homology of the faces listed in `faces` (closed under subsets).
std::vector<std::int64_t> homology_of(std::size_t n, const std::vector<Face>& faces) {
  if (faces.empty()) return {};
  int top = 0;
  for (Face f : faces) top = std::max(top, std::popcount(f));
  // by_size[s] = faces with s vertices, i.e. dimension s - 1.
  std::vector<std::vector<Face>> by_size(static_cast<std::size_t>(top) + 1);
  for (Face f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  for (auto& v : by_size) std::sort(v.begin(), v.end());

  // ranks[s] = rank of the boundary from size-s faces to size-(s-1) faces.
  std::vector<std::size_t> ranks(by_size.size() + 1, 0);
  for (std::size_t s = 1; s < by_size.size(); ++s) {
    const auto& src = by_size[s];
    const auto& dst = by_size[s - 1];
    if (src.empty() || dst.empty()) continue;
    linalg::IntMatrix m(dst.size(), std::vector<Integer>(src.size(), 0));
    for (std::size_t c = 0; c < src.size(); ++c) {
      for (std::size_t v = 0; v < n; ++v) {
        const Face bit = Face{1} << v;
        if (!(src[c] & bit)) continue;
        auto it = std::lower_bound(dst.begin(), dst.end(), src[c] & ~bit);
        m[static_cast<std::size_t>(it - dst.begin())][c] = position_in(src[c], v) % 2 == 0 ? 1 : -1;
      }
    }
    ranks[s] = linalg::rank(std::move(m));
  }
  std::vector<std::int64_t> out(by_size.size());
  for (std::size_t s = 0; s < by_size.size(); ++s) {
    out[s] = static_cast<std::int64_t>(by_size[s].size()) - static_cast<std::int64_t>(ranks[s]) -
             static_cast<std::int64_t>(ranks[s + 1]);
  }
  return out;
}

Rational enrico_entry(long j, long h, EnricoConvention convention) {
  if (j == 0 && h == 0) return 1;
  if (convention == EnricoConvention::kVerified) {
    if (j == 0 || h == 0) return 0;
    return Rational(binomial(j - 1, h - 1));
  }
  return Rational(binomial(h + j - 1, j));
}

void check_square(const linalg::QMatrix& m, std::size_t n, const char* what) {
  if (m.size() != n + 1 || std::any_of(m.begin(), m.end(), [&](const auto& row) { return row.size() != n + 1; })) {
    throw Error(ErrorCode::kInvalidArgument, std::string(what) + " must be (n+1) x (n+1)");
  }
}

std::int64_t checked_entry(const Rational& value, const std::string& where) {
  if (value.get_den() != 1 || value < 0 || !value.get_num().fits_slong_p()) {
    throw Error(ErrorCode::kInconsistent,
                "extracted Betti number " + value.get_str() + " at " + where + " is not a nonnegative integer");
  }
  return value.get_num().get_si();
}

}  // namespace

SimplicialComplex::SimplicialComplex(std::size_t n, std::vector<Face> faces) : n_(n) {
  require_vertices(n);
  const Face all = full_set(n);
  for (Face f : faces) {
    if (f & ~all) throw Error(ErrorCode::kInvalidArgument, "face uses a vertex outside [" + std::to_string(n) + "]");
  }
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (Face f : faces) {
    const bool contained = std::any_of(faces.begin(), faces.end(), [&](Face g) { return g != f && (f & g) == f; });
    if (!contained) facets_.push_back(f);
  }
}

SimplicialComplex SimplicialComplex::from_vertex_lists(std::size_t n, const std::vector<std::vector<int>>& facets) {
  require_vertices(n);
  std::vector<Face> faces;
  for (const auto& list : facets) {
    Face f = 0;
    for (int v : list) {
      if (v < 1 || static_cast<std::size_t>(v) > n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "vertex " + std::to_string(v) + " outside [" + std::to_string(n) + "]");
      }
      f |= Face{1} << (v - 1);
    }
    faces.push_back(f);
  }
  return SimplicialComplex(n, std::move(faces));
}

SimplicialComplex SimplicialComplex::simplex(std::size_t n) {
  require_vertices(n);
  return SimplicialComplex(n, {full_set(n)});
}

bool SimplicialComplex::contains(Face f) const {
  return std::any_of(facets_.begin(), facets_.end(), [&](Face g) { return (f & g) == f; });
}

int SimplicialComplex::dimension() const {
  int d = -1;
  for (Face f : facets_) d = std::max(d, std::popcount(f) - 1);
  return d;
}

std::vector<Face> SimplicialComplex::faces() const {
  const auto table = face_table(*this);
  std::vector<Face> out;
  for (Face s = 0; s < table.size(); ++s)
    if (table[s]) out.push_back(s);
  std::stable_sort(out.begin(), out.end(), [](Face a, Face b) { return std::popcount(a) < std::popcount(b); });
  return out;
}

std::vector<std::int64_t> SimplicialComplex::f_vector() const {
  if (is_void()) return {};
  std::vector<std::int64_t> out(static_cast<std::size_t>(dimension() + 2), 0);
  for (Face f : faces()) ++out[static_cast<std::size_t>(std::popcount(f))];
  return out;
}

SimplicialComplex SimplicialComplex::restrict_to(Face w) const {
  if (is_void()) return *this;
  std::vector<Face> faces;
  for (Face f : facets_) faces.push_back(f & w);
  return SimplicialComplex(n_, std::move(faces));
}

std::vector<std::vector<int>> SimplicialComplex::facet_lists() const {
  std::vector<std::vector<int>> out;
  for (Face f : facets_) {
    std::vector<int> list;
    for (std::size_t v = 0; v < n_; ++v)
      if (f & (Face{1} << v)) list.push_back(static_cast<int>(v) + 1);
    out.push_back(std::move(list));
  }
  return out;
}

std::string SimplicialComplex::to_string() const {
  std::string out = "<";
  bool first_facet = true;
  for (const auto& list : facet_lists()) {
    if (!first_facet) out += ",";
    first_facet = false;
    out += "{";
    for (std::size_t k = 0; k < list.size(); ++k) {
      if (k) out += ",";
      out += std::to_string(list[k]);
    }
    out += "}";
  }
  return out + ">";
}

Monomial face_monomial(std::size_t n, Face f) {
  std::vector<int> e(n, 0);
  for (std::size_t v = 0; v < n; ++v)
    if (f & (Face{1} << v)) e[v] = 1;
  return Monomial(std::move(e));
}

Face support_of(const Monomial& m) {
  Face f = 0;
  for (std::size_t v = 0; v < m.ambient(); ++v)
    if (m[v] > 0) f |= Face{1} << v;
  return f;
}

MonomialIdeal stanley_reisner_ideal(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  const auto table = face_table(complex);
  std::vector<Monomial> gens;
  for (Face s = 0; s < table.size(); ++s) {
    if (table[s]) continue;
    bool minimal = true;
    for (std::size_t v = 0; v < n && minimal; ++v) {
      const Face bit = Face{1} << v;
      if ((s & bit) && !table[s & ~bit]) minimal = false;
    }
    if (minimal) gens.push_back(face_monomial(n, s));
  }
  return MonomialIdeal(n, std::move(gens));
}

SimplicialComplex complex_of(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  require_vertices(n);
  if (!ideal.is_squarefree()) {
    throw Error(ErrorCode::kNotSquarefree, ideal.to_string() + " is not squarefree");
  }
  std::vector<Face> supports;
  for (const auto& g : ideal.generators()) supports.push_back(support_of(g));
  std::vector<char> table(std::size_t{1} << n, 0);
  for (Face s = 0; s < table.size(); ++s) {
    table[s] = std::none_of(supports.begin(), supports.end(), [&](Face g) { return (g & s) == g; });
  }
  return from_table(n, table);
}

SimplicialComplex alexander_dual(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  const auto table = face_table(complex);
  const Face all = full_set(n);
  std::vector<char> dual(table.size(), 0);
  for (Face s = 0; s < table.size(); ++s) dual[s] = !table[all & ~s];
  return from_table(n, dual);
}

std::vector<std::int64_t> reduced_homology(const SimplicialComplex& complex) {
  return homology_of(complex.vertex_count(), complex.faces());
}

BettiTable hochster_betti(const SimplicialComplex& complex) {
  const std::size_t n = complex.vertex_count();
  BettiTable table(BettiTable::Subject::kQuotient);
  if (complex.is_void()) return table;
  const auto faces = complex.faces();
  for (Face w = 0;; ++w) {
    std::vector<Face> inside;
    for (Face f : faces)
      if ((f & w) == f) inside.push_back(f);
    const auto h = homology_of(n, inside);
    const int j = std::popcount(w);
    // h[s] = dim H~_{s-1}; i = j - s.
    for (std::size_t s = 0; s < h.size(); ++s) {
      const int i = j - static_cast<int>(s);
      if (h[s] != 0 && i >= 0) table.add(i, j, h[s]);
    }
    if (w == full_set(n)) break;
  }
  return table;
}

Monomial sigma(const Monomial& u) {
  if (u.is_one()) throw Error(ErrorCode::kInvalidArgument, "sigma is undefined on the unit monomial");
  std::vector<std::size_t> indices;  // 1-based, ascending with multiplicity
  for (std::size_t k = 0; k < u.ambient(); ++k)
    for (int e = 0; e < u[k]; ++e) indices.push_back(k + 1);
  const std::size_t d = indices.size();
  const std::size_t ambient = std::max(u.ambient(), indices.back() + d - 1);
  std::vector<int> e(ambient, 0);
  for (std::size_t k = 0; k < d; ++k) e[indices[k] + k - 1] = 1;
  return Monomial(std::move(e));
}

std::optional<StabilityWitness> shifted_violation(const MonomialIdeal& ideal) {
  const std::size_t n = ideal.ambient();
  for (const auto& u : ideal.generators()) {
    for (std::size_t i = 0; i < n; ++i) {
      if (u[i] == 0) continue;
      for (std::size_t j = 0; j < i; ++j) {
        if (u[j] != 0) continue;
        Monomial moved = u.quotient(Monomial::variable(n, i + 1)) * Monomial::variable(n, j + 1);
        if (!ideal.contains(moved)) return StabilityWitness{u, i + 1, j + 1};
      }
    }
  }
  return std::nullopt;
}

ShiftedComplex shifted_complex(const SimplicialComplex& complex, std::uint64_t seed) {
  const std::size_t n = complex.vertex_count();
  const MonomialIdeal ideal = stanley_reisner_ideal(complex);
  if (ideal.is_unit() || ideal.is_zero()) return {complex, ideal, ideal, {}};

  const GinResult g = gin(PolynomialIdeal::from_monomial(ideal), seed);
  std::vector<Monomial> images;
  for (const auto& u : g.ideal.generators()) {
    Monomial s = sigma(u);
    if (s.ambient() > n) {
      throw Error(ErrorCode::kAmbientGrowth, "sigma(" + u.to_string() + ") = " + s.to_string() + " needs " +
                                                 std::to_string(s.ambient()) + " > " + std::to_string(n) +
                                                 " variables");
    }
    images.push_back(std::move(s));
  }
  MonomialIdeal shifted(n, std::move(images));
  if (auto w = shifted_violation(shifted)) {
    throw Error(ErrorCode::kNotStronglyStable, shifted.to_string() + " is not shifted: x" + std::to_string(w->j) +
                                                   "*" + w->generator.to_string() + "/x" + std::to_string(w->i) +
                                                   " is missing");
  }
  SimplicialComplex out = complex_of(shifted);
  return {std::move(out), g.ideal, std::move(shifted), g.draw_seeds};
}

linalg::QMatrix enrico_matrix(std::size_t n, EnricoConvention convention) {
  linalg::QMatrix a(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t h = 0; h <= n; ++h)
      a[j][h] = enrico_entry(static_cast<long>(j), static_cast<long>(h), convention);
  return a;
}

linalg::QMatrix enrico_b_matrix(const BettiTable& betti, std::size_t n, EnricoConvention convention) {
  const bool verified = convention == EnricoConvention::kVerified;
  const BettiTable t = verified ? (betti.subject() == BettiTable::Subject::kIdeal ? betti : betti.to_ideal())
                                : (betti.subject() == BettiTable::Subject::kQuotient ? betti : betti.to_quotient());
  linalg::QMatrix b(n + 1, std::vector<Rational>(n + 1, 0));
  const int nn = static_cast<int>(n);
  for (int h = 0; h <= nn; ++h) {
    for (int i = 0; i <= nn; ++i) {
      if (verified) {
        if (i >= h) b[h][i] = Rational(t.get(i - h, nn - h));
      } else if (i - h + 1 >= 0) {
        b[h][i] = Rational(binomial(nn, h) * t.get(i - h + 1, nn - h));
      }
    }
  }
  return b;
}

linalg::QMatrix cohomology_matrix(const linalg::QMatrix& b, std::size_t n, EnricoConvention convention) {
  check_square(b, n, "B");
  return linalg::multiply(enrico_matrix(n, convention), b);
}

linalg::QMatrix recover_b_matrix(const linalg::QMatrix& cohomology, std::size_t n, EnricoConvention convention) {
  check_square(cohomology, n, "H");
  return linalg::multiply(linalg::inverse(enrico_matrix(n, convention)), cohomology);
}

BettiTable betti_from_b_matrix(const linalg::QMatrix& b, std::size_t n, EnricoConvention convention) {
  check_square(b, n, "B");
  const int nn = static_cast<int>(n);
  const bool verified = convention == EnricoConvention::kVerified;
  BettiTable out(verified ? BettiTable::Subject::kIdeal : BettiTable::Subject::kQuotient);
  for (int h = 0; h <= nn; ++h) {
    for (int i = 0; i <= nn; ++i) {
      const std::string where = "b[" + std::to_string(h) + "][" + std::to_string(i) + "]";
      const int row = verified ? i - h : i - h + 1;
      if (row < 0) {
        if (b[h][i] != 0) throw Error(ErrorCode::kInconsistent, where + " must vanish but is " + b[h][i].get_str());
        continue;
      }
      Rational value = b[h][i];
      if (!verified) value /= Rational(binomial(nn, h));
      const std::int64_t beta = checked_entry(value, where);
      if (beta != 0) out.set(row, nn - h, beta);
    }
  }
  return out;
}

BettiTable betti_from_cohomology(const CohomologyTable& table, std::size_t n, EnricoConvention convention) {
  if (!table.window().contains(0) || !table.window().contains(-static_cast<int>(n)) || table.ambient() != n) {
    throw Error(ErrorCode::kInvalidArgument, "the cohomology table must cover degrees -n .. 0");
  }
  linalg::QMatrix h(n + 1, std::vector<Rational>(n + 1));
  for (std::size_t j = 0; j <= n; ++j)
    for (std::size_t i = 0; i <= n; ++i) h[j][i] = Rational(table.at(i, -static_cast<int>(j)));
  return betti_from_b_matrix(recover_b_matrix(h, n, convention), n, convention);
}

EnricoResult local_cohomology_enrico(const SimplicialComplex& complex, Window window, EnricoConvention convention) {
  const std::size_t n = complex.vertex_count();
  const BettiTable dual_betti = hochster_betti(alexander_dual(complex));
  const linalg::QMatrix b = enrico_b_matrix(dual_betti, n, convention);

  std::vector<HilbertFunction> modules;
  for (std::size_t i = 0; i <= n; ++i) {
    if (convention == EnricoConvention::kVerified) {
      std::vector<BinomialTerm> terms;
      for (std::size_t h = 0; h <= n; ++h) {
        if (b[h][i] == 0) continue;
        const auto c = b[h][i].get_num().get_si();
        terms.push_back({h == 0 ? BinomialTerm::Shape::kPoint : BinomialTerm::Shape::kDown, 0, static_cast<int>(h), c});
      }
      modules.emplace_back(window, std::move(terms));
    } else {
      std::vector<std::int64_t> values;
      for (int d = window.lo; d <= window.hi; ++d) {
        Rational sum = 0;
        if (d <= 0) {
          for (std::size_t h = 0; h <= n; ++h) sum += enrico_entry(-d, static_cast<long>(h), convention) * b[h][i];
        }
        values.push_back(sum.get_num().get_si());
      }
      modules.emplace_back(window, std::move(values));
    }
  }
  EnricoResult out;
  out.convention = convention;
  out.table = CohomologyTable(n, window, std::move(modules));
  out.oracle = oracles::cech_local_cohomology(stanley_reisner_ideal(complex), window);
  out.diff = diff_tables(out.table, out.oracle);
  return out;
}

}  // namespace gincoh
