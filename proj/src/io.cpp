#include "gincoh/io.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "gincoh/error.hpp"

namespace gincoh::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParse, what); }

const json& field(const json& j, const char* key) {
  if (!j.is_object()) bad("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t ambient_of(const json& j) {
  const json& n = field(j, "n");
  if (!n.is_number_integer() || n.get<long long>() < 0) bad("\"n\" must be a nonnegative integer");
  return n.get<std::size_t>();
}

int int_of(const json& j, const char* what) {
  if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
  return j.get<int>();
}

const char* shape_name(BinomialTerm::Shape s) {
  switch (s) {
    case BinomialTerm::Shape::kPoint:
      return "point";
    case BinomialTerm::Shape::kUp:
      return "up";
    case BinomialTerm::Shape::kDown:
      return "down";
  }
  return "point";
}

BinomialTerm term_from_json(const json& j) {
  BinomialTerm t;
  const std::string shape = field(j, "shape").get<std::string>();
  if (shape == "point") {
    t.shape = BinomialTerm::Shape::kPoint;
  } else if (shape == "up") {
    t.shape = BinomialTerm::Shape::kUp;
  } else if (shape == "down") {
    t.shape = BinomialTerm::Shape::kDown;
  } else {
    bad("unknown term shape \"" + shape + "\"");
  }
  t.anchor = int_of(field(j, "anchor"), "anchor");
  t.width = int_of(field(j, "width"), "width");
  t.coefficient = field(j, "coefficient").get<std::int64_t>();
  return t;
}

json window_json(Window w) { return json::array({w.lo, w.hi}); }

Window window_from_json(const json& j) {
  if (!j.is_array() || j.size() != 2) bad("\"window\" must be [lo, hi]");
  return {int_of(j[0], "window.lo"), int_of(j[1], "window.hi")};
}

json seeds_json(const std::vector<std::uint64_t>& seeds) {
  json out = json::array();
  for (auto s : seeds) out.push_back(s);
  return out;
}

json key_json(const std::optional<BettiTable::Key>& key) {
  if (!key) return nullptr;
  return json::array({key->first, key->second});
}

}  // namespace

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    std::size_t line = 1, column = 1;
    const std::size_t stop = std::min<std::size_t>(e.byte > 0 ? e.byte - 1 : 0, text.size());
    for (std::size_t k = 0; k < stop; ++k) {
      if (text[k] == '\n') {
        ++line;
        column = 1;
      } else {
        ++column;
      }
    }
    std::string what = e.what();
    // Drop the library prefix "[json.exception.parse_error.101] ".
    if (auto pos = what.find("] "); pos != std::string::npos) what = what.substr(pos + 2);
    if (what.find("at line ") != std::string::npos) throw Error(ErrorCode::kParse, what);
    throw Error(ErrorCode::kParse, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
  }
}

json to_json(const MonomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return {{"n", ideal.ambient()}, {"generators", gens}};
}

json to_json(const PolynomialIdeal& ideal) {
  json gens = json::array();
  for (const auto& g : ideal.generators()) gens.push_back(g.to_string());
  return {{"n", ideal.ambient()}, {"generators", gens}};
}

PolynomialIdeal ideal_from_json(const json& j) {
  const std::size_t n = ambient_of(j);
  const json& gens = field(j, "generators");
  if (!gens.is_array()) bad("\"generators\" must be an array of strings");
  std::vector<Polynomial> polys;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    if (!gens[k].is_string()) bad("generator " + std::to_string(k + 1) + " is not a string");
    try {
      polys.push_back(parse_polynomial(gens[k].get<std::string>(), n));
    } catch (const Error& e) {
      throw Error(e.code(), "generator " + std::to_string(k + 1) + ": " + e.what());
    }
  }
  return PolynomialIdeal(n, std::move(polys));
}

json to_json(const SimplicialComplex& complex) {
  return {{"n", complex.vertex_count()}, {"facets", complex.facet_lists()}};
}

SimplicialComplex complex_from_json(const json& j) {
  const std::size_t n = ambient_of(j);
  const json& facets = field(j, "facets");
  if (!facets.is_array()) bad("\"facets\" must be an array of vertex lists");
  std::vector<std::vector<int>> lists;
  for (const auto& f : facets) {
    if (!f.is_array()) bad("every facet must be an array of vertices");
    std::vector<int> list;
    for (const auto& v : f) list.push_back(int_of(v, "vertex"));
    lists.push_back(std::move(list));
  }
  return SimplicialComplex::from_vertex_lists(n, lists);
}

Input input_from_json(const json& j) {
  if (j.is_object() && j.contains("facets")) return complex_from_json(j);
  if (j.is_object() && j.contains("generators")) return ideal_from_json(j);
  bad("input must carry \"generators\" (ideal) or \"facets\" (complex)");
}

json to_json(const BettiTable& table) {
  json entries = json::array();
  for (const auto& [key, value] : table.entries()) entries.push_back({key.first, key.second, value});
  return {{"subject", table.subject() == BettiTable::Subject::kIdeal ? "ideal" : "quotient"}, {"entries", entries}};
}

BettiTable betti_from_json(const json& j) {
  const std::string subject = field(j, "subject").get<std::string>();
  if (subject != "ideal" && subject != "quotient") bad("unknown Betti table subject \"" + subject + "\"");
  BettiTable table(subject == "ideal" ? BettiTable::Subject::kIdeal : BettiTable::Subject::kQuotient);
  for (const auto& e : field(j, "entries")) {
    if (!e.is_array() || e.size() != 3) bad("Betti entries are [i, j, value]");
    table.set(int_of(e[0], "i"), int_of(e[1], "j"), e[2].get<std::int64_t>());
  }
  return table;
}

std::string betti_tsv(const BettiTable& table) {
  std::ostringstream out;
  if (table.empty()) {
    out << "i\\j\n";
    return out.str();
  }
  int jlo = table.entries().begin()->first.second, jhi = jlo, ihi = 0;
  for (const auto& [key, value] : table.entries()) {
    jlo = std::min(jlo, key.second);
    jhi = std::max(jhi, key.second);
    ihi = std::max(ihi, key.first);
  }
  out << "i\\j";
  for (int j = jlo; j <= jhi; ++j) out << '\t' << j;
  out << '\n';
  for (int i = 0; i <= ihi; ++i) {
    out << i;
    for (int j = jlo; j <= jhi; ++j) out << '\t' << table.get(i, j);
    out << '\n';
  }
  return out.str();
}

json to_json(const BinomialTerm& term) {
  return {{"shape", shape_name(term.shape)},
          {"anchor", term.anchor},
          {"width", term.width},
          {"coefficient", term.coefficient}};
}

json to_json(const HilbertFunction& h) {
  json out = {{"window", window_json(h.window())}, {"values", h.values()}};
  if (h.closed_form()) {
    json tail = json::array();
    for (const auto& t : *h.closed_form()) tail.push_back(to_json(t));
    out["tail"] = tail;
  } else {
    out["tail"] = nullptr;
  }
  return out;
}

HilbertFunction hilbert_from_json(const json& j) {
  const Window w = window_from_json(field(j, "window"));
  const json& tail = field(j, "tail");
  auto values = field(j, "values").get<std::vector<std::int64_t>>();
  if (tail.is_null()) return HilbertFunction(w, std::move(values));
  std::vector<BinomialTerm> terms;
  for (const auto& t : tail) terms.push_back(term_from_json(t));
  HilbertFunction h(w, std::move(terms));
  if (h.values() != values) bad("Hilbert function values disagree with the tail descriptor");
  return h;
}

json to_json(const CohomologyTable& table) {
  json modules = json::object();
  json tails = json::object();
  bool exact = true;
  for (std::size_t i = 0; i <= table.ambient(); ++i) {
    const HilbertFunction& h = table.module(i);
    json pairs = json::array();
    for (int d = table.window().lo; d <= table.window().hi; ++d)
      if (h.at(d) != 0) pairs.push_back({d, h.at(d)});
    modules[std::to_string(i)] = pairs;
    if (h.closed_form()) {
      json terms = json::array();
      for (const auto& t : *h.closed_form()) terms.push_back(to_json(t));
      tails[std::to_string(i)] = terms;
    } else {
      exact = false;
    }
  }
  json out = {{"n", table.ambient()}, {"window", window_json(table.window())}, {"modules", modules}};
  out["tails"] = exact ? tails : json(nullptr);
  return out;
}

CohomologyTable cohomology_from_json(const json& j) {
  const std::size_t n = ambient_of(j);
  const Window w = window_from_json(field(j, "window"));
  const json& modules = field(j, "modules");
  const json& tails = field(j, "tails");
  std::vector<HilbertFunction> out;
  for (std::size_t i = 0; i <= n; ++i) {
    const std::string key = std::to_string(i);
    std::vector<std::int64_t> values(w.size(), 0);
    for (const auto& pair : field(modules, key.c_str())) {
      const int d = int_of(pair.at(0), "degree");
      if (!w.contains(d)) bad("degree " + std::to_string(d) + " outside the window");
      values[static_cast<std::size_t>(d - w.lo)] = pair.at(1).get<std::int64_t>();
    }
    if (tails.is_null()) {
      out.emplace_back(w, std::move(values));
      continue;
    }
    std::vector<BinomialTerm> terms;
    for (const auto& t : field(tails, key.c_str())) terms.push_back(term_from_json(t));
    HilbertFunction h(w, std::move(terms));
    if (h.values() != values) bad("H^" + key + " values disagree with the tail descriptor");
    out.push_back(std::move(h));
  }
  return CohomologyTable(n, w, std::move(out));
}

std::string cohomology_tsv(const CohomologyTable& table) {
  std::ostringstream out;
  out << "i\\degree";
  for (int d = table.window().lo; d <= table.window().hi; ++d) out << '\t' << d;
  out << '\n';
  for (std::size_t i = 0; i <= table.ambient(); ++i) {
    out << i;
    for (int d = table.window().lo; d <= table.window().hi; ++d) out << '\t' << table.at(i, d);
    out << '\n';
  }
  return out.str();
}

json to_json(const std::vector<TableEntryDiff>& diff) {
  json out = json::array();
  for (const auto& d : diff) out.push_back({{"i", d.i}, {"degree", d.degree}, {"left", d.left}, {"right", d.right}});
  return out;
}

json to_json(const DimensionFiltration& filtration) {
  json layers = json::array();
  for (const auto& layer : filtration.layers) {
    json socle = json::array();
    for (const auto& [d, v] : layer.socle) socle.push_back({d, v});
    layers.push_back({{"lower", to_json(layer.lower)["generators"]},
                      {"upper", to_json(layer.upper)["generators"]},
                      {"s", layer.s},
                      {"dimension", layer.dimension},
                      {"socle", socle}});
  }
  return {{"n", filtration.n}, {"layers", layers}};
}

json to_json(const GinResult& result, const PolynomialIdeal& input) {
  const auto witness = strong_stability_violation(result.ideal);
  return {{"input", to_json(input)},
          {"gin", to_json(result.ideal)},
          {"seed", result.seed},
          {"draw_seeds", seeds_json(result.draw_seeds)},
          {"strongly_stable", !witness.has_value()}};
}

json to_json(const ShiftedComplex& shifted) {
  return {{"complex", to_json(shifted.complex)},
          {"gin", to_json(shifted.gin)},
          {"shifted_ideal", to_json(shifted.ideal)},
          {"seeds", seeds_json(shifted.seeds)}};
}

json to_json(const SeqCMVerdict& verdict) {
  const auto& c = verdict.certificate;
  return {{"verdict", verdict.verdict},
          {"route", verdict.route},
          {"dual", to_json(verdict.dual)},
          {"certificate",
           {{"ideal_betti", to_json(c.ideal_betti)},
            {"shifted_betti", to_json(c.shifted_betti)},
            {"first_difference", key_json(c.first_difference)},
            {"shifted_ideal", to_json(c.shifted_ideal)},
            {"seeds", seeds_json(c.seeds)}}}};
}

json to_json(const ComparisonReport& report) {
  json verdicts = {{"equal", report.equal ? json(*report.equal) : json(nullptr)},
                   {"sbarra_holds", report.sbarra_violations.empty()},
                   {"widened_checked", report.widened_checked}};
  json tables = {{"left", report.left ? to_json(*report.left) : json(nullptr)}, {"right", to_json(report.right)}};
  return {{"verdicts", verdicts},
          {"tables", tables},
          {"diffs", to_json(report.diffs)},
          {"sbarra_violations", to_json(report.sbarra_violations)},
          {"gin", to_json(report.gin)},
          {"seeds", seeds_json(report.seeds)},
          {"window", window_json(report.window)}};
}

json to_json(const Theorem41Report& report) {
  json out = to_json(report.comparison);
  out["verdicts"]["sequentially_cm"] = report.verdict.verdict;
  out["seqcm"] = to_json(report.verdict);
  out["shifted"] = to_json(report.shifted);
  return out;
}

json to_json(const EnricoResult& result) {
  return {{"convention", result.convention == EnricoConvention::kVerified ? "verified" : "printed"},
          {"table", to_json(result.table)},
          {"oracle", to_json(result.oracle)},
          {"diff", to_json(result.diff)}};
}

std::string hex64(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace gincoh::io
