#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "json.hpp"

#include "gincoh/graded.hpp"
#include "gincoh/groebner.hpp"
#include "gincoh/monomial.hpp"
#include "gincoh/seqcm.hpp"
#include "gincoh/simplicial.hpp"

// JSON / TSV encodings shared by the C API, the CLI and the tests.
namespace gincoh::io {

using json = nlohmann::json;

// Parses JSON text; syntax errors become Error(kParse) citing line and column.
json parse_json(std::string_view text);

json to_json(const MonomialIdeal& ideal);
json to_json(const PolynomialIdeal& ideal);
PolynomialIdeal ideal_from_json(const json& j);

json to_json(const SimplicialComplex& complex);
SimplicialComplex complex_from_json(const json& j);

// {"n": ..., "generators": [...]} or {"n": ..., "facets": [...]}.
using Input = std::variant<PolynomialIdeal, SimplicialComplex>;
Input input_from_json(const json& j);

json to_json(const BettiTable& table);
BettiTable betti_from_json(const json& j);
// Rows i, columns j; header row lists the internal degrees.
std::string betti_tsv(const BettiTable& table);

json to_json(const BinomialTerm& term);
json to_json(const HilbertFunction& h);
HilbertFunction hilbert_from_json(const json& j);

// {"n", "window": [lo, hi], "modules": {"i": [[deg, dim], ...]},
//  "tails": {"i": [term, ...]}}
json to_json(const CohomologyTable& table);
CohomologyTable cohomology_from_json(const json& j);
// Rows i, columns degrees.
std::string cohomology_tsv(const CohomologyTable& table);

json to_json(const std::vector<TableEntryDiff>& diff);
json to_json(const DimensionFiltration& filtration);
json to_json(const GinResult& result, const PolynomialIdeal& input);
json to_json(const ShiftedComplex& shifted);
json to_json(const SeqCMVerdict& verdict);
json to_json(const ComparisonReport& report);
json to_json(const Theorem41Report& report);
json to_json(const EnricoResult& result);

// Hex rendering used for seeds in file names and cache keys.
std::string hex64(std::uint64_t value);

}  // namespace gincoh::io
