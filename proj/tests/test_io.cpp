#include "doctest.h"

#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gincoh/cache.hpp"
#include "gincoh/error.hpp"
#include "gincoh/io.hpp"
#include "gincoh/oracles.hpp"
#include "helpers.hpp"

using namespace testing;
namespace fs = std::filesystem;
using gincoh::io::json;

namespace {

// Encodes, prints, re-parses and re-encodes.
json reparse(const json& j) { return io::parse_json(j.dump(2)); }

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("gincoh-test-" + io::hex64(std::random_device{}()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("ideal and complex JSON round trips") {
  for (const auto& ideal : corpus_ideals()) {
    const json j = io::to_json(ideal);
    const PolynomialIdeal back = io::ideal_from_json(reparse(j));
    CHECK(io::to_json(back) == j);
    CHECK(same_ideal(back, ideal));
  }
  for (const auto& c : corpus_complexes()) {
    const json j = io::to_json(c);
    CHECK(io::complex_from_json(reparse(j)) == c);
  }
  CHECK(io::complex_from_json(io::to_json(SimplicialComplex::void_complex(3))).is_void());
  CHECK(io::complex_from_json(io::to_json(SimplicialComplex::irrelevant(3))).is_irrelevant());
  CHECK(std::holds_alternative<SimplicialComplex>(io::input_from_json(io::parse_json(R"({"n":2,"facets":[[1],[2]]})"))));
  CHECK(std::holds_alternative<PolynomialIdeal>(io::input_from_json(io::parse_json(R"({"n":2,"generators":["x1"]})"))));
}

TEST_CASE("table JSON round trips") {
  for (const auto& c : corpus_complexes()) {
    const BettiTable b = hochster_betti(c);
    CHECK(io::betti_from_json(reparse(io::to_json(b))) == b);
    const BettiTable bi = b.to_ideal();
    CHECK(io::betti_from_json(reparse(io::to_json(bi))) == bi);
  }
  std::mt19937_64 rng(kSeed + 60);
  for (int t = 0; t < 20; ++t) {
    const MonomialIdeal ideal = random_strongly_stable(rng, 1 + rng() % 4);
    const Window w = default_cohomology_window(ideal);
    const CohomologyTable h = local_cohomology_strongly_stable(ideal, w);
    const CohomologyTable back = io::cohomology_from_json(reparse(io::to_json(h)));
    CHECK(diff_tables(h, back).empty());
    CHECK(io::to_json(back) == io::to_json(h));
    const CohomologyTable o = oracles::cech_local_cohomology(ideal, w);
    CHECK(io::to_json(io::cohomology_from_json(reparse(io::to_json(o)))) == io::to_json(o));
    const HilbertFunction hf = hilbert_function(ideal, {0, 6});
    CHECK(io::to_json(io::hilbert_from_json(reparse(io::to_json(hf)))) == io::to_json(hf));
  }
}

TEST_CASE("reports re-parse to equal values") {
  const SimplicialComplex c = cx(4, {{1, 2}, {3, 4}});
  const json reports[] = {
      io::to_json(theorem41_check(c, kSeed)),
      io::to_json(main_theorem_check(stanley_reisner_ideal(c), kSeed)),
      io::to_json(is_sequentially_cm(c, kSeed)),
      io::to_json(shifted_complex(c, kSeed)),
      io::to_json(local_cohomology_enrico(c, {-6, 0})),
      io::to_json(dimension_filtration(mideal(2, {"x1^2", "x1*x2"}))),
      io::to_json(gin(pideal(2, {"x1*x2"}), kSeed), pideal(2, {"x1*x2"})),
  };
  for (const auto& r : reports) CHECK(reparse(r) == r);
  const json t = io::to_json(theorem41_check(c, kSeed));
  CHECK(t["verdicts"]["equal"] == false);
  CHECK(t["verdicts"]["sequentially_cm"] == false);
  CHECK(t["verdicts"]["sbarra_holds"] == true);
  CHECK(t["window"].size() == 2);
  CHECK(t["seeds"].is_array());
}

TEST_CASE("parse errors cite line and column") {
  try {
    io::parse_json("{\n  \"n\": 2,\n  \"generators\": [\"x1\",]\n}");
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    CHECK(std::string(e.what()).find("column") != std::string::npos);
  }
  try {
    io::ideal_from_json(io::parse_json(R"({"n": 2, "generators": ["x1", "x1 + "]})"));
    FAIL("expected a parse error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::kParse);
    CHECK(std::string(e.what()).find("generator 2") != std::string::npos);
  }
  CHECK_THROWS_AS(io::complex_from_json(io::parse_json(R"({"n": 2, "facets": [[1, 3]]})")), Error);
  CHECK_THROWS_AS(io::input_from_json(io::parse_json(R"({"n": 2})")), Error);
}

TEST_CASE("TSV rendering") {
  const std::string b = io::betti_tsv(hochster_betti(cx(2, {{1}, {2}})));
  CHECK(b.find("i\\j") == 0);
  const std::string h = io::cohomology_tsv(oracles::cech_local_cohomology(mideal(2, {"x1*x2"}), {-2, 0}));
  CHECK(h == "i\\degree\t-2\t-1\t0\n0\t0\t0\t0\n1\t2\t2\t1\n2\t0\t0\t0\n");
}

TEST_CASE("gin cache") {
  TempDir dir;
  const PolynomialIdeal ideal = pideal(3, {"x1^2 - x2*x3", "x2^2 + x1*x3"});
  const std::string key = gin_cache_key(ideal, kSeed);
  CHECK(key == gin_cache_key(pideal(3, {"x2^2 + x1*x3", "2*x1^2 - 2*x2*x3"}), kSeed));
  CHECK(key != gin_cache_key(ideal, kSeed + 1));

  bool hit = true;
  const GinResult first = cached_gin(ideal, kSeed, dir.path.string(), &hit);
  CHECK(!hit);
  const fs::path file = dir.path / ("gin-" + key + ".json");
  CHECK(fs::exists(file));
  const GinResult second = cached_gin(ideal, kSeed, dir.path.string(), &hit);
  CHECK(hit);
  CHECK(second.ideal == first.ideal);
  CHECK(second.draw_seeds == first.draw_seeds);

  // A tampered entry is rejected and rewritten.
  json entry = io::parse_json([&] {
    std::ifstream in(file);
    return std::string(std::istreambuf_iterator<char>(in), {});
  }());
  entry["gin"] = io::to_json(mideal(3, {"x1*x2"}));
  std::ofstream(file) << entry.dump();
  const GinResult third = cached_gin(ideal, kSeed, dir.path.string(), &hit);
  CHECK(!hit);
  CHECK(third.ideal == first.ideal);
  cached_gin(ideal, kSeed, dir.path.string(), &hit);
  CHECK(hit);

  // Without a directory nothing is cached.
  ::unsetenv(kCacheDirEnv);
  CHECK(cached_gin(ideal, kSeed, std::nullopt, &hit).ideal == first.ideal);
  CHECK(!hit);
}
