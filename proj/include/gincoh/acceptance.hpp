#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gincoh/io.hpp"

namespace gincoh {

struct CorpusEntry {
  std::string name;
  io::Input input;
};

struct Corpus {
  std::vector<CorpusEntry> ideals;
  std::vector<CorpusEntry> complexes;
};

// Reads <dir>/ideals/*.json and <dir>/complexes/*.json in file-name order.
Corpus load_corpus(const std::string& dir);

struct CriterionResult {
  int id = 0;
  std::string name;
  bool passed = false;
  std::string detail;
};

struct AcceptanceReport {
  std::uint64_t seed = 0;
  std::vector<CriterionResult> criteria;
  bool all_passed() const;
};

// The twelve acceptance criteria evaluated over a corpus directory.
AcceptanceReport run_acceptance(const std::string& corpus_dir, std::uint64_t seed);

io::json to_json(const AcceptanceReport& report);

}  // namespace gincoh
