// Prints one PASS/FAIL line per acceptance criterion; exits nonzero on any failure.
#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <exception>
#include <string>

#include "gincoh/acceptance.hpp"
#include "gincoh/error.hpp"

int main(int argc, char** argv) {
  const std::string dir = argc > 1 ? argv[1] : GINCOH_CORPUS_DIR;
  const std::uint64_t seed = argc > 2 ? std::strtoull(argv[2], nullptr, 0) : 20261015ULL;
  const auto start = std::chrono::steady_clock::now();
  try {
    const gincoh::AcceptanceReport report = gincoh::run_acceptance(dir, seed);
    for (const auto& c : report.criteria)
      std::printf("%s %d %s: %s\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.detail.c_str());
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("seed %llu, corpus %s, %.2f s\n", static_cast<unsigned long long>(seed), dir.c_str(), secs);
    return report.all_passed() ? 0 : 1;
  } catch (const gincoh::Error& e) {
    std::printf("FAIL setup: [%s] %s\n", std::string(gincoh::error_code_name(e.code())).c_str(), e.what());
  } catch (const std::exception& e) {
    std::printf("FAIL setup: %s\n", e.what());
  }
  return 1;
}
