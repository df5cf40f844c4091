#include "gincoh/cache.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "gincoh/error.hpp"
#include "gincoh/io.hpp"

namespace gincoh {

namespace {

std::string canonical_text(const PolynomialIdeal& ideal) {
  std::vector<std::string> gens;
  for (const auto& g : ideal.generators()) gens.push_back(g.primitive().to_string());
  std::sort(gens.begin(), gens.end());
  std::string out = "n=" + std::to_string(ideal.ambient());
  for (const auto& g : gens) out += ";" + g;
  return out;
}

std::uint64_t fnv1a(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::optional<std::string> resolve_dir(const std::optional<std::string>& dir) {
  if (dir && !dir->empty()) return dir;
  if (const char* env = std::getenv(kCacheDirEnv); env && *env) return std::string(env);
  return std::nullopt;
}

std::optional<GinResult> load(const std::filesystem::path& file, const PolynomialIdeal& ideal, std::uint64_t seed) {
  std::ifstream in(file);
  if (!in) return std::nullopt;
  std::stringstream buffer;
  buffer << in.rdbuf();
  try {
    const io::json j = io::parse_json(buffer.str());
    if (j.at("version").get<std::string>() != kVersion) return std::nullopt;
    if (j.at("ideal").get<std::string>() != canonical_text(ideal)) return std::nullopt;
    if (j.at("seed").get<std::uint64_t>() != seed) return std::nullopt;
    const PolynomialIdeal g = io::ideal_from_json(j.at("gin"));
    if (!g.is_monomial()) return std::nullopt;
    GinResult out{g.as_monomial(), seed, j.at("draw_seeds").get<std::vector<std::uint64_t>>()};
    if (!is_strongly_stable(out.ideal)) return std::nullopt;
    if (!(hilbert_series(out.ideal) == hilbert_series(initial_ideal(ideal)))) return std::nullopt;
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

}  // namespace

std::string gin_cache_key(const PolynomialIdeal& ideal, std::uint64_t seed) {
  return io::hex64(fnv1a(canonical_text(ideal) + "|seed=" + std::to_string(seed) + "|v=" + kVersion));
}

GinResult cached_gin(const PolynomialIdeal& ideal, std::uint64_t seed, const std::optional<std::string>& dir,
                     bool* hit) {
  if (hit) *hit = false;
  const auto root = resolve_dir(dir);
  if (!root) return gin(ideal, seed);

  const std::filesystem::path file = std::filesystem::path(*root) / ("gin-" + gin_cache_key(ideal, seed) + ".json");
  if (auto cached = load(file, ideal, seed)) {
    if (hit) *hit = true;
    return *cached;
  }
  GinResult result = gin(ideal, seed);
  std::error_code ec;
  std::filesystem::create_directories(*root, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create cache directory " + *root + ": " + ec.message());
  const io::json j = {{"version", kVersion},
                      {"ideal", canonical_text(ideal)},
                      {"seed", seed},
                      {"gin", io::to_json(result.ideal)},
                      {"draw_seeds", result.draw_seeds}};
  const std::filesystem::path tmp = file.string() + ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Error(ErrorCode::kIo, "cannot write " + tmp.string());
    out << j.dump(2) << '\n';
  }
  std::filesystem::rename(tmp, file, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot move " + tmp.string() + " into place: " + ec.message());
  return result;
}

}  // namespace gincoh
