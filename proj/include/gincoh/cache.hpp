#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "gincoh/groebner.hpp"

namespace gincoh {

inline constexpr const char* kVersion = "1.0.0";
inline constexpr const char* kCacheDirEnv = "GINCOH_CACHE_DIR";

// FNV-1a over the canonical ideal text, the seed and kVersion.
std::string gin_cache_key(const PolynomialIdeal& ideal, std::uint64_t seed);

// gin() with an on-disk cache. `dir` falls back to $GINCOH_CACHE_DIR; with
// neither set nothing is cached. A cached entry is replayed only if it is
// strongly stable and has the Hilbert series of the initial ideal;
// otherwise it is recomputed and overwritten.
GinResult cached_gin(const PolynomialIdeal& ideal, std::uint64_t seed,
                     const std::optional<std::string>& dir = std::nullopt, bool* hit = nullptr);

}  // namespace gincoh
