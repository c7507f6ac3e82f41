#pragma once

#include <cstdint>
#include <string>

#include "json.hpp"

namespace gridgeom {

inline constexpr const char* kToolVersion = "0.1.0";

/// Stable 64-bit FNV-1a over bytes; used for config/hypergraph fingerprints
/// embedded in reports (platform-independent, unlike std::hash).
std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed = 0xcbf29ce484222325ull);

std::uint64_t stable_hash(const std::string& s);

/// Canonical JSON dump (sorted keys) so identical specs hash identically.
std::string canonical_dump(const nlohmann::json& j);

std::string hash_hex(std::uint64_t h);

}  // namespace gridgeom
