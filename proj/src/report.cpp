#include "gridgeom/report.hpp"

#include <cstdio>

namespace gridgeom {

std::uint64_t fnv1a(const void* data, std::size_t len, std::uint64_t seed) {
  const auto* p = static_cast<const unsigned char*>(data);
  std::uint64_t h = seed;
  for (std::size_t i = 0; i < len; ++i) {
    h ^= p[i];
    h *= 0x100000001b3ull;
  }
  return h;
}

std::uint64_t stable_hash(const std::string& s) { return fnv1a(s.data(), s.size()); }

std::string canonical_dump(const nlohmann::json& j) {
  // nlohmann::json objects keep keys sorted, so dump() is canonical.
  return j.dump();
}

std::string hash_hex(std::uint64_t h) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace gridgeom
