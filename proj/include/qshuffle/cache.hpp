#pragma once

// Content-addressed cache for computed basis families and character tables.
// Keys embed the artifact version and the order-convention tag, so changing
// the comparator invalidates everything automatically.  Hits are verified by
// checksum before use.

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

namespace qsh {

inline constexpr const char* kArtifactVersion = "qshuffle-0.1.0";
inline constexpr const char* kOrderConventionTag = "antilex-rtl-v1";

struct CacheKey {
  std::string command;  // e.g. "basis", "char"
  std::string weight;
  std::string framing;

  std::string canonical() const {
    return std::string(kArtifactVersion) + "|" + kOrderConventionTag + "|" + command + "|" + weight + "|" + framing;
  }
};

inline std::uint64_t fnv1a(const std::string& s, std::uint64_t seed = 1469598103934665603ull) {
  std::uint64_t h = seed;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string hex_digest(const CacheKey& key) {
  const std::string c = key.canonical();
  // two passes with different seeds widen the digest to 128 bits
  char buf[33];
  std::snprintf(buf, sizeof buf, "%016llx%016llx", static_cast<unsigned long long>(fnv1a(c)),
                static_cast<unsigned long long>(fnv1a(c, 14695981039346656037ull)));
  return buf;
}

class Cache {
 public:
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) { std::filesystem::create_directories(dir_); }

  void store(const CacheKey& key, const nlohmann::json& payload) const {
    const std::string body = payload.dump();
    nlohmann::json envelope{{"key", key.canonical()},
                            {"checksum", std::to_string(fnv1a(body))},
                            {"payload", payload}};
    std::ofstream out(path_for(key));
    out << envelope.dump(1);
  }

  std::optional<nlohmann::json> load(const CacheKey& key) const {
    const auto p = path_for(key);
    std::ifstream in(p);
    if (!in) return std::nullopt;
    nlohmann::json envelope;
    try {
      in >> envelope;
    } catch (...) {
      return std::nullopt;
    }
    if (envelope.value("key", "") != key.canonical()) return std::nullopt;
    const nlohmann::json payload = envelope["payload"];
    if (envelope.value("checksum", "") != std::to_string(fnv1a(payload.dump()))) return std::nullopt;
    return payload;
  }

  std::filesystem::path path_for(const CacheKey& key) const { return dir_ / (hex_digest(key) + ".json"); }

 private:
  std::filesystem::path dir_;
};

}  // namespace qsh
