#pragma once

// On-disk cache of enumerated lattices and complexes. Entries are JSON files
// named by the SHA-256 of their key and carry a SHA-256 of their payload.

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "coxcat/serialize.hpp"

namespace coxcat {

inline constexpr int kCacheFormatVersion = 1;

struct CacheKey {
  std::string type;  // canonical type label
  std::string kind;  // "lattice" or "complex"
  int version = kCacheFormatVersion;

  std::string text() const;
};

std::string sha256_hex(std::string_view data);

class ArtifactCache {
 public:
  /// A disabled cache never hits and never writes.
  static ArtifactCache disabled() { return ArtifactCache(std::nullopt); }
  explicit ArtifactCache(std::optional<std::filesystem::path> dir) : dir_(std::move(dir)) {}

  /// $COXCAT_CACHE, else $XDG_CACHE_HOME/coxcat, else ~/.cache/coxcat.
  static std::filesystem::path default_dir();

  bool enabled() const { return dir_.has_value(); }
  std::filesystem::path path_for(const CacheKey& key) const;

  /// The payload if an entry with this exact key and a valid checksum exists.
  std::optional<Json> load(const CacheKey& key) const;
  /// Writes atomically (temporary file, then rename). Throws IoError.
  void store(const CacheKey& key, const Json& payload) const;

 private:
  std::optional<std::filesystem::path> dir_;
};

}  // namespace coxcat
