#include "coxcat/cache.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <thread>

#include <openssl/evp.h>

namespace coxcat {

std::string CacheKey::text() const { return type + "|" + kind + "|v" + std::to_string(version); }

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw InternalError("SHA-256 failed");
  static const char* hex = "0123456789abcdef";
  std::string out;
  out.reserve(2 * len);
  for (unsigned int i = 0; i < len; ++i) {
    out.push_back(hex[digest[i] >> 4]);
    out.push_back(hex[digest[i] & 15]);
  }
  return out;
}

std::filesystem::path ArtifactCache::default_dir() {
  if (const char* env = std::getenv("COXCAT_CACHE"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "coxcat";
  if (const char* home = std::getenv("HOME"); home && *home)
    return std::filesystem::path(home) / ".cache" / "coxcat";
  return std::filesystem::temp_directory_path() / "coxcat-cache";
}

std::filesystem::path ArtifactCache::path_for(const CacheKey& key) const {
  if (!dir_) throw ArgumentError("cache is disabled");
  return *dir_ / (sha256_hex(key.text()) + ".json");
}

std::optional<Json> ArtifactCache::load(const CacheKey& key) const {
  if (!dir_) return std::nullopt;
  std::ifstream in(path_for(key), std::ios::binary);
  if (!in) return std::nullopt;
  try {
    Json entry = Json::parse(in);
    const Json& k = entry.at("key");
    if (k.at("type").get<std::string>() != key.type || k.at("kind").get<std::string>() != key.kind ||
        k.at("version").get<int>() != key.version)
      return std::nullopt;
    Json payload = std::move(entry.at("payload"));
    if (sha256_hex(payload.dump()) != entry.at("checksum").get<std::string>()) return std::nullopt;
    return payload;
  } catch (const nlohmann::json::exception&) {
    return std::nullopt;
  }
}

void ArtifactCache::store(const CacheKey& key, const Json& payload) const {
  if (!dir_) return;
  std::error_code ec;
  std::filesystem::create_directories(*dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_->string() + ": " + ec.message());
  const Json entry{{"key", {{"type", key.type}, {"kind", key.kind}, {"version", key.version}}},
                   {"checksum", sha256_hex(payload.dump())},
                   {"payload", payload}};
  const std::filesystem::path target = path_for(key);
  std::ostringstream suffix;
  suffix << ".tmp." << std::hash<std::thread::id>{}(std::this_thread::get_id());
  std::filesystem::path tmp = target;
  tmp += suffix.str();
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write cache entry " + tmp.string());
    out << entry.dump();
    if (!out) throw IoError("cannot write cache entry " + tmp.string());
  }
  std::filesystem::rename(tmp, target, ec);
  if (ec) throw IoError("cannot move cache entry into place: " + ec.message());
}

}  // namespace coxcat
