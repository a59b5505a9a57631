#pragma once

#include <filesystem>
#include <optional>
#include <string>

#include "json.hpp"

namespace w123::service {

struct CacheKey {
  std::string kind;  // sequence, scheme, equation, recurrence, report
  unsigned r = 0;
  nlohmann::json parameters = nlohmann::json::object();
};

// On-disk artifact store. One JSON file per key; each file records the key,
// the tool version and a SHA-256 of the canonical payload. Entries written
// by another version, or whose hash does not match, are treated as misses.
// Readers take a shared flock on the directory lock file, writers an
// exclusive one, and files are published by rename.
class Cache {
 public:
  explicit Cache(std::filesystem::path dir, std::string version = default_version());

  // $W123_CACHE_DIR, else $XDG_CACHE_HOME/w123, else $HOME/.cache/w123.
  static std::filesystem::path default_dir();
  static std::string default_version();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path path_for(const CacheKey& key) const;

  std::optional<nlohmann::json> load(const CacheKey& key) const;
  void store(const CacheKey& key, const nlohmann::json& payload) const;

 private:
  std::filesystem::path dir_;
  std::string version_;
};

std::string sha256_hex(const std::string& data);

}  // namespace w123::service
