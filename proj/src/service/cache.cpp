#include "service/cache.hpp"

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include "errors.hpp"

#ifndef W123_VERSION
#define W123_VERSION "0.0.0"
#endif

namespace w123::service {

namespace fs = std::filesystem;

namespace {

class DirectoryLock {
 public:
  DirectoryLock(const fs::path& dir, bool exclusive) {
    fd_ = ::open((dir / ".lock").c_str(), O_RDWR | O_CREAT | O_CLOEXEC, 0644);
    if (fd_ < 0) throw IoError("cannot open cache lock in " + dir.string());
    if (::flock(fd_, exclusive ? LOCK_EX : LOCK_SH) != 0) {
      ::close(fd_);
      throw IoError("cannot lock cache directory " + dir.string());
    }
  }
  ~DirectoryLock() {
    ::flock(fd_, LOCK_UN);
    ::close(fd_);
  }
  DirectoryLock(const DirectoryLock&) = delete;
  DirectoryLock& operator=(const DirectoryLock&) = delete;

 private:
  int fd_;
};

nlohmann::json key_json(const CacheKey& key, const std::string& version) {
  return {{"kind", key.kind}, {"r", key.r}, {"parameters", key.parameters}, {"version", version}};
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), digest, &len, EVP_sha256(), nullptr) != 1)
    throw IoError("SHA-256 computation failed");
  std::ostringstream os;
  for (unsigned i = 0; i < len; ++i) os << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return os.str();
}

Cache::Cache(fs::path dir, std::string version) : dir_(std::move(dir)), version_(std::move(version)) {}

fs::path Cache::default_dir() {
  if (const char* d = std::getenv("W123_CACHE_DIR"); d && *d) return d;
  if (const char* d = std::getenv("XDG_CACHE_HOME"); d && *d) return fs::path(d) / "w123";
  if (const char* d = std::getenv("HOME"); d && *d) return fs::path(d) / ".cache" / "w123";
  return fs::current_path() / ".w123-cache";
}

std::string Cache::default_version() { return W123_VERSION; }

fs::path Cache::path_for(const CacheKey& key) const {
  const std::string digest = sha256_hex(key_json(key, version_).dump());
  return dir_ / (key.kind + "-r" + std::to_string(key.r) + "-" + digest.substr(0, 20) + ".json");
}

std::optional<nlohmann::json> Cache::load(const CacheKey& key) const {
  const fs::path file = path_for(key);
  std::error_code ec;
  if (!fs::exists(file, ec)) return std::nullopt;
  DirectoryLock lock(dir_, false);
  std::ifstream in(file);
  if (!in) return std::nullopt;
  nlohmann::json entry = nlohmann::json::parse(in, nullptr, false);
  if (entry.is_discarded() || !entry.is_object()) return std::nullopt;
  if (entry.value("key", nlohmann::json()) != key_json(key, version_)) return std::nullopt;
  if (!entry.contains("payload") || !entry.contains("hash")) return std::nullopt;
  if (entry["hash"] != sha256_hex(entry["payload"].dump())) return std::nullopt;
  return entry["payload"];
}

void Cache::store(const CacheKey& key, const nlohmann::json& payload) const {
  std::error_code ec;
  fs::create_directories(dir_, ec);
  if (ec) throw IoError("cannot create cache directory " + dir_.string() + ": " + ec.message());
  nlohmann::json entry = {{"key", key_json(key, version_)}, {"hash", sha256_hex(payload.dump())}, {"payload", payload}};
  const fs::path file = path_for(key);
  DirectoryLock lock(dir_, true);
  fs::path tmp = file;
  tmp += ".tmp" + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::trunc);
    out << entry.dump() << "\n";
    if (!out) throw IoError("cannot write cache entry " + tmp.string());
  }
  fs::rename(tmp, file, ec);
  if (ec) throw IoError("cannot publish cache entry " + file.string() + ": " + ec.message());
}

}  // namespace w123::service
