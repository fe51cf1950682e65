#pragma once

// Persistent, content-addressed store for expensive character data.
//
// Entries live at <dir>/<hash>.json as {"version", "key", "payload"}; a sibling <hash>.lock
// carries an advisory lock while an entry is read or written. Entries with the wrong
// version or key, or that fail to parse, are treated as misses.

#include <fcntl.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <string>

#include "json.hpp"

namespace mfn::cli {

inline constexpr int kCacheVersion = 1;

inline std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

inline std::string hex64(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string s(16, '0');
  for (int i = 15; i >= 0; --i, v >>= 4) s[static_cast<std::size_t>(i)] = digits[v & 0xf];
  return s;
}

/// --cache-dir, then $MFN_CACHE_DIR, then $XDG_CACHE_HOME/mfn, then ~/.cache/mfn.
inline std::filesystem::path default_cache_dir() {
  if (const char* env = std::getenv("MFN_CACHE_DIR"); env && *env) return env;
  if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg && *xdg) return std::filesystem::path(xdg) / "mfn";
  if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "mfn";
  return std::filesystem::temp_directory_path() / "mfn-cache";
}

class FileLock {
 public:
  explicit FileLock(const std::filesystem::path& path) : fd_(::open(path.c_str(), O_RDWR | O_CREAT, 0644)) {
    if (fd_ >= 0) ::flock(fd_, LOCK_EX);
  }
  ~FileLock() {
    if (fd_ >= 0) {
      ::flock(fd_, LOCK_UN);
      ::close(fd_);
    }
  }
  FileLock(const FileLock&) = delete;
  FileLock& operator=(const FileLock&) = delete;

 private:
  int fd_;
};

class Cache {
 public:
  Cache() = default;  // disabled
  explicit Cache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  bool enabled() const { return !dir_.empty(); }
  const std::filesystem::path& dir() const { return dir_; }

  std::filesystem::path entry_path(const std::string& key) const { return dir_ / (hex64(fnv1a(key)) + ".json"); }

  std::optional<nlohmann::json> load(const std::string& key) const {
    if (!enabled()) return std::nullopt;
    const auto path = entry_path(key);
    std::error_code ec;
    if (!std::filesystem::exists(path, ec)) return std::nullopt;
    FileLock lock(lock_path(key));
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
      auto doc = nlohmann::json::parse(in);
      if (doc.at("version").get<int>() != kCacheVersion || doc.at("key").get<std::string>() != key) return std::nullopt;
      return doc.at("payload");
    } catch (const nlohmann::json::exception&) {
      return std::nullopt;
    }
  }

  /// Best effort: an unwritable cache directory only costs recomputation.
  void store(const std::string& key, const nlohmann::json& payload) const {
    if (!enabled()) return;
    std::error_code ec;
    std::filesystem::create_directories(dir_, ec);
    if (ec) return;
    FileLock lock(lock_path(key));
    const auto path = entry_path(key);
    auto tmp = path;
    tmp += ".tmp" + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      if (!out) return;
      out << nlohmann::json{{"version", kCacheVersion}, {"key", key}, {"payload", payload}}.dump();
      if (!out) {
        std::filesystem::remove(tmp, ec);
        return;
      }
    }
    std::filesystem::rename(tmp, path, ec);
    if (ec) std::filesystem::remove(tmp, ec);
  }

 private:
  std::filesystem::path lock_path(const std::string& key) const { return dir_ / (hex64(fnv1a(key)) + ".lock"); }

  std::filesystem::path dir_;
};

}  // namespace mfn::cli
