#pragma once

// Persistent count cache for the CLI: one JSON object per line, appended
// under an exclusive flock. Any unreadable line disables the cache for the
// run; an unfinished last line is a concurrent append and is skipped.

#include <fcntl.h>
#include <openssl/evp.h>
#include <sys/file.h>
#include <unistd.h>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "mspat/bigcount.hpp"
#include "mspat/formulas.hpp"

namespace mspat::cli {

struct CacheKey {
  std::string pair;  // canonical representative
  std::size_t n = 0;
  std::size_t m = 0;
  std::string method;

  std::string digest() const {
    const std::string text =
        pair + "|" + std::to_string(n) + "|" + std::to_string(m) + "|" + method + "|" + std::string(kCatalogVersion);
    unsigned char md[EVP_MAX_MD_SIZE];
    unsigned int len = 0;
    EVP_Digest(text.data(), text.size(), md, &len, EVP_sha256(), nullptr);
    static const char* hex = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
      out += hex[md[i] >> 4];
      out += hex[md[i] & 15];
    }
    return out;
  }
};

class ResultCache {
 public:
  explicit ResultCache(std::string path) : path_(std::move(path)) {}

  /// Cache at $MSPAT_CACHE, if set.
  static std::optional<ResultCache> from_env() {
    const char* path = std::getenv("MSPAT_CACHE");
    if (path == nullptr || *path == '\0') return std::nullopt;
    return ResultCache(path);
  }

  std::optional<BigCount> lookup(const CacheKey& key) {
    load();
    if (disabled_) return std::nullopt;
    auto it = entries_.find(key.digest());
    if (it == entries_.end()) return std::nullopt;
    return it->second;
  }

  void store(const CacheKey& key, const BigCount& count) {
    if (disabled_) return;
    nlohmann::json rec = {{"key", key.digest()},   {"pair", key.pair},
                          {"n", key.n},            {"m", key.m},
                          {"method", key.method},  {"version", std::string(kCatalogVersion)},
                          {"count", count.get_str()}};
    const std::string line = rec.dump() + "\n";
    const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) {
      warn("cannot open " + path_ + " for writing");
      return;
    }
    if (::flock(fd, LOCK_EX) == 0) {
      const ssize_t written = ::write(fd, line.data(), line.size());
      if (written != static_cast<ssize_t>(line.size())) warn("short write to " + path_);
      ::flock(fd, LOCK_UN);
    }
    ::close(fd);
    entries_[key.digest()] = count;
  }

  /// Drops everything for the rest of the run (used after a failed audit).
  void disable(const std::string& why) {
    warn(why + "; cache ignored");
    disabled_ = true;
    entries_.clear();
  }

  bool disabled() const { return disabled_; }

 private:
  void load() {
    if (loaded_) return;
    loaded_ = true;
    const int fd = ::open(path_.c_str(), O_RDONLY);
    if (fd < 0) return;  // not created yet
    std::string data;
    if (::flock(fd, LOCK_SH) == 0) {
      char buf[1 << 16];
      ssize_t got;
      while ((got = ::read(fd, buf, sizeof buf)) > 0) data.append(buf, static_cast<std::size_t>(got));
      ::flock(fd, LOCK_UN);
    }
    ::close(fd);

    std::size_t start = 0, line_no = 0;
    while (start < data.size()) {
      const std::size_t end = data.find('\n', start);
      if (end == std::string::npos) break;  // append in progress
      ++line_no;
      const std::string line = data.substr(start, end - start);
      start = end + 1;
      if (line.empty()) continue;
      if (!accept(line)) {
        disable(path_ + ": unreadable entry on line " + std::to_string(line_no));
        return;
      }
    }
  }

  bool accept(const std::string& line) {
    try {
      const auto rec = nlohmann::json::parse(line);
      CacheKey key{rec.at("pair").get<std::string>(), rec.at("n").get<std::size_t>(), rec.at("m").get<std::size_t>(),
                   rec.at("method").get<std::string>()};
      const std::string digest = rec.at("key").get<std::string>();
      if (rec.at("version").get<std::string>() != kCatalogVersion) return true;  // stale, not corrupt
      if (digest != key.digest()) return false;
      BigCount count;
      if (count.set_str(rec.at("count").get<std::string>(), 10) != 0 || count < 0) return false;
      entries_[digest] = count;
      return true;
    } catch (const std::exception&) {
      return false;
    }
  }

  static void warn(const std::string& text) { std::cerr << "warning: " << text << "\n"; }

  std::string path_;
  bool loaded_ = false;
  bool disabled_ = false;
  std::map<std::string, BigCount> entries_;
};

}  // namespace mspat::cli
