#pragma once

// On-disk cache of Kostka tables: one JSON file per n, kostka_n<N>.json.

#include <filesystem>
#include <optional>
#include <string>

#include "symq/hl.hpp"

namespace symq::cli {

inline constexpr int kCacheFormatVersion = 1;

/// --cache-dir, else $SYMQ_CACHE_DIR, else $XDG_CACHE_HOME/symq, else
/// ~/.cache/symq. Empty when none of these is available.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

class KostkaCache {
 public:
  explicit KostkaCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  std::filesystem::path file_for(int n) const;

  /// nullopt when the file is missing, unreadable, of another format
  /// version, or not the table for n.
  std::optional<KostkaTable> load(int n) const;

  /// Writes to a temporary file in the same directory, then renames it into
  /// place. Throws std::runtime_error on I/O failure.
  void store(const KostkaTable& table) const;

 private:
  std::filesystem::path dir_;
};

}  // namespace symq::cli
