#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sldist/chartab/char_table.hpp"

namespace sldist::cli {

/// Bumped whenever the file layout changes.
inline constexpr int kCacheSchema = 1;
inline constexpr const char* kCodeVersion = "sldist-0.1.0";
inline constexpr const char* kCacheDirEnv = "SLDIST_CACHE_DIR";

/// --cache-dir if given, else $SLDIST_CACHE_DIR, else ./.sldist-cache.
std::filesystem::path resolve_cache_dir(const std::string& flag);

/// Lowercase hex SHA-256.
std::string sha256_hex(const void* data, std::size_t size);

/// SHA-256 of the class partition: class_of, representatives and sizes as
/// little-endian int64.
std::string class_digest(const groups::ConjugacyData& classes);

/// Everything identifying a table besides its values.
struct CacheKey {
  groups::GroupKind kind = groups::GroupKind::GlE;
  int n = 0;
  std::uint32_t p = 0;
  std::uint32_t k = 0;
  std::uint64_t seed = 0;
  std::vector<std::uint32_t> base_modulus;
  std::vector<std::uint32_t> ext_modulus;

  static CacheKey of(const groups::GroupView& view, std::uint64_t seed);
  std::string file_name() const;
};

/// File layout: one line of compact JSON (the header), then the payload of
/// little-endian int64 values.  For each row and class the payload holds the
/// term count followed by (exponent, multiplicity) pairs of the root sum.
std::string encode_table(const CacheKey& key, const chartab::CharTable& table);

enum class CacheStatus : std::uint8_t { Hit, Miss, Corrupt };

struct CacheLoad {
  CacheStatus status = CacheStatus::Miss;
  std::string reason;
  std::optional<chartab::CharTable> table;
};

/// Reads and checks a cache file: header fields against the key and the
/// classes, payload digest, then verify_table on the decoded table.
CacheLoad load_table(const std::filesystem::path& path, const CacheKey& key, const groups::GroupView& view,
                     std::shared_ptr<const groups::ConjugacyData> classes);

/// Write to a temporary file in the same directory, then rename.
void store_table(const std::filesystem::path& path, const CacheKey& key, const chartab::CharTable& table);

/// Result of fetching one table through the cache.
struct CacheEvent {
  groups::GroupKind kind;
  std::filesystem::path path;
  CacheStatus status;
  std::string reason;
};

/// Loads the table from dir if a valid entry exists, otherwise runs
/// dixon_schneider and stores the result.
chartab::CharTable cached_table(const std::filesystem::path& dir, const groups::GroupView& view,
                                std::shared_ptr<const groups::ConjugacyData> classes, std::uint64_t seed,
                                const chartab::TableOptions& options, CacheEvent* event = nullptr);

}  // namespace sldist::cli
