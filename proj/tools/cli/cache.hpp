#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "burrset/burrset.h"

namespace burrcli {

struct TripleKey {
  std::uint64_t b1 = 0;
  std::uint64_t b2 = 0;
  std::uint64_t b3 = 0;
  friend auto operator<=>(const TripleKey&, const TripleKey&) = default;
};

struct CacheEntry {
  burr_outcome outcome = BURR_INFEASIBLE;
  std::uint64_t nodes = 0;
  friend bool operator==(const CacheEntry&, const CacheEntry&) = default;
};

// Search verdicts keyed by exclusion triple, persisted as one JSON file:
//   {"schema_version": 1, "entries": {"b1:b2:b3": {"outcome": ..., "nodes": N}}}
// Decided entries never change; resource_exceeded entries may be replaced.
class ResultCache {
 public:
  static constexpr int kSchemaVersion = 1;

  std::optional<CacheEntry> find(const TripleKey& key) const;
  // Returns false if a decided entry already occupies the key.
  bool put(const TripleKey& key, const CacheEntry& entry);
  std::size_t size() const noexcept { return entries_.size(); }
  const std::map<TripleKey, CacheEntry>& entries() const noexcept { return entries_; }

  // Missing file yields an empty cache. Unknown schema versions or malformed
  // content throw CliError.
  static ResultCache load(const std::filesystem::path& path);

  // Merges with whatever is on disk under an exclusive advisory lock, then
  // replaces the file atomically.
  void save(const std::filesystem::path& path) const;

  std::string to_json() const;
  static ResultCache from_json(const std::string& text);

 private:
  std::map<TripleKey, CacheEntry> entries_;
};

std::string key_string(const TripleKey& k);

}  // namespace burrcli
