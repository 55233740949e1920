#pragma once

#include "itersplit/descriptor.hpp"

#include <filesystem>
#include <fstream>
#include <string>
#include <unordered_set>
#include <vector>

namespace itersplit {

/// Append-only JSON-lines catalog of tunnels, deduplicated by invariants.
class Catalog {
public:
  /// Loads existing entries from path (a missing file is an empty catalog).
  explicit Catalog(std::filesystem::path path);

  /// Appends e unless an entry with equal invariants is already present.
  /// Returns true when the entry was written.
  bool add(const CatalogEntry& e);

  const std::vector<CatalogEntry>& entries() const { return entries_; }
  const std::filesystem::path& path() const { return path_; }

private:
  std::filesystem::path path_;
  std::vector<CatalogEntry> entries_;
  std::unordered_set<std::string> keys_;
  std::ofstream out_;
};

struct CatalogCheck {
  std::size_t entries = 0;
  /// Line numbers (1-based) whose stored record differs from a fresh
  /// recomputation of its descriptor.
  std::vector<std::size_t> mismatched_lines;
};

/// Re-reads every line and recomputes it from its descriptor; a line passes
/// when the recomputed record serializes byte-for-byte to the stored one.
CatalogCheck check_catalog(const std::filesystem::path& path);

}  // namespace itersplit
