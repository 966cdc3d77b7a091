#pragma once

// On-disk catalog of classified surfaces.
//
//   <root>/index.json               one record per surface, ordered by (n, ordinal)
//   <root>/surfaces/nNN_<tag>.txt   one complex per line, ordinal order
//   <root>/coords/...               realizations (.coords and .off)
//   <root>/manifests/NNNN-<cmd>.json

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "surfenum/classifier.hpp"

namespace surfenum::app {

struct RealizationStatus {
  std::string status = "unrealized";  // or a Provenance name
  std::string coords_file;            // relative to the catalog root
  std::string off_file;
  std::uint64_t tries = 0;
  std::uint64_t seed = 0;
  std::int64_t max_norm = 0;
};

struct CatalogEntry {
  std::string name;
  int n = 0;
  int ordinal = 0;  // 1-based position in the canonical order for this n
  SurfaceRecord record;
  std::string file;  // relative to the catalog root
  int line = 0;      // 1-based line within file
  std::optional<RealizationStatus> realization;
};

std::string entry_name(int n, int ordinal);
/// surfaces/nNN_<tag>.txt
std::string surface_file_name(int n, const TopologicalType& type);
/// Stable across renumbering: derived from the canonical form.
std::string coordinate_stem(const TriangleSet& canonical);

class Catalog {
 public:
  /// An empty, unsaved catalog rooted at `root`.
  explicit Catalog(std::filesystem::path root = {}) : root_(std::move(root)) {}

  /// Loads <root>/index.json if it exists; an absent index is an empty catalog.
  /// Throws std::runtime_error listing problems when the index is unreadable.
  static Catalog open(const std::filesystem::path& root);

  const std::filesystem::path& root() const { return root_; }
  const std::vector<CatalogEntry>& entries() const { return entries_; }
  std::vector<CatalogEntry>& entries() { return entries_; }

  /// Replaces all entries with this n by `records`, kept in the given order.
  /// Realization data of entries with an identical canonical form is kept.
  void replace_n(int n, const std::vector<SurfaceRecord>& records);
  /// Adds classes not yet present for their n, then re-sorts that n by
  /// canonical form. Returns the number of new classes.
  std::size_t merge(const std::vector<SurfaceRecord>& records);

  /// Writes surface files and index.json; removes surface files no longer used.
  void save() const;

  /// Problems found on disk: unreadable files, entries that do not parse or
  /// verify, line counts that disagree with the index. Empty when valid.
  std::vector<std::string> validate() const;

  /// Writes manifests/NNNN-<command>.json and returns its path.
  std::filesystem::path write_manifest(const std::string& command, const nlohmann::json& body) const;

 private:
  void renumber(int n);

  std::filesystem::path root_;
  std::vector<CatalogEntry> entries_;
};

nlohmann::json key_to_json(const InvariantKey& key);

}  // namespace surfenum::app
