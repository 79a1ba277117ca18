#pragma once

// Persistent KL tables and JSON reports.

#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>

#include <nlohmann/json.hpp>

#include "bcell/cell_reps.hpp"
#include "bcell/kl_store.hpp"

namespace bcell {

inline constexpr int kCacheFormatVersion = 1;
inline constexpr const char* kCellsFormat = "bcell-cells/1";
inline constexpr const char* kCharactersFormat = "bcell-characters/1";

/// e.g. "kl-n3-asymptotic.txt", "kl-n3-weighted-1-2.txt".
std::string cache_file_name(int n, const OrderSpec& spec);

/// Header lines, then "y | w | poly" records for P* and "s | y | w | poly"
/// records for M, both in index order.
void write_store(std::ostream& out, const KLStore& store);
void save_store(const KLStore& store, const std::filesystem::path& file);

/// nullopt (with a reason) when the header disagrees or a record is malformed.
std::optional<KLStore> read_store(std::istream& in, std::shared_ptr<const Group> group, const OrderSpec& spec,
                                  std::string& reason);

/// Loads from cache_dir when the header matches, otherwise builds and writes
/// the file.  Warnings about stale or unreadable caches go to `warn`.
KLStore load_or_build(std::shared_ptr<const Group> group, const OrderSpec& spec,
                      const std::optional<std::filesystem::path>& cache_dir, BuildMode mode, std::ostream& warn);

nlohmann::json shape_to_json(const Bipartition& bp);

nlohmann::json cells_to_json(const KLStore& store, const CellPartition& cells);

nlohmann::json characters_to_json(const Group& g, const std::vector<ConjugacyClass>& classes,
                                  const std::vector<CellIdentification>& ids,
                                  const std::vector<std::vector<Index>>& members);

}  // namespace bcell
