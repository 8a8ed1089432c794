#pragma once

// Plain-text store of computed Betti tables:
//
//   MBARCACHE v1
//   3: 1
//   4: 1,1
//   5: 1,5,1
//
// Records are sorted by n without duplicates, coefficients in ascending
// degree as exact decimals. Every record is validated on load.

#include <filesystem>
#include <istream>
#include <map>
#include <string>
#include <string_view>

#include "mbar/lpoly.hpp"

namespace mbar {

inline constexpr std::string_view kCacheHeader = "MBARCACHE v1";

using TableMap = std::map<int, BettiTable>;

/// CacheError on a bad header, malformed or unsorted records, duplicates,
/// or a record that fails Betti-table validation.
TableMap parse_cache(std::istream& in);

std::string format_cache(const TableMap& tables);

/// Missing file reads as an empty cache.
TableMap load_cache(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`.
void save_cache(const std::filesystem::path& path, const TableMap& tables);

}  // namespace mbar
