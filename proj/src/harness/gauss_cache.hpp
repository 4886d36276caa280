#pragma once

#include <string>

#include "core/classical_sums.hpp"

namespace charsum::harness {

/// Writes every memoized entry of the table as CSV.
void cache_gauss_tables(const GaussTable& table, const std::string& path);

/// Loads a CSV written by cache_gauss_tables into the table's memo.
/// Every row must name the table's field order (FieldMismatch otherwise) and
/// have the magnitude of a Gauss sum; five evenly spaced rows are recomputed
/// and must agree (Corrupt otherwise).
/// Returns the number of rows loaded.
std::size_t load_gauss_tables(const GaussTable& table, const std::string& path);

/// File name used for a field of the given order inside a cache directory.
std::string gauss_cache_file(const std::string& dir, std::uint64_t field_order);

}  // namespace charsum::harness
