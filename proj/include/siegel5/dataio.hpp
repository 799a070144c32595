#pragma once

#include "siegel5/rational.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace siegel5 {

/// FNV-1a 64-bit hash of a byte string; used to fingerprint the embedded
/// data files so re-typed tables are auditable.
std::uint64_t fnv1a64(const std::string& bytes);

/// Hex rendering of a checksum, zero padded to 16 digits.
std::string checksum_hex(std::uint64_t h);

/// Whole-file read; data_error when missing.
std::string read_file(const std::filesystem::path& path);

/// Parse a whitespace-separated integer table, skipping blank lines and
/// lines starting with '#'.  Every row must have exactly `columns` fields.
std::vector<std::vector<long>> read_int_table(const std::filesystem::path& path, int columns);

/// Resolve the data directory: explicit argument if nonempty, else the
/// SIEGEL5_DATA_DIR environment variable, else the compiled-in default.
std::filesystem::path resolve_data_dir(const std::string& override_dir = "");

} // namespace siegel5
