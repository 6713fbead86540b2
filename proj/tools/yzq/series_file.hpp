#pragma once

#include "yzq/power_series.hpp"
#include "yzq/series_registry.hpp"

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

namespace yzq::cli {

inline constexpr int kSeriesFileSchemaVersion = 1;

/// On-disk form of a named series: UTF-8 JSON, newline-terminated, with
/// coefficients as canonical "p" / "p/q" strings (never floating point).
struct SeriesFile {
    int schema_version = kSeriesFileSchemaVersion;
    std::string series_id;
    int order = 0;
    std::vector<std::string> coefficients;
};

SeriesFile to_series_file(const std::string& series_id, const PowerSeries& series);

/// Exact inverse of serialize: parse(serialize(s)) == s. Throws
/// std::runtime_error on schema mismatch, malformed JSON, inconsistent
/// order, or a coefficient string that is not a canonical rational.
SeriesFile parse_series_file(const std::string& text);

std::string serialize_series_file(const SeriesFile& file);

PowerSeries to_power_series(const SeriesFile& file);

std::filesystem::path series_file_path(const std::filesystem::path& dir,
                                       const std::string& series_id);

/// Writes via a temp file in the same directory followed by an atomic
/// rename, so concurrent readers never observe a torn file.
void write_series_file_atomic(const std::filesystem::path& dir, const SeriesFile& file);

/// Loads a cached series when a file exists at sufficient order; a
/// higher-order file satisfies a lower-order request by truncation, a
/// lower-order file is a miss.
std::optional<PowerSeries> load_cached_series(const std::filesystem::path& dir,
                                              const std::string& series_id, int order);

} // namespace yzq::cli
