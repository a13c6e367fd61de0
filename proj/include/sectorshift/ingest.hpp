#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sectorshift/forecast.hpp"
#include "sectorshift/series.hpp"
#include "sectorshift/transfer.hpp"

namespace sectorshift {

/// Sidecar metadata for one bundled dataset.
struct DatasetManifest {
    std::string id;
    std::string country;
    std::string metric;
    std::string unit;
    std::string source;
    std::string provenance;  // transcribed | transcribed+inferred | assembled
    std::string file;
    std::string kind = "series";  // series | economy | age
    std::string notes;
    std::string scope;
    std::optional<int> base_year;
    std::optional<int> year;
};

struct EconomyTable {
    std::string country;
    std::vector<EconomyYear> rows;  // year-sorted

    std::optional<EconomyYear> row(int year) const;
    void validate() const;
};

using Bundled = std::variant<AnnualSeries, EconomyTable>;

/// Parse a `year,value` CSV (UTF-8, LF or CRLF, optional leading `#` comment
/// lines). Rows are year-sorted on return; duplicate years are rejected.
AnnualSeries parse_series_csv(const std::filesystem::path& path);

/// Parse a `year,gdp_real,employment,gdp_agri_real,employment_agri` CSV with
/// absolute values. Sector slices must stay strictly inside the totals.
EconomyTable parse_economy_csv(const std::filesystem::path& path);

/// Parse an `age_low,age_high,percent` CSV into an age distribution.
AgeDistribution parse_age_csv(const std::filesystem::path& path);

/// Canonical CSV form of a series: exact header, LF endings, shortest
/// round-trip number formatting, one trailing newline. Parsing then
/// serializing a canonical file is byte-identical.
std::string serialize_series_csv(const AnnualSeries& series);

/// Fill interior missing years by linear interpolation, recording the filled
/// years in the series' provenance metadata. Never extrapolates; idempotent.
AnnualSeries interpolate_linear(const AnnualSeries& series);

/// Bundled-data directory resolution: explicit set_data_dir() wins, then the
/// SECTORSHIFT_DATA environment variable, then the build-time default.
std::filesystem::path data_dir();
void set_data_dir(std::filesystem::path dir);

std::vector<DatasetManifest> list_bundled();
DatasetManifest bundled_manifest(std::string_view id);

/// Load a bundled dataset by id. Share series declared in percent are
/// converted to fractions here, so the library only ever sees fractions.
Bundled load_bundled(std::string_view id);
AnnualSeries load_bundled_series(std::string_view id);
EconomyTable load_bundled_table(std::string_view id);
AgeDistribution load_bundled_age(std::string_view id);

}  // namespace sectorshift
