#pragma once

#include <optional>
#include <stdexcept>
#include <string>

namespace sectorshift {

/// Failure codes carried by Error. Parse/schema/missing-data codes map to
/// CLI exit 2, math-domain codes on well-formed data map to exit 1.
enum class errc {
    missing_deflator,
    invalid_deflator,
    non_contiguous_series,
    invalid_window,
    non_positive_value,
    insufficient_data,
    no_doubling,
    missing_year,
    insufficient_overlap,
    degenerate_series,
    degenerate_share,
    no_alignment,
    bin_mismatch,
    parse_error,
    duplicate_year,
    invalid_value,
    invariant_violation,
    not_found,
    usage_error,
    invalid_series,
};

const char* errc_name(errc code) noexcept;

/// true when the failure is malformed input, schema drift or missing data
/// (CLI exit 2); false for domain failures of an otherwise valid computation
/// (CLI exit 1).
bool is_data_error(errc code) noexcept;

class Error : public std::runtime_error {
public:
    Error(errc code, const std::string& message, std::optional<long> detail = std::nullopt)
        : std::runtime_error(message), code_(code), detail_(detail) {}

    errc code() const noexcept { return code_; }

    /// Offending year or 1-based line number, when one exists.
    std::optional<long> detail() const noexcept { return detail_; }

private:
    errc code_;
    std::optional<long> detail_;
};

}  // namespace sectorshift
