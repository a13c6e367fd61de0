#include "sectorshift/errors.hpp"

namespace sectorshift {

const char* errc_name(errc code) noexcept {
    switch (code) {
        case errc::missing_deflator: return "MissingDeflator";
        case errc::invalid_deflator: return "InvalidDeflator";
        case errc::non_contiguous_series: return "NonContiguousSeries";
        case errc::invalid_window: return "InvalidWindow";
        case errc::non_positive_value: return "NonPositiveValue";
        case errc::insufficient_data: return "InsufficientData";
        case errc::no_doubling: return "NoDoubling";
        case errc::missing_year: return "MissingYear";
        case errc::insufficient_overlap: return "InsufficientOverlap";
        case errc::degenerate_series: return "DegenerateSeries";
        case errc::degenerate_share: return "DegenerateShare";
        case errc::no_alignment: return "NoAlignment";
        case errc::bin_mismatch: return "BinMismatch";
        case errc::parse_error: return "ParseError";
        case errc::duplicate_year: return "DuplicateYear";
        case errc::invalid_value: return "InvalidValue";
        case errc::invariant_violation: return "InvariantViolation";
        case errc::not_found: return "NotFound";
        case errc::usage_error: return "UsageError";
        case errc::invalid_series: return "InvalidSeries";
    }
    return "Error";
}

bool is_data_error(errc code) noexcept {
    switch (code) {
        case errc::missing_deflator:
        case errc::non_contiguous_series:
        case errc::invalid_window:
        case errc::insufficient_data:
        case errc::missing_year:
        case errc::insufficient_overlap:
        case errc::parse_error:
        case errc::duplicate_year:
        case errc::invalid_value:
        case errc::invariant_violation:
        case errc::not_found:
        case errc::usage_error:
        case errc::invalid_series:
            return true;
        case errc::invalid_deflator:
        case errc::non_positive_value:
        case errc::no_doubling:
        case errc::degenerate_series:
        case errc::degenerate_share:
        case errc::no_alignment:
        case errc::bin_mismatch:
            return false;
    }
    return true;
}

}  // namespace sectorshift
