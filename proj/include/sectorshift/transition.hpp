#pragma once

#include <optional>
#include <string>

#include "sectorshift/series.hpp"

namespace sectorshift {

/// Two-phase piecewise log-linear fit of a real-wage series. The break year
/// belongs to both segments, so a noiseless kink is recovered exactly.
struct PhaseFit {
    int break_year = 0;
    double rate1 = 0.0;  // per-year log slope before the break
    double rate2 = 0.0;  // per-year log slope after the break
    double r1 = 0.0;
    double r2 = 0.0;
    double sse = 0.0;    // total squared log residual over both segments
    int min_segment = 0;
    double fitted1_at_break = 0.0;  // segment fits evaluated at the break year,
    double fitted2_at_break = 0.0;  // in the wage's own units

    double fitted1(int year) const;  // phase-1 trend extended to any year
    double fitted2(int year) const;
};

struct TransitionVerdict {
    bool is_transition = false;
    int break_year = 0;
    double rate1 = 0.0;
    double rate2 = 0.0;
    std::optional<double> agrishare_at_break;  // fraction, when a share series is supplied
    bool agrishare_below_10pct = false;        // informative precondition, never gating
    std::string notes;
};

/// log10(w) = -elasticity * log10(f) + intercept.
struct LogLogFit {
    double elasticity = 0.0;
    double intercept = 0.0;
    double elasticity_stderr = 0.0;
    double intercept_stderr = 0.0;
    double correlation = 0.0;  // r between the two log series (negative for the wage model)
    int n = 0;
};

/// Exhaustive search over break years minimizing total log-space SSE, OLS on
/// each side, ties resolved toward the earliest break after the full scan.
/// Requires positive values and at least 2*min_segment points.
PhaseFit fit_two_phase(const AnnualSeries& wage, int min_segment = 5);

/// A transition needs phase-1 growth at or above growth_floor and phase-2
/// growth at or below stagnation_ceiling. When an agricultural-share series
/// is supplied, its level at the break year (interpolated if bracketed) is
/// reported together with the under-10% flag.
TransitionVerdict classify_transition(const PhaseFit& fit, const AnnualSeries* agrishare = nullptr,
                                      double growth_floor = 0.015,
                                      double stagnation_ceiling = 0.005);

/// OLS of log10(wage) on log10(agrishare) over their common years (at least
/// three); returns the elasticity with the sign convention of the model
/// log w = -a log f + b.
LogLogFit fit_wage_vs_agrishare(const AnnualSeries& wage, const AnnualSeries& agrishare);

}  // namespace sectorshift
