#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sectorshift/series.hpp"

namespace sectorshift {

/// Projection of an agricultural employment share obtained by replaying an
/// analog country's decline from the matching share level.
struct ShareForecast {
    std::string country;
    int anchor_year = 0;  // target's last observed year
    std::vector<AnnualPoint> values;  // share fractions for anchor_year+1 .. horizon
    std::string analog_country;
    int analog_alignment_year = 0;
    bool analog_exhausted = false;  // analog ran out before the horizon; held flat

    std::optional<double> at(int year) const;
};

/// Scenario inputs for the wage-growth band, all in percent per year.
struct ScenarioSpec {
    double baseline_growth = 8.2;  // long-run GDP-per-capita trend
    double healthcare_drag = 2.2;  // productivity loss from an over-extended care sector
    double nonsalary_drift = 2.0;  // widening non-salary slice of income

    void validate() const;
};

struct WageBand {
    double low = 0.0;   // percent per year
    double high = 0.0;
};

struct AgeBin {
    int age_low = 0;
    int age_high = 0;
    double percent = 0.0;

    friend bool operator==(const AgeBin&, const AgeBin&) = default;
};

/// Population age distribution for one year; bin percents sum to 100 +- 0.1.
struct AgeDistribution {
    int year = 0;
    std::string scope;  // rural / urban / total
    std::vector<AgeBin> bins;

    void validate() const;
};

/// How the analog's decline is replayed onto the target.
enum class DecrementMode {
    absolute_points,  // copy year-over-year share-point changes
    proportional,     // copy year-over-year ratios
};

/// Align the analog at the year whose share is closest to the target's last
/// observed level, then append the analog's subsequent year-over-year
/// decrements (absolute share points by default), flooring at 0.5%, until
/// horizon_year. Both series must hold share fractions.
ShareForecast extrapolate_share_analog(const AnnualSeries& target, const AnnualSeries& analog,
                                       int horizon_year,
                                       DecrementMode mode = DecrementMode::absolute_points);

/// high = baseline - healthcare_drag, low = high - nonsalary_drift.
WageBand forecast_wage_band(const ScenarioSpec& spec);

/// Per-bin linear extrapolation through distributions a and b, negatives
/// clamped to 0.1 percent, then renormalized to sum exactly 100.
AgeDistribution project_age_distribution(const AgeDistribution& a, const AgeDistribution& b,
                                         int target_year);

}  // namespace sectorshift
