#include "sectorshift/forecast.hpp"

#include <algorithm>
#include <cmath>

namespace sectorshift {

namespace {
constexpr double kShareFloor = 0.005;   // projected shares never fall below 0.5%
constexpr double kBinFloor = 0.1;       // percent; keeps log-scale plots finite
}  // namespace

std::optional<double> ShareForecast::at(int year) const {
    for (const auto& p : values)
        if (p.year == year) return p.value;
    return std::nullopt;
}

void ScenarioSpec::validate() const {
    if (baseline_growth < 0.0 || healthcare_drag < 0.0 || nonsalary_drift < 0.0)
        throw Error(errc::usage_error, "scenario components must be nonnegative");
    if (baseline_growth <= healthcare_drag + nonsalary_drift)
        throw Error(errc::usage_error, "baseline growth must exceed the combined drags");
}

void AgeDistribution::validate() const {
    double sum = 0.0;
    for (std::size_t i = 0; i < bins.size(); ++i) {
        const auto& b = bins[i];
        if (b.percent < 0.0 || !std::isfinite(b.percent))
            throw Error(errc::invalid_value, "negative bin percent");
        if (b.age_high < b.age_low)
            throw Error(errc::invalid_value, "bin bounds reversed");
        if (i > 0 && b.age_low <= bins[i - 1].age_low)
            throw Error(errc::invalid_value, "bins not ordered");
        sum += b.percent;
    }
    if (std::abs(sum - 100.0) > 0.1)
        throw Error(errc::invalid_value, "bin percents must sum to 100 +- 0.1");
}

ShareForecast extrapolate_share_analog(const AnnualSeries& target, const AnnualSeries& analog,
                                       int horizon_year, DecrementMode mode) {
    if (target.empty() || analog.size() < 2)
        throw Error(errc::insufficient_data, "need a target point and at least two analog points");
    for (const auto& p : analog.points)
        if (p.value <= 0.0 || p.value > 1.0)
            throw Error(errc::invalid_series, "analog shares must be fractions in (0, 1]");
    const double last_share = target.points.back().value;
    if (last_share <= 0.0 || last_share > 1.0)
        throw Error(errc::invalid_series, "target shares must be fractions in (0, 1]");

    double analog_min = 1.0;
    for (const auto& p : analog.points) analog_min = std::min(analog_min, p.value);
    if (last_share < analog_min)
        throw Error(errc::no_alignment, "target share below the analog's entire range");

    // Align where the analog's level matches the target's last observation.
    int align_year = analog.first_year();
    double best_gap = std::abs(analog.points.front().value - last_share);
    for (const auto& p : analog.points) {
        const double gap = std::abs(p.value - last_share);
        if (gap < best_gap) {
            best_gap = gap;
            align_year = p.year;
        }
    }

    ShareForecast fc;
    fc.country = target.country;
    fc.anchor_year = target.last_year();
    fc.analog_country = analog.country;
    fc.analog_alignment_year = align_year;

    double level = last_share;
    for (int year = fc.anchor_year + 1; year <= horizon_year; ++year) {
        const int analog_year = align_year + (year - fc.anchor_year);
        const auto cur = analog.value_at(analog_year);
        const auto prev = analog.value_at(analog_year - 1);
        if (cur && prev) {
            level = mode == DecrementMode::absolute_points ? level + (*cur - *prev)
                                                           : level * (*cur / *prev);
        } else {
            fc.analog_exhausted = true;  // held flat past the analog's record
        }
        level = std::max(kShareFloor, level);
        fc.values.push_back({year, level});
    }
    return fc;
}

WageBand forecast_wage_band(const ScenarioSpec& spec) {
    spec.validate();
    WageBand band;
    band.high = spec.baseline_growth - spec.healthcare_drag;
    band.low = band.high - spec.nonsalary_drift;
    return band;
}

AgeDistribution project_age_distribution(const AgeDistribution& a, const AgeDistribution& b,
                                         int target_year) {
    if (a.year >= b.year)
        throw Error(errc::usage_error, "distributions must be in increasing year order");
    if (a.bins.size() != b.bins.size())
        throw Error(errc::bin_mismatch, "bin counts differ");
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
        if (a.bins[i].age_low != b.bins[i].age_low || a.bins[i].age_high != b.bins[i].age_high)
            throw Error(errc::bin_mismatch, "bin boundaries differ");
    }
    const double t = static_cast<double>(target_year - b.year) / static_cast<double>(b.year - a.year);
    AgeDistribution out;
    out.year = target_year;
    out.scope = b.scope;
    double sum = 0.0;
    for (std::size_t i = 0; i < a.bins.size(); ++i) {
        double v = b.bins[i].percent + (b.bins[i].percent - a.bins[i].percent) * t;
        v = std::max(v, kBinFloor);
        out.bins.push_back({a.bins[i].age_low, a.bins[i].age_high, v});
        sum += v;
    }
    for (auto& bin : out.bins) bin.percent *= 100.0 / sum;
    return out;
}

}  // namespace sectorshift
