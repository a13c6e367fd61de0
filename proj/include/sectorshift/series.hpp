#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "sectorshift/errors.hpp"

namespace sectorshift {

/// Personal-income measurement concepts. Every ingested income series
/// carries exactly one of these.
enum class IncomeMetric {
    gdp_per_capita,
    gdp_per_employee,
    average_earnings,
    median_earnings,
    manufacturing_worker_wage,
    all_worker_wage,
};

/// Sectoral share concepts (agriculture slice of employment or GDP).
enum class ShareMetric {
    agri_labor_share,
    agri_gdp_share,
};

/// Non-income, non-share series that the toolkit still has to carry
/// (deflators, demographic rates, model outputs).
enum class AuxMetric {
    unspecified,
    gdp_total,
    deflator,
    natural_increase,
    model_index,
    age_distribution,
};

using MetricTag = std::variant<IncomeMetric, ShareMetric, AuxMetric>;

std::string metric_name(const MetricTag& tag);
std::optional<MetricTag> metric_from_name(std::string_view name);
inline bool is_share_metric(const MetricTag& tag) {
    return std::holds_alternative<ShareMetric>(tag);
}

struct AnnualPoint {
    int year = 0;
    double value = 0.0;

    friend bool operator==(const AnnualPoint&, const AnnualPoint&) = default;
};

/// One (year, value) time series for a single country and metric.
/// Years are strictly increasing and all values finite; share series
/// expressed in percent stay within [0, 100], in fractions within [0, 1].
struct AnnualSeries {
    std::string country;  // ISO 3166-1 alpha-3
    MetricTag metric = AuxMetric::unspecified;
    std::string unit;
    std::vector<AnnualPoint> points;
    std::vector<int> interpolated_years;  // filled by interpolate_linear, never by parsing

    std::size_t size() const { return points.size(); }
    bool empty() const { return points.empty(); }
    int first_year() const;
    int last_year() const;
    std::optional<double> value_at(int year) const;
    std::vector<int> years() const;
    std::vector<double> values() const;

    /// Throws Error(invalid_series / invalid_value) when an invariant fails.
    void validate() const;
};

AnnualSeries make_series(std::string country, MetricTag metric, std::string unit,
                         std::vector<AnnualPoint> points);

/// Log-linear trend: value(t) ~ level * exp(rate * (t - reference_year)).
struct TrendFit {
    double rate = 0.0;         // per-year exponent of the natural-log trend
    double level = 0.0;        // fitted value at the reference year
    double rate_stderr = 0.0;  // OLS standard error of the rate
    double correlation = 0.0;  // Pearson r of (year, ln value)
    int reference_year = 0;
    std::optional<double> doubling_time;  // ln 2 / rate, present only for rate > 0
};

struct CorrelationReport {
    double r = 0.0;
    int n = 0;
    double ci_low = -1.0;  // 95% interval via the Fisher z transform
    double ci_high = 1.0;
};

/// Convert a nominal series to constant currency of base_year:
/// out(y) = nominal(y) * deflator(base_year) / deflator(y).
/// The deflator must cover base_year and every year of the nominal series.
AnnualSeries deflate_series(const AnnualSeries& nominal, const AnnualSeries& deflator,
                            int base_year);

/// Centered moving average over an odd window. Output covers only the years
/// where the full window fits; any year gap inside the range is an error.
AnnualSeries moving_average_centered(const AnnualSeries& series, int window);

/// Ordinary least squares of ln(value) on (year - t0). Requires at least
/// three strictly positive points.
TrendFit fit_loglinear(const AnnualSeries& series, int t0);

/// ln 2 / rate under continuous compounding. Throws for rate <= 0.
double doubling_time(double rate);

/// Differences value(y) - value(y - step); the relative variant divides by
/// value(y - step). Every year from the first feasible one onward must have
/// its left endpoint present.
AnnualSeries period_changes(const AnnualSeries& series, int step, bool relative = false);

/// Pearson correlation over the common years of a and b (at least four),
/// with a 95% Fisher-z confidence interval.
CorrelationReport correlate(const AnnualSeries& a, const AnnualSeries& b);

/// Keep only points with lo <= year <= hi.
AnnualSeries restrict_years(const AnnualSeries& series, int lo, int hi);

}  // namespace sectorshift
