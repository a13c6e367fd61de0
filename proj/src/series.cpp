#include "sectorshift/series.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace sectorshift {

namespace {

constexpr double kZ95 = 1.959964;  // normal quantile for the 95% interval

struct OlsFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r = 0.0;
    double slope_stderr = 0.0;
    double sse = 0.0;
};

// Centered-sums OLS of y on x; r is 0 when y has no variance.
OlsFit ols(const std::vector<double>& x, const std::vector<double>& y) {
    const std::size_t n = x.size();
    const double xm = std::accumulate(x.begin(), x.end(), 0.0) / static_cast<double>(n);
    const double ym = std::accumulate(y.begin(), y.end(), 0.0) / static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    OlsFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = ym - fit.slope * xm;
    fit.r = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
    fit.sse = std::max(syy - sxy * sxy / sxx, 0.0);
    if (n > 2) fit.slope_stderr = std::sqrt(fit.sse / static_cast<double>(n - 2) / sxx);
    return fit;
}

}  // namespace

std::string metric_name(const MetricTag& tag) {
    if (const auto* m = std::get_if<IncomeMetric>(&tag)) {
        switch (*m) {
            case IncomeMetric::gdp_per_capita: return "gdp_per_capita";
            case IncomeMetric::gdp_per_employee: return "gdp_per_employee";
            case IncomeMetric::average_earnings: return "average_earnings";
            case IncomeMetric::median_earnings: return "median_earnings";
            case IncomeMetric::manufacturing_worker_wage: return "manufacturing_worker_wage";
            case IncomeMetric::all_worker_wage: return "all_worker_wage";
        }
    }
    if (const auto* m = std::get_if<ShareMetric>(&tag)) {
        switch (*m) {
            case ShareMetric::agri_labor_share: return "agri_labor_share";
            case ShareMetric::agri_gdp_share: return "agri_gdp_share";
        }
    }
    switch (std::get<AuxMetric>(tag)) {
        case AuxMetric::unspecified: return "unspecified";
        case AuxMetric::gdp_total: return "gdp_total";
        case AuxMetric::deflator: return "deflator";
        case AuxMetric::natural_increase: return "natural_increase";
        case AuxMetric::model_index: return "model_index";
        case AuxMetric::age_distribution: return "age_distribution";
    }
    return "unspecified";
}

std::optional<MetricTag> metric_from_name(std::string_view name) {
    static const std::map<std::string_view, MetricTag> table = {
        {"gdp_per_capita", IncomeMetric::gdp_per_capita},
        {"gdp_per_employee", IncomeMetric::gdp_per_employee},
        {"average_earnings", IncomeMetric::average_earnings},
        {"median_earnings", IncomeMetric::median_earnings},
        {"manufacturing_worker_wage", IncomeMetric::manufacturing_worker_wage},
        {"all_worker_wage", IncomeMetric::all_worker_wage},
        {"agri_labor_share", ShareMetric::agri_labor_share},
        {"agri_gdp_share", ShareMetric::agri_gdp_share},
        {"unspecified", AuxMetric::unspecified},
        {"gdp_total", AuxMetric::gdp_total},
        {"deflator", AuxMetric::deflator},
        {"natural_increase", AuxMetric::natural_increase},
        {"model_index", AuxMetric::model_index},
        {"age_distribution", AuxMetric::age_distribution},
    };
    const auto it = table.find(name);
    if (it == table.end()) return std::nullopt;
    return it->second;
}

int AnnualSeries::first_year() const {
    if (points.empty()) throw Error(errc::insufficient_data, "empty series has no first year");
    return points.front().year;
}

int AnnualSeries::last_year() const {
    if (points.empty()) throw Error(errc::insufficient_data, "empty series has no last year");
    return points.back().year;
}

std::optional<double> AnnualSeries::value_at(int year) const {
    const auto it = std::lower_bound(points.begin(), points.end(), year,
                                     [](const AnnualPoint& p, int y) { return p.year < y; });
    if (it == points.end() || it->year != year) return std::nullopt;
    return it->value;
}

std::vector<int> AnnualSeries::years() const {
    std::vector<int> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.year);
    return out;
}

std::vector<double> AnnualSeries::values() const {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& p : points) out.push_back(p.value);
    return out;
}

void AnnualSeries::validate() const {
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].value))
            throw Error(errc::invalid_value, "non-finite value at year " + std::to_string(points[i].year),
                        points[i].year);
        if (i > 0 && points[i].year <= points[i - 1].year)
            throw Error(errc::invalid_series,
                        "years not strictly increasing at " + std::to_string(points[i].year),
                        points[i].year);
    }
    if (is_share_metric(metric)) {
        const bool percent = unit.find("percent") != std::string::npos;
        const double hi = percent ? 100.0 : 1.0;
        for (const auto& p : points) {
            if (p.value < 0.0 || p.value > hi)
                throw Error(errc::invalid_value,
                            "share value out of range at year " + std::to_string(p.year), p.year);
        }
    }
}

AnnualSeries make_series(std::string country, MetricTag metric, std::string unit,
                         std::vector<AnnualPoint> points) {
    AnnualSeries s;
    s.country = std::move(country);
    s.metric = metric;
    s.unit = std::move(unit);
    s.points = std::move(points);
    s.validate();
    return s;
}

AnnualSeries deflate_series(const AnnualSeries& nominal, const AnnualSeries& deflator,
                            int base_year) {
    const auto base = deflator.value_at(base_year);
    if (!base)
        throw Error(errc::missing_deflator, "deflator missing base year " + std::to_string(base_year),
                    base_year);
    if (*base <= 0.0)
        throw Error(errc::invalid_deflator, "nonpositive deflator at base year", base_year);

    AnnualSeries out = nominal;
    for (auto& p : out.points) {
        const auto d = deflator.value_at(p.year);
        if (!d)
            throw Error(errc::missing_deflator, "deflator missing year " + std::to_string(p.year),
                        p.year);
        if (*d <= 0.0)
            throw Error(errc::invalid_deflator, "nonpositive deflator at year " + std::to_string(p.year),
                        p.year);
        p.value = p.value * *base / *d;
    }
    const std::string year_str = std::to_string(base_year);
    if (const auto pos = out.unit.find("current"); pos != std::string::npos)
        out.unit.replace(pos, 7, year_str);
    else if (!out.unit.empty())
        out.unit = year_str + " " + out.unit;
    else
        out.unit = year_str + " constant";
    return out;
}

AnnualSeries moving_average_centered(const AnnualSeries& series, int window) {
    if (window < 1 || window % 2 == 0)
        throw Error(errc::invalid_window, "window must be odd and >= 1");
    const std::size_t n = series.size();
    if (n < static_cast<std::size_t>(window))
        throw Error(errc::insufficient_data, "series shorter than the window");
    for (std::size_t i = 1; i < n; ++i) {
        if (series.points[i].year != series.points[i - 1].year + 1)
            throw Error(errc::non_contiguous_series,
                        "year gap before " + std::to_string(series.points[i].year),
                        series.points[i].year);
    }
    AnnualSeries out = series;
    out.points.clear();
    const int half = window / 2;
    double sum = 0.0;
    for (int i = 0; i < window; ++i) sum += series.points[static_cast<std::size_t>(i)].value;
    for (std::size_t c = static_cast<std::size_t>(half); c + static_cast<std::size_t>(half) < n; ++c) {
        out.points.push_back({series.points[c].year, sum / window});
        if (c + static_cast<std::size_t>(half) + 1 < n)
            sum += series.points[c + half + 1].value - series.points[c - half].value;
    }
    return out;
}

TrendFit fit_loglinear(const AnnualSeries& series, int t0) {
    if (series.size() < 3)
        throw Error(errc::insufficient_data, "log-linear fit needs at least 3 points");
    std::vector<double> x, y;
    x.reserve(series.size());
    y.reserve(series.size());
    for (const auto& p : series.points) {
        if (p.value <= 0.0)
            throw Error(errc::non_positive_value,
                        "nonpositive value at year " + std::to_string(p.year), p.year);
        x.push_back(static_cast<double>(p.year - t0));
        y.push_back(std::log(p.value));
    }
    const OlsFit f = ols(x, y);
    TrendFit fit;
    fit.rate = f.slope;
    fit.level = std::exp(f.intercept);
    fit.rate_stderr = f.slope_stderr;
    fit.correlation = f.r;
    fit.reference_year = t0;
    if (f.slope > 0.0) fit.doubling_time = std::log(2.0) / f.slope;
    return fit;
}

double doubling_time(double rate) {
    if (rate <= 0.0) throw Error(errc::no_doubling, "no doubling for a nonpositive rate");
    return std::log(2.0) / rate;
}

AnnualSeries period_changes(const AnnualSeries& series, int step, bool relative) {
    if (step < 1) throw Error(errc::usage_error, "step must be positive");
    if (series.empty()) throw Error(errc::insufficient_data, "empty series");
    AnnualSeries out = series;
    out.points.clear();
    out.unit = relative ? "relative change over " + std::to_string(step) + " years"
                        : "change over " + std::to_string(step) + " years";
    const int first = series.first_year();
    for (const auto& p : series.points) {
        if (p.year < first + step) continue;
        const auto prev = series.value_at(p.year - step);
        if (!prev)
            throw Error(errc::missing_year,
                        "missing left endpoint " + std::to_string(p.year - step), p.year - step);
        if (relative) {
            if (*prev == 0.0)
                throw Error(errc::invalid_value, "relative change over a zero base", p.year - step);
            out.points.push_back({p.year, (p.value - *prev) / *prev});
        } else {
            out.points.push_back({p.year, p.value - *prev});
        }
    }
    return out;
}

CorrelationReport correlate(const AnnualSeries& a, const AnnualSeries& b) {
    std::vector<double> xs, ys;
    for (const auto& p : a.points) {
        if (const auto v = b.value_at(p.year)) {
            xs.push_back(p.value);
            ys.push_back(*v);
        }
    }
    const int n = static_cast<int>(xs.size());
    if (n < 4) throw Error(errc::insufficient_overlap, "need at least 4 common years");
    const double xm = std::accumulate(xs.begin(), xs.end(), 0.0) / n;
    const double ym = std::accumulate(ys.begin(), ys.end(), 0.0) / n;
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (int i = 0; i < n; ++i) {
        const double dx = xs[static_cast<std::size_t>(i)] - xm;
        const double dy = ys[static_cast<std::size_t>(i)] - ym;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    if (sxx == 0.0 || syy == 0.0)
        throw Error(errc::degenerate_series, "zero variance over the common years");
    CorrelationReport rep;
    rep.n = n;
    rep.r = std::clamp(sxy / std::sqrt(sxx * syy), -1.0, 1.0);
    const double z = std::atanh(rep.r);
    const double half = kZ95 / std::sqrt(static_cast<double>(n - 3));
    rep.ci_low = std::tanh(z - half);
    rep.ci_high = std::tanh(z + half);
    return rep;
}

AnnualSeries restrict_years(const AnnualSeries& series, int lo, int hi) {
    AnnualSeries out = series;
    out.points.clear();
    for (const auto& p : series.points)
        if (p.year >= lo && p.year <= hi) out.points.push_back(p);
    return out;
}

}  // namespace sectorshift
