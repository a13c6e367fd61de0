#include "sectorshift/transition.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace sectorshift {

namespace {

struct SegmentFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r = 0.0;
    double sse = 0.0;
};

SegmentFit segment_ols(const std::vector<double>& x, const std::vector<double>& y,
                       std::size_t begin, std::size_t end) {  // [begin, end)
    const std::size_t n = end - begin;
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(n);
    ym /= static_cast<double>(n);
    double sxx = 0.0, syy = 0.0, sxy = 0.0;
    for (std::size_t i = begin; i < end; ++i) {
        const double dx = x[i] - xm;
        const double dy = y[i] - ym;
        sxx += dx * dx;
        syy += dy * dy;
        sxy += dx * dy;
    }
    SegmentFit f;
    f.slope = sxy / sxx;
    f.intercept = ym - f.slope * xm;
    f.r = syy > 0.0 ? sxy / std::sqrt(sxx * syy) : 0.0;
    f.sse = std::max(syy - sxy * sxy / sxx, 0.0);
    return f;
}

}  // namespace

double PhaseFit::fitted1(int year) const {
    return fitted1_at_break * std::exp(rate1 * (year - break_year));
}

double PhaseFit::fitted2(int year) const {
    return fitted2_at_break * std::exp(rate2 * (year - break_year));
}

PhaseFit fit_two_phase(const AnnualSeries& wage, int min_segment) {
    if (min_segment < 2) throw Error(errc::usage_error, "min_segment must be at least 2");
    const std::size_t n = wage.size();
    if (n < 2 * static_cast<std::size_t>(min_segment))
        throw Error(errc::insufficient_data, "series shorter than two minimum segments");

    std::vector<double> x, y;
    x.reserve(n);
    y.reserve(n);
    for (const auto& p : wage.points) {
        if (p.value <= 0.0)
            throw Error(errc::non_positive_value,
                        "nonpositive wage at year " + std::to_string(p.year), p.year);
        x.push_back(static_cast<double>(p.year));
        y.push_back(std::log(p.value));
    }

    // The break point is shared: segment 1 is [0, i], segment 2 is [i, n).
    // Full scan first, earliest break on ties (within fp noise).
    const std::size_t lo = static_cast<std::size_t>(min_segment) - 1;
    const std::size_t hi = n - static_cast<std::size_t>(min_segment);
    bool have_best = false;
    PhaseFit best;
    for (std::size_t i = lo; i <= hi; ++i) {
        const SegmentFit f1 = segment_ols(x, y, 0, i + 1);
        const SegmentFit f2 = segment_ols(x, y, i, n);
        const double sse = f1.sse + f2.sse;
        if (!have_best || sse < best.sse - 1e-12 * (1.0 + best.sse)) {
            best.break_year = wage.points[i].year;
            best.rate1 = f1.slope;
            best.rate2 = f2.slope;
            best.r1 = f1.r;
            best.r2 = f2.r;
            best.sse = sse;
            best.fitted1_at_break = std::exp(f1.intercept + f1.slope * x[i]);
            best.fitted2_at_break = std::exp(f2.intercept + f2.slope * x[i]);
            have_best = true;
        }
    }
    best.min_segment = min_segment;
    return best;
}

TransitionVerdict classify_transition(const PhaseFit& fit, const AnnualSeries* agrishare,
                                      double growth_floor, double stagnation_ceiling) {
    if (growth_floor <= stagnation_ceiling)
        throw Error(errc::usage_error, "growth floor must exceed the stagnation ceiling");
    TransitionVerdict v;
    v.break_year = fit.break_year;
    v.rate1 = fit.rate1;
    v.rate2 = fit.rate2;
    v.is_transition = fit.rate1 >= growth_floor && fit.rate2 <= stagnation_ceiling;
    if (agrishare && !agrishare->empty()) {
        std::optional<double> share = agrishare->value_at(fit.break_year);
        if (!share && fit.break_year > agrishare->first_year() &&
            fit.break_year < agrishare->last_year()) {
            // bracketed but not sampled: linear interpolation between neighbors
            const auto& pts = agrishare->points;
            for (std::size_t i = 1; i < pts.size(); ++i) {
                if (pts[i - 1].year < fit.break_year && fit.break_year < pts[i].year) {
                    const double t = static_cast<double>(fit.break_year - pts[i - 1].year) /
                                     static_cast<double>(pts[i].year - pts[i - 1].year);
                    share = pts[i - 1].value + t * (pts[i].value - pts[i - 1].value);
                    break;
                }
            }
        }
        if (share) {
            v.agrishare_at_break = *share;
            v.agrishare_below_10pct = *share < 0.10;
        }
    }
    if (!v.is_transition) {
        v.notes = fit.rate1 < growth_floor ? "phase-1 growth below floor"
                                           : "phase-2 growth above ceiling";
    }
    return v;
}

LogLogFit fit_wage_vs_agrishare(const AnnualSeries& wage, const AnnualSeries& agrishare) {
    std::vector<double> x, y;
    for (const auto& p : wage.points) {
        const auto f = agrishare.value_at(p.year);
        if (!f) continue;
        if (p.value <= 0.0)
            throw Error(errc::non_positive_value,
                        "nonpositive wage at year " + std::to_string(p.year), p.year);
        if (*f <= 0.0)
            throw Error(errc::non_positive_value,
                        "nonpositive share at year " + std::to_string(p.year), p.year);
        x.push_back(std::log10(*f));
        y.push_back(std::log10(p.value));
    }
    if (x.size() < 3)
        throw Error(errc::insufficient_overlap, "need at least 3 common years");
    const SegmentFit f = segment_ols(x, y, 0, x.size());

    LogLogFit out;
    out.n = static_cast<int>(x.size());
    out.elasticity = -f.slope;  // model is log w = -a log f + b
    out.correlation = f.r;
    double xm = 0.0, ym = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        xm += x[i];
        ym += y[i];
    }
    xm /= static_cast<double>(x.size());
    ym /= static_cast<double>(x.size());
    out.intercept = ym - f.slope * xm;
    if (x.size() > 2) {
        double sxx = 0.0;
        for (const double xi : x) sxx += (xi - xm) * (xi - xm);
        const double s2 = f.sse / static_cast<double>(x.size() - 2);
        out.elasticity_stderr = std::sqrt(s2 / sxx);
        out.intercept_stderr = std::sqrt(s2 * (1.0 / static_cast<double>(x.size()) + xm * xm / sxx));
    }
    return out;
}

}  // namespace sectorshift
