#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "sectorshift/series.hpp"

using namespace sectorshift;

namespace {

AnnualSeries series(std::vector<AnnualPoint> pts, MetricTag metric = AuxMetric::unspecified,
                    std::string unit = "") {
    return make_series("TST", metric, std::move(unit), std::move(pts));
}

AnnualSeries exponential(double level, double rate, int t0, int n) {
    std::vector<AnnualPoint> pts;
    for (int i = 0; i < n; ++i)
        pts.push_back({t0 + i, level * std::exp(rate * i)});
    return series(std::move(pts));
}

}  // namespace

TEST_CASE("deflation reproduces the nominal-to-constant conversion") {
    const auto nominal = series({{1990, 1866.0}, {2015, 67000.0}}, AuxMetric::gdp_total,
                                "billion of current RMB");
    const auto deflator = series({{1990, 12.0}, {2015, 42.0}}, AuxMetric::deflator, "index");
    const auto real = deflate_series(nominal, deflator, 2015);
    CHECK(real.value_at(1990) == doctest::Approx(6531.0).epsilon(1e-12));
    CHECK(std::llround(*real.value_at(1990)) == 6531);
    CHECK(real.value_at(2015) == doctest::Approx(67000.0));
    CHECK(real.unit == "billion of 2015 RMB");
}

TEST_CASE("deflation identity and exact-factor cases") {
    const auto nominal = series({{2000, 100.0}, {2001, 110.0}, {2002, 121.0}});
    const auto flat = series({{2000, 7.0}, {2001, 7.0}, {2002, 7.0}});
    const auto out = deflate_series(nominal, flat, 2001);
    for (const auto& p : nominal.points) CHECK(out.value_at(p.year) == doctest::Approx(p.value));

    const auto one = series({{2000, 100.0}});
    const auto defl = series({{2000, 50.0}, {2010, 100.0}});
    CHECK(*deflate_series(one, defl, 2010).value_at(2000) == doctest::Approx(200.0));
}

TEST_CASE("deflation error paths") {
    const auto nominal = series({{2000, 100.0}, {2001, 100.0}});
    const auto partial = series({{2000, 50.0}});
    CHECK_THROWS_WITH_AS(deflate_series(nominal, partial, 2000), doctest::Contains("2001"), Error);
    try {
        deflate_series(nominal, partial, 2001);
        FAIL("expected MissingDeflator");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_deflator);
        CHECK(e.detail() == 2001);
    }
    const auto bad = series({{2000, -1.0}, {2001, 2.0}});
    try {
        deflate_series(nominal, bad, 2001);
        FAIL("expected InvalidDeflator");
    } catch (const Error& e) {
        CHECK(e.code() == errc::invalid_deflator);
    }
}

TEST_CASE("deflation is scale invariant") {
    std::mt19937 rng(421);
    std::uniform_real_distribution<double> unif(0.2, 5.0);
    const auto nominal = series({{2000, 100.0}, {2001, 130.0}, {2002, 80.0}});
    const auto deflator = series({{2000, 10.0}, {2001, 12.0}, {2002, 9.0}});
    const auto base = deflate_series(nominal, deflator, 2001);
    for (int trial = 0; trial < 50; ++trial) {
        const double c = unif(rng), cprime = unif(rng);
        auto nom2 = nominal;
        auto def2 = deflator;
        for (auto& p : nom2.points) p.value *= c;
        for (auto& p : def2.points) p.value *= cprime;
        const auto scaled = deflate_series(nom2, def2, 2001);
        for (const auto& p : base.points) {
            const double got = *scaled.value_at(p.year) / c;
            CHECK(std::abs(got - p.value) <= 1e-12 * std::abs(p.value));
        }
    }
}

TEST_CASE("centered moving average matches hand-computed window means") {
    // brute-force oracle over the worked 7-point example
    const auto s = series({{1, 1}, {2, 2}, {3, 3}, {4, 4}, {5, 5}, {6, 6}, {7, 7}});
    const auto ma = moving_average_centered(s, 5);
    REQUIRE(ma.size() == 3);
    for (std::size_t c = 0; c < 3; ++c) {
        double mean = 0.0;
        for (std::size_t k = 0; k < 5; ++k) mean += s.points[c + k].value;
        mean /= 5.0;
        CHECK(ma.points[c].year == s.points[c + 2].year);
        CHECK(ma.points[c].value == doctest::Approx(mean));
        CHECK(ma.points[c].value == doctest::Approx(static_cast<double>(c + 3)));
    }
}

TEST_CASE("moving average: constants, window one, errors") {
    const auto flat = series({{1, 4.0}, {2, 4.0}, {3, 4.0}, {4, 4.0}, {5, 4.0}, {6, 4.0}});
    const auto ma = moving_average_centered(flat, 5);
    for (const auto& p : ma.points) CHECK(p.value == doctest::Approx(4.0));

    const auto id = moving_average_centered(flat, 1);
    REQUIRE(id.size() == flat.size());
    for (std::size_t i = 0; i < id.size(); ++i) CHECK(id.points[i].value == flat.points[i].value);

    CHECK_THROWS_AS(moving_average_centered(flat, 4), Error);
    const auto gappy = series({{1, 1.0}, {2, 1.0}, {4, 1.0}, {5, 1.0}, {6, 1.0}});
    try {
        moving_average_centered(gappy, 3);
        FAIL("expected NonContiguousSeries");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_contiguous_series);
    }
}

TEST_CASE("moving average commutes with affine maps") {
    std::mt19937 rng(77);
    std::uniform_real_distribution<double> unif(-3.0, 3.0);
    std::vector<AnnualPoint> pts;
    for (int y = 1950; y < 1975; ++y) pts.push_back({y, 10.0 + unif(rng)});
    const auto s = series(pts);
    const auto ma = moving_average_centered(s, 7);
    const double a = 2.5, b = -4.0;
    auto mapped = s;
    for (auto& p : mapped.points) p.value = a * p.value + b;
    const auto ma2 = moving_average_centered(mapped, 7);
    for (std::size_t i = 0; i < ma.size(); ++i)
        CHECK(ma2.points[i].value == doctest::Approx(a * ma.points[i].value + b).epsilon(1e-12));
}

TEST_CASE("log-linear fit reproduces the sector productivity exponents") {
    const auto p1 = series({{1990, 5342}, {1995, 7434}, {2000, 7547},
                            {2005, 10150}, {2010, 20030}, {2015, 24210}});
    const auto f1 = fit_loglinear(p1, 1990);
    CHECK(f1.rate == doctest::Approx(0.0618608748).epsilon(1e-8));
    CHECK(f1.correlation == doctest::Approx(0.9645383975).epsilon(1e-8));
    CHECK(f1.level == doctest::Approx(4923.9935).epsilon(1e-6));
    // the published +-0.016 band is twice the OLS standard error
    CHECK(2.0 * f1.rate_stderr == doctest::Approx(0.016928).epsilon(1e-3));
    CHECK(std::abs(f1.rate - 0.062) < 0.001);

    const auto p2 = series({{1990, 15380}, {1995, 27323}, {2000, 42189},
                            {2005, 60273}, {2010, 75394}, {2015, 108875}});
    const auto f2 = fit_loglinear(p2, 1990);
    CHECK(f2.rate == doctest::Approx(0.0753564780).epsilon(1e-8));
    CHECK(f2.correlation == doctest::Approx(0.9894680385).epsilon(1e-8));
    CHECK(2.0 * f2.rate_stderr == doctest::Approx(0.011024).epsilon(1e-3));
    CHECK(std::abs(f2.rate - 0.075) < 0.001);
    REQUIRE(f2.doubling_time.has_value());
    CHECK(*f2.doubling_time == doctest::Approx(9.198243).epsilon(1e-6));
}

TEST_CASE("log-linear fit recovers noiseless exponentials exactly") {
    std::mt19937 rng(2024);
    std::uniform_real_distribution<double> level(0.5, 2000.0);
    std::uniform_real_distribution<double> rate(-0.1, 0.12);
    std::uniform_int_distribution<int> t0(1850, 2000);
    std::uniform_int_distribution<int> len(4, 60);
    for (int trial = 0; trial < 100; ++trial) {
        const double A = level(rng), a = rate(rng);
        const int ref = t0(rng), n = len(rng);
        const auto fit = fit_loglinear(exponential(A, a, ref, n), ref);
        CHECK(std::abs(fit.rate - a) <= 1e-10 * std::max(1.0, std::abs(a)));
        CHECK(std::abs(fit.level - A) <= 1e-10 * A);
        CHECK(std::abs(std::abs(fit.correlation) - 1.0) <= 1e-12);
    }
}

TEST_CASE("log-linear fit error paths and the flat series") {
    const auto flat = series({{2000, 5.0}, {2001, 5.0}, {2002, 5.0}});
    const auto fit = fit_loglinear(flat, 2000);
    CHECK(fit.rate == doctest::Approx(0.0));
    CHECK(fit.correlation == doctest::Approx(0.0));
    CHECK_FALSE(fit.doubling_time.has_value());

    CHECK_THROWS_AS(fit_loglinear(series({{2000, 1.0}, {2001, 2.0}}), 2000), Error);
    try {
        fit_loglinear(series({{2000, 1.0}, {2001, -2.0}, {2002, 3.0}}), 2000);
        FAIL("expected NonPositiveValue");
    } catch (const Error& e) {
        CHECK(e.code() == errc::non_positive_value);
        CHECK(e.detail() == 2001);
    }
}

TEST_CASE("doubling time conventions") {
    CHECK(doubling_time(0.075) == doctest::Approx(9.241962).epsilon(1e-6));
    CHECK(doubling_time(0.062) == doctest::Approx(11.179793).epsilon(1e-6));
    CHECK(doubling_time(std::log(2.0)) == doctest::Approx(1.0));
    CHECK_THROWS_AS(doubling_time(0.0), Error);
    CHECK_THROWS_AS(doubling_time(-0.01), Error);
}

TEST_CASE("doubling time halves when the log slope doubles") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> rate(0.01, 0.2);
    for (int trial = 0; trial < 20; ++trial) {
        const double a = rate(rng);
        const auto f1 = fit_loglinear(exponential(3.0, a, 1980, 12), 1980);
        const auto f2 = fit_loglinear(exponential(3.0, 2 * a, 1980, 12), 1980);
        CHECK(*f2.doubling_time == doctest::Approx(*f1.doubling_time / 2.0).epsilon(1e-9));
    }
}

TEST_CASE("period changes, absolute and relative") {
    const auto flat = series({{1900, 3.0}, {1910, 3.0}, {1920, 3.0}});
    for (const auto& p : period_changes(flat, 10).points) CHECK(p.value == doctest::Approx(0.0));

    const auto two = series({{1900, 10.0}, {1910, 12.0}});
    const auto abs_changes = period_changes(two, 10);
    REQUIRE(abs_changes.size() == 1);
    CHECK(abs_changes.points[0].year == 1910);
    CHECK(abs_changes.points[0].value == doctest::Approx(2.0));

    const auto rel = period_changes(two, 10, true);
    CHECK(rel.points[0].value == doctest::Approx((12.0 - 10.0) / 10.0));

    const auto gappy = series({{1900, 1.0}, {1910, 2.0}, {1925, 3.0}});
    try {
        period_changes(gappy, 10);
        FAIL("expected MissingYear");
    } catch (const Error& e) {
        CHECK(e.code() == errc::missing_year);
        CHECK(e.detail() == 1915);
    }
}

namespace {

// independent Fisher-z oracle
std::pair<double, double> fisher_ci(double r, int n) {
    const double z = std::atanh(r);
    const double half = 1.959964 / std::sqrt(static_cast<double>(n - 3));
    return {std::tanh(z - half), std::tanh(z + half)};
}

// two length-n series whose Pearson correlation is rho to machine precision
std::pair<AnnualSeries, AnnualSeries> correlated_pair(double rho, int n) {
    std::vector<double> u(n), z(n);
    double usum = 0.0;
    for (int i = 0; i < n; ++i) {
        u[static_cast<std::size_t>(i)] = i;
        usum += i;
    }
    const double umean = usum / n;
    double unorm = 0.0;
    for (auto& v : u) {
        v -= umean;
        unorm += v * v;
    }
    unorm = std::sqrt(unorm);
    for (auto& v : u) v /= unorm;
    double zmean = 0.0;
    for (int i = 0; i < n; ++i) {
        z[static_cast<std::size_t>(i)] = static_cast<double>(i) * i;
        zmean += z[static_cast<std::size_t>(i)];
    }
    zmean /= n;
    double dot = 0.0;
    for (int i = 0; i < n; ++i) {
        z[static_cast<std::size_t>(i)] -= zmean;
        dot += z[static_cast<std::size_t>(i)] * u[static_cast<std::size_t>(i)];
    }
    double znorm = 0.0;
    for (int i = 0; i < n; ++i) {
        z[static_cast<std::size_t>(i)] -= dot * u[static_cast<std::size_t>(i)];
        znorm += z[static_cast<std::size_t>(i)] * z[static_cast<std::size_t>(i)];
    }
    znorm = std::sqrt(znorm);
    std::vector<AnnualPoint> pa, pb;
    for (int i = 0; i < n; ++i) {
        const double y = rho * u[static_cast<std::size_t>(i)] +
                         std::sqrt(1.0 - rho * rho) * z[static_cast<std::size_t>(i)] / znorm;
        pa.push_back({1900 + 10 * i, static_cast<double>(i)});
        pb.push_back({1900 + 10 * i, y});
    }
    return {make_series("TST", AuxMetric::unspecified, "", pa),
            make_series("TST", AuxMetric::unspecified, "", pb)};
}

}  // namespace

TEST_CASE("correlation and the Fisher interval at r=0.64, n=11") {
    const auto [a, b] = correlated_pair(0.64, 11);
    const auto rep = correlate(a, b);
    CHECK(rep.n == 11);
    CHECK(rep.r == doctest::Approx(0.64).epsilon(1e-12));
    const auto [lo, hi] = fisher_ci(rep.r, rep.n);
    CHECK(rep.ci_low == doctest::Approx(lo).epsilon(1e-12));
    CHECK(rep.ci_high == doctest::Approx(hi).epsilon(1e-12));
    CHECK(rep.ci_low == doctest::Approx(0.065130).epsilon(5e-4));
    CHECK(rep.ci_high == doctest::Approx(0.895915).epsilon(5e-4));
    CHECK(rep.ci_low <= rep.r);
    CHECK(rep.r <= rep.ci_high);
}

TEST_CASE("correlation degenerate directions") {
    const auto a = series({{1, 1.0}, {2, 3.0}, {3, 2.0}, {4, 5.0}, {5, 4.0}});
    const auto self = correlate(a, a);
    CHECK(self.r == doctest::Approx(1.0));
    auto neg = a;
    for (auto& p : neg.points) p.value = -p.value + 10.0;
    CHECK(correlate(a, neg).r == doctest::Approx(-1.0));

    const auto shorty = series({{1, 1.0}, {2, 2.0}, {3, 3.0}});
    CHECK_THROWS_AS(correlate(shorty, shorty), Error);
    const auto flat = series({{1, 2.0}, {2, 2.0}, {3, 2.0}, {4, 2.0}, {5, 2.0}});
    try {
        correlate(a, flat);
        FAIL("expected DegenerateSeries");
    } catch (const Error& e) {
        CHECK(e.code() == errc::degenerate_series);
    }
}

TEST_CASE("correlation is invariant under positive affine transforms") {
    std::mt19937 rng(99);
    std::uniform_real_distribution<double> scale(0.1, 8.0);
    std::uniform_real_distribution<double> shift(-50.0, 50.0);
    const auto [a, b] = correlated_pair(0.37, 16);
    const double base = correlate(a, b).r;
    for (int trial = 0; trial < 30; ++trial) {
        auto a2 = a;
        auto b2 = b;
        const double sa = scale(rng), sb = scale(rng), ta = shift(rng), tb = shift(rng);
        for (auto& p : a2.points) p.value = sa * p.value + ta;
        for (auto& p : b2.points) p.value = sb * p.value + tb;
        CHECK(std::abs(correlate(a2, b2).r - base) <= 1e-12);
    }
}

TEST_CASE("restricting to a year window keeps only interior points") {
    const auto s = series({{1900, 1.0}, {1910, 2.0}, {1920, 3.0}, {1930, 4.0}});
    const auto cut = restrict_years(s, 1905, 1925);
    REQUIRE(cut.size() == 2);
    CHECK(cut.first_year() == 1910);
    CHECK(cut.last_year() == 1920);
    CHECK(restrict_years(s, 1940, 1950).empty());
}

TEST_CASE("series invariants are enforced") {
    CHECK_THROWS_AS(series({{2000, 1.0}, {2000, 2.0}}), Error);
    CHECK_THROWS_AS(series({{2001, 1.0}, {2000, 2.0}}), Error);
    CHECK_THROWS_AS(make_series("TST", ShareMetric::agri_labor_share, "percent of labor force",
                                {{2000, 140.0}}),
                    Error);
    const auto ok = make_series("TST", ShareMetric::agri_labor_share, "percent of labor force",
                                {{2000, 41.0}});
    CHECK(ok.size() == 1);
}
