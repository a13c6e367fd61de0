#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include "sectorshift/forecast.hpp"
#include "sectorshift/ingest.hpp"
#include "sectorshift/series.hpp"
#include "sectorshift/transfer.hpp"
#include "sectorshift/transition.hpp"

namespace py = pybind11;
using namespace sectorshift;

namespace {

// Python-side series construction from plain (year, value) pairs.
AnnualSeries series_from_pairs(const std::vector<std::pair<int, double>>& pairs,
                               const std::string& country, const std::string& metric,
                               const std::string& unit) {
    std::vector<AnnualPoint> pts;
    pts.reserve(pairs.size());
    for (const auto& [y, v] : pairs) pts.push_back({y, v});
    const auto tag = metric_from_name(metric);
    if (!tag) throw Error(errc::usage_error, "unknown metric '" + metric + "'");
    return make_series(country, *tag, unit, std::move(pts));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "two-sector structural-transformation toolkit";

    py::register_exception<Error>(m, "SectorshiftError");

    py::class_<AnnualPoint>(m, "AnnualPoint")
        .def(py::init<int, double>(), py::arg("year"), py::arg("value"))
        .def_readwrite("year", &AnnualPoint::year)
        .def_readwrite("value", &AnnualPoint::value)
        .def("__repr__", [](const AnnualPoint& p) {
            return "AnnualPoint(" + std::to_string(p.year) + ", " + std::to_string(p.value) + ")";
        });

    py::class_<AnnualSeries>(m, "AnnualSeries")
        .def(py::init(&series_from_pairs), py::arg("points"), py::arg("country") = "",
             py::arg("metric") = "unspecified", py::arg("unit") = "")
        .def_readwrite("country", &AnnualSeries::country)
        .def_readwrite("unit", &AnnualSeries::unit)
        .def_readwrite("points", &AnnualSeries::points)
        .def_readonly("interpolated_years", &AnnualSeries::interpolated_years)
        .def_property("metric",
                      [](const AnnualSeries& s) { return metric_name(s.metric); },
                      [](AnnualSeries& s, const std::string& name) {
                          const auto tag = metric_from_name(name);
                          if (!tag) throw Error(errc::usage_error, "unknown metric '" + name + "'");
                          s.metric = *tag;
                      })
        .def("years", &AnnualSeries::years)
        .def("values", &AnnualSeries::values)
        .def("value_at", &AnnualSeries::value_at)
        .def("__len__", &AnnualSeries::size);

    py::class_<TrendFit>(m, "TrendFit")
        .def_readonly("rate", &TrendFit::rate)
        .def_readonly("level", &TrendFit::level)
        .def_readonly("rate_stderr", &TrendFit::rate_stderr)
        .def_readonly("correlation", &TrendFit::correlation)
        .def_readonly("reference_year", &TrendFit::reference_year)
        .def_readonly("doubling_time", &TrendFit::doubling_time);

    py::class_<CorrelationReport>(m, "CorrelationReport")
        .def_readonly("r", &CorrelationReport::r)
        .def_readonly("n", &CorrelationReport::n)
        .def_readonly("ci_low", &CorrelationReport::ci_low)
        .def_readonly("ci_high", &CorrelationReport::ci_high);

    py::class_<EconomyYear>(m, "EconomyYear")
        .def(py::init([](int year, double gdp, double employment, double agri_gdp,
                         double agri_employment) {
                 EconomyYear y{year, gdp, employment, agri_gdp, agri_employment};
                 y.validate();
                 return y;
             }),
             py::arg("year"), py::arg("gdp"), py::arg("employment"), py::arg("agri_gdp"),
             py::arg("agri_employment"))
        .def_readonly("year", &EconomyYear::year)
        .def_readonly("gdp", &EconomyYear::gdp)
        .def_readonly("employment", &EconomyYear::employment)
        .def_readonly("agri_gdp", &EconomyYear::agri_gdp)
        .def_readonly("agri_employment", &EconomyYear::agri_employment)
        .def("agri_gdp_share", &EconomyYear::agri_gdp_share)
        .def("agri_employment_share", &EconomyYear::agri_employment_share);

    py::class_<ProductivityState>(m, "ProductivityState")
        .def_readonly("overall", &ProductivityState::overall)
        .def_readonly("agri", &ProductivityState::agri)
        .def_readonly("rest", &ProductivityState::rest)
        .def_readonly("multiplier", &ProductivityState::multiplier);

    py::class_<TransferResult>(m, "TransferResult")
        .def_readonly("year_from", &TransferResult::year_from)
        .def_readonly("year_to", &TransferResult::year_to)
        .def_readonly("share_shift", &TransferResult::share_shift)
        .def_readonly("transferred_workers", &TransferResult::transferred_workers)
        .def_readonly("multiplier", &TransferResult::multiplier)
        .def_readonly("predicted_gdp_change", &TransferResult::predicted_gdp_change)
        .def_readonly("observed_gdp_change", &TransferResult::observed_gdp_change)
        .def_readonly("attribution_fraction", &TransferResult::attribution_fraction)
        .def_readonly("non_positive_growth", &TransferResult::non_positive_growth);

    py::class_<GapModel>(m, "GapModel")
        .def_readonly("agri_level", &GapModel::agri_level)
        .def_readonly("rest_level", &GapModel::rest_level)
        .def_readonly("agri_rate", &GapModel::agri_rate)
        .def_readonly("rest_rate", &GapModel::rest_rate)
        .def_readonly("reference_year", &GapModel::reference_year)
        .def("divergence", &GapModel::divergence)
        .def("widening", &GapModel::widening);

    py::class_<CounterfactualBound>(m, "CounterfactualBound")
        .def_readonly("ratio", &CounterfactualBound::ratio)
        .def_readonly("fraction", &CounterfactualBound::fraction)
        .def_readonly("fraction_uncapped", &CounterfactualBound::fraction_uncapped);

    py::class_<PhaseFit>(m, "PhaseFit")
        .def_readonly("break_year", &PhaseFit::break_year)
        .def_readonly("rate1", &PhaseFit::rate1)
        .def_readonly("rate2", &PhaseFit::rate2)
        .def_readonly("r1", &PhaseFit::r1)
        .def_readonly("r2", &PhaseFit::r2)
        .def_readonly("sse", &PhaseFit::sse)
        .def("fitted1", &PhaseFit::fitted1)
        .def("fitted2", &PhaseFit::fitted2);

    py::class_<TransitionVerdict>(m, "TransitionVerdict")
        .def_readonly("is_transition", &TransitionVerdict::is_transition)
        .def_readonly("break_year", &TransitionVerdict::break_year)
        .def_readonly("rate1", &TransitionVerdict::rate1)
        .def_readonly("rate2", &TransitionVerdict::rate2)
        .def_readonly("agrishare_at_break", &TransitionVerdict::agrishare_at_break)
        .def_readonly("agrishare_below_10pct", &TransitionVerdict::agrishare_below_10pct)
        .def_readonly("notes", &TransitionVerdict::notes);

    py::class_<LogLogFit>(m, "LogLogFit")
        .def_readonly("elasticity", &LogLogFit::elasticity)
        .def_readonly("intercept", &LogLogFit::intercept)
        .def_readonly("elasticity_stderr", &LogLogFit::elasticity_stderr)
        .def_readonly("intercept_stderr", &LogLogFit::intercept_stderr)
        .def_readonly("correlation", &LogLogFit::correlation)
        .def_readonly("n", &LogLogFit::n);

    py::class_<ShareForecast>(m, "ShareForecast")
        .def_readonly("country", &ShareForecast::country)
        .def_readonly("anchor_year", &ShareForecast::anchor_year)
        .def_readonly("values", &ShareForecast::values)
        .def_readonly("analog_country", &ShareForecast::analog_country)
        .def_readonly("analog_alignment_year", &ShareForecast::analog_alignment_year)
        .def_readonly("analog_exhausted", &ShareForecast::analog_exhausted)
        .def("at", &ShareForecast::at);

    py::class_<ScenarioSpec>(m, "ScenarioSpec")
        .def(py::init([](double baseline, double healthcare, double nonsalary) {
                 ScenarioSpec s{baseline, healthcare, nonsalary};
                 s.validate();
                 return s;
             }),
             py::arg("baseline_growth") = 8.2, py::arg("healthcare_drag") = 2.2,
             py::arg("nonsalary_drift") = 2.0)
        .def_readonly("baseline_growth", &ScenarioSpec::baseline_growth)
        .def_readonly("healthcare_drag", &ScenarioSpec::healthcare_drag)
        .def_readonly("nonsalary_drift", &ScenarioSpec::nonsalary_drift);

    py::class_<WageBand>(m, "WageBand")
        .def_readonly("low", &WageBand::low)
        .def_readonly("high", &WageBand::high);

    py::class_<AgeBin>(m, "AgeBin")
        .def(py::init<int, int, double>(), py::arg("age_low"), py::arg("age_high"),
             py::arg("percent"))
        .def_readonly("age_low", &AgeBin::age_low)
        .def_readonly("age_high", &AgeBin::age_high)
        .def_readonly("percent", &AgeBin::percent);

    py::class_<AgeDistribution>(m, "AgeDistribution")
        .def(py::init([](int year, const std::vector<AgeBin>& bins, const std::string& scope) {
                 AgeDistribution d{year, scope, bins};
                 d.validate();
                 return d;
             }),
             py::arg("year"), py::arg("bins"), py::arg("scope") = "total")
        .def_readonly("year", &AgeDistribution::year)
        .def_readonly("scope", &AgeDistribution::scope)
        .def_readonly("bins", &AgeDistribution::bins);

    py::class_<DatasetManifest>(m, "DatasetManifest")
        .def_readonly("id", &DatasetManifest::id)
        .def_readonly("country", &DatasetManifest::country)
        .def_readonly("metric", &DatasetManifest::metric)
        .def_readonly("unit", &DatasetManifest::unit)
        .def_readonly("source", &DatasetManifest::source)
        .def_readonly("provenance", &DatasetManifest::provenance)
        .def_readonly("kind", &DatasetManifest::kind)
        .def_readonly("notes", &DatasetManifest::notes);

    py::class_<EconomyTable>(m, "EconomyTable")
        .def_readonly("country", &EconomyTable::country)
        .def_readonly("rows", &EconomyTable::rows)
        .def("row", &EconomyTable::row);

    // series operations
    m.def("deflate_series", &deflate_series, py::arg("nominal"), py::arg("deflator"),
          py::arg("base_year"));
    m.def("moving_average_centered", &moving_average_centered, py::arg("series"),
          py::arg("window"));
    m.def("fit_loglinear", &fit_loglinear, py::arg("series"), py::arg("t0"));
    m.def("doubling_time", &doubling_time, py::arg("rate"));
    m.def("period_changes", &period_changes, py::arg("series"), py::arg("step"),
          py::arg("relative") = false);
    m.def("correlate", &correlate, py::arg("a"), py::arg("b"));
    m.def("restrict_years", &restrict_years, py::arg("series"), py::arg("lo"), py::arg("hi"));

    // transfer model
    m.def("productivity_multiplier", &productivity_multiplier, py::arg("agri_gdp_share"),
          py::arg("agri_employment_share"));
    m.def("productivity_state", &productivity_state, py::arg("snapshot"));
    m.def("transfer_gdp_change", &transfer_gdp_change, py::arg("state"), py::arg("employment"),
          py::arg("share_shift"));
    m.def("relative_growth_per_share", &relative_growth_per_share, py::arg("multiplier"),
          py::arg("mean_share_ratio"), py::arg("share_shift_percent"));
    m.def("attribution",
          [](const EconomyTable& table, int year_from, int year_to) {
              return attribution(table.rows, year_from, year_to);
          },
          py::arg("table"), py::arg("year_from"), py::arg("year_to"));
    m.def("counterfactual_share_bound", &counterfactual_share_bound, py::arg("e1_start"),
          py::arg("e1_end"), py::arg("multiplier"), py::arg("observed_multiplier"));
    m.def("gap_model", &gap_model, py::arg("agri_fit"), py::arg("rest_fit"));
    m.def("productivity_gap", &productivity_gap, py::arg("model"),
          py::arg("years_from_reference"));

    // transition detection
    m.def("fit_two_phase", &fit_two_phase, py::arg("wage"), py::arg("min_segment") = 5);
    m.def("classify_transition",
          [](const PhaseFit& fit, const std::optional<AnnualSeries>& agrishare,
             double growth_floor, double stagnation_ceiling) {
              return classify_transition(fit, agrishare ? &*agrishare : nullptr, growth_floor,
                                         stagnation_ceiling);
          },
          py::arg("fit"), py::arg("agrishare") = std::nullopt, py::arg("growth_floor") = 0.015,
          py::arg("stagnation_ceiling") = 0.005);
    m.def("fit_wage_vs_agrishare", &fit_wage_vs_agrishare, py::arg("wage"), py::arg("agrishare"));

    // forecasting
    py::enum_<DecrementMode>(m, "DecrementMode")
        .value("absolute_points", DecrementMode::absolute_points)
        .value("proportional", DecrementMode::proportional);
    m.def("extrapolate_share_analog", &extrapolate_share_analog, py::arg("target"),
          py::arg("analog"), py::arg("horizon_year"),
          py::arg("mode") = DecrementMode::absolute_points);
    m.def("forecast_wage_band", &forecast_wage_band, py::arg("spec"));
    m.def("project_age_distribution", &project_age_distribution, py::arg("a"), py::arg("b"),
          py::arg("target_year"));

    // ingest
    m.def("parse_series_csv", &parse_series_csv, py::arg("path"));
    m.def("parse_economy_csv", &parse_economy_csv, py::arg("path"));
    m.def("parse_age_csv", &parse_age_csv, py::arg("path"));
    m.def("serialize_series_csv", &serialize_series_csv, py::arg("series"));
    m.def("interpolate_linear", &interpolate_linear, py::arg("series"));
    m.def("data_dir", [] { return data_dir().string(); });
    m.def("set_data_dir", [](const std::string& dir) { set_data_dir(dir); }, py::arg("dir"));
    m.def("list_bundled", &list_bundled);
    m.def("bundled_manifest", &bundled_manifest, py::arg("id"));
    m.def("load_bundled", &load_bundled, py::arg("id"));
    m.def("load_bundled_series", &load_bundled_series, py::arg("id"));
    m.def("load_bundled_table", &load_bundled_table, py::arg("id"));
    m.def("load_bundled_age", &load_bundled_age, py::arg("id"));

#ifdef SECTORSHIFT_VERSION
    m.attr("__version__") = SECTORSHIFT_VERSION;
#else
    m.attr("__version__") = "0.1.0";
#endif
}
