// sectorshift command line front end.
//
// Subcommands: fit | transition | attribute | forecast | correlate | datasets.
// Every subcommand honors --json (schema-stable report) and the
// SECTORSHIFT_DATA environment variable / --data flag for the bundled-data
// directory. Exit codes: 0 success, 1 computation-domain error, 2 usage or
// data error.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "sectorshift/forecast.hpp"
#include "sectorshift/ingest.hpp"
#include "sectorshift/series.hpp"
#include "sectorshift/transfer.hpp"
#include "sectorshift/transition.hpp"

namespace ss = sectorshift;
using ordered_json = nlohmann::ordered_json;

namespace {

struct RunReport {
    std::string command;
    ordered_json inputs = ordered_json::object();
    ordered_json parameters = ordered_json::object();
    ordered_json results = ordered_json::object();
    std::vector<std::string> warnings;

    ordered_json to_json() const {
        ordered_json doc;
        doc["command"] = command;
        doc["inputs"] = inputs;
        doc["parameters"] = parameters;
        doc["results"] = results;
        doc["warnings"] = warnings;
        return doc;
    }

    void print(bool as_json) const {
        if (as_json) {
            std::cout << to_json().dump(2) << "\n";
            return;
        }
        std::cout << "command: " << command << "\n";
        for (const auto& [k, v] : inputs.items()) std::cout << "input " << k << ": " << human(v) << "\n";
        for (const auto& [k, v] : parameters.items()) std::cout << k << " = " << human(v) << "\n";
        for (const auto& [k, v] : results.items()) std::cout << k << ": " << human(v) << "\n";
        for (const auto& w : warnings) std::cout << "warning: " << w << "\n";
    }

private:
    // ten significant digits for display; the JSON report keeps full precision
    static std::string human(const ordered_json& v) {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_float()) {
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.10g", v.get<double>());
            return buf;
        }
        return v.dump();
    }
};

// A positional that may be a CSV path or a bundled id; bare country names
// resolve to their agrishare panels.
ss::AnnualSeries resolve_series(const std::string& arg, std::string& resolved) {
    if (std::filesystem::exists(arg)) {
        resolved = arg;
        return ss::parse_series_csv(arg);
    }
    for (const std::string id : {arg, arg + "_agrishare"}) {
        try {
            ss::AnnualSeries s = ss::load_bundled_series(id);
            resolved = "bundled:" + id;
            return s;
        } catch (const ss::Error& e) {
            if (e.code() != ss::errc::not_found) throw;
        }
    }
    throw ss::Error(ss::errc::not_found, "no file or bundled series named '" + arg + "'");
}

ss::EconomyTable resolve_table(const std::string& arg, std::string& resolved) {
    if (std::filesystem::exists(arg)) {
        resolved = arg;
        return ss::parse_economy_csv(arg);
    }
    resolved = "bundled:" + arg;
    return ss::load_bundled_table(arg);
}

std::optional<std::string> bundled_notes(const std::string& resolved) {
    if (resolved.rfind("bundled:", 0) != 0) return std::nullopt;
    const ss::DatasetManifest m = ss::bundled_manifest(resolved.substr(8));
    if (m.notes.empty()) return std::nullopt;
    return m.notes;
}

void write_plot_tsv(const std::filesystem::path& path, const ss::AnnualSeries& wage,
                    const ss::PhaseFit& fit) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ss::Error(ss::errc::usage_error, "cannot write " + path.string());
    out << "# year\tvalue\tfit_phase1\tfit_phase2\n";
    char buf[64];
    const auto fmt = [&](double v) {
        std::snprintf(buf, sizeof buf, "%.6g", v);
        return std::string(buf);
    };
    for (const auto& p : wage.points) {
        out << p.year << '\t' << fmt(p.value) << '\t';
        out << (p.year <= fit.break_year ? fmt(fit.fitted1(p.year)) : "") << '\t';
        out << (p.year >= fit.break_year ? fmt(fit.fitted2(p.year)) : "") << '\n';
    }
}

int cmd_fit(const std::string& input, std::optional<int> t0, bool json) {
    RunReport rep;
    rep.command = "fit";
    std::string resolved;
    const ss::AnnualSeries s = resolve_series(input, resolved);
    rep.inputs["series"] = resolved;
    const int ref = t0.value_or(s.empty() ? 0 : s.first_year());
    rep.parameters["t0"] = ref;
    const ss::TrendFit fit = ss::fit_loglinear(s, ref);
    rep.results["rate"] = fit.rate;
    rep.results["rate_stderr"] = fit.rate_stderr;
    rep.results["level"] = fit.level;
    rep.results["correlation"] = fit.correlation;
    if (fit.doubling_time)
        rep.results["doubling_time"] = *fit.doubling_time;
    else
        rep.warnings.push_back("NoDoubling: fitted rate is not positive");
    rep.print(json);
    return 0;
}

int cmd_transition(const std::string& input, const std::optional<std::string>& deflator,
                   std::optional<int> base_year, const std::optional<std::string>& agrishare,
                   double floor, double ceiling, int min_segment,
                   const std::optional<std::string>& plot_path, bool json) {
    RunReport rep;
    rep.command = "transition";
    std::string resolved;
    ss::AnnualSeries wage = resolve_series(input, resolved);
    rep.inputs["wage"] = resolved;
    if (deflator) {
        std::string dres;
        const ss::AnnualSeries defl = resolve_series(*deflator, dres);
        rep.inputs["deflator"] = dres;
        const int base = base_year.value_or(defl.last_year());
        rep.parameters["base_year"] = base;
        wage = ss::deflate_series(wage, defl, base);
    }
    std::optional<ss::AnnualSeries> share;
    if (agrishare) {
        std::string ares;
        share = resolve_series(*agrishare, ares);
        rep.inputs["agrishare"] = ares;
    }
    rep.parameters["growth_floor"] = floor;
    rep.parameters["stagnation_ceiling"] = ceiling;
    rep.parameters["min_segment"] = min_segment;

    const ss::PhaseFit fit = ss::fit_two_phase(wage, min_segment);
    const ss::TransitionVerdict verdict =
        ss::classify_transition(fit, share ? &*share : nullptr, floor, ceiling);
    rep.results["break_year"] = fit.break_year;
    rep.results["rate1"] = fit.rate1;
    rep.results["rate2"] = fit.rate2;
    rep.results["r1"] = fit.r1;
    rep.results["r2"] = fit.r2;
    rep.results["sse"] = fit.sse;
    rep.results["is_transition"] = verdict.is_transition;
    if (verdict.agrishare_at_break) {
        rep.results["agrishare_at_break"] = *verdict.agrishare_at_break;
        rep.results["agrishare_below_10pct"] = verdict.agrishare_below_10pct;
    }
    if (!verdict.notes.empty()) rep.results["notes"] = verdict.notes;
    if (!verdict.is_transition) {
        if (const auto n = bundled_notes(resolved)) rep.warnings.push_back(*n);
    }
    if (plot_path) {
        write_plot_tsv(*plot_path, wage, fit);
        rep.results["plot_data"] = *plot_path;
    }
    rep.print(json);
    return 0;
}

int cmd_attribute(const std::string& input, int year_a, int year_b, bool json) {
    RunReport rep;
    rep.command = "attribute";
    std::string resolved;
    const ss::EconomyTable table = resolve_table(input, resolved);
    rep.inputs["economy"] = resolved;
    rep.parameters["year_a"] = year_a;
    rep.parameters["year_b"] = year_b;
    const ss::TransferResult res = ss::attribution(table.rows, year_a, year_b);
    rep.results["transferred_workers"] = res.transferred_workers;
    rep.results["share_shift"] = res.share_shift;
    rep.results["multiplier"] = res.multiplier;
    rep.results["predicted_gdp_change"] = res.predicted_gdp_change;
    rep.results["observed_gdp_change"] = res.observed_gdp_change;
    if (res.attribution_fraction) {
        rep.results["attribution_fraction"] = *res.attribution_fraction;
        rep.results["attribution_percent"] = 100.0 * *res.attribution_fraction;
    }
    if (res.non_positive_growth)
        rep.warnings.push_back("NonPositiveGrowth: observed GDP did not grow over the window");
    if (year_a > year_b)
        rep.warnings.push_back("years given in reverse order; changes are negated, fraction unchanged");
    rep.print(json);
    return 0;
}

int cmd_forecast(const std::vector<std::string>& share_args, std::optional<int> horizon,
                 const std::optional<std::string>& scenario, bool json) {
    RunReport rep;
    rep.command = "forecast";
    if (!share_args.empty() && scenario)
        throw ss::Error(ss::errc::usage_error, "--share and --scenario are mutually exclusive");
    if (!share_args.empty()) {
        if (share_args.size() != 2)
            throw ss::Error(ss::errc::usage_error, "--share needs TARGET and ANALOG");
        if (!horizon) throw ss::Error(ss::errc::usage_error, "--share needs --horizon YEAR");
        std::string tres, ares;
        const ss::AnnualSeries target = resolve_series(share_args[0], tres);
        const ss::AnnualSeries analog = resolve_series(share_args[1], ares);
        rep.inputs["target"] = tres;
        rep.inputs["analog"] = ares;
        rep.parameters["horizon"] = *horizon;
        const ss::ShareForecast fc = ss::extrapolate_share_analog(target, analog, *horizon);
        rep.results["anchor_year"] = fc.anchor_year;
        rep.results["analog_alignment_year"] = fc.analog_alignment_year;
        ordered_json path = ordered_json::array();
        for (const auto& p : fc.values) path.push_back({{"year", p.year}, {"share", p.value}});
        rep.results["projection"] = path;
        if (const auto v = fc.at(*horizon)) rep.results["share_at_horizon"] = *v;
        if (fc.analog_exhausted)
            rep.warnings.push_back("analog record ended before the horizon; share held flat");
        rep.print(json);
        return 0;
    }
    if (!scenario) throw ss::Error(ss::errc::usage_error, "need --share or --scenario");
    ss::ScenarioSpec spec;
    if (std::sscanf(scenario->c_str(), "%lf,%lf,%lf", &spec.baseline_growth, &spec.healthcare_drag,
                    &spec.nonsalary_drift) != 3)
        throw ss::Error(ss::errc::usage_error, "--scenario wants BASELINE,DRAG1,DRAG2");
    rep.parameters["baseline_growth"] = spec.baseline_growth;
    rep.parameters["healthcare_drag"] = spec.healthcare_drag;
    rep.parameters["nonsalary_drift"] = spec.nonsalary_drift;
    const ss::WageBand band = ss::forecast_wage_band(spec);
    rep.results["wage_growth_low"] = band.low;
    rep.results["wage_growth_high"] = band.high;
    rep.print(json);
    return 0;
}

int cmd_correlate(const std::string& a_arg, const std::string& b_arg, int step, bool absolute,
                  bool json) {
    RunReport rep;
    rep.command = "correlate";
    std::string ares, bres;
    const ss::AnnualSeries a = resolve_series(a_arg, ares);
    const ss::AnnualSeries b = resolve_series(b_arg, bres);
    rep.inputs["a"] = ares;
    rep.inputs["b"] = bres;
    rep.parameters["step"] = step;
    rep.parameters["relative"] = !absolute;
    const ss::AnnualSeries da = ss::period_changes(a, step, !absolute);
    const ss::AnnualSeries db = ss::period_changes(b, step, !absolute);
    const ss::CorrelationReport rpt = ss::correlate(da, db);
    rep.results["r"] = rpt.r;
    rep.results["n"] = rpt.n;
    rep.results["ci_low"] = rpt.ci_low;
    rep.results["ci_high"] = rpt.ci_high;
    rep.print(json);
    return 0;
}

int cmd_datasets(bool json) {
    const auto entries = ss::list_bundled();
    if (json) {
        ordered_json doc = ordered_json::array();
        for (const auto& m : entries) {
            ordered_json e;
            e["id"] = m.id;
            e["country"] = m.country;
            e["kind"] = m.kind;
            e["metric"] = m.metric;
            e["unit"] = m.unit;
            e["provenance"] = m.provenance;
            e["source"] = m.source;
            doc.push_back(e);
        }
        std::cout << doc.dump(2) << "\n";
        return 0;
    }
    for (const auto& m : entries) {
        std::printf("%-34s %-4s %-8s %-26s %s\n", m.id.c_str(), m.country.c_str(), m.kind.c_str(),
                    m.metric.c_str(), m.provenance.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"two-sector structural-transformation toolkit"};
    app.require_subcommand(1);
    app.fallthrough();  // --json / --data are accepted after the subcommand too
    std::string data_override;
    app.add_option("--data", data_override, "bundled-data directory (else $SECTORSHIFT_DATA)");

    bool json = false;
    app.add_flag("--json", json, "emit a machine-readable report");

    auto* fit = app.add_subcommand("fit", "log-linear trend of a series");
    std::string fit_input;
    std::optional<int> fit_t0;
    fit->add_option("series", fit_input, "CSV path or bundled id")->required();
    fit->add_option("--t0", fit_t0, "reference year (default: first year)");

    auto* tr = app.add_subcommand("transition", "two-phase wage fit and verdict");
    std::string tr_input;
    std::optional<std::string> tr_deflator, tr_agrishare, tr_plot;
    std::optional<int> tr_base;
    double tr_floor = 0.015, tr_ceiling = 0.005;
    int tr_minseg = 5;
    tr->add_option("wage", tr_input, "CSV path or bundled id")->required();
    tr->add_option("--deflator", tr_deflator, "deflate the wage series first");
    tr->add_option("--base-year", tr_base, "deflation base year (default: deflator's last year)");
    tr->add_option("--agrishare", tr_agrishare, "report the share level at the break");
    tr->add_option("--floor", tr_floor, "phase-1 growth floor (per year)");
    tr->add_option("--ceiling", tr_ceiling, "phase-2 stagnation ceiling (per year)");
    tr->add_option("--min-segment", tr_minseg, "minimum points per phase");
    tr->add_option("--plot-data", tr_plot, "write year/value/fit TSV here");

    auto* at = app.add_subcommand("attribute", "growth fraction explained by labor transfer");
    std::string at_input;
    int at_a = 0, at_b = 0;
    at->add_option("economy", at_input, "economy CSV path or bundled id")->required();
    at->add_option("year_a", at_a, "window start")->required();
    at->add_option("year_b", at_b, "window end")->required();

    auto* fc = app.add_subcommand("forecast", "share projection or wage-growth band");
    std::vector<std::string> fc_share;
    std::optional<int> fc_horizon;
    std::optional<std::string> fc_scenario;
    fc->add_option("--share", fc_share, "TARGET ANALOG share series")->expected(2);
    fc->add_option("--horizon", fc_horizon, "projection end year");
    fc->add_option("--scenario", fc_scenario, "BASELINE,DRAG1,DRAG2 in percent per year");

    auto* co = app.add_subcommand("correlate", "correlation of period changes with 95% CI");
    std::string co_a, co_b;
    int co_step = 10;
    bool co_abs = false;
    co->add_option("a", co_a, "CSV path or bundled id")->required();
    co->add_option("b", co_b, "CSV path or bundled id")->required();
    co->add_option("--step", co_step, "change interval in years");
    co->add_flag("--absolute", co_abs, "absolute differences instead of relative changes");

    auto* ds = app.add_subcommand("datasets", "list bundled datasets");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    if (!data_override.empty()) ss::set_data_dir(data_override);

    try {
        if (fit->parsed()) return cmd_fit(fit_input, fit_t0, json);
        if (tr->parsed())
            return cmd_transition(tr_input, tr_deflator, tr_base, tr_agrishare, tr_floor,
                                  tr_ceiling, tr_minseg, tr_plot, json);
        if (at->parsed()) return cmd_attribute(at_input, at_a, at_b, json);
        if (fc->parsed()) return cmd_forecast(fc_share, fc_horizon, fc_scenario, json);
        if (co->parsed()) return cmd_correlate(co_a, co_b, co_step, co_abs, json);
        if (ds->parsed()) return cmd_datasets(json);
    } catch (const ss::Error& e) {
        std::cerr << "error: " << ss::errc_name(e.code()) << ": " << e.what() << "\n";
        return ss::is_data_error(e.code()) ? 2 : 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
