#include "sectorshift/ingest.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace sectorshift {

namespace {

#ifndef SECTORSHIFT_BUNDLED_DATA_DIR
#define SECTORSHIFT_BUNDLED_DATA_DIR ""
#endif

std::filesystem::path& explicit_data_dir() {
    static std::filesystem::path dir;
    return dir;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw Error(errc::not_found, "cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct CsvReader {
    std::string text;
    std::size_t pos = 0;
    long line = 0;

    // Returns the next line with any trailing CR stripped; false at EOF.
    bool next(std::string& out) {
        if (pos >= text.size()) return false;
        const std::size_t nl = text.find('\n', pos);
        const std::size_t end = nl == std::string::npos ? text.size() : nl;
        out.assign(text, pos, end - pos);
        if (!out.empty() && out.back() == '\r') out.pop_back();
        pos = nl == std::string::npos ? text.size() : nl + 1;
        ++line;
        return true;
    }
};

bool parse_int(std::string_view field, long& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && !field.empty();
}

bool parse_double(std::string_view field, double& out) {
    const char* first = field.data();
    const char* last = field.data() + field.size();
    const auto res = std::from_chars(first, last, out);
    return res.ec == std::errc() && res.ptr == last && !field.empty();
}

std::vector<std::string_view> split(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const std::size_t comma = line.find(',', start);
        if (comma == std::string_view::npos) {
            out.push_back(line.substr(start));
            break;
        }
        out.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    return out;
}

// Skip leading `#` comments, then require the exact header.
void expect_header(CsvReader& reader, std::string_view header,
                   const std::filesystem::path& path) {
    std::string lineText;
    while (reader.next(lineText)) {
        if (!lineText.empty() && lineText.front() == '#') continue;
        if (lineText != header)
            throw Error(errc::parse_error,
                        path.string() + ": expected header '" + std::string(header) + "'",
                        reader.line);
        return;
    }
    throw Error(errc::parse_error, path.string() + ": missing header", reader.line);
}

std::string format_value(double v) {
    if (v == std::floor(v) && std::abs(v) < 1e15) {
        char buf[32];
        const auto res = std::to_chars(buf, buf + sizeof buf, static_cast<long long>(v));
        return std::string(buf, res.ptr);
    }
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, res.ptr);
}

DatasetManifest manifest_from_json(const nlohmann::json& j) {
    DatasetManifest m;
    m.id = j.at("id").get<std::string>();
    m.country = j.value("country", "");
    m.metric = j.value("metric", "unspecified");
    m.unit = j.value("unit", "");
    m.source = j.value("source", "");
    m.provenance = j.value("provenance", "");
    m.file = j.value("file", m.id + ".csv");
    m.kind = j.value("kind", "series");
    m.notes = j.value("notes", "");
    m.scope = j.value("scope", "");
    if (j.contains("base_year")) m.base_year = j.at("base_year").get<int>();
    if (j.contains("year")) m.year = j.at("year").get<int>();
    return m;
}

}  // namespace

std::optional<EconomyYear> EconomyTable::row(int year) const {
    for (const auto& r : rows)
        if (r.year == year) return r;
    return std::nullopt;
}

void EconomyTable::validate() const {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        rows[i].validate();
        if (i > 0 && rows[i].year <= rows[i - 1].year)
            throw Error(errc::invalid_series, "economy rows not year-sorted", rows[i].year);
    }
}

AnnualSeries parse_series_csv(const std::filesystem::path& path) {
    CsvReader reader{read_file(path)};
    expect_header(reader, "year,value", path);

    AnnualSeries series;
    std::string lineText;
    while (reader.next(lineText)) {
        if (lineText.empty()) continue;
        const auto fields = split(lineText);
        long year = 0;
        double value = 0.0;
        if (fields.size() != 2 || !parse_int(fields[0], year) || !parse_double(fields[1], value))
            throw Error(errc::parse_error, path.string() + ": malformed row", reader.line);
        if (!std::isfinite(value))
            throw Error(errc::invalid_value, path.string() + ": non-finite value", reader.line);
        series.points.push_back({static_cast<int>(year), value});
    }
    std::stable_sort(series.points.begin(), series.points.end(),
                     [](const AnnualPoint& a, const AnnualPoint& b) { return a.year < b.year; });
    for (std::size_t i = 1; i < series.points.size(); ++i) {
        if (series.points[i].year == series.points[i - 1].year)
            throw Error(errc::duplicate_year,
                        path.string() + ": duplicate year " + std::to_string(series.points[i].year),
                        series.points[i].year);
    }
    series.validate();
    return series;
}

EconomyTable parse_economy_csv(const std::filesystem::path& path) {
    CsvReader reader{read_file(path)};
    expect_header(reader, "year,gdp_real,employment,gdp_agri_real,employment_agri", path);

    EconomyTable table;
    std::string lineText;
    while (reader.next(lineText)) {
        if (lineText.empty()) continue;
        const auto fields = split(lineText);
        long year = 0;
        double g = 0.0, e = 0.0, g1 = 0.0, e1 = 0.0;
        if (fields.size() != 5 || !parse_int(fields[0], year) || !parse_double(fields[1], g) ||
            !parse_double(fields[2], e) || !parse_double(fields[3], g1) || !parse_double(fields[4], e1))
            throw Error(errc::parse_error, path.string() + ": malformed row", reader.line);
        table.rows.push_back({static_cast<int>(year), g, e, g1, e1});
    }
    std::stable_sort(table.rows.begin(), table.rows.end(),
                     [](const EconomyYear& a, const EconomyYear& b) { return a.year < b.year; });
    for (std::size_t i = 1; i < table.rows.size(); ++i)
        if (table.rows[i].year == table.rows[i - 1].year)
            throw Error(errc::duplicate_year, path.string() + ": duplicate year", table.rows[i].year);
    table.validate();
    return table;
}

AgeDistribution parse_age_csv(const std::filesystem::path& path) {
    CsvReader reader{read_file(path)};
    expect_header(reader, "age_low,age_high,percent", path);

    AgeDistribution dist;
    std::string lineText;
    while (reader.next(lineText)) {
        if (lineText.empty()) continue;
        const auto fields = split(lineText);
        long lo = 0, hi = 0;
        double pct = 0.0;
        if (fields.size() != 3 || !parse_int(fields[0], lo) || !parse_int(fields[1], hi) ||
            !parse_double(fields[2], pct))
            throw Error(errc::parse_error, path.string() + ": malformed row", reader.line);
        dist.bins.push_back({static_cast<int>(lo), static_cast<int>(hi), pct});
    }
    dist.validate();
    return dist;
}

std::string serialize_series_csv(const AnnualSeries& series) {
    std::string out = "year,value\n";
    for (const auto& p : series.points) {
        out += std::to_string(p.year);
        out += ',';
        out += format_value(p.value);
        out += '\n';
    }
    return out;
}

AnnualSeries interpolate_linear(const AnnualSeries& series) {
    if (series.size() < 2) throw Error(errc::insufficient_data, "need at least 2 points");
    AnnualSeries out = series;
    out.points.clear();
    for (std::size_t i = 0; i + 1 < series.points.size(); ++i) {
        const auto& a = series.points[i];
        const auto& b = series.points[i + 1];
        out.points.push_back(a);
        for (int year = a.year + 1; year < b.year; ++year) {
            const double t = static_cast<double>(year - a.year) / static_cast<double>(b.year - a.year);
            out.points.push_back({year, a.value + t * (b.value - a.value)});
            if (std::find(out.interpolated_years.begin(), out.interpolated_years.end(), year) ==
                out.interpolated_years.end())
                out.interpolated_years.push_back(year);
        }
    }
    out.points.push_back(series.points.back());
    return out;
}

std::filesystem::path data_dir() {
    if (!explicit_data_dir().empty()) return explicit_data_dir();
    if (const char* env = std::getenv("SECTORSHIFT_DATA"); env && *env)
        return std::filesystem::path(env);
    return std::filesystem::path(SECTORSHIFT_BUNDLED_DATA_DIR);
}

void set_data_dir(std::filesystem::path dir) { explicit_data_dir() = std::move(dir); }

std::vector<DatasetManifest> list_bundled() {
    const auto path = data_dir() / "manifest.json";
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(read_file(path));
    } catch (const nlohmann::json::exception& e) {
        throw Error(errc::parse_error, path.string() + ": " + e.what());
    }
    std::vector<DatasetManifest> out;
    for (const auto& entry : doc) out.push_back(manifest_from_json(entry));
    return out;
}

DatasetManifest bundled_manifest(std::string_view id) {
    for (auto& m : list_bundled())
        if (m.id == id) return m;
    throw Error(errc::not_found, "no bundled dataset '" + std::string(id) + "'");
}

Bundled load_bundled(std::string_view id) {
    const DatasetManifest m = bundled_manifest(id);
    const auto path = data_dir() / m.file;
    if (m.kind == "economy") {
        EconomyTable table = parse_economy_csv(path);
        table.country = m.country;
        return table;
    }
    if (m.kind == "age")
        throw Error(errc::usage_error, "'" + m.id + "' is an age distribution; use load_bundled_age");

    AnnualSeries series = parse_series_csv(path);
    series.country = m.country;
    series.unit = m.unit;
    if (const auto tag = metric_from_name(m.metric)) series.metric = *tag;
    if (is_share_metric(series.metric) &&
        series.unit.find("percent") != std::string::npos) {
        for (auto& p : series.points) p.value /= 100.0;
        series.unit.replace(series.unit.find("percent"), 7, "fraction");
    }
    series.validate();
    return series;
}

AnnualSeries load_bundled_series(std::string_view id) {
    Bundled b = load_bundled(id);
    if (auto* s = std::get_if<AnnualSeries>(&b)) return std::move(*s);
    throw Error(errc::usage_error, "'" + std::string(id) + "' is an economy table, not a series");
}

EconomyTable load_bundled_table(std::string_view id) {
    Bundled b = load_bundled(id);
    if (auto* t = std::get_if<EconomyTable>(&b)) return std::move(*t);
    throw Error(errc::usage_error, "'" + std::string(id) + "' is a series, not an economy table");
}

AgeDistribution load_bundled_age(std::string_view id) {
    const DatasetManifest m = bundled_manifest(id);
    if (m.kind != "age")
        throw Error(errc::usage_error, "'" + m.id + "' is not an age distribution");
    AgeDistribution dist = parse_age_csv(data_dir() / m.file);
    if (m.year) dist.year = *m.year;
    dist.scope = m.scope;
    return dist;
}

}  // namespace sectorshift
