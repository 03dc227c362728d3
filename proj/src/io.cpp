#include "aiecon/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace aiecon {

namespace {

using nlohmann::json;

// Full-precision rendering: %.17g round-trips every double exactly.
std::string full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

// Split one CSV line, honoring double quotes so "74,374" stays one field.
std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::string cur;
    bool quoted = false;
    for (char ch : line) {
        if (ch == '"') {
            quoted = !quoted;
        } else if (ch == ',' && !quoted) {
            fields.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    fields.push_back(cur);
    return fields;
}

// Numeric field: tolerate surrounding spaces and thousands separators.
double parse_number(const std::string& raw, const std::string& where) {
    std::string clean;
    for (char ch : raw)
        if (ch != ',' && ch != ' ' && ch != '\t') clean += ch;
    if (clean.empty()) throw ParseError(where + ": empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(clean.c_str(), &end);
    if (end == nullptr || *end != '\0')
        throw ParseError(where + ": not a number: '" + trim(raw) + "'");
    return v;
}

std::string line_ref(const std::string& label, int line_no) {
    return label + ":" + std::to_string(line_no);
}

// Read lines, dropping CR from CRLF endings.
bool next_line(std::istream& in, std::string& line) {
    if (!std::getline(in, line)) return false;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return true;
}

void expect_header(const std::vector<std::string>& fields,
                   const std::vector<std::string>& expected, const std::string& where) {
    bool ok = fields.size() == expected.size();
    for (std::size_t i = 0; ok && i < expected.size(); ++i)
        ok = lower(trim(fields[i])) == expected[i];
    if (!ok) {
        std::string want;
        for (const std::string& f : expected) {
            if (!want.empty()) want += ",";
            want += f;
        }
        throw ParseError(where + ": expected header '" + want + "'");
    }
}

json profile_to_json(const CountryProfile& p) {
    const char* kind = "linear";
    if (p.agents.kind == AgentPathKind::LinearAccelerating) kind = "linear_accelerating";
    if (p.agents.kind == AgentPathKind::Quadratic) kind = "quadratic";
    return json{
        {"country", p.name},
        {"population", p.population},
        {"alpha", p.alpha},
        {"capital", p.capital},
        {"phi_h", p.phi_h},
        {"phi_a", p.phi_a},
        {"omega", p.omega},
        {"human_share", p.human_share},
        {"enhancement",
         {{"gamma", p.enhancement.gamma},
          {"beta_enh", p.enhancement.beta_enh},
          {"delta", p.enhancement.delta}}},
        {"network", {{"eta", p.network.eta}}},
        {"capability", {{"k", p.capability.k}, {"t0", p.capability.t0}}},
        {"agents",
         {{"kind", kind}, {"a0", p.agents.a0}, {"g", p.agents.g}, {"accel", p.agents.accel}}},
    };
}

json scenario_to_json_obj(const ScenarioConfig& c) {
    json j{
        {"name", c.name},
        {"description", c.description},
        {"model", c.model},
        {"horizon", c.horizon},
        {"epoch", c.epoch_label},
        {"profile", profile_to_json(c.profile)},
    };
    if (c.phi_a_gap) {
        j["phi_a_gap"] = {{"delta0", c.phi_a_gap->delta0},
                          {"tau", c.phi_a_gap->tau},
                          {"beta_gap", c.phi_a_gap->beta_gap}};
        j["phi_a_frontier"] = c.phi_a_frontier;
    }
    return j;
}

double num_at(const json& j, const char* key, const std::string& where) {
    if (!j.contains(key) || !j.at(key).is_number())
        throw ParseError(where + ": missing or non-numeric field '" + key + "'");
    return j.at(key).get<double>();
}

std::string str_at(const json& j, const char* key, const std::string& where,
                   const std::string& fallback = "", bool required = false) {
    if (!j.contains(key)) {
        if (required) throw ParseError(where + ": missing field '" + key + "'");
        return fallback;
    }
    if (!j.at(key).is_string())
        throw ParseError(where + ": field '" + key + "' must be a string");
    return j.at(key).get<std::string>();
}

CountryProfile profile_from_json(const json& j, const std::string& where) {
    CountryProfile p;
    p.name = str_at(j, "country", where, "custom");
    p.population = num_at(j, "population", where);
    p.alpha = num_at(j, "alpha", where);
    p.capital = num_at(j, "capital", where);
    p.phi_h = num_at(j, "phi_h", where);
    p.phi_a = num_at(j, "phi_a", where);
    p.omega = j.contains("omega") ? num_at(j, "omega", where) : 0.0;
    p.human_share = j.contains("human_share") ? num_at(j, "human_share", where) : 1.0;
    if (j.contains("enhancement")) {
        const json& e = j.at("enhancement");
        p.enhancement.gamma = num_at(e, "gamma", where + ".enhancement");
        p.enhancement.beta_enh = num_at(e, "beta_enh", where + ".enhancement");
        p.enhancement.delta = num_at(e, "delta", where + ".enhancement");
    }
    if (j.contains("network"))
        p.network.eta = num_at(j.at("network"), "eta", where + ".network");
    if (j.contains("capability")) {
        p.capability.k = num_at(j.at("capability"), "k", where + ".capability");
        p.capability.t0 = num_at(j.at("capability"), "t0", where + ".capability");
    }
    if (j.contains("agents")) {
        const json& a = j.at("agents");
        const std::string kind = lower(str_at(a, "kind", where + ".agents", "linear"));
        const double a0 = num_at(a, "a0", where + ".agents");
        const double g = a.contains("g") ? num_at(a, "g", where + ".agents") : 0.0;
        const double accel = a.contains("accel") ? num_at(a, "accel", where + ".agents") : 0.0;
        if (kind == "linear") {
            p.agents = AgentPath::linear(a0, g);
        } else if (kind == "linear_accelerating") {
            p.agents = AgentPath::linear_accelerating(a0, g, accel);
        } else if (kind == "quadratic") {
            p.agents = AgentPath::quadratic_coefficients(a0, g, 0.5 * accel);
        } else {
            throw ParseError(where + ".agents: unknown kind '" + kind + "'");
        }
    }
    return p;
}

json parse_json_text(const std::string& text, const std::string& where) {
    try {
        return json::parse(text);
    } catch (const json::exception& e) {
        throw ParseError(where + ": " + e.what());
    }
}

std::ofstream open_for_write(const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot write '" + path.string() + "'");
    return out;
}

}  // namespace

EmitFormat parse_emit_format(const std::string& token) {
    const std::string t = lower(trim(token));
    if (t == "csv") return EmitFormat::Csv;
    if (t == "json") return EmitFormat::Json;
    if (t == "plotdata") return EmitFormat::PlotData;
    throw ConfigError("unknown output format '" + token + "'; use csv, json, or plotdata");
}

SeriesData parse_series(std::istream& in, const std::string& label) {
    std::string line;
    if (!next_line(in, line)) throw ParseError(label + ": empty input");
    expect_header(split_csv(line), {"t", "value"}, line_ref(label, 1));

    SeriesData series;
    series.label = label;
    int line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 2)
            throw ParseError(line_ref(label, line_no) + ": expected 2 fields, got " +
                             std::to_string(fields.size()));
        SeriesPoint pt;
        pt.t = parse_number(fields[0], line_ref(label, line_no));
        pt.value = parse_number(fields[1], line_ref(label, line_no));
        series.points.push_back(pt);
    }
    if (series.points.empty()) throw DataError(label + ": no data rows");

    std::stable_sort(series.points.begin(), series.points.end(),
                     [](const SeriesPoint& a, const SeriesPoint& b) { return a.t < b.t; });
    for (std::size_t i = 1; i < series.points.size(); ++i)
        if (series.points[i].t == series.points[i - 1].t)
            throw DataError(label + ": duplicate t=" + full(series.points[i].t));
    series.validate();
    return series;
}

SeriesData ingest_series(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    return parse_series(in, path.stem().string());
}

std::vector<CalibrationObservation> ingest_observations(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    const std::string label = path.stem().string();

    std::string line;
    if (!next_line(in, line)) throw ParseError(label + ": empty input");
    expect_header(split_csv(line), {"year", "gdp", "capital", "population"},
                  line_ref(label, 1));

    std::vector<CalibrationObservation> obs;
    int line_no = 1;
    while (next_line(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        const std::vector<std::string> fields = split_csv(line);
        if (fields.size() != 4)
            throw ParseError(line_ref(label, line_no) + ": expected 4 fields, got " +
                             std::to_string(fields.size()));
        const std::string where = line_ref(label, line_no);
        const double year = parse_number(fields[0], where);
        CalibrationObservation o;
        o.year = static_cast<int>(year);
        if (static_cast<double>(o.year) != year)
            throw ParseError(where + ": year must be an integer");
        o.gdp = parse_number(fields[1], where);
        o.capital = parse_number(fields[2], where);
        o.population = parse_number(fields[3], where);
        if (!(o.gdp > 0.0 && o.capital > 0.0 && o.population > 0.0))
            throw DataError(where + ": gdp, capital, population must be positive");
        obs.push_back(o);
    }
    if (obs.empty()) throw DataError(label + ": no data rows");
    std::stable_sort(obs.begin(), obs.end(),
                     [](const CalibrationObservation& a, const CalibrationObservation& b) {
                         return a.year < b.year;
                     });
    for (std::size_t i = 1; i < obs.size(); ++i)
        if (obs[i].year == obs[i - 1].year)
            throw DataError(label + ": duplicate year " + std::to_string(obs[i].year));
    return obs;
}

PhiACalibrationAssumptions ingest_assumptions(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const std::string where = path.stem().string();
    const json j = parse_json_text(buf.str(), where);
    if (!j.is_object()) throw ParseError(where + ": expected a JSON object");
    PhiACalibrationAssumptions a;
    a.omega = num_at(j, "omega", where);
    a.s = num_at(j, "s", where);
    a.delta = num_at(j, "delta", where);
    a.agents = num_at(j, "agents", where);
    return a;
}

ScenarioConfig scenario_from_json_text(const std::string& text) {
    const json j = parse_json_text(text, "scenario config");
    if (!j.is_object()) throw ParseError("scenario config: expected a JSON object");
    const std::string where = "scenario config";
    ScenarioConfig c;
    c.name = str_at(j, "name", where, "", true);
    c.description = str_at(j, "description", where);
    if (!j.contains("model") || !j.at("model").is_number_integer())
        throw ParseError(where + ": missing or non-integer field 'model'");
    c.model = j.at("model").get<int>();
    if (j.contains("horizon")) {
        if (!j.at("horizon").is_number_integer())
            throw ParseError(where + ": field 'horizon' must be an integer");
        c.horizon = j.at("horizon").get<int>();
    }
    c.epoch_label = str_at(j, "epoch", where, c.epoch_label);
    if (!j.contains("profile"))
        throw ParseError(where + ": missing field 'profile'");
    c.profile = profile_from_json(j.at("profile"), where + ".profile");
    if (j.contains("phi_a_gap")) {
        const json& g = j.at("phi_a_gap");
        GapCurve curve;
        curve.delta0 = num_at(g, "delta0", where + ".phi_a_gap");
        curve.tau = num_at(g, "tau", where + ".phi_a_gap");
        curve.beta_gap = num_at(g, "beta_gap", where + ".phi_a_gap");
        c.phi_a_gap = curve;
        c.phi_a_frontier = num_at(j, "phi_a_frontier", where);
    }
    c.validate();
    return c;
}

ScenarioConfig load_scenario_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return scenario_from_json_text(buf.str());
}

void write_result_csv(const SimulationResult& result, std::ostream& out) {
    out << "t,s,A,p,theta,y_total,y_human,y_ai\n";
    for (const StepRecord& r : result.steps)
        out << full(r.t) << ',' << full(r.s) << ',' << full(r.agents) << ',' << full(r.p)
            << ',' << full(r.theta) << ',' << full(r.y_total) << ',' << full(r.y_human)
            << ',' << full(r.y_ai) << '\n';
}

void write_result_plotdata(const SimulationResult& result, std::ostream& out) {
    out << "t,y_total\n";
    for (const StepRecord& r : result.steps)
        out << full(r.t) << ',' << full(r.y_total) << '\n';
}

void write_comparison_csv(const ComparisonSeries& series, std::ostream& out) {
    out << "t,ratio,enhancement_pct\n";
    for (const ComparisonRow& r : series.rows)
        out << full(r.t) << ',' << full(r.ratio) << ',' << full(r.enhancement_pct) << '\n';
    if (series.crossover_t)
        out << "# crossover_t=" << full(*series.crossover_t) << '\n';
    else
        out << "# crossover_t=none\n";
}

std::string result_to_json(const SimulationResult& result, const ScenarioConfig& config) {
    json steps = json::array();
    for (const StepRecord& r : result.steps)
        steps.push_back(json{{"t", r.t},
                             {"s", r.s},
                             {"A", r.agents},
                             {"p", r.p},
                             {"theta", r.theta},
                             {"y_total", r.y_total},
                             {"y_human", r.y_human},
                             {"y_ai", r.y_ai}});
    const json j{
        {"scenario", result.scenario},
        {"units", {{"output", "USD/year, nominal"}, {"time", "years since epoch"}}},
        {"seedless_deterministic", true},
        {"config", scenario_to_json_obj(config)},
        {"steps", steps},
    };
    return j.dump(2) + "\n";
}

SimulationResult result_from_json_text(const std::string& text) {
    const json j = parse_json_text(text, "result");
    if (!j.is_object() || !j.contains("steps") || !j.at("steps").is_array())
        throw ParseError("result: expected an object with a 'steps' array");
    SimulationResult out;
    out.scenario = str_at(j, "scenario", "result", "", true);
    for (const json& s : j.at("steps")) {
        StepRecord r;
        r.t = num_at(s, "t", "result.steps");
        r.s = num_at(s, "s", "result.steps");
        r.agents = num_at(s, "A", "result.steps");
        r.p = num_at(s, "p", "result.steps");
        r.theta = num_at(s, "theta", "result.steps");
        r.y_total = num_at(s, "y_total", "result.steps");
        r.y_human = num_at(s, "y_human", "result.steps");
        r.y_ai = num_at(s, "y_ai", "result.steps");
        out.steps.push_back(r);
    }
    return out;
}

SimulationResult load_result_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return result_from_json_text(buf.str());
}

std::string scenario_to_json(const ScenarioConfig& config) {
    return scenario_to_json_obj(config).dump(2) + "\n";
}

std::string registry_to_json(const std::vector<ScenarioConfig>& configs) {
    json arr = json::array();
    for (const ScenarioConfig& c : configs) arr.push_back(scenario_to_json_obj(c));
    return arr.dump(2) + "\n";
}

std::vector<std::filesystem::path> emit_result(const SimulationResult& result,
                                               const ScenarioConfig& config,
                                               const RunManifest& manifest) {
    namespace fs = std::filesystem;
    if (manifest.formats.empty())
        throw ConfigError("emit_result: no output formats requested");
    std::error_code ec;
    fs::create_directories(manifest.out_dir, ec);
    if (ec)
        throw IoError("cannot create output directory '" + manifest.out_dir.string() +
                      "': " + ec.message());

    std::vector<fs::path> written;
    for (EmitFormat fmt : manifest.formats) {
        fs::path path = manifest.out_dir;
        switch (fmt) {
            case EmitFormat::Csv: {
                path /= result.scenario + ".csv";
                std::ofstream out = open_for_write(path);
                write_result_csv(result, out);
                break;
            }
            case EmitFormat::Json: {
                path /= result.scenario + ".json";
                std::ofstream out = open_for_write(path);
                out << result_to_json(result, config);
                break;
            }
            case EmitFormat::PlotData: {
                path /= result.scenario + "_plot.csv";
                std::ofstream out = open_for_write(path);
                write_result_plotdata(result, out);
                break;
            }
        }
        written.push_back(path);
    }
    return written;
}

}  // namespace aiecon
