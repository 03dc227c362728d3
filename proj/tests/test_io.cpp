#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <doctest.h>

#include "aiecon/io.hpp"

using namespace aiecon;
namespace fs = std::filesystem;

namespace {

// Scratch directory wiped on scope exit.
struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("aiecon_io_test_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() {
        std::error_code ec;
        fs::remove_all(path, ec);
    }
};

fs::path write_file(const fs::path& dir, const std::string& name,
                    const std::string& body) {
    const fs::path p = dir / name;
    std::ofstream out(p);
    out << body;
    return p;
}

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::vector<double> parse_row(const std::string& line) {
    std::vector<double> out;
    std::istringstream in(line);
    std::string field;
    while (std::getline(in, field, ',')) out.push_back(std::strtod(field.c_str(), nullptr));
    return out;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("parse_series handles quoting, thousands separators, and sorting") {
    std::istringstream in(
        "t,value\n"
        "1,\"74,374\"\n"
        "0,56612\n"
        "\n"
        "2, 94312\n");
    const SeriesData s = parse_series(in, "robots");
    REQUIRE(s.points.size() == 3);
    CHECK(s.points[0].t == 0.0);
    CHECK(s.points[0].value == 56612.0);
    CHECK(s.points[1].value == 74374.0);
    CHECK(s.points[2].value == 94312.0);
    CHECK(s.label == "robots");
}

TEST_CASE("parse_series diagnoses malformed input precisely") {
    std::istringstream dup("t,value\n1,10\n1,20\n");
    CHECK_THROWS_AS(parse_series(dup, "dup"), DataError);

    std::istringstream bad("t,value\n1,ten\n");
    try {
        parse_series(bad, "bad");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("bad:2") != std::string::npos);
    }

    std::istringstream wide("t,value\n1,2,3\n");
    CHECK_THROWS_AS(parse_series(wide, "wide"), ParseError);

    std::istringstream empty("t,value\n");
    CHECK_THROWS_AS(parse_series(empty, "empty"), DataError);

    std::istringstream header("time,val\n1,2\n");
    CHECK_THROWS_AS(parse_series(header, "header"), ParseError);

    std::istringstream nothing("");
    CHECK_THROWS_AS(parse_series(nothing, "nothing"), ParseError);
}

TEST_CASE("ingest_series reads from disk and is sorted") {
    TempDir tmp;
    const fs::path p = write_file(tmp.path, "agents.csv",
                                  "t,value\r\n3,300\r\n1,100\r\n2,200\r\n");
    const SeriesData s = ingest_series(p);
    REQUIRE(s.points.size() == 3);
    CHECK(s.points[0].value == 100.0);
    CHECK(s.points[2].value == 300.0);
    CHECK(s.label == "agents");
    CHECK_THROWS_AS(ingest_series(tmp.path / "missing.csv"), IoError);
}

TEST_CASE("ingest_observations parses and validates the calibration table") {
    TempDir tmp;
    const fs::path p = write_file(
        tmp.path, "obs.csv",
        "year,gdp,capital,population\n"
        "2019,1.458e13,9.96e13,7.7e8\n"
        "2010,6.19e12,3.93e13,7.7e8\n");
    const std::vector<CalibrationObservation> obs = ingest_observations(p);
    REQUIRE(obs.size() == 2);
    CHECK(obs[0].year == 2010);  // sorted by year
    CHECK(obs[0].gdp == 6.19e12);
    CHECK(obs[1].capital == 9.96e13);

    const fs::path neg = write_file(tmp.path, "neg.csv",
                                    "year,gdp,capital,population\n2010,-1,2,3\n");
    CHECK_THROWS_AS(ingest_observations(neg), DataError);
    const fs::path frac = write_file(tmp.path, "frac.csv",
                                     "year,gdp,capital,population\n2010.5,1,2,3\n");
    CHECK_THROWS_AS(ingest_observations(frac), ParseError);
    const fs::path dup = write_file(tmp.path, "dup.csv",
                                    "year,gdp,capital,population\n"
                                    "2010,1,2,3\n2010,4,5,6\n");
    CHECK_THROWS_AS(ingest_observations(dup), DataError);
}

TEST_CASE("ingest_assumptions reads the counterfactual JSON") {
    TempDir tmp;
    const fs::path p = write_file(
        tmp.path, "assume.json",
        R"({"omega": 0.1, "s": 0.5, "delta": 0.2, "agents": 1e8})");
    const PhiACalibrationAssumptions a = ingest_assumptions(p);
    CHECK(a.omega == 0.1);
    CHECK(a.s == 0.5);
    CHECK(a.delta == 0.2);
    CHECK(a.agents == 1e8);

    const fs::path missing = write_file(tmp.path, "missing.json", R"({"omega": 0.1})");
    CHECK_THROWS_AS(ingest_assumptions(missing), ParseError);
    const fs::path broken = write_file(tmp.path, "broken.json", "{not json");
    CHECK_THROWS_AS(ingest_assumptions(broken), ParseError);
}

TEST_CASE("result CSV has the canonical header and one row per step") {
    const SimulationResult res = run(find_scenario("m1-cn"));
    std::ostringstream out;
    write_result_csv(res, out);
    const std::vector<std::string> lines = split_lines(out.str());
    REQUIRE(lines.size() == 22);  // header + 21 steps
    CHECK(lines[0] == "t,s,A,p,theta,y_total,y_human,y_ai");
}

TEST_CASE("CSV and JSON emissions carry numerically identical values") {
    const ScenarioConfig& cfg = find_scenario("m5-cn");
    const SimulationResult res = run(cfg);

    std::ostringstream csv;
    write_result_csv(res, csv);
    const std::vector<std::string> lines = split_lines(csv.str());

    const SimulationResult back = result_from_json_text(result_to_json(res, cfg));
    REQUIRE(back.steps.size() == res.steps.size());
    REQUIRE(lines.size() == res.steps.size() + 1);

    for (std::size_t i = 0; i < res.steps.size(); ++i) {
        const std::vector<double> row = parse_row(lines[i + 1]);
        REQUIRE(row.size() == 8);
        // CSV (%.17g) and JSON both round-trip the exact doubles.
        CHECK(row[1] == res.steps[i].s);
        CHECK(row[5] == res.steps[i].y_total);
        CHECK(back.steps[i].s == res.steps[i].s);
        CHECK(back.steps[i].agents == res.steps[i].agents);
        CHECK(back.steps[i].p == res.steps[i].p);
        CHECK(back.steps[i].theta == res.steps[i].theta);
        CHECK(back.steps[i].y_total == res.steps[i].y_total);
        CHECK(back.steps[i].y_human == res.steps[i].y_human);
        CHECK(back.steps[i].y_ai == res.steps[i].y_ai);
    }
    CHECK(back.scenario == res.scenario);
}

TEST_CASE("scenario JSON round-trips every field") {
    const ScenarioConfig& cfg = find_scenario("m4-cn-joint");
    const ScenarioConfig back = scenario_from_json_text(scenario_to_json(cfg));
    CHECK(back.name == cfg.name);
    CHECK(back.model == cfg.model);
    CHECK(back.horizon == cfg.horizon);
    CHECK(back.epoch_label == cfg.epoch_label);
    CHECK(back.profile.population == cfg.profile.population);
    CHECK(back.profile.alpha == cfg.profile.alpha);
    CHECK(back.profile.capital == cfg.profile.capital);
    CHECK(back.profile.phi_h == cfg.profile.phi_h);
    CHECK(back.profile.phi_a == cfg.profile.phi_a);
    CHECK(back.profile.omega == cfg.profile.omega);
    CHECK(back.profile.human_share == cfg.profile.human_share);
    CHECK(back.profile.enhancement.gamma == cfg.profile.enhancement.gamma);
    CHECK(back.profile.network.eta == cfg.profile.network.eta);
    CHECK(back.profile.capability.k == cfg.profile.capability.k);
    CHECK(back.profile.agents.kind == cfg.profile.agents.kind);
    CHECK(back.profile.agents.a0 == cfg.profile.agents.a0);
    CHECK(back.profile.agents.g == cfg.profile.agents.g);
    CHECK(back.profile.agents.accel == cfg.profile.agents.accel);
    CHECK(back.profile.agents.relative_rate == cfg.profile.agents.relative_rate);
    REQUIRE(back.phi_a_gap.has_value());
    CHECK(back.phi_a_gap->tau == cfg.phi_a_gap->tau);
    CHECK(back.phi_a_frontier == cfg.phi_a_frontier);
    // Identical runs from the round-tripped config.
    const SimulationResult a = run(cfg);
    const SimulationResult b = run(back);
    for (std::size_t i = 0; i < a.steps.size(); ++i)
        CHECK(a.steps[i].y_total == b.steps[i].y_total);
}

TEST_CASE("scenario JSON ingestion validates content") {
    CHECK_THROWS_AS(scenario_from_json_text("{"), ParseError);
    CHECK_THROWS_AS(scenario_from_json_text("[]"), ParseError);
    CHECK_THROWS_AS(scenario_from_json_text(R"({"name":"x"})"), ParseError);
    // Structurally fine but economically invalid.
    CHECK_THROWS_AS(scenario_from_json_text(R"({
        "name": "bad", "model": 4,
        "profile": {"population": 1e8, "alpha": 1.7, "capital": 1e13,
                    "phi_h": 90, "phi_a": 480}
    })"),
                    DomainError);
    CHECK_THROWS_AS(scenario_from_json_text(R"({
        "name": "bad", "model": 9,
        "profile": {"population": 1e8, "alpha": 0.6, "capital": 1e13,
                    "phi_h": 90, "phi_a": 480}
    })"),
                    ConfigError);
}

TEST_CASE("plotdata and comparison tables have the documented columns") {
    const SimulationResult res = run(find_scenario("m1-cn"));
    std::ostringstream plot;
    write_result_plotdata(res, plot);
    const std::vector<std::string> plot_lines = split_lines(plot.str());
    CHECK(plot_lines[0] == "t,y_total");
    CHECK(plot_lines.size() == 22);

    const ComparisonSeries cmp =
        compare(run(find_scenario("m2-cn")), run(find_scenario("m1-cn")));
    std::ostringstream out;
    write_comparison_csv(cmp, out);
    const std::vector<std::string> lines = split_lines(out.str());
    CHECK(lines[0] == "t,ratio,enhancement_pct");
    CHECK(lines.back().rfind("# crossover_t=", 0) == 0);
}

TEST_CASE("emit_result writes the requested formats and round-trips") {
    TempDir tmp;
    const ScenarioConfig& cfg = find_scenario("m4-cn");
    const SimulationResult res = run(cfg);
    RunManifest manifest;
    manifest.config_source = "m4-cn";
    manifest.out_dir = tmp.path / "runs";
    manifest.formats = {EmitFormat::Csv, EmitFormat::Json, EmitFormat::PlotData};
    const std::vector<fs::path> written = emit_result(res, cfg, manifest);
    REQUIRE(written.size() == 3);
    CHECK(fs::exists(tmp.path / "runs" / "m4-cn.csv"));
    CHECK(fs::exists(tmp.path / "runs" / "m4-cn.json"));
    CHECK(fs::exists(tmp.path / "runs" / "m4-cn_plot.csv"));

    const SimulationResult back = load_result_json(tmp.path / "runs" / "m4-cn.json");
    REQUIRE(back.steps.size() == res.steps.size());
    for (std::size_t i = 0; i < res.steps.size(); ++i)
        CHECK(back.steps[i].y_total == res.steps[i].y_total);

    // Destination nested under a regular file cannot be created.
    const fs::path blocker = write_file(tmp.path, "blocker", "x");
    manifest.out_dir = blocker / "sub";
    CHECK_THROWS_AS(emit_result(res, cfg, manifest), IoError);

    manifest.out_dir = tmp.path;
    manifest.formats.clear();
    CHECK_THROWS_AS(emit_result(res, cfg, manifest), ConfigError);
}

TEST_CASE("parse_emit_format accepts the three formats only") {
    CHECK(parse_emit_format("csv") == EmitFormat::Csv);
    CHECK(parse_emit_format("JSON") == EmitFormat::Json);
    CHECK(parse_emit_format(" plotdata ") == EmitFormat::PlotData);
    CHECK_THROWS_AS(parse_emit_format("xml"), ConfigError);
    CHECK_THROWS_AS(parse_emit_format(""), ConfigError);
}

TEST_CASE("registry JSON lists every builtin scenario") {
    const std::string text = registry_to_json(builtin_scenarios());
    for (const ScenarioConfig& c : builtin_scenarios())
        CHECK(text.find("\"" + c.name + "\"") != std::string::npos);
}

}  // TEST_SUITE
