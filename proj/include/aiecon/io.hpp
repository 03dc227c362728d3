#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "aiecon/calibration.hpp"
#include "aiecon/fitting.hpp"
#include "aiecon/scenario.hpp"

namespace aiecon {

enum class EmitFormat { Csv, Json, PlotData };

// Token -> format ("csv", "json", "plotdata"); ConfigError on anything else.
EmitFormat parse_emit_format(const std::string& token);

// How one simulate invocation lands on disk.
struct RunManifest {
    std::string config_source;  // builtin scenario name or config file path
    std::filesystem::path out_dir;
    std::vector<EmitFormat> formats;
    bool seedless_deterministic = true;  // recorded in JSON for provenance
};

// --- ingestion ------------------------------------------------------------

// CSV with header "t,value". Quoted fields and thousands separators are
// accepted; rows are sorted by t; duplicate t -> DataError; bad rows ->
// ParseError naming the line.
SeriesData parse_series(std::istream& in, const std::string& label);
SeriesData ingest_series(const std::filesystem::path& path);

// CSV with header "year,gdp,capital,population"; all magnitudes positive.
std::vector<CalibrationObservation> ingest_observations(const std::filesystem::path& path);

// JSON object {"omega":..., "s":..., "delta":..., "agents":...}.
PhiACalibrationAssumptions ingest_assumptions(const std::filesystem::path& path);

// Single scenario config as JSON (same shape emitted by scenario_to_json).
ScenarioConfig scenario_from_json_text(const std::string& text);
ScenarioConfig load_scenario_file(const std::filesystem::path& path);

// --- emission ---------------------------------------------------------

// Header "t,s,A,p,theta,y_total,y_human,y_ai"; values at full precision
// (%.17g) so a reread reproduces the run bit-for-bit.
void write_result_csv(const SimulationResult& result, std::ostream& out);

// Two-column "t,y_total" table for generic plotting tools.
void write_result_plotdata(const SimulationResult& result, std::ostream& out);

// Header "t,ratio,enhancement_pct" plus a trailing "# crossover_t=..." note.
void write_comparison_csv(const ComparisonSeries& series, std::ostream& out);

// Full run as JSON: config echo, units, determinism note, steps.
std::string result_to_json(const SimulationResult& result, const ScenarioConfig& config);
SimulationResult result_from_json_text(const std::string& text);
SimulationResult load_result_json(const std::filesystem::path& path);

std::string scenario_to_json(const ScenarioConfig& config);
std::string registry_to_json(const std::vector<ScenarioConfig>& configs);

// Write the run into manifest.out_dir in every requested format
// (<scenario>.csv / <scenario>.json / <scenario>_plot.csv). Creates the
// directory if needed; returns the paths written. IoError on failure.
std::vector<std::filesystem::path> emit_result(const SimulationResult& result,
                                               const ScenarioConfig& config,
                                               const RunManifest& manifest);

}  // namespace aiecon
