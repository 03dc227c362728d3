#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aiecon/types.hpp"

namespace aiecon {

// One fully resolved simulation setup: which model, whose parameters, how far.
struct ScenarioConfig {
    std::string name;
    std::string description;
    int model = 1;  // 1..5
    CountryProfile profile;
    int horizon = 20;                  // inclusive annual steps t = 0..horizon
    std::string epoch_label = "2019";  // calendar meaning of t = 0

    // Optional time-varying AI efficiency: when set, phi_a(t) is derived each
    // step as phi_a_frontier / (1 + gap(t)) instead of profile.phi_a.
    std::optional<GapCurve> phi_a_gap;
    double phi_a_frontier = 0.0;

    // Override a named scalar (eta, omega, gamma, beta_enh, delta, k, t0,
    // a0, g, accel, phi_h, phi_a). Unknown keys -> ConfigError. Setting
    // accel on a Linear path promotes it to LinearAccelerating.
    void set_param(const std::string& key, double value);

    void validate() const;
};

// One annual step of a simulation.
struct StepRecord {
    double t = 0.0;
    double s = 0.0;       // capability level
    double agents = 0.0;  // A(t)
    double p = 0.0;       // penetration agents/population
    double theta = 1.0;   // network multiplier (1 for models 1-2, 4)
    double y_total = 0.0;
    double y_human = 0.0;
    double y_ai = 0.0;
};

struct SimulationResult {
    std::string scenario;
    std::vector<StepRecord> steps;
};

struct ComparisonRow {
    double t = 0.0;
    double ratio = 0.0;            // a.y_total / b.y_total
    double enhancement_pct = 0.0;  // (a - b) / b * 100
};

// Step-aligned comparison of two runs. crossover_t is the first t at which
// a.y_total >= b.y_total, if any.
struct ComparisonSeries {
    std::vector<ComparisonRow> rows;
    std::optional<double> crossover_t;
};

struct SweepEntry {
    double value = 0.0;
    double final_y_total = 0.0;
    double mean_enhancement_pct = 0.0;  // vs. the unmodified config, mean over steps
};

// Built-in China/US scenario registry (m1-cn ... m5-us plus the dynamic
// m4-cn variants). Stable order, constructed once.
const std::vector<ScenarioConfig>& builtin_scenarios();

// Lookup by name; throws ConfigError listing the valid names when absent.
const ScenarioConfig& find_scenario(const std::string& name);

// Run a scenario for t = 0..horizon. Deterministic: same config, same bits.
SimulationResult run(const ScenarioConfig& config);

// Ratio/enhancement series of two equally shaped runs (ShapeError otherwise;
// SingularityError if the denominator run hits zero output).
ComparisonSeries compare(const SimulationResult& a, const SimulationResult& b);

// First t with a.y_total >= b.y_total, or nullopt if a never catches up.
std::optional<double> detect_crossover(const SimulationResult& a,
                                       const SimulationResult& b);

// Re-run the scenario once per grid value of the named parameter and report
// final output plus mean enhancement relative to the unmodified config.
std::vector<SweepEntry> sensitivity_sweep(const ScenarioConfig& config,
                                          const std::string& param,
                                          const std::vector<double>& grid);

}  // namespace aiecon
