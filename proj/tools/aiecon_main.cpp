#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "aiecon/calibration.hpp"
#include "aiecon/dynamics.hpp"
#include "aiecon/econ.hpp"
#include "aiecon/fitting.hpp"
#include "aiecon/io.hpp"
#include "aiecon/scenario.hpp"

namespace {

namespace fs = std::filesystem;
using namespace aiecon;

// Console rendering: 6 significant digits everywhere (files get %.17g).
std::string sig6(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct KeyValue {
    std::string key;
    double value;
};

// Parse "key=value" override strings. Malformed text is a usage error, so
// the caller exits 1 (unknown keys are config errors and exit 2 later).
std::vector<KeyValue> parse_overrides(const std::vector<std::string>& raw) {
    std::vector<KeyValue> out;
    out.reserve(raw.size());
    for (const std::string& item : raw) {
        const std::size_t eq = item.find('=');
        if (eq == std::string::npos || eq == 0)
            throw CLI::ValidationError("--set", "expected key=value, got '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string text = item.substr(eq + 1);
        char* end = nullptr;
        const double value = std::strtod(text.c_str(), &end);
        if (text.empty() || end == nullptr || *end != '\0')
            throw CLI::ValidationError(
                "--set", "value for '" + key + "' is not a number: '" + text + "'");
        out.push_back({key, value});
    }
    return out;
}

std::vector<double> parse_grid(const std::string& csv) {
    std::vector<double> grid;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        char* end = nullptr;
        const double v = std::strtod(tok.c_str(), &end);
        if (tok.empty() || end == nullptr || *end != '\0')
            throw CLI::ValidationError("--grid", "not a number: '" + tok + "'");
        grid.push_back(v);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return grid;
}

// A scenario argument is either a builtin name or a JSON config file.
ScenarioConfig resolve_scenario(const std::string& name_or_path) {
    if (fs::exists(name_or_path) && fs::is_regular_file(name_or_path))
        return load_scenario_file(name_or_path);
    return find_scenario(name_or_path);
}

fs::path default_out_dir(const std::string& cli_value) {
    if (!cli_value.empty()) return cli_value;
    if (const char* env = std::getenv("AIECON_OUT"); env != nullptr && *env != '\0')
        return env;
    return "out";
}

std::vector<EmitFormat> parse_formats(const std::string& csv) {
    std::vector<EmitFormat> formats;
    std::size_t pos = 0;
    while (pos <= csv.size()) {
        const std::size_t comma = csv.find(',', pos);
        const std::string tok =
            csv.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        formats.push_back(parse_emit_format(tok));
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }
    return formats;
}

ScenarioConfig configure(const std::string& target, int horizon,
                         const std::vector<KeyValue>& overrides) {
    ScenarioConfig config = resolve_scenario(target);
    if (horizon > 0) config.horizon = horizon;
    for (const KeyValue& kv : overrides) config.set_param(kv.key, kv.value);
    return config;
}

int cmd_list(bool dump_json) {
    if (dump_json) {
        std::cout << registry_to_json(builtin_scenarios());
        return 0;
    }
    for (const ScenarioConfig& c : builtin_scenarios()) {
        std::printf("%-16s model %d  horizon %-3d %s\n", c.name.c_str(), c.model,
                    c.horizon, c.description.c_str());
    }
    return 0;
}

int cmd_simulate(const std::string& target, int horizon,
                 const std::vector<std::string>& sets, const std::string& out_dir,
                 const std::string& format_csv) {
    const ScenarioConfig config = configure(target, horizon, parse_overrides(sets));
    const SimulationResult result = run(config);

    RunManifest manifest;
    manifest.config_source = target;
    manifest.out_dir = default_out_dir(out_dir);
    manifest.formats = parse_formats(format_csv);
    const std::vector<fs::path> written = emit_result(result, config, manifest);

    std::cout << "scenario " << config.name << " (model " << config.model << ", horizon "
              << config.horizon << ", epoch " << config.epoch_label << ")\n";
    const StepRecord& first = result.steps.front();
    const StepRecord& last = result.steps.back();
    std::cout << "  y_total[t=" << sig6(first.t) << "] = " << sig6(first.y_total) << "\n";
    std::cout << "  y_total[t=" << sig6(last.t) << "] = " << sig6(last.y_total) << "\n";
    for (const fs::path& p : written) std::cout << "wrote " << p.string() << "\n";
    return 0;
}

int cmd_compare(const std::string& target_a, const std::string& target_b, int horizon,
                const std::vector<std::string>& sets, const std::string& out_dir,
                bool write_files) {
    const std::vector<KeyValue> overrides = parse_overrides(sets);
    const ScenarioConfig ca = configure(target_a, horizon, overrides);
    const ScenarioConfig cb = configure(target_b, horizon, overrides);
    const SimulationResult ra = run(ca);
    const SimulationResult rb = run(cb);
    const ComparisonSeries series = compare(ra, rb);

    std::cout << "compare " << ca.name << " vs " << cb.name << "\n";
    std::cout << "t,ratio,enhancement_pct\n";
    for (const ComparisonRow& row : series.rows)
        std::cout << sig6(row.t) << ',' << sig6(row.ratio) << ','
                  << sig6(row.enhancement_pct) << "\n";
    if (series.crossover_t)
        std::cout << "crossover_t: " << sig6(*series.crossover_t) << "\n";
    else
        std::cout << "crossover_t: none\n";

    if (write_files) {
        const fs::path dir = default_out_dir(out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
        const fs::path path = dir / (ca.name + "_vs_" + cb.name + ".csv");
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        write_comparison_csv(series, out);
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

int cmd_calibrate(const std::string& obs_path, double alpha, bool want_phi_a,
                  const std::string& assumptions_path) {
    const std::vector<CalibrationObservation> obs = ingest_observations(obs_path);
    const CalibrationObservation& earliest = obs.front();
    const double phi_h = calibrate_phi_h(earliest, alpha);
    std::cout << "phi_h (" << earliest.year << ") = " << sig6(phi_h) << "\n";
    if (want_phi_a) {
        PhiACalibrationAssumptions assumptions;  // built-in defaults unless a file is given
        if (!assumptions_path.empty()) assumptions = ingest_assumptions(assumptions_path);
        const CalibrationObservation& latest = obs.back();
        const double phi_a = calibrate_phi_a(latest, alpha, phi_h, assumptions);
        std::cout << "phi_a (" << latest.year << ") = " << sig6(phi_a) << "\n";
    }
    return 0;
}

int cmd_fit(const std::string& kind, const std::string& data_path,
            const std::vector<std::string>& pins_raw) {
    const SeriesData series = ingest_series(data_path);
    const std::vector<KeyValue> pins = parse_overrides(pins_raw);

    FitResult fit;
    if (kind == "quadratic") {
        if (!pins.empty())
            throw ConfigError("fit quadratic accepts no --pin (got '" + pins.front().key + "')");
        fit = fit_quadratic(series);
    } else if (kind == "logistic") {
        double saturation = 1.0;
        for (const KeyValue& kv : pins) {
            if (kv.key == "saturation")
                saturation = kv.value;
            else
                throw ConfigError("fit logistic: unknown pin '" + kv.key +
                                  "' (only saturation)");
        }
        fit = fit_logistic(series, saturation);
    } else if (kind == "gap") {
        GapPins gp;
        for (const KeyValue& kv : pins) {
            if (kv.key == "delta0")
                gp.delta0 = kv.value;
            else if (kv.key == "beta_gap")
                gp.beta_gap = kv.value;
            else
                throw ConfigError("fit gap: unknown pin '" + kv.key +
                                  "' (delta0, beta_gap)");
        }
        fit = fit_gap_curve(series, gp);
    } else {
        throw ConfigError("unknown fit kind '" + kind + "'; use quadratic, logistic, or gap");
    }

    std::cout << "fit " << kind << " on " << series.label << " ("
              << series.points.size() << " points)\n";
    for (const auto& [key, value] : fit.params)
        std::cout << "  " << key << " = " << sig6(value) << "\n";
    std::cout << "  rss = " << sig6(fit.residual_sum_squares) << ", iterations = "
              << fit.iterations << ", converged = " << (fit.converged ? "yes" : "no")
              << "\n";
    return fit.converged ? 0 : 2;
}

int cmd_sweep(const std::string& target, const std::string& param,
              const std::string& grid_csv, int horizon, const std::string& out_dir,
              bool write_files) {
    const ScenarioConfig config = configure(target, horizon, {});
    const std::vector<double> grid = parse_grid(grid_csv);
    const std::vector<SweepEntry> entries = sensitivity_sweep(config, param, grid);

    std::cout << "sweep " << config.name << " over " << param << "\n";
    std::cout << "value,final_y_total,mean_enhancement_pct\n";
    std::string file_body = "value,final_y_total,mean_enhancement_pct\n";
    for (const SweepEntry& e : entries) {
        std::cout << sig6(e.value) << ',' << sig6(e.final_y_total) << ','
                  << sig6(e.mean_enhancement_pct) << "\n";
        char buf[128];
        std::snprintf(buf, sizeof buf, "%.17g,%.17g,%.17g\n", e.value, e.final_y_total,
                      e.mean_enhancement_pct);
        file_body += buf;
    }

    if (write_files) {
        const fs::path dir = default_out_dir(out_dir);
        std::error_code ec;
        fs::create_directories(dir, ec);
        if (ec) throw IoError("cannot create output directory '" + dir.string() + "'");
        const fs::path path = dir / (config.name + "_sweep_" + param + ".csv");
        std::ofstream out(path);
        if (!out) throw IoError("cannot write '" + path.string() + "'");
        out << file_body;
        std::cout << "wrote " << path.string() << "\n";
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"aiecon: deterministic human/AI production scenario engine"};
    app.require_subcommand(1);

    CLI::App* list = app.add_subcommand("list-scenarios", "List the builtin scenarios");
    bool list_json = false;
    list->add_flag("--json", list_json, "dump the full registry as JSON");

    CLI::App* sim = app.add_subcommand("simulate", "Run one scenario and emit its series");
    std::string sim_target, sim_out, sim_formats = "csv";
    int sim_horizon = 0;
    std::vector<std::string> sim_sets;
    sim->add_option("scenario", sim_target, "builtin name or JSON config file")->required();
    sim->add_option("--horizon", sim_horizon, "steps to simulate (t = 0..T)")
        ->check(CLI::PositiveNumber);
    sim->add_option("--set", sim_sets, "override parameter, key=value")->take_all();
    sim->add_option("--out", sim_out, "output directory (default $AIECON_OUT or ./out)");
    sim->add_option("--format", sim_formats, "comma list of csv,json,plotdata");

    CLI::App* cmp = app.add_subcommand("compare", "Ratio series of two scenarios");
    std::string cmp_a, cmp_b, cmp_out;
    int cmp_horizon = 0;
    std::vector<std::string> cmp_sets;
    bool cmp_write = false;
    cmp->add_option("a", cmp_a, "numerator scenario")->required();
    cmp->add_option("b", cmp_b, "denominator scenario")->required();
    cmp->add_option("--horizon", cmp_horizon, "steps to simulate")->check(CLI::PositiveNumber);
    cmp->add_option("--set", cmp_sets, "override applied to both sides")->take_all();
    CLI::Option* cmp_out_opt =
        cmp->add_option("--out", cmp_out, "also write <a>_vs_<b>.csv into this directory");
    (void)cmp_out_opt;

    CLI::App* cal = app.add_subcommand("calibrate", "Back out phi_h (and phi_a) from data");
    std::string cal_obs, cal_assumptions;
    double cal_alpha = 0.0;
    bool cal_phi_a = false;
    cal->add_option("--obs", cal_obs, "CSV of year,gdp,capital,population")->required();
    cal->add_option("--alpha", cal_alpha, "labor output elasticity in (0,1)")->required();
    cal->add_flag("--phi-a", cal_phi_a, "also calibrate phi_a from the latest observation");
    cal->add_option("--assumptions", cal_assumptions,
                    "JSON with omega, s, delta, agents (defaults: 0.1, 0.5, 0.2, 1e8)");

    CLI::App* fit = app.add_subcommand("fit", "Fit a dynamic parameter curve");
    std::string fit_kind, fit_data;
    std::vector<std::string> fit_pins;
    fit->add_option("kind", fit_kind, "quadratic | logistic | gap")->required();
    fit->add_option("--data", fit_data, "CSV with header t,value")->required();
    fit->add_option("--pin", fit_pins, "pin a parameter, key=value")->take_all();

    CLI::App* swp = app.add_subcommand("sweep", "Sensitivity sweep over one parameter");
    std::string swp_target, swp_param, swp_grid, swp_out;
    int swp_horizon = 0;
    bool swp_write = false;
    swp->add_option("scenario", swp_target, "builtin name or JSON config file")->required();
    swp->add_option("--param", swp_param, "parameter to vary")->required();
    swp->add_option("--grid", swp_grid, "comma list of values")->required();
    swp->add_option("--horizon", swp_horizon, "steps to simulate")->check(CLI::PositiveNumber);
    swp->add_option("--out", swp_out, "also write <name>_sweep_<param>.csv here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;  // usage errors exit 1; --help exits 0
    }

    try {
        if (list->parsed()) return cmd_list(list_json);
        if (sim->parsed())
            return cmd_simulate(sim_target, sim_horizon, sim_sets, sim_out, sim_formats);
        if (cmp->parsed()) {
            cmp_write = cmp->count("--out") > 0;
            return cmd_compare(cmp_a, cmp_b, cmp_horizon, cmp_sets, cmp_out, cmp_write);
        }
        if (cal->parsed()) return cmd_calibrate(cal_obs, cal_alpha, cal_phi_a, cal_assumptions);
        if (fit->parsed()) return cmd_fit(fit_kind, fit_data, fit_pins);
        if (swp->parsed()) {
            swp_write = swp->count("--out") > 0;
            return cmd_sweep(swp_target, swp_param, swp_grid, swp_horizon, swp_out, swp_write);
        }
    } catch (const CLI::ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
