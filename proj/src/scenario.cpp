#include "aiecon/scenario.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "aiecon/dynamics.hpp"
#include "aiecon/econ.hpp"
#include "aiecon/fitting.hpp"

namespace aiecon {

namespace {

CountryProfile china_base() {
    CountryProfile p;
    p.name = "china";
    p.population = 7.7e8;
    p.alpha = 0.58625;
    p.capital = 9.96e13;
    p.phi_h = 90.0;
    p.phi_a = 483.0;
    p.human_share = 0.85;
    p.enhancement = {0.55, 0.35, 0.20};
    p.capability = {0.38, 5.0};
    p.agents = AgentPath::linear(1.495e8, 5e6);
    return p;
}

CountryProfile us_base() {
    CountryProfile p;
    p.name = "us";
    p.population = 1.59e8;
    p.alpha = 0.59709;
    p.capital = 6.91e13;
    p.phi_h = 532.0;
    p.phi_a = 688.0;
    p.human_share = 0.85;
    p.enhancement = {0.55, 0.35, 0.20};
    p.capability = {0.30, 3.0};
    p.agents = AgentPath::linear(4.45e7, 1.486e6);
    return p;
}

ScenarioConfig make(const std::string& name, const std::string& description,
                    int model, CountryProfile profile) {
    ScenarioConfig c;
    c.name = name;
    c.description = description;
    c.model = model;
    c.profile = std::move(profile);
    return c;
}

// Efficiency-gap curve shared by the dynamic China variants: starts at the
// calibrated China/US parity (688/483 - 1) and is pinned through the two
// convergence anchors Delta(5) = 0.217, Delta(6) = 0.034.
GapCurve china_gap_curve() {
    SeriesData anchors;
    anchors.label = "cn-us-gap";
    anchors.points = {{5.0, 0.217}, {6.0, 0.034}};
    GapPins pins;
    pins.delta0 = 688.0 / 483.0 - 1.0;
    const FitResult fit = fit_gap_curve(anchors, pins);
    return {fit.param("delta0"), fit.param("tau"), fit.param("beta_gap")};
}

std::vector<ScenarioConfig> build_registry() {
    std::vector<ScenarioConfig> reg;

    {
        CountryProfile cn = china_base();
        CountryProfile us = us_base();
        reg.push_back(make("m1-cn", "China, pure human production baseline", 1, cn));
        reg.push_back(make("m1-us", "United States, pure human production baseline", 1, us));
    }
    {
        CountryProfile cn = china_base();
        CountryProfile us = us_base();
        reg.push_back(make("m2-cn", "China, AI collaborators amplify human labor", 2, cn));
        reg.push_back(make("m2-us", "United States, AI collaborators amplify human labor", 2, us));
    }
    {
        CountryProfile cn = china_base();
        CountryProfile us = us_base();
        cn.network.eta = 0.04;
        us.network.eta = 0.04;
        reg.push_back(make("m3-cn", "China, collaborators with network externalities", 3, cn));
        reg.push_back(
            make("m3-us", "United States, collaborators with network externalities", 3, us));
    }
    {
        CountryProfile cn = china_base();
        CountryProfile us = us_base();
        cn.omega = 0.15;
        us.omega = 0.15;
        reg.push_back(make("m4-cn", "China, independent human and AI engines", 4, cn));
        reg.push_back(make("m4-us", "United States, independent human and AI engines", 4, us));
    }
    {
        CountryProfile cn = china_base();
        CountryProfile us = us_base();
        cn.omega = 0.05;
        us.omega = 0.15;
        cn.network.eta = 0.07;
        us.network.eta = 0.07;
        reg.push_back(
            make("m5-cn", "China, independent engines with network effects", 5, cn));
        reg.push_back(
            make("m5-us", "United States, independent engines with network effects", 5, us));
    }

    const GapCurve gap = china_gap_curve();
    {
        CountryProfile cn = china_base();
        cn.omega = 0.15;
        cn.agents = AgentPath::linear_accelerating(1.495e8, 5e6, 5e4);
        reg.push_back(make("m4-cn-accel-g",
                           "China m4 with accelerating agent deployment", 4, cn));
    }
    {
        CountryProfile cn = china_base();
        cn.omega = 0.15;
        ScenarioConfig c = make(
            "m4-cn-phia-t", "China m4 with AI efficiency closing on the frontier", 4, cn);
        c.phi_a_gap = gap;
        c.phi_a_frontier = 688.0;
        reg.push_back(std::move(c));
    }
    {
        CountryProfile cn = china_base();
        cn.omega = 0.15;
        cn.agents = AgentPath::linear_accelerating(1.495e8, 5e6, 5e4);
        ScenarioConfig c = make(
            "m4-cn-joint",
            "China m4 with accelerating deployment and converging efficiency", 4, cn);
        c.phi_a_gap = gap;
        c.phi_a_frontier = 688.0;
        reg.push_back(std::move(c));
    }
    return reg;
}

std::string known_names() {
    std::string names;
    for (const ScenarioConfig& c : builtin_scenarios()) {
        if (!names.empty()) names += ", ";
        names += c.name;
    }
    return names;
}

}  // namespace

const std::vector<ScenarioConfig>& builtin_scenarios() {
    static const std::vector<ScenarioConfig> registry = build_registry();
    return registry;
}

const ScenarioConfig& find_scenario(const std::string& name) {
    for (const ScenarioConfig& c : builtin_scenarios())
        if (c.name == name) return c;
    throw ConfigError("unknown scenario '" + name + "'; known scenarios: " + known_names());
}

void ScenarioConfig::set_param(const std::string& key, double value) {
    if (key == "eta") {
        profile.network.eta = value;
    } else if (key == "omega") {
        profile.omega = value;
    } else if (key == "gamma") {
        profile.enhancement.gamma = value;
    } else if (key == "beta_enh") {
        profile.enhancement.beta_enh = value;
    } else if (key == "delta") {
        profile.enhancement.delta = value;
    } else if (key == "k") {
        profile.capability.k = value;
    } else if (key == "t0") {
        profile.capability.t0 = value;
    } else if (key == "a0") {
        profile.agents.a0 = value;
        profile.agents.relative_rate =
            profile.agents.a0 > 0.0 ? profile.agents.g / profile.agents.a0 : 0.0;
    } else if (key == "g") {
        profile.agents.g = value;
        profile.agents.relative_rate =
            profile.agents.a0 > 0.0 ? profile.agents.g / profile.agents.a0 : 0.0;
    } else if (key == "accel") {
        profile.agents.accel = value;
        if (profile.agents.kind == AgentPathKind::Linear)
            profile.agents.kind = AgentPathKind::LinearAccelerating;
    } else if (key == "phi_h") {
        profile.phi_h = value;
    } else if (key == "phi_a") {
        profile.phi_a = value;
    } else {
        throw ConfigError(
            "unknown parameter '" + key +
            "'; settable: eta, omega, gamma, beta_enh, delta, k, t0, a0, g, accel, "
            "phi_h, phi_a");
    }
}

void ScenarioConfig::validate() const {
    if (model < 1 || model > 5)
        throw ConfigError("scenario '" + name + "': model must be 1..5, got " +
                          std::to_string(model));
    if (horizon < 1)
        throw ConfigError("scenario '" + name + "': horizon must be at least 1");
    profile.validate();
    if (phi_a_gap) {
        if (!(phi_a_frontier > 0.0))
            throw ConfigError("scenario '" + name +
                              "': phi_a_frontier must be positive when a gap curve is set");
        if (phi_a_gap->delta0 < 0.0 || !(phi_a_gap->tau > 0.0) || !(phi_a_gap->beta_gap > 0.0))
            throw ConfigError("scenario '" + name + "': invalid phi_a gap curve");
    }
}

namespace {

std::string step_msg(int step, const char* what) {
    return "step t=" + std::to_string(step) + ": " + what;
}

StepRecord evaluate_step(const ScenarioConfig& config, int step) {
    CountryProfile prof = config.profile;
    const double t = static_cast<double>(step);
    if (config.phi_a_gap)
        prof.phi_a = phi_a_follower(t, config.phi_a_frontier, *config.phi_a_gap);

    StepRecord rec;
    rec.t = t;
    rec.s = capability(t, prof.capability);
    rec.agents = agent_count(t, prof.agents);
    rec.p = penetration(rec.agents, prof.population);

    switch (config.model) {
        case 1:
            rec.y_total = model1_output(prof.population, prof.capital, prof.alpha, prof.phi_h);
            rec.y_human = rec.y_total;
            break;
        case 2:
            rec.y_total = model2_output(prof, rec.s);
            rec.y_human = rec.y_total;
            break;
        case 3:
            rec.theta = network_multiplier(rec.agents, prof.population, prof.network.eta);
            rec.y_total = model3_output(prof, rec.s, rec.agents);
            rec.y_human = rec.y_total;
            break;
        case 4: {
            const OutputBreakdown b = model4_output(prof, rec.s, rec.agents);
            rec.theta = b.multiplier_network;
            rec.y_total = b.y_total;
            rec.y_human = b.y_human;
            rec.y_ai = b.y_ai;
            break;
        }
        case 5: {
            const OutputBreakdown b = model5_output(prof, rec.s, rec.agents);
            rec.theta = b.multiplier_network;
            rec.y_total = b.y_total;
            rec.y_human = b.y_human;
            rec.y_ai = b.y_ai;
            break;
        }
        default:
            throw ConfigError("scenario '" + config.name + "': model must be 1..5");
    }
    return rec;
}

}  // namespace

SimulationResult run(const ScenarioConfig& config) {
    config.validate();
    SimulationResult out;
    out.scenario = config.name;
    out.steps.reserve(static_cast<std::size_t>(config.horizon) + 1);
    for (int step = 0; step <= config.horizon; ++step) {
        try {
            out.steps.push_back(evaluate_step(config, step));
        } catch (const SingularityError& e) {
            throw SingularityError(step_msg(step, e.what()));
        } catch (const PathError& e) {
            throw PathError(step_msg(step, e.what()));
        } catch (const DomainError& e) {
            throw DomainError(step_msg(step, e.what()));
        }
    }
    return out;
}

ComparisonSeries compare(const SimulationResult& a, const SimulationResult& b) {
    if (a.steps.size() != b.steps.size())
        throw ShapeError("compare: runs have different lengths (" +
                         std::to_string(a.steps.size()) + " vs " +
                         std::to_string(b.steps.size()) + ")");
    ComparisonSeries out;
    out.rows.reserve(a.steps.size());
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        const StepRecord& sa = a.steps[i];
        const StepRecord& sb = b.steps[i];
        if (sa.t != sb.t)
            throw ShapeError("compare: time axes differ at index " + std::to_string(i));
        if (sb.y_total == 0.0)
            throw SingularityError("compare: denominator run has zero output at t=" +
                                   std::to_string(sa.t));
        ComparisonRow row;
        row.t = sa.t;
        row.ratio = sa.y_total / sb.y_total;
        row.enhancement_pct = (sa.y_total - sb.y_total) / sb.y_total * 100.0;
        out.rows.push_back(row);
        if (!out.crossover_t && sa.y_total >= sb.y_total) out.crossover_t = sa.t;
    }
    return out;
}

std::optional<double> detect_crossover(const SimulationResult& a,
                                       const SimulationResult& b) {
    if (a.steps.size() != b.steps.size())
        throw ShapeError("detect_crossover: runs have different lengths");
    for (std::size_t i = 0; i < a.steps.size(); ++i) {
        if (a.steps[i].t != b.steps[i].t)
            throw ShapeError("detect_crossover: time axes differ at index " +
                             std::to_string(i));
        if (a.steps[i].y_total >= b.steps[i].y_total) return a.steps[i].t;
    }
    return std::nullopt;
}

std::vector<SweepEntry> sensitivity_sweep(const ScenarioConfig& config,
                                          const std::string& param,
                                          const std::vector<double>& grid) {
    if (grid.empty()) throw ConfigError("sweep: grid must not be empty");
    const SimulationResult base = run(config);
    std::vector<SweepEntry> out;
    out.reserve(grid.size());
    for (double value : grid) {
        ScenarioConfig varied = config;
        varied.set_param(param, value);
        const SimulationResult res = run(varied);
        SweepEntry entry;
        entry.value = value;
        entry.final_y_total = res.steps.back().y_total;
        double sum = 0.0;
        for (std::size_t i = 0; i < res.steps.size(); ++i) {
            if (base.steps[i].y_total == 0.0)
                throw SingularityError("sweep: baseline output is zero at t=" +
                                       std::to_string(base.steps[i].t));
            sum += (res.steps[i].y_total - base.steps[i].y_total) /
                   base.steps[i].y_total * 100.0;
        }
        entry.mean_enhancement_pct = sum / static_cast<double>(res.steps.size());
        out.push_back(entry);
    }
    return out;
}

}  // namespace aiecon
