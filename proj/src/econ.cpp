#include "aiecon/econ.hpp"

#include <cmath>
#include <string>

namespace aiecon {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

bool unit_interval(double x) { return x >= 0.0 && x <= 1.0; }
bool valid_alpha(double a) { return a > 0.0 && a < 1.0; }

void check_enhancement(const EnhancementParams& e, const char* who) {
    require(e.gamma >= 0.0, std::string(who) + ": gamma must be non-negative");
    require(e.beta_enh > 0.0 && e.beta_enh <= 1.0,
            std::string(who) + ": beta_enh must lie in (0,1]");
    require(e.delta >= 0.0, std::string(who) + ": delta must be non-negative");
}

}  // namespace

double cobb_douglas(double phi, double labor, double alpha, double capital) {
    if (phi == 0.0 || labor == 0.0 || capital == 0.0) return 0.0;
    return phi * std::exp(alpha * std::log(labor) + (1.0 - alpha) * std::log(capital));
}

double model1_output(double population, double capital, double alpha, double phi0) {
    require(population > 0.0, "model1: population must be positive");
    require(capital > 0.0, "model1: capital must be positive");
    require(valid_alpha(alpha), "model1: alpha must lie in (0,1)");
    require(phi0 >= 0.0, "model1: phi0 must be non-negative");
    return cobb_douglas(phi0, population, alpha, capital);
}

ResourceSplit split_resources(double capital, double human_share) {
    require(capital > 0.0, "split_resources: capital must be positive");
    require(unit_interval(human_share), "split_resources: human_share must lie in [0,1]");
    double human = human_share * capital;
    double ai = capital - human;
    human = capital - ai;  // re-derive so human + ai == capital exactly
    return {human, ai};
}

double model2_output(const CountryProfile& p, double s) {
    require(unit_interval(s), "model2: capability s must lie in [0,1]");
    require(p.human_share > 0.0 && p.human_share <= 1.0,
            "model2: human_share must lie in (0,1]");
    check_enhancement(p.enhancement, "model2");
    const ResourceSplit split = split_resources(p.capital, p.human_share);
    if (split.human == 0.0)
        throw SingularityError("model2: resource ratio R_A/R_H undefined, R_H is zero");
    const double base = model1_output(p.population, split.human, p.alpha, p.phi_h);
    if (split.ai == 0.0 || p.enhancement.gamma == 0.0) return base;
    const EnhancementParams& e = p.enhancement;
    const double boost = e.gamma * std::pow(split.ai / split.human, e.beta_enh) *
                         std::pow(1.0 + e.delta * s, e.beta_enh);
    return base * (1.0 + boost);
}

double network_multiplier(double agents, double population, double eta) {
    if (population == 0.0)
        throw DomainError("network_multiplier: population is zero, penetration undefined");
    require(population > 0.0, "network_multiplier: population must be positive");
    require(agents >= 0.0, "network_multiplier: agents must be non-negative");
    require(eta >= 0.0, "network_multiplier: eta must be non-negative");
    const double p = agents / population;
    return 1.0 + eta * p * p;
}

double model3_output(const CountryProfile& p, double s, double agents) {
    const double base = model2_output(p, s);
    const double theta = network_multiplier(agents, p.population, p.network.eta);
    return base * theta;
}

OutputBreakdown model4_output(const CountryProfile& p, double s, double agents) {
    require(unit_interval(s), "model4: capability s must lie in [0,1]");
    require(unit_interval(p.omega), "model4: omega must lie in [0,1]");
    require(agents >= 0.0, "model4: agents must be non-negative");
    require(p.population > 0.0, "model4: population must be positive");
    require(p.capital > 0.0, "model4: capital must be positive");
    require(valid_alpha(p.alpha), "model4: alpha must lie in (0,1)");
    require(p.phi_h >= 0.0, "model4: phi_h must be non-negative");
    require(p.phi_a >= 0.0, "model4: phi_a must be non-negative");
    require(p.enhancement.delta >= 0.0, "model4: delta must be non-negative");

    OutputBreakdown out;
    out.y_human =
        cobb_douglas(p.phi_h, p.population, p.alpha, (1.0 - p.omega) * p.capital);
    out.y_ai = cobb_douglas(p.phi_a, agents, p.alpha,
                            p.omega * p.capital * (1.0 + p.enhancement.delta * s));
    out.multiplier_network = 1.0;
    out.y_total = out.y_human + out.y_ai;
    return out;
}

OutputBreakdown model5_output(const CountryProfile& p, double s, double agents) {
    OutputBreakdown out = model4_output(p, s, agents);
    out.multiplier_network = network_multiplier(agents, p.population, p.network.eta);
    out.y_total = out.y_human + out.y_ai * out.multiplier_network;
    return out;
}

}  // namespace aiecon
