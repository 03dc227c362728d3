#include "aiecon/calibration.hpp"

#include <cmath>
#include <string>

#include "aiecon/econ.hpp"

namespace aiecon {

namespace {

void check_observation(const CalibrationObservation& obs, const char* who) {
    const std::string head = std::string(who) + " (year " + std::to_string(obs.year) + "): ";
    if (!(obs.gdp > 0.0)) throw DomainError(head + "gdp must be positive");
    if (!(obs.capital > 0.0)) throw DomainError(head + "capital must be positive");
    if (!(obs.population > 0.0)) throw DomainError(head + "population must be positive");
}

void check_alpha(double alpha, const char* who) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw DomainError(std::string(who) + ": alpha must lie in (0,1)");
}

}  // namespace

double calibrate_phi_h(const CalibrationObservation& obs, double alpha) {
    check_observation(obs, "calibrate_phi_h");
    check_alpha(alpha, "calibrate_phi_h");
    return obs.gdp / cobb_douglas(1.0, obs.population, alpha, obs.capital);
}

double calibrate_phi_a(const CalibrationObservation& obs, double alpha,
                       double phi_h, const PhiACalibrationAssumptions& a) {
    check_observation(obs, "calibrate_phi_a");
    check_alpha(alpha, "calibrate_phi_a");
    if (!(phi_h > 0.0)) throw DomainError("calibrate_phi_a: phi_h must be positive");
    if (!(a.omega > 0.0 && a.omega < 1.0))
        throw DomainError("calibrate_phi_a: assumed omega must lie in (0,1)");
    if (!(a.s >= 0.0 && a.s <= 1.0))
        throw DomainError("calibrate_phi_a: assumed s must lie in [0,1]");
    if (!(a.delta >= 0.0)) throw DomainError("calibrate_phi_a: assumed delta must be non-negative");
    if (!(a.agents > 0.0)) throw DomainError("calibrate_phi_a: assumed agents must be positive");

    const double y_human =
        cobb_douglas(phi_h, obs.population, alpha, (1.0 - a.omega) * obs.capital);
    const double residual = obs.gdp - y_human;
    if (!(residual > 0.0))
        throw CalibrationError(
            "calibrate_phi_a: human production alone meets or exceeds observed GDP; "
            "no positive AI residual to explain");
    const double unit_ai =
        cobb_douglas(1.0, a.agents, alpha, a.omega * obs.capital * (1.0 + a.delta * a.s));
    return residual / unit_ai;
}

double derive_growth_rate(double g, double a0) {
    if (!(a0 > 0.0)) throw DomainError("derive_growth_rate: a0 must be positive");
    return g / a0;
}

double transfer_growth(double rate, double a0) {
    if (a0 < 0.0) throw DomainError("transfer_growth: a0 must be non-negative");
    return rate * a0;
}

}  // namespace aiecon
