#pragma once

#include <string>

#include "aiecon/errors.hpp"

namespace aiecon {

// One historical data point used to back out efficiency parameters.
struct CalibrationObservation {
    int year = 0;
    double gdp = 0.0;         // nominal GDP, USD
    double capital = 0.0;     // total capital stock, USD
    double population = 0.0;  // employed population
};

// Counterfactual assumptions needed to split observed GDP into a human and
// an AI component when backing out phi_a from a single year.
struct PhiACalibrationAssumptions {
    double omega = 0.1;     // AI resource share, in (0, 1)
    double s = 0.5;         // capability level, in [0, 1]
    double delta = 0.2;     // capability resource boost, >= 0
    double agents = 1e8;    // assumed AI agent count, > 0
};

// Back out phi_h = Y / (N^alpha * R^(1-alpha)) from one observation.
double calibrate_phi_h(const CalibrationObservation& obs, double alpha);

// Back out phi_a from one observation given the human efficiency and the
// counterfactual assumptions: the AI engine must explain the GDP residual
// left after human production on (1-omega)*R. Throws CalibrationError when
// that residual is not positive.
double calibrate_phi_a(const CalibrationObservation& obs, double alpha,
                       double phi_h, const PhiACalibrationAssumptions& a);

// Relative growth rate r = g / a0 of an agent path.
double derive_growth_rate(double g, double a0);

// Transfer a relative growth rate onto another base: g = rate * a0.
double transfer_growth(double rate, double a0);

}  // namespace aiecon
