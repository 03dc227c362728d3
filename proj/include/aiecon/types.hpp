#pragma once

#include <string>

#include "aiecon/errors.hpp"

namespace aiecon {

// AI enhancement of human production (models 2+): the bracket term
// [1 + gamma * (R_A/R_H)^beta_enh * (1 + delta*s)^beta_enh].
struct EnhancementParams {
    double gamma = 0.0;      // baseline enhancement coefficient, >= 0
    double beta_enh = 0.35;  // enhancement elasticity, in (0, 1]
    double delta = 0.0;      // capability scaling factor, >= 0
};

// Metcalfe-style network externality Theta(p) = 1 + eta * p^2.
struct NetworkParams {
    double eta = 0.0;  // maximum network amplification, >= 0
};

// Logistic capability curve s(t) = 1 / (1 + exp(-k * (t - t0))).
struct LogisticParams {
    double k = 1.0;   // growth rate per year, > 0
    double t0 = 0.0;  // inflection year (relative to the scenario epoch)
};

enum class AgentPathKind {
    Linear,              // A(t) = a0 + g*t
    LinearAccelerating,  // A(t) = a0 + g*t + accel*t^2/2 (growth-rate ramp)
    Quadratic,           // same evaluation, parameterized from fitted coefficients
};

// Deterministic AI-agent population trajectory. LinearAccelerating and
// Quadratic evaluate identically; they differ only in provenance (a ramped
// growth rate vs. polynomial coefficients recovered from data).
struct AgentPath {
    AgentPathKind kind = AgentPathKind::Linear;
    double a0 = 0.0;             // initial agent count, >= 0
    double g = 0.0;              // initial growth, agents/year
    double accel = 0.0;          // growth acceleration, agents/year^2
    double relative_rate = 0.0;  // cached g / a0 (0 when a0 == 0)

    static AgentPath linear(double a0, double g);
    static AgentPath linear_accelerating(double a0, double g, double accel);
    // From fitted polynomial coefficients c0 + c1*t + c2*t^2 (accel = 2*c2).
    static AgentPath quadratic_coefficients(double c0, double c1, double c2);
};

// Relative frontier lead Delta(t) = delta0 * exp(-(t/tau)^beta_gap).
// A follower's AI efficiency is frontier / (1 + Delta(t)).
struct GapCurve {
    double delta0 = 0.0;    // initial relative gap, >= 0
    double tau = 1.0;       // catch-up time scale, > 0
    double beta_gap = 1.0;  // catch-up sharpness, > 0
};

// Full parameter bundle for one economy.
struct CountryProfile {
    std::string name;
    double population = 0.0;   // employed human population N
    double alpha = 0.5;        // labor output elasticity, in (0, 1)
    double capital = 0.0;      // total resource stock R, USD
    double phi_h = 0.0;        // human production efficiency (phi0 of model 1)
    double phi_a = 0.0;        // AI production efficiency
    double omega = 0.0;        // AI resource share, in [0, 1] (models 4-5)
    double human_share = 1.0;  // fraction of R kept by humans, (0, 1] (models 2-3)
    EnhancementParams enhancement;
    NetworkParams network;
    LogisticParams capability;
    AgentPath agents;

    void validate() const;  // throws DomainError on any violated invariant
};

// One evaluation of the dual-engine models. For models 1-3 the whole product
// sits in y_human and y_ai is zero, so the identity
//   y_total == y_human + y_ai * multiplier_network
// holds for every model.
struct OutputBreakdown {
    double y_total = 0.0;
    double y_human = 0.0;
    double y_ai = 0.0;
    double multiplier_network = 1.0;
};

// Partition of the resource stock between humans and AI agents.
// Invariant: human + ai == total, exactly, in floating point.
struct ResourceSplit {
    double human = 0.0;  // R_H
    double ai = 0.0;     // R_A
};

}  // namespace aiecon
