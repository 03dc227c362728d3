#include "aiecon/dynamics.hpp"

#include <cmath>
#include <string>

namespace aiecon {

namespace {

// Numerically stable logistic: never exponentiates a large positive argument.
double sigmoid(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

std::string with_time(const char* msg, double t) {
    return std::string(msg) + " (t=" + std::to_string(t) + ")";
}

}  // namespace

double capability(double t, const LogisticParams& lp) {
    return sigmoid(lp.k * (t - lp.t0));
}

double agent_count(double t, const AgentPath& path) {
    if (t < 0.0) throw DomainError(with_time("agent_count: t must be non-negative", t));
    double a = path.a0 + path.g * t;
    if (path.kind != AgentPathKind::Linear) a += 0.5 * path.accel * t * t;
    if (a < 0.0) throw PathError(with_time("agent_count: path fell below zero", t));
    return a;
}

double penetration(double agents, double population) {
    if (population == 0.0)
        throw DomainError("penetration: population is zero, ratio undefined");
    if (population < 0.0) throw DomainError("penetration: population must be positive");
    if (agents < 0.0) throw DomainError("penetration: agents must be non-negative");
    return agents / population;
}

double gap(double t, const GapCurve& curve) {
    if (t < 0.0) throw DomainError(with_time("gap: t must be non-negative", t));
    if (curve.delta0 < 0.0) throw DomainError("gap: delta0 must be non-negative");
    if (curve.tau <= 0.0) throw DomainError("gap: tau must be positive");
    if (curve.beta_gap <= 0.0) throw DomainError("gap: beta_gap must be positive");
    // pow(0, beta) == 0 for beta > 0, so gap(0) == delta0 exactly.
    return curve.delta0 * std::exp(-std::pow(t / curve.tau, curve.beta_gap));
}

double phi_a_follower(double t, double phi_a_frontier, const GapCurve& curve) {
    if (phi_a_frontier <= 0.0)
        throw DomainError("phi_a_follower: frontier efficiency must be positive");
    return phi_a_frontier / (1.0 + gap(t, curve));
}

}  // namespace aiecon
