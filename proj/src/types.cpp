#include "aiecon/types.hpp"

namespace aiecon {

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw DomainError(msg);
}

double relative_rate_of(double a0, double g) { return a0 > 0.0 ? g / a0 : 0.0; }

}  // namespace

AgentPath AgentPath::linear(double a0, double g) {
    AgentPath p;
    p.kind = AgentPathKind::Linear;
    p.a0 = a0;
    p.g = g;
    p.relative_rate = relative_rate_of(a0, g);
    return p;
}

AgentPath AgentPath::linear_accelerating(double a0, double g, double accel) {
    AgentPath p;
    p.kind = AgentPathKind::LinearAccelerating;
    p.a0 = a0;
    p.g = g;
    p.accel = accel;
    p.relative_rate = relative_rate_of(a0, g);
    return p;
}

AgentPath AgentPath::quadratic_coefficients(double c0, double c1, double c2) {
    AgentPath p;
    p.kind = AgentPathKind::Quadratic;
    p.a0 = c0;
    p.g = c1;
    p.accel = 2.0 * c2;
    p.relative_rate = relative_rate_of(c0, c1);
    return p;
}

void CountryProfile::validate() const {
    const std::string head = "profile '" + name + "': ";
    require(population > 0.0, head + "population must be positive");
    require(capital > 0.0, head + "capital must be positive");
    require(alpha > 0.0 && alpha < 1.0, head + "alpha must lie in (0,1)");
    require(phi_h >= 0.0, head + "phi_h must be non-negative");
    require(phi_a >= 0.0, head + "phi_a must be non-negative");
    require(omega >= 0.0 && omega <= 1.0, head + "omega must lie in [0,1]");
    require(human_share > 0.0 && human_share <= 1.0, head + "human_share must lie in (0,1]");
    require(enhancement.gamma >= 0.0, head + "gamma must be non-negative");
    require(enhancement.beta_enh > 0.0 && enhancement.beta_enh <= 1.0,
            head + "beta_enh must lie in (0,1]");
    require(enhancement.delta >= 0.0, head + "delta must be non-negative");
    require(network.eta >= 0.0, head + "eta must be non-negative");
    require(capability.k > 0.0, head + "logistic k must be positive");
    require(agents.a0 >= 0.0, head + "agent path a0 must be non-negative");
}

}  // namespace aiecon
