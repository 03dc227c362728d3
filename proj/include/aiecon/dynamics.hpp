#pragma once

#include "aiecon/types.hpp"

namespace aiecon {

// Logistic capability level s(t) in (0, 1). Total for finite t; saturates
// to 0/1 in floating point for |t - t0| large.
double capability(double t, const LogisticParams& lp);

// Agent population A(t) along a deterministic path. Requires t >= 0; throws
// PathError if the path dips below zero at the queried time.
double agent_count(double t, const AgentPath& path);

// Penetration p = agents / population. Throws DomainError when population
// is zero (and on negative inputs).
double penetration(double agents, double population);

// Stretched-exponential frontier gap Delta(t) = delta0 * exp(-(t/tau)^beta).
// Requires t >= 0; Delta(0) == delta0 exactly.
double gap(double t, const GapCurve& curve);

// Follower AI efficiency phi_a(t) = phi_a_frontier / (1 + Delta(t)).
// Approaches the frontier from below as the gap closes.
double phi_a_follower(double t, double phi_a_frontier, const GapCurve& curve);

}  // namespace aiecon
