#pragma once

#include "aiecon/types.hpp"

namespace aiecon {

// phi * labor^alpha * capital^(1-alpha), evaluated via exp of a weighted log
// sum so intermediates stay bounded for capital ~1e14. Zero labor or capital
// yields zero output (the 0^alpha limit), never a NaN.
double cobb_douglas(double phi, double labor, double alpha, double capital);

// Model 1: pure human collaborative production, Y = phi0 * N^alpha * R^(1-alpha).
double model1_output(double population, double capital, double alpha, double phi0);

// Divide capital between humans and AI agents. The two parts sum back to
// capital exactly (bitwise), so downstream totals cannot leak resources.
ResourceSplit split_resources(double capital, double human_share);

// Model 2: AI as collaborators. Human output on the human resource share,
// amplified by the enhancement bracket; reduces to model 1 on R_H when
// gamma == 0.
double model2_output(const CountryProfile& p, double s);

// Network externality Theta = 1 + eta * (agents/population)^2.
double network_multiplier(double agents, double population, double eta);

// Model 3: model 2 scaled by the network multiplier.
double model3_output(const CountryProfile& p, double s, double agents);

// Model 4: AI agents as an independent production engine. Humans produce on
// (1-omega)*R, agents on omega*R boosted by capability; totals add.
OutputBreakdown model4_output(const CountryProfile& p, double s, double agents);

// Model 5: model 4 with the network multiplier applied to the AI engine.
OutputBreakdown model5_output(const CountryProfile& p, double s, double agents);

}  // namespace aiecon
