#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "aiecon/errors.hpp"

namespace aiecon {

struct SeriesPoint {
    double t = 0.0;
    double value = 0.0;
};

// Ordered (t, value) observations with strictly increasing t.
struct SeriesData {
    std::vector<SeriesPoint> points;
    std::string label;

    void validate() const;  // throws DataError on empty/unsorted/duplicate t
};

// Outcome of any fit: named parameters plus convergence diagnostics.
struct FitResult {
    std::vector<std::pair<std::string, double>> params;
    double residual_sum_squares = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> rss_trace;  // RSS after each accepted step

    double param(std::string_view name) const;  // throws ConfigError if absent
};

// Ordinary least squares for value = c0 + c1*t + c2*t^2 (params "c0","c1","c2").
// The design is centered on mean(t) before solving, so large calendar years
// do not wreck the conditioning of the normal equations.
FitResult fit_quadratic(const SeriesData& series);

// Damped Gauss-Newton fit of value = saturation / (1 + exp(-k*(t - t0)))
// with the saturation level pinned by the caller (params "k","t0").
// All values must lie strictly inside (0, saturation).
FitResult fit_logistic(const SeriesData& series, double saturation);

// Optional pins for the gap-curve fit.
struct GapPins {
    std::optional<double> delta0;
    std::optional<double> beta_gap;
};

// Fit Delta(t) = delta0 * exp(-(t/tau)^beta_gap) to decay anchors
// (params "delta0","tau","beta_gap"). With delta0 pinned this is exact in
// log-log space; fully free it is a 3-parameter nonlinear fit and needs at
// least three anchors.
FitResult fit_gap_curve(const SeriesData& anchors, const GapPins& pins = {});

}  // namespace aiecon
