#include "aiecon/fitting.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <functional>
#include <limits>

namespace aiecon {

void SeriesData::validate() const {
    if (points.empty()) throw DataError("series '" + label + "' is empty");
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!std::isfinite(points[i].t) || !std::isfinite(points[i].value))
            throw DataError("series '" + label + "' contains a non-finite entry");
        if (i > 0 && !(points[i].t > points[i - 1].t))
            throw DataError("series '" + label + "' must have strictly increasing t");
    }
}

double FitResult::param(std::string_view name) const {
    for (const auto& [key, value] : params)
        if (key == name) return value;
    throw ConfigError("fit result has no parameter named '" + std::string(name) + "'");
}

namespace {

constexpr int kMaxIterations = 200;
constexpr double kStepTolerance = 1e-10;
constexpr double kLambdaInit = 1e-3;
constexpr double kLambdaMax = 1e12;

// Solve a[n x n] x = b by Gaussian elimination with partial pivoting.
// Small fixed n (<= 3); returns false when a pivot is numerically zero.
bool solve_dense(int n, std::array<std::array<double, 3>, 3> a,
                 std::array<double, 3> b, std::array<double, 3>& x) {
    for (int col = 0; col < n; ++col) {
        int pivot = col;
        for (int row = col + 1; row < n; ++row)
            if (std::fabs(a[row][col]) > std::fabs(a[pivot][col])) pivot = row;
        if (std::fabs(a[pivot][col]) < 1e-300) return false;
        std::swap(a[col], a[pivot]);
        std::swap(b[col], b[pivot]);
        for (int row = col + 1; row < n; ++row) {
            const double f = a[row][col] / a[col][col];
            for (int k = col; k < n; ++k) a[row][k] -= f * a[col][k];
            b[row] -= f * b[col];
        }
    }
    for (int row = n - 1; row >= 0; --row) {
        double sum = b[row];
        for (int k = row + 1; k < n; ++k) sum -= a[row][k] * x[k];
        x[row] = sum / a[row][row];
    }
    for (int i = 0; i < n; ++i)
        if (!std::isfinite(x[i])) return false;
    return true;
}

// Model callbacks for the nonlinear solver: predicted value and the gradient
// of the prediction with respect to the free parameters.
struct NlsModel {
    std::function<double(double t, const std::array<double, 3>& p)> value;
    std::function<void(double t, const std::array<double, 3>& p,
                       std::array<double, 3>& grad)>
        gradient;
};

double rss_of(const std::vector<SeriesPoint>& pts, const NlsModel& model,
              const std::array<double, 3>& p) {
    double rss = 0.0;
    for (const SeriesPoint& pt : pts) {
        const double r = pt.value - model.value(pt.t, p);
        rss += r * r;
    }
    return rss;
}

struct NlsOutcome {
    std::array<double, 3> p{};
    double rss = 0.0;
    bool converged = false;
    int iterations = 0;
    std::vector<double> trace;
};

// Damped Gauss-Newton with a Levenberg-style multiplicative damping on the
// normal-equation diagonal. Steps that would raise the RSS are rejected and
// retried with ten times the damping; accepted steps relax it.
NlsOutcome damped_gauss_newton(const std::vector<SeriesPoint>& pts,
                               const NlsModel& model, int n_params,
                               std::array<double, 3> p0) {
    NlsOutcome out;
    out.p = p0;
    out.rss = rss_of(pts, model, out.p);
    out.trace.push_back(out.rss);

    double lambda = kLambdaInit;
    while (out.iterations < kMaxIterations && !out.converged) {
        ++out.iterations;

        std::array<std::array<double, 3>, 3> jtj{};
        std::array<double, 3> jtr{};
        std::array<double, 3> grad{};
        for (const SeriesPoint& pt : pts) {
            model.gradient(pt.t, out.p, grad);
            const double resid = pt.value - model.value(pt.t, out.p);
            for (int i = 0; i < n_params; ++i) {
                jtr[i] += grad[i] * resid;
                for (int j = 0; j < n_params; ++j) jtj[i][j] += grad[i] * grad[j];
            }
        }

        bool stepped = false;
        while (lambda <= kLambdaMax) {
            std::array<std::array<double, 3>, 3> damped = jtj;
            for (int i = 0; i < n_params; ++i) damped[i][i] = jtj[i][i] * (1.0 + lambda);
            std::array<double, 3> step{};
            if (!solve_dense(n_params, damped, jtr, step)) {
                lambda *= 10.0;
                continue;
            }
            std::array<double, 3> trial = out.p;
            for (int i = 0; i < n_params; ++i) trial[i] += step[i];
            const double trial_rss = rss_of(pts, model, trial);
            if (std::isfinite(trial_rss) && trial_rss <= out.rss) {
                double rel_step = 0.0;
                for (int i = 0; i < n_params; ++i)
                    rel_step = std::max(rel_step,
                                        std::fabs(step[i]) / (std::fabs(out.p[i]) + 1e-30));
                out.p = trial;
                out.rss = trial_rss;
                out.trace.push_back(out.rss);
                lambda = std::max(lambda / 3.0, 1e-12);
                stepped = true;
                if (rel_step < kStepTolerance) out.converged = true;
                break;
            }
            lambda *= 10.0;
        }
        // Damping exhausted without an acceptable step (singular Jacobian or
        // NaN region): stop and report the best point, not converged.
        if (!stepped) break;
    }
    return out;
}

double sigmoid(double z) {
    if (z >= 0.0) {
        const double e = std::exp(-z);
        return 1.0 / (1.0 + e);
    }
    const double e = std::exp(z);
    return e / (1.0 + e);
}

// Least-squares slope/intercept of y on x. Returns false when x has no
// variance (vertical design).
bool linear_regression(const std::vector<double>& x, const std::vector<double>& y,
                       double& slope, double& intercept) {
    const std::size_t n = x.size();
    double mx = 0.0, my = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i];
        my += y[i];
    }
    mx /= static_cast<double>(n);
    my /= static_cast<double>(n);
    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        sxx += (x[i] - mx) * (x[i] - mx);
        sxy += (x[i] - mx) * (y[i] - my);
    }
    if (sxx == 0.0) return false;
    slope = sxy / sxx;
    intercept = my - slope * mx;
    return true;
}

double gap_value(double t, double delta0, double tau, double beta) {
    return delta0 * std::exp(-std::pow(t / tau, beta));
}

}  // namespace

FitResult fit_quadratic(const SeriesData& series) {
    series.validate();
    const auto& pts = series.points;
    if (pts.size() < 3)
        throw FitError("quadratic fit needs at least 3 points, got " +
                       std::to_string(pts.size()));

    // Center t to keep the normal equations well conditioned for calendar
    // years or large offsets.
    double mean_t = 0.0;
    for (const SeriesPoint& pt : pts) mean_t += pt.t;
    mean_t /= static_cast<double>(pts.size());

    double s0 = 0, s1 = 0, s2 = 0, s3 = 0, s4 = 0;
    double b0 = 0, b1 = 0, b2 = 0;
    for (const SeriesPoint& pt : pts) {
        const double u = pt.t - mean_t;
        const double u2 = u * u;
        s0 += 1.0;
        s1 += u;
        s2 += u2;
        s3 += u2 * u;
        s4 += u2 * u2;
        b0 += pt.value;
        b1 += pt.value * u;
        b2 += pt.value * u2;
    }
    std::array<std::array<double, 3>, 3> a{{{s0, s1, s2}, {s1, s2, s3}, {s2, s3, s4}}};
    std::array<double, 3> rhs{b0, b1, b2};
    std::array<double, 3> c{};
    if (!solve_dense(3, a, rhs, c))
        throw FitError("quadratic fit: design is rank-deficient");

    // Un-center: c0 + c1*(t-m) + c2*(t-m)^2 expanded in t.
    const double c2 = c[2];
    const double c1 = c[1] - 2.0 * c[2] * mean_t;
    const double c0 = c[0] - c[1] * mean_t + c[2] * mean_t * mean_t;

    FitResult out;
    out.params = {{"c0", c0}, {"c1", c1}, {"c2", c2}};
    for (const SeriesPoint& pt : pts) {
        const double u = pt.t - mean_t;
        const double r = pt.value - (c[0] + c[1] * u + c[2] * u * u);
        out.residual_sum_squares += r * r;
    }
    out.converged = true;
    out.iterations = 1;
    out.rss_trace = {out.residual_sum_squares};
    return out;
}

FitResult fit_logistic(const SeriesData& series, double saturation) {
    series.validate();
    if (!(saturation > 0.0)) throw DomainError("logistic fit: saturation must be positive");
    const auto& pts = series.points;
    if (pts.size() < 2)
        throw FitError("logistic fit needs at least 2 points, got " +
                       std::to_string(pts.size()));
    for (const SeriesPoint& pt : pts)
        if (!(pt.value > 0.0 && pt.value < saturation))
            throw DomainError("logistic fit: values must lie strictly inside (0, saturation)");

    // Initial guess: t0 at the sample closest to half saturation, k from the
    // local slope there (ds/dt = k*sat/4 at the midpoint).
    std::size_t mid = 0;
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const double d = std::fabs(pts[i].value - 0.5 * saturation);
        if (d < best) {
            best = d;
            mid = i;
        }
    }
    const std::size_t lo = (mid == 0) ? 0 : mid - 1;
    const std::size_t hi = (mid + 1 < pts.size()) ? mid + 1 : mid;
    double k0 = 1.0 / (pts.back().t - pts.front().t);
    if (hi > lo) {
        const double slope = (pts[hi].value - pts[lo].value) / (pts[hi].t - pts[lo].t);
        if (slope > 0.0) k0 = 4.0 * slope / saturation;
    }
    const double t00 = pts[mid].t;

    NlsModel model;
    model.value = [saturation](double t, const std::array<double, 3>& p) {
        return saturation * sigmoid(p[0] * (t - p[1]));
    };
    model.gradient = [saturation](double t, const std::array<double, 3>& p,
                                  std::array<double, 3>& grad) {
        const double sig = sigmoid(p[0] * (t - p[1]));
        const double w = saturation * sig * (1.0 - sig);
        grad[0] = w * (t - p[1]);
        grad[1] = -w * p[0];
        grad[2] = 0.0;
    };

    const NlsOutcome sol = damped_gauss_newton(pts, model, 2, {k0, t00, 0.0});
    FitResult out;
    out.params = {{"k", sol.p[0]}, {"t0", sol.p[1]}};
    out.residual_sum_squares = sol.rss;
    out.converged = sol.converged && std::isfinite(sol.p[0]) && std::isfinite(sol.p[1]);
    out.iterations = sol.iterations;
    out.rss_trace = sol.trace;
    return out;
}

FitResult fit_gap_curve(const SeriesData& anchors, const GapPins& pins) {
    anchors.validate();
    const auto& pts = anchors.points;
    for (const SeriesPoint& pt : pts) {
        if (!(pt.value > 0.0)) throw DomainError("gap fit: anchors must be positive");
        if (pt.t < 0.0) throw DomainError("gap fit: anchor times must be non-negative");
    }
    const int free_params =
        3 - (pins.delta0 ? 1 : 0) - (pins.beta_gap ? 1 : 0);
    if (static_cast<int>(pts.size()) < free_params)
        throw FitError("gap fit is underdetermined: " + std::to_string(pts.size()) +
                       " anchors for " + std::to_string(free_params) +
                       " free parameters; pin delta0 or add anchors");
    if (pts.size() >= 2 && !(pts.back().value < pts.front().value))
        throw FitError("gap fit: anchors do not decay; a stretched exponential cannot fit them");
    if (pins.delta0 && !(*pins.delta0 > 0.0))
        throw DomainError("gap fit: pinned delta0 must be positive");
    if (pins.beta_gap && !(*pins.beta_gap > 0.0))
        throw DomainError("gap fit: pinned beta_gap must be positive");

    FitResult out;

    if (pins.delta0) {
        // ln(-ln(Delta/delta0)) = beta*ln t - beta*ln tau: exact linearization.
        const double d0 = *pins.delta0;
        std::vector<double> lt, lu;
        lt.reserve(pts.size());
        lu.reserve(pts.size());
        for (const SeriesPoint& pt : pts) {
            if (!(pt.t > 0.0))
                throw DomainError("gap fit: pinned-delta0 fit needs anchor times > 0");
            if (!(pt.value < d0))
                throw DomainError("gap fit: anchors must lie strictly below pinned delta0");
            lt.push_back(std::log(pt.t));
            lu.push_back(std::log(std::log(d0 / pt.value)));
        }
        double beta, ln_tau;
        if (pins.beta_gap) {
            beta = *pins.beta_gap;
            double m_lt = 0.0, m_lu = 0.0;
            for (std::size_t i = 0; i < lt.size(); ++i) {
                m_lt += lt[i];
                m_lu += lu[i];
            }
            m_lt /= static_cast<double>(lt.size());
            m_lu /= static_cast<double>(lu.size());
            ln_tau = m_lt - m_lu / beta;
        } else {
            double slope, intercept;
            if (!linear_regression(lt, lu, slope, intercept))
                throw FitError("gap fit: anchor times are not distinct in log space");
            if (!(slope > 0.0))
                throw FitError("gap fit: anchors imply non-positive beta_gap");
            beta = slope;
            ln_tau = -intercept / beta;
        }
        const double tau = std::exp(ln_tau);
        out.params = {{"delta0", d0}, {"tau", tau}, {"beta_gap", beta}};
        for (const SeriesPoint& pt : pts) {
            const double r = pt.value - gap_value(pt.t, d0, tau, beta);
            out.residual_sum_squares += r * r;
        }
        out.converged = std::isfinite(tau) && tau > 0.0 && beta > 0.0;
        out.iterations = 1;
        out.rss_trace = {out.residual_sum_squares};
        return out;
    }

    // delta0 free: nonlinear fit. Seed delta0 just above the largest anchor,
    // then seed (tau, beta) from the pinned-delta0 linearization.
    double max_v = 0.0;
    for (const SeriesPoint& pt : pts) max_v = std::max(max_v, pt.value);
    const double d0_init = 1.05 * max_v;
    double beta_init = pins.beta_gap ? *pins.beta_gap : 1.0;
    double tau_init = std::max(pts.back().t, 1.0);
    {
        std::vector<double> lt, lu;
        for (const SeriesPoint& pt : pts) {
            if (pt.t > 0.0 && pt.value < d0_init) {
                lt.push_back(std::log(pt.t));
                lu.push_back(std::log(std::log(d0_init / pt.value)));
            }
        }
        double slope, intercept;
        if (lt.size() >= 2 && linear_regression(lt, lu, slope, intercept) && slope > 0.0) {
            if (!pins.beta_gap) beta_init = slope;
            tau_init = std::exp(-intercept / slope);
        }
    }

    NlsModel model;
    const bool beta_fixed = pins.beta_gap.has_value();
    const double beta_pin = beta_fixed ? *pins.beta_gap : 0.0;
    model.value = [beta_fixed, beta_pin](double t, const std::array<double, 3>& p) {
        const double beta = beta_fixed ? beta_pin : p[2];
        return gap_value(t, p[0], p[1], beta);
    };
    model.gradient = [beta_fixed, beta_pin](double t, const std::array<double, 3>& p,
                                            std::array<double, 3>& grad) {
        const double beta = beta_fixed ? beta_pin : p[2];
        const double u = std::pow(t / p[1], beta);  // 0 at t == 0
        const double f = p[0] * std::exp(-u);
        grad[0] = std::exp(-u);
        grad[1] = f * beta * u / p[1];
        grad[2] = (beta_fixed || t <= 0.0) ? 0.0 : -f * u * std::log(t / p[1]);
    };

    const int n_free = beta_fixed ? 2 : 3;
    const NlsOutcome sol =
        damped_gauss_newton(pts, model, n_free, {d0_init, tau_init, beta_init});
    const double beta_out = beta_fixed ? beta_pin : sol.p[2];
    if (!(sol.p[0] > 0.0) || !(sol.p[1] > 0.0) || !(beta_out > 0.0))
        throw FitError("gap fit: solver left the admissible region (non-positive parameter)");

    out.params = {{"delta0", sol.p[0]}, {"tau", sol.p[1]}, {"beta_gap", beta_out}};
    out.residual_sum_squares = sol.rss;
    out.converged = sol.converged;
    out.iterations = sol.iterations;
    out.rss_trace = sol.trace;
    return out;
}

}  // namespace aiecon
