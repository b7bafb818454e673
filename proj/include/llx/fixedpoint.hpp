#pragma once

// Monotone fixed-point iteration for the activity map
//   T_x(nu) = rho_x * phi_star(x, nu),
// started from nu = 0.  When the iteration converges its limit is the
// smallest fixed point, and feeding that limit back in as mu makes every
// vertex satisfy rho_x = mu_x / phi_star(x, mu).

#include <limits>

#include "llx/hardcore.hpp"

namespace llx {

enum class FixedPointVerdict { converged, diverged, budget_exhausted };

inline const char* verdict_name(FixedPointVerdict v) {
    switch (v) {
        case FixedPointVerdict::converged: return "converged";
        case FixedPointVerdict::diverged: return "diverged";
        case FixedPointVerdict::budget_exhausted: return "budget_exhausted";
    }
    return "unknown";
}

struct FixedPointOptions {
    double tolerance = 1e-12;        // max-norm step size that counts as converged
    std::size_t max_iterations = 100000;
    double divergence_cap = 1e6;     // any component beyond this means divergence
    std::size_t growth_streak_limit = 50;  // consecutive residual increases ditto
    std::size_t trace_window = 32;   // iterates kept at each end of the trace
};

struct FixedPointTrace {
    FixedPointVerdict verdict = FixedPointVerdict::budget_exhausted;
    std::size_t iterations = 0;  // applications of T performed
    double residual = std::numeric_limits<double>::infinity();
    ActivityVector nu;           // final iterate; the fixed point when converged
    std::vector<ActivityVector> head;  // nu(0), nu(1), ... up to the window
    std::vector<ActivityVector> tail;  // trailing window when the middle is elided
    bool elided = false;
};

inline ActivityVector t_map(const DependencyGraph& g, const ActivityVector& rho,
                            const ActivityVector& nu, const EnumLimits& limits = {}) {
    require_size(g, rho, "rho");
    require_nonnegative(rho, "rho");
    require_size(g, nu, "nu");
    require_nonnegative(nu, "nu");
    ActivityVector out(g.size());
    for (Vertex x = 0; x < g.size(); ++x) out[x] = rho[x] * phi_star(g, x, nu, limits);
    return out;
}

inline FixedPointTrace iterate_t_map(const DependencyGraph& g, const ActivityVector& rho,
                                     const FixedPointOptions& opts = {},
                                     const EnumLimits& limits = {}) {
    require_size(g, rho, "rho");
    require_nonnegative(rho, "rho");
    FixedPointTrace trace;
    trace.nu = ActivityVector(g.size(), 0.0);

    std::vector<ActivityVector> ring;  // last trace_window iterates
    std::size_t ring_next = 0;
    std::size_t recorded = 0;
    auto record = [&](const ActivityVector& nu) {
        ++recorded;
        if (trace.head.size() < opts.trace_window) {
            trace.head.push_back(nu);
            return;
        }
        if (ring.size() < opts.trace_window) {
            ring.push_back(nu);
        } else if (!ring.empty()) {
            ring[ring_next] = nu;
            ring_next = (ring_next + 1) % ring.size();
        }
    };
    record(trace.nu);

    double prev_residual = std::numeric_limits<double>::infinity();
    std::size_t growth_streak = 0;
    for (std::size_t iter = 1; iter <= opts.max_iterations; ++iter) {
        ActivityVector next = t_map(g, rho, trace.nu, limits);
        double residual = 0.0;
        double largest = 0.0;
        for (std::size_t i = 0; i < next.size(); ++i) {
            residual = std::max(residual, std::abs(next[i] - trace.nu[i]));
            largest = std::max(largest, next[i]);
        }
        trace.nu = std::move(next);
        trace.iterations = iter;
        trace.residual = residual;
        record(trace.nu);

        if (largest > opts.divergence_cap) {
            trace.verdict = FixedPointVerdict::diverged;
            break;
        }
        if (residual <= opts.tolerance) {
            trace.verdict = FixedPointVerdict::converged;
            break;
        }
        if (residual > prev_residual) {
            if (++growth_streak >= opts.growth_streak_limit) {
                trace.verdict = FixedPointVerdict::diverged;
                break;
            }
        } else {
            growth_streak = 0;
        }
        prev_residual = residual;
    }

    if (!ring.empty()) {
        trace.elided = recorded > 2 * opts.trace_window;
        trace.tail.reserve(ring.size());
        for (std::size_t i = 0; i < ring.size(); ++i)
            trace.tail.push_back(ring[(ring_next + i) % ring.size()]);
    }
    return trace;
}

struct FindMuResult {
    bool success = false;
    ActivityVector mu;  // certifying activities when success
    FixedPointTrace trace;
    double safety = 1.0;
};

// Searches for activities that witness p via the fixed point of T with
// rho = p / safety.  A safety factor below 1 inflates the targets slightly,
// so the returned mu certifies p with strict slack.
inline FindMuResult find_mu(const DependencyGraph& g, const ActivityVector& p,
                            double safety = 0.999, const FixedPointOptions& opts = {},
                            const EnumLimits& limits = {}) {
    require_size(g, p, "p");
    require_probabilities(p, "p");
    if (!(safety > 0.0) || safety > 1.0)
        throw invalid_input("safety factor must lie in (0,1]");
    ActivityVector rho(g.size());
    for (std::size_t i = 0; i < rho.size(); ++i) rho[i] = p[i] / safety;
    FindMuResult result;
    result.safety = safety;
    result.trace = iterate_t_map(g, rho, opts, limits);
    result.success = result.trace.verdict == FixedPointVerdict::converged;
    if (result.success) result.mu = result.trace.nu;
    return result;
}

}  // namespace llx
