#pragma once

// Seeded Monte Carlo estimation of the avoid-everything probability, used to
// sanity-check certificates empirically.

#include <cmath>

#include "llx/graph.hpp"
#include "llx/rng.hpp"

namespace llx {

struct WilsonInterval {
    double lower = 0.0;
    double upper = 1.0;
    double center = 0.0;
    double half_width = 0.0;
};

// Two-sided 99% Wilson score interval for a binomial proportion.
inline WilsonInterval wilson_score_99(std::uint64_t successes, std::uint64_t trials) {
    if (trials == 0) throw invalid_input("wilson interval needs at least one trial");
    // z = quantile of the standard normal at 0.995
    const double z = 2.5758293035489004;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(successes) / n;
    const double z2 = z * z;
    const double denom = 1.0 + z2 / n;
    WilsonInterval w;
    w.center = (phat + z2 / (2.0 * n)) / denom;
    w.half_width = (z / denom) * std::sqrt(phat * (1.0 - phat) / n + z2 / (4.0 * n * n));
    w.lower = std::max(0.0, w.center - w.half_width);
    w.upper = std::min(1.0, w.center + w.half_width);
    return w;
}

struct MonteCarloSummary {
    std::uint64_t trials = 0;
    std::uint64_t avoided = 0;  // trials where no bad event occurred
    double rate = 0.0;
    WilsonInterval wilson99;
    std::uint64_t seed = 0;
};

// Runs `avoided_all(rng)` once per trial.  Each trial draws from its own
// generator derived from (seed, trial index), so the estimate is reproducible
// bit for bit and independent of evaluation order.
template <typename Sampler>
MonteCarloSummary monte_carlo(Sampler&& avoided_all, std::uint64_t trials, std::uint64_t seed) {
    if (trials == 0) throw invalid_input("monte carlo needs at least one trial");
    MonteCarloSummary summary;
    summary.trials = trials;
    summary.seed = seed;
    for (std::uint64_t t = 0; t < trials; ++t) {
        Rng rng = Rng::for_stream(seed, t);
        if (avoided_all(rng)) ++summary.avoided;
    }
    summary.rate = static_cast<double>(summary.avoided) / static_cast<double>(trials);
    summary.wilson99 = wilson_score_99(summary.avoided, trials);
    return summary;
}

}  // namespace llx
