#pragma once

// The three sufficient conditions for avoiding all bad events at once, in
// increasing order of strength: the classical product criterion, the
// independent-subset (cluster) refinement, and Shearer's signed criterion.
// Each check returns a full per-vertex certificate rather than a bare bool.

#include <optional>

#include "llx/fixedpoint.hpp"

namespace llx {

inline constexpr double kDefaultTolerance = 1e-9;

enum class Method { classical, improved, shearer };

inline const char* method_name(Method m) {
    switch (m) {
        case Method::classical: return "classical";
        case Method::improved: return "improved";
        case Method::shearer: return "shearer";
    }
    return "unknown";
}

struct VertexCheck {
    double p = 0.0;
    double radius = std::numeric_limits<double>::quiet_NaN();  // NaN for shearer
    double slack = std::numeric_limits<double>::quiet_NaN();   // radius - p
};

struct CertificateReport {
    Method method = Method::classical;
    bool holds = false;
    std::optional<double> lower_bound;      // on the avoid-everything probability
    std::optional<ActivityVector> mu;       // activities used; absent for shearer
    std::vector<VertexCheck> vertices;      // in graph vertex order
    std::optional<Vertex> worst_vertex;     // smallest slack (classical/improved)
    std::optional<double> min_subset_value; // shearer: the minimal signed value
    std::optional<VertexSet> worst_subset;  // shearer: a set attaining it
    double tolerance = kDefaultTolerance;
    std::optional<std::string> note;
};

// Per-vertex thresholds.  Each radius is the largest probability the
// corresponding criterion tolerates at x for the given activities.

inline double radius_classical(const DependencyGraph& g, Vertex x, const ActivityVector& mu) {
    return mu[x] / phi_classical(g, x, mu);
}

inline double radius_star(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                          const EnumLimits& limits = {}) {
    return mu[x] / phi_star(g, x, mu, limits);
}

inline double radius_bar(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                         const EnumLimits& limits = {}) {
    g.check_vertex(x);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    return 1.0 - std::pow(1.0 + mu[x], -1.0 / phi_tilde_star(g, x, mu, limits));
}

inline double radius_tilde_star(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                                const EnumLimits& limits = {}) {
    g.check_vertex(x);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    return mu[x] / ((1.0 + mu[x]) * phi_tilde_star(g, x, mu, limits));
}

struct RadiusChain {
    double classical = 0.0;
    double tilde_star = 0.0;
    double bar = 0.0;
    double star = 0.0;
};

// All four thresholds at once, ordered classical <= tilde_star <= bar <= star.
// The ordering is a theorem; a violation beyond rounding is a bug, hence the
// logic_error rather than an input error.
inline RadiusChain radius_chain(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                                const EnumLimits& limits = {}) {
    RadiusChain c;
    c.classical = radius_classical(g, x, mu);
    c.tilde_star = radius_tilde_star(g, x, mu, limits);
    c.bar = radius_bar(g, x, mu, limits);
    c.star = radius_star(g, x, mu, limits);
    const double slop = 1e-12;
    if (!(c.classical <= c.tilde_star + slop && c.tilde_star <= c.bar + slop &&
          c.bar <= c.star + slop))
        throw std::logic_error("radius chain ordering violated");
    return c;
}

namespace detail {

inline void finish_vertex_report(CertificateReport& report) {
    double worst = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < report.vertices.size(); ++i) {
        if (report.vertices[i].slack < worst) {
            worst = report.vertices[i].slack;
            report.worst_vertex = static_cast<Vertex>(i);
        }
    }
    report.holds = report.vertices.empty() || worst >= -report.tolerance;
}

}  // namespace detail

// Classical criterion: p_x <= mu_x / prod_{y in N*(x)} (1 + mu_y) everywhere.
// On success the avoid-everything probability is at least
// prod_x 1 / (1 + mu_x).
inline CertificateReport check_classical(const DependencyGraph& g, const ActivityVector& p,
                                         const ActivityVector& mu,
                                         double tolerance = kDefaultTolerance) {
    require_size(g, p, "p");
    require_probabilities(p, "p");
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    CertificateReport report;
    report.method = Method::classical;
    report.tolerance = tolerance;
    report.mu = mu;
    report.vertices.reserve(g.size());
    for (Vertex x = 0; x < g.size(); ++x) {
        double r = radius_classical(g, x, mu);
        report.vertices.push_back({p[x], r, r - p[x]});
    }
    detail::finish_vertex_report(report);
    if (report.holds) {
        double bound = 1.0;
        for (Vertex x = 0; x < g.size(); ++x) bound *= 1.0 / (1.0 + mu[x]);
        report.lower_bound = bound;
    }
    return report;
}

// Refined criterion: the normalizer only sums over independent subsets of the
// closed neighborhood, so the threshold is never smaller than the classical
// one.  On success the avoid-everything probability is at least
// prod_x (1 - p_x)^{phi_tilde_star(x)}.  Requires p < 1, otherwise the bound
// degenerates to zero.
inline CertificateReport check_improved(const DependencyGraph& g, const ActivityVector& p,
                                        const ActivityVector& mu,
                                        double tolerance = kDefaultTolerance,
                                        const EnumLimits& limits = {}) {
    require_size(g, p, "p");
    require_probabilities(p, "p", /*strictly_below_one=*/true);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    CertificateReport report;
    report.method = Method::improved;
    report.tolerance = tolerance;
    report.mu = mu;
    report.vertices.reserve(g.size());
    double bound = 1.0;
    for (Vertex x = 0; x < g.size(); ++x) {
        double tilde = phi_tilde_star(g, x, mu, limits);
        double r = mu[x] / (mu[x] + tilde);  // phi_star = mu_x + phi_tilde_star
        report.vertices.push_back({p[x], r, r - p[x]});
        bound *= std::pow(1.0 - p[x], tilde);
    }
    detail::finish_vertex_report(report);
    if (report.holds) report.lower_bound = bound;
    return report;
}

// Convenience path: search for activities with the fixed-point iteration
// first, then certify with them.  On a failed search the report simply does
// not hold and carries a note.
inline CertificateReport check_improved_auto(const DependencyGraph& g, const ActivityVector& p,
                                             double tolerance = kDefaultTolerance,
                                             double safety = 0.999,
                                             const FixedPointOptions& fp_opts = {},
                                             const EnumLimits& limits = {}) {
    FindMuResult fm = find_mu(g, p, safety, fp_opts, limits);
    if (fm.success) return check_improved(g, p, fm.mu, tolerance, limits);
    CertificateReport report;
    report.method = Method::improved;
    report.tolerance = tolerance;
    report.holds = false;
    report.vertices.reserve(g.size());
    for (Vertex x = 0; x < g.size(); ++x)
        report.vertices.push_back({p[x], std::numeric_limits<double>::quiet_NaN(),
                                   std::numeric_limits<double>::quiet_NaN()});
    report.note = std::string("activity search ") + verdict_name(fm.trace.verdict) + " after " +
                  std::to_string(fm.trace.iterations) + " iterations";
    return report;
}

struct ShearerLimits {
    std::size_t max_vertices = 14;  // the check walks all 2^n subsets
    EnumLimits enum_limits;
};

// Shearer's criterion: every signed subset value must be nonnegative.  This is
// the exact boundary of the certifiable region; on success the
// avoid-everything probability is at least the empty-set value, i.e. the
// partition function at -p.
inline CertificateReport check_shearer(const DependencyGraph& g, const ActivityVector& p,
                                       double tolerance = kDefaultTolerance,
                                       const ShearerLimits& limits = {}) {
    require_size(g, p, "p");
    require_probabilities(p, "p");
    if (g.size() > limits.max_vertices) {
        std::ostringstream os;
        os << "shearer check walks all subsets and is capped at " << limits.max_vertices
           << " vertices (graph has " << g.size()
           << "); raise the cap or use the improved criterion";
        throw resource_limit(os.str());
    }
    CertificateReport report;
    report.method = Method::shearer;
    report.tolerance = tolerance;
    report.vertices.reserve(g.size());
    for (Vertex x = 0; x < g.size(); ++x)
        report.vertices.push_back({p[x], std::numeric_limits<double>::quiet_NaN(),
                                   std::numeric_limits<double>::quiet_NaN()});

    double empty_value = 0.0;
    double min_value = std::numeric_limits<double>::infinity();
    VertexSet worst;
    const std::uint64_t n = g.size();
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s;
        for (std::uint64_t v = 0; v < n; ++v)
            if (mask & (std::uint64_t{1} << v)) s.push_back(static_cast<Vertex>(v));
        double value = shearer_P(g, p, s, limits.enum_limits);
        if (mask == 0) empty_value = value;
        if (value < min_value) {
            min_value = value;
            worst = s;
        }
    }
    report.min_subset_value = min_value;
    report.worst_subset = worst;
    report.holds = min_value >= -tolerance;
    if (report.holds) report.lower_bound = empty_value;
    return report;
}

}  // namespace llx
