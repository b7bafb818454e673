#pragma once

// Hard-core (independent-set) polynomials on a dependency graph: the
// neighborhood sums used by the certification criteria, the partition
// function, and Shearer's signed quantities.

#include <bit>
#include <cmath>
#include <cstdint>
#include <unordered_map>

#include "llx/graph.hpp"

namespace llx {

// One nonnegative weight per vertex, indexed like the graph.
using ActivityVector = std::vector<double>;

inline ActivityVector uniform_activities(std::size_t n, double value) {
    return ActivityVector(n, value);
}

inline void require_size(const DependencyGraph& g, const ActivityVector& v, const char* name) {
    if (v.size() != g.size()) {
        std::ostringstream os;
        os << name << " has " << v.size() << " entries but the graph has " << g.size()
           << " vertices";
        throw invalid_input(os.str());
    }
}

inline void require_nonnegative(const ActivityVector& v, const char* name) {
    for (double x : v)
        if (!(x >= 0.0)) {
            std::ostringstream os;
            os << name << " must be nonnegative and finite (got " << x << ")";
            throw invalid_input(os.str());
        }
}

// Probabilities live in [0,1]; some criteria additionally need p < 1.
inline void require_probabilities(const ActivityVector& v, const char* name,
                                  bool strictly_below_one = false) {
    for (double x : v) {
        if (!(x >= 0.0) || x > 1.0) {
            std::ostringstream os;
            os << name << " must lie in [0,1] (got " << x << ")";
            throw invalid_input(os.str());
        }
        if (strictly_below_one && x >= 1.0) {
            std::ostringstream os;
            os << name << " must lie strictly below 1 (got " << x << ")";
            throw invalid_input(os.str());
        }
    }
}

// Sum over the independent subsets R of `scope` of the product of w over R.
// The empty subset contributes 1.  Same traversal as
// for_each_independent_subset, with the running product carried along.
inline double weighted_independent_sum(const DependencyGraph& g, const VertexSet& scope,
                                       const ActivityVector& w, const EnumLimits& limits = {}) {
    g.check_set(scope);
    require_size(g, w, "weights");
    if (scope.size() > limits.max_scope) {
        std::ostringstream os;
        os << "enumeration scope of " << scope.size() << " vertices exceeds the cap of "
           << limits.max_scope;
        throw resource_limit(os.str());
    }
    std::vector<std::uint32_t> blocked(g.size(), 0);
    std::uint64_t visited = 0;
    double total = 0.0;
    auto step = [&](auto&& self, std::size_t from, double product) -> void {
        if (++visited > limits.max_visits)
            throw resource_limit("independent-subset enumeration exceeded the visit budget");
        total += product;
        for (std::size_t i = from; i < scope.size(); ++i) {
            Vertex v = scope[i];
            if (blocked[v] != 0) continue;
            for (Vertex u : g.neighborhood(v)) ++blocked[u];
            self(self, i + 1, product * w[v]);
            for (Vertex u : g.neighborhood(v)) --blocked[u];
        }
    };
    step(step, 0, 1.0);
    return total;
}

// Product of (1 + mu_y) over the closed neighborhood of x: the classical
// normalizer.  Counts every subset of the closed neighborhood, independent
// or not.
inline double phi_classical(const DependencyGraph& g, Vertex x, const ActivityVector& mu) {
    g.check_vertex(x);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    double out = 1.0 + mu[x];
    for (Vertex y : g.neighborhood(x)) out *= 1.0 + mu[y];
    return out;
}

// Sum of activity products over the independent subsets of the closed
// neighborhood of x.  Always between 1 + mu_x and phi_classical.
inline double phi_star(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                       const EnumLimits& limits = {}) {
    g.check_vertex(x);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    return weighted_independent_sum(g, g.closed_neighborhood(x), mu, limits);
}

// Same sum restricted to the open neighborhood of x.  An independent subset
// of the closed neighborhood containing x can only be {x}, so
// phi_star = mu_x + phi_tilde_star.
inline double phi_tilde_star(const DependencyGraph& g, Vertex x, const ActivityVector& mu,
                             const EnumLimits& limits = {}) {
    g.check_vertex(x);
    require_size(g, mu, "mu");
    require_nonnegative(mu, "mu");
    return weighted_independent_sum(g, g.neighborhood(x), mu, limits);
}

// Partition function of the hard-core model: sum of weight products over all
// independent subsets of the whole vertex set.  Direct enumeration; weights
// may be negative.
inline double partition_function(const DependencyGraph& g, const ActivityVector& w,
                                 const EnumLimits& limits = {}) {
    require_size(g, w, "weights");
    return weighted_independent_sum(g, g.vertices(), w, limits);
}

// Same value through the vertex-elimination recursion
//   Z(G) = Z(G - x) + w_x * Z(G - N*(x)),
// memoized on the surviving-vertex bitmask.  Serves as an independent check
// on the enumerator; limited to 64 vertices by the mask width.
inline double partition_function_elim(const DependencyGraph& g, const ActivityVector& w,
                                      const EnumLimits& limits = {}) {
    require_size(g, w, "weights");
    std::size_t n = g.size();
    if (n > 64) throw resource_limit("elimination recursion is limited to 64 vertices");
    if (n > limits.max_scope) {
        std::ostringstream os;
        os << "graph with " << n << " vertices exceeds the enumeration cap of "
           << limits.max_scope;
        throw resource_limit(os.str());
    }
    if (n == 0) return 1.0;
    std::vector<std::uint64_t> closed_mask(n);
    for (Vertex v = 0; v < n; ++v) {
        std::uint64_t m = std::uint64_t{1} << v;
        for (Vertex u : g.neighborhood(v)) m |= std::uint64_t{1} << u;
        closed_mask[v] = m;
    }
    std::unordered_map<std::uint64_t, double> memo;
    auto z = [&](auto&& self, std::uint64_t mask) -> double {
        if (mask == 0) return 1.0;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        auto x = static_cast<Vertex>(std::countr_zero(mask));
        double val = self(self, mask & ~(std::uint64_t{1} << x)) +
                     w[x] * self(self, mask & ~closed_mask[x]);
        memo.emplace(mask, val);
        return val;
    };
    std::uint64_t full = n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    return z(z, full);
}

// Masked probabilities: zero on s and on every neighbor of s, untouched
// elsewhere.
inline ActivityVector masked_activities(const DependencyGraph& g, const ActivityVector& p,
                                        const VertexSet& s) {
    require_size(g, p, "p");
    require_probabilities(p, "p");
    g.check_set(s);
    ActivityVector out = p;
    for (Vertex v : s) out[v] = 0.0;
    for (Vertex v : g.set_neighborhood(s)) out[v] = 0.0;
    return out;
}

// Shearer's signed quantity for the set s: the product of p over s times the
// partition function at the negated masked probabilities.  Subsets meeting the
// masked region contribute zero, so the enumeration runs over the unmasked
// vertices only.
inline double shearer_P(const DependencyGraph& g, const ActivityVector& p, const VertexSet& s,
                        const EnumLimits& limits = {}) {
    require_size(g, p, "p");
    require_probabilities(p, "p");
    g.check_set(s);
    double prefix = 1.0;
    for (Vertex v : s) prefix *= p[v];
    VertexSet masked = set_union(s, g.set_neighborhood(s));
    VertexSet scope = set_difference(g.vertices(), masked);
    ActivityVector neg(g.size());
    for (Vertex v = 0; v < g.size(); ++v) neg[v] = -p[v];
    return prefix * weighted_independent_sum(g, scope, neg, limits);
}

}  // namespace llx
