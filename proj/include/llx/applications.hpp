#pragma once

// Three worked applications.  Each one builds the dependency graph of its bad
// events, certifies it with the improved criterion at the canonical uniform
// activities, and can sample the underlying experiment for an empirical
// cross-check.  The certificate verdict follows the closed-form worst-case
// threshold for the instance's parameters; the exact per-instance check on
// the constructed graph is attached as a diagnostic, since it can pass even
// when the worst-case threshold does not.

#include <map>
#include <set>

#include "llx/criteria.hpp"
#include "llx/montecarlo.hpp"
#include "llx/rng.hpp"

namespace llx {

namespace detail {

// Applications construct their own event graphs, whose closed neighborhoods
// decompose into a few cliques; enumeration over them stays polynomial even
// when the scope is large.  Keep the visit budget as the guard and open up
// the scope cap.
inline EnumLimits app_limits(const DependencyGraph& events) {
    EnumLimits limits;
    limits.max_scope = std::max<std::size_t>(limits.max_scope, events.size());
    return limits;
}

// Shared tail: run the improved criterion on the event graph at uniform
// activities, downgrade enumeration blow-ups to a note, and extract the
// certified lower bound when the worst-case verdict says there is one.
struct InstanceCheck {
    CertificateReport report;
    std::optional<double> lower_bound;  // filled only when `holds`
    std::optional<std::string> note;
};

inline InstanceCheck run_instance_check(const DependencyGraph& events, double p, double mu0,
                                        double tolerance, bool holds) {
    InstanceCheck out;
    try {
        out.report = check_improved(events, uniform_activities(events.size(), p),
                                    uniform_activities(events.size(), mu0), tolerance,
                                    app_limits(events));
        if (holds) {
            if (out.report.holds && out.report.lower_bound)
                out.lower_bound = out.report.lower_bound;
            else
                out.note = "instance bound unavailable despite worst-case pass";
        }
    } catch (const resource_limit& e) {
        out.report = CertificateReport{};
        out.report.method = Method::improved;
        out.report.tolerance = tolerance;
        out.report.vertices.assign(
            events.size(), VertexCheck{p, std::numeric_limits<double>::quiet_NaN(),
                                       std::numeric_limits<double>::quiet_NaN()});
        out.report.note = std::string("instance check skipped: ") + e.what();
        out.note = out.report.note;
    }
    return out;
}

}  // namespace detail

// ───────────────────────────── independent transversals ─────────────────────

// A graph together with a partition of its vertices into nonempty classes.
struct PartitionedGraph {
    DependencyGraph base;
    std::vector<VertexSet> classes;

    void validate() const {
        std::vector<char> seen(base.size(), 0);
        for (std::size_t c = 0; c < classes.size(); ++c) {
            base.check_set(classes[c]);
            if (classes[c].empty())
                throw invalid_input("class " + std::to_string(c + 1) + " is empty");
            for (Vertex v : classes[c]) {
                if (seen[v])
                    throw invalid_input("vertex '" + base.label(v) +
                                        "' appears in more than one class");
                seen[v] = 1;
            }
        }
        for (Vertex v = 0; v < base.size(); ++v)
            if (!seen[v])
                throw invalid_input("vertex '" + base.label(v) + "' belongs to no class");
    }

    std::size_t min_class_size() const {
        std::size_t s = std::numeric_limits<std::size_t>::max();
        for (const auto& c : classes) s = std::min(s, c.size());
        return classes.empty() ? 0 : s;
    }
};

// One bad event per cross-class edge of the (equalized) base graph: the event
// that both endpoints get picked.  Two events depend on each other exactly
// when their edges touch a common class.
struct TransversalModel {
    DependencyGraph events;
    double p = 0.0;        // 1/s^2: both endpoints of an edge chosen
    std::size_t s = 0;     // equalized class size
    std::size_t delta = 0; // max degree of the base graph
    DependencyGraph sample_graph;            // base restricted to the kept vertices
    std::vector<VertexSet> sample_classes;   // classes, re-indexed into sample_graph
    std::vector<std::pair<Vertex, Vertex>> cross_edges;           // event endpoints
    std::vector<std::pair<std::size_t, std::size_t>> edge_classes; // their class ids
};

inline TransversalModel build_transversal_dependency(const PartitionedGraph& pg) {
    pg.validate();
    if (pg.classes.empty()) throw invalid_input("partition has no classes");
    TransversalModel m;
    m.s = pg.min_class_size();
    m.delta = pg.base.max_degree();
    m.p = 1.0 / (static_cast<double>(m.s) * static_cast<double>(m.s));

    // Equalize class sizes: keep the lexicographically first s labels of each
    // class so that every transversal is drawn uniformly from s^n choices.
    VertexSet removed;
    for (const auto& cls : pg.classes) {
        std::vector<std::string> labels;
        for (Vertex v : cls) labels.push_back(pg.base.label(v));
        std::sort(labels.begin(), labels.end());
        for (std::size_t i = m.s; i < labels.size(); ++i)
            removed.push_back(pg.base.require(labels[i]));
    }
    removed = make_vertex_set(std::move(removed));
    m.sample_graph = pg.base.restricted(removed);

    std::vector<std::size_t> class_of(m.sample_graph.size(), 0);
    m.sample_classes.resize(pg.classes.size());
    for (std::size_t c = 0; c < pg.classes.size(); ++c) {
        for (Vertex v : pg.classes[c]) {
            auto kept = m.sample_graph.find(pg.base.label(v));
            if (!kept) continue;
            m.sample_classes[c].push_back(*kept);
            class_of[*kept] = c;
        }
        m.sample_classes[c] = make_vertex_set(std::move(m.sample_classes[c]));
    }

    for (Vertex u = 0; u < m.sample_graph.size(); ++u)
        for (Vertex v : m.sample_graph.neighborhood(u))
            if (v > u && class_of[u] != class_of[v]) {
                m.events.add_vertex(m.sample_graph.label(u) + "~" + m.sample_graph.label(v));
                m.cross_edges.emplace_back(u, v);
                m.edge_classes.emplace_back(class_of[u], class_of[v]);
            }

    auto touches = [&](std::size_t e, std::size_t cls) {
        return m.edge_classes[e].first == cls || m.edge_classes[e].second == cls;
    };
    for (std::size_t e = 0; e < m.cross_edges.size(); ++e)
        for (std::size_t f = e + 1; f < m.cross_edges.size(); ++f)
            if (touches(f, m.edge_classes[e].first) || touches(f, m.edge_classes[e].second))
                m.events.add_edge(static_cast<Vertex>(e), static_cast<Vertex>(f));

    // Structural guarantees behind the worst-case threshold: the closed event
    // neighborhood splits into two cliques (one per touched class) of at most
    // s*delta events each, so the degree stays below 2*s*delta.
    const std::size_t clique_cap = m.s * m.delta;
    for (std::size_t e = 0; e < m.cross_edges.size(); ++e) {
        std::size_t side_a = 0, side_b = 0;
        for (std::size_t f = 0; f < m.cross_edges.size(); ++f) {
            if (touches(f, m.edge_classes[e].first)) ++side_a;
            if (touches(f, m.edge_classes[e].second)) ++side_b;
        }
        if (side_a > clique_cap || side_b > clique_cap ||
            m.events.degree(static_cast<Vertex>(e)) >= 2 * clique_cap)
            throw std::logic_error("transversal event graph violates its structural bounds");
    }
    return m;
}

struct TransversalCheck {
    std::size_t s = 0;
    std::size_t delta = 0;
    std::size_t num_classes = 0;
    std::size_t num_events = 0;
    double p = 0.0;
    double mu0 = std::numeric_limits<double>::quiet_NaN();  // 1/(s*delta)
    bool threshold_holds = false;  // s >= 4*delta, as p <= 1/(4 s delta)
    bool trivial = false;          // no cross-class edges at all
    bool holds = false;
    double classical_threshold_s = 0.0;  // the comparable classical demand: s >= 2 e delta
    std::optional<double> lower_bound;
    CertificateReport instance_report;
    std::optional<std::string> note;
};

inline TransversalCheck check_transversal(const TransversalModel& m, std::size_t num_classes,
                                          double tolerance = kDefaultTolerance) {
    TransversalCheck out;
    out.s = m.s;
    out.delta = m.delta;
    out.num_classes = num_classes;
    out.num_events = m.events.size();
    out.p = m.p;
    out.trivial = m.events.size() == 0;
    out.classical_threshold_s = 2.0 * std::exp(1.0) * static_cast<double>(m.delta);
    if (m.delta > 0) {
        out.mu0 = 1.0 / (static_cast<double>(m.s) * static_cast<double>(m.delta));
        out.threshold_holds = out.p <= out.mu0 / 4.0 + tolerance;  // s >= 4*delta
    } else {
        out.threshold_holds = true;
    }
    out.holds = out.threshold_holds || out.trivial;

    double mu0 = m.delta > 0 ? out.mu0 : 0.0;
    auto inst = detail::run_instance_check(m.events, m.p, mu0, tolerance, out.holds);
    out.instance_report = std::move(inst.report);
    out.note = inst.note;
    if (out.holds) out.lower_bound = out.trivial ? std::optional<double>(1.0) : inst.lower_bound;
    return out;
}

inline TransversalCheck check_transversal(const PartitionedGraph& pg,
                                          double tolerance = kDefaultTolerance) {
    TransversalModel m = build_transversal_dependency(pg);
    return check_transversal(m, pg.classes.size(), tolerance);
}

struct TransversalSample {
    std::vector<Vertex> chosen;  // one vertex per class, sample_graph indices
    bool independent = false;
};

inline TransversalSample sample_transversal(const TransversalModel& m, Rng& rng) {
    TransversalSample sample;
    sample.chosen.reserve(m.sample_classes.size());
    for (const auto& cls : m.sample_classes)
        sample.chosen.push_back(cls[rng.below(cls.size())]);
    std::vector<char> picked(m.sample_graph.size(), 0);
    for (Vertex v : sample.chosen) picked[v] = 1;
    sample.independent = true;
    for (Vertex v : sample.chosen)
        for (Vertex u : m.sample_graph.neighborhood(v))
            if (picked[u]) {
                sample.independent = false;
                return sample;
            }
    return sample;
}

inline TransversalSample sample_transversal(const TransversalModel& m, std::uint64_t seed) {
    Rng rng = Rng::for_stream(seed, 0);
    return sample_transversal(m, rng);
}

inline MonteCarloSummary monte_carlo_transversal(const TransversalModel& m, std::uint64_t trials,
                                                 std::uint64_t seed) {
    return monte_carlo([&](Rng& rng) { return sample_transversal(m, rng).independent; }, trials,
                       seed);
}

// ─────────────────────────────── Latin transversals ─────────────────────────

struct IntegerMatrix {
    std::size_t n = 0;
    std::vector<long long> cells;  // row-major

    static IntegerMatrix from_rows(const std::vector<std::vector<long long>>& rows) {
        IntegerMatrix a;
        a.n = rows.size();
        for (const auto& row : rows) {
            if (row.size() != a.n)
                throw invalid_input("matrix must be square (row of length " +
                                    std::to_string(row.size()) + " in an order-" +
                                    std::to_string(a.n) + " matrix)");
            a.cells.insert(a.cells.end(), row.begin(), row.end());
        }
        return a;
    }

    long long at(std::size_t i, std::size_t j) const { return cells[i * n + j]; }

    // Largest number of cells sharing one value.
    std::size_t max_multiplicity() const {
        std::map<long long, std::size_t> counts;
        std::size_t k = 0;
        for (long long v : cells) k = std::max(k, ++counts[v]);
        return k;
    }
};

// Bad events are quadruples of cells (i,j), (i',j') in general position with
// equal values; a transversal hitting both cells cannot be Latin.  Events
// depend on each other when they share a row or a column index.
struct LatinModel {
    struct FourTuple {
        std::uint32_t row1, col1, row2, col2;  // row1 < row2, col1 != col2
    };
    std::vector<FourTuple> tuples;
    DependencyGraph events;
    double p = 0.0;     // 1/(n(n-1)): a random permutation hits both cells
    std::size_t n = 0;
    std::size_t k = 0;  // max multiplicity of a value
};

inline LatinModel build_latin_structures(const IntegerMatrix& a) {
    if (a.n < 2) throw invalid_input("latin transversals need a matrix of order at least 2");
    if (a.cells.size() != a.n * a.n) throw invalid_input("matrix cell count does not match order");
    LatinModel m;
    m.n = a.n;
    m.k = a.max_multiplicity();
    m.p = 1.0 / (static_cast<double>(a.n) * static_cast<double>(a.n - 1));

    std::map<long long, std::vector<std::pair<std::uint32_t, std::uint32_t>>> by_value;
    for (std::size_t i = 0; i < a.n; ++i)
        for (std::size_t j = 0; j < a.n; ++j)
            by_value[a.at(i, j)].emplace_back(static_cast<std::uint32_t>(i),
                                              static_cast<std::uint32_t>(j));
    for (const auto& [value, cells] : by_value) {
        (void)value;
        for (std::size_t x = 0; x < cells.size(); ++x)
            for (std::size_t y = x + 1; y < cells.size(); ++y) {
                auto [i1, j1] = cells[x];
                auto [i2, j2] = cells[y];
                if (i1 == i2 || j1 == j2) continue;
                if (i1 > i2) {
                    std::swap(i1, i2);
                    std::swap(j1, j2);
                }
                m.tuples.push_back({i1, j1, i2, j2});
            }
    }
    std::sort(m.tuples.begin(), m.tuples.end(), [](const auto& a_, const auto& b_) {
        return std::tie(a_.row1, a_.col1, a_.row2, a_.col2) <
               std::tie(b_.row1, b_.col1, b_.row2, b_.col2);
    });

    for (const auto& t : m.tuples) {
        std::ostringstream os;
        os << '(' << t.row1 + 1 << ',' << t.col1 + 1 << ',' << t.row2 + 1 << ',' << t.col2 + 1
           << ')';
        m.events.add_vertex(os.str());
    }
    auto shares = [](const LatinModel::FourTuple& a_, const LatinModel::FourTuple& b_) {
        return a_.row1 == b_.row1 || a_.row1 == b_.row2 || a_.row2 == b_.row1 ||
               a_.row2 == b_.row2 || a_.col1 == b_.col1 || a_.col1 == b_.col2 ||
               a_.col2 == b_.col1 || a_.col2 == b_.col2;
    };
    for (std::size_t x = 0; x < m.tuples.size(); ++x)
        for (std::size_t y = x + 1; y < m.tuples.size(); ++y)
            if (shares(m.tuples[x], m.tuples[y]))
                m.events.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));

    // Structural guarantees: the closed neighborhood of a tuple splits into
    // four cliques (same row1 / row2 / col1 / col2) of at most n*k tuples, so
    // the degree stays below 4*n*k.
    const std::size_t clique_cap = m.n * m.k;
    for (std::size_t x = 0; x < m.tuples.size(); ++x) {
        const auto& t = m.tuples[x];
        std::size_t group[4] = {0, 0, 0, 0};
        for (const auto& o : m.tuples) {
            if (o.row1 == t.row1 || o.row2 == t.row1) ++group[0];
            else if (o.row1 == t.row2 || o.row2 == t.row2) ++group[1];
            else if (o.col1 == t.col1 || o.col2 == t.col1) ++group[2];
            else if (o.col1 == t.col2 || o.col2 == t.col2) ++group[3];
        }
        bool caps_ok = group[0] <= clique_cap && group[1] <= clique_cap &&
                       group[2] <= clique_cap && group[3] <= clique_cap;
        if (!caps_ok || m.events.degree(static_cast<Vertex>(x)) >= 4 * clique_cap)
            throw std::logic_error("latin event graph violates its structural bounds");
    }
    return m;
}

struct LatinCheck {
    std::size_t n = 0;
    std::size_t k = 0;
    std::size_t num_events = 0;
    double p = 0.0;
    double mu0 = 0.0;                    // 1/(3nk)
    bool worst_case_holds = false;       // p <= 27/(256 n k), i.e. k <= 27(n-1)/256
    double worst_case_threshold_k = 0.0; // 27(n-1)/256
    bool trivial = false;                // no equal-value quadruples
    bool holds = false;
    std::optional<double> lower_bound;
    CertificateReport instance_report;
    std::optional<std::string> note;
};

inline LatinCheck check_latin(const IntegerMatrix& a, double tolerance = kDefaultTolerance) {
    LatinModel m = build_latin_structures(a);
    LatinCheck out;
    out.n = m.n;
    out.k = m.k;
    out.num_events = m.events.size();
    out.p = m.p;
    out.mu0 = 1.0 / (3.0 * static_cast<double>(m.n) * static_cast<double>(m.k));
    out.worst_case_threshold_k = 27.0 * static_cast<double>(m.n - 1) / 256.0;
    out.worst_case_holds =
        out.p <= 27.0 / (256.0 * static_cast<double>(m.n) * static_cast<double>(m.k)) + tolerance;
    out.trivial = m.tuples.empty();
    out.holds = out.worst_case_holds || out.trivial;

    auto inst = detail::run_instance_check(m.events, m.p, out.mu0, tolerance, out.holds);
    out.instance_report = std::move(inst.report);
    out.note = inst.note;
    if (out.holds) out.lower_bound = out.trivial ? std::optional<double>(1.0) : inst.lower_bound;
    return out;
}

struct LatinSample {
    std::vector<std::uint32_t> sigma;  // column chosen in each row
    bool is_latin = false;             // all selected values distinct
};

inline LatinSample sample_latin(const IntegerMatrix& a, Rng& rng) {
    LatinSample sample;
    sample.sigma = random_permutation(a.n, rng);
    std::vector<long long> values(a.n);
    for (std::size_t i = 0; i < a.n; ++i) values[i] = a.at(i, sample.sigma[i]);
    std::sort(values.begin(), values.end());
    sample.is_latin = std::adjacent_find(values.begin(), values.end()) == values.end();
    return sample;
}

inline LatinSample sample_latin(const IntegerMatrix& a, std::uint64_t seed) {
    Rng rng = Rng::for_stream(seed, 0);
    return sample_latin(a, rng);
}

inline MonteCarloSummary monte_carlo_latin(const IntegerMatrix& a, std::uint64_t trials,
                                           std::uint64_t seed) {
    return monte_carlo([&](Rng& rng) { return sample_latin(a, rng).is_latin; }, trials, seed);
}

// ──────────────────────────────────── k-SAT ─────────────────────────────────

// A CNF formula with uniform clause width.  Literals are signed 1-based
// variable indices, DIMACS style.
struct CnfFormula {
    std::uint32_t variables = 0;
    std::vector<std::vector<std::int32_t>> clauses;

    std::size_t width() const { return clauses.empty() ? 0 : clauses.front().size(); }

    std::size_t max_occurrences() const {
        std::vector<std::size_t> counts(variables + 1, 0);
        std::size_t n = 0;
        for (const auto& clause : clauses)
            for (std::int32_t lit : clause) n = std::max(n, ++counts[std::abs(lit)]);
        return n;
    }

    void validate() const {
        const std::size_t k = width();
        for (std::size_t c = 0; c < clauses.size(); ++c) {
            const auto& clause = clauses[c];
            if (clause.size() != k)
                throw invalid_input("clause " + std::to_string(c + 1) + " has width " +
                                    std::to_string(clause.size()) + " but the formula has width " +
                                    std::to_string(k));
            std::set<std::int32_t> vars;
            for (std::int32_t lit : clause) {
                if (lit == 0 || static_cast<std::uint32_t>(std::abs(lit)) > variables)
                    throw invalid_input("literal " + std::to_string(lit) + " in clause " +
                                        std::to_string(c + 1) + " is out of range");
                if (!vars.insert(std::abs(lit)).second)
                    throw invalid_input("clause " + std::to_string(c + 1) +
                                        " mentions variable " + std::to_string(std::abs(lit)) +
                                        " twice");
            }
        }
    }
};

struct KsatModel {
    DependencyGraph events;  // one vertex per clause; edges join clauses sharing a variable
    double p = 0.0;          // 2^-k: a uniform assignment violates a fixed clause
};

inline KsatModel build_ksat_dependency(const CnfFormula& f) {
    f.validate();
    KsatModel m;
    const std::size_t k = f.width();
    m.p = std::ldexp(1.0, -static_cast<int>(k));
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        m.events.add_vertex("c" + std::to_string(c + 1));

    std::vector<std::vector<Vertex>> by_var(f.variables + 1);
    for (std::size_t c = 0; c < f.clauses.size(); ++c)
        for (std::int32_t lit : f.clauses[c])
            by_var[std::abs(lit)].push_back(static_cast<Vertex>(c));
    std::set<std::pair<Vertex, Vertex>> edges;
    for (const auto& group : by_var)
        for (std::size_t x = 0; x < group.size(); ++x)
            for (std::size_t y = x + 1; y < group.size(); ++y)
                edges.emplace(std::min(group[x], group[y]), std::max(group[x], group[y]));
    for (auto [u, v] : edges) m.events.add_edge(u, v);

    // Structural guarantees: the closed neighborhood of a clause is covered by
    // one clique per variable (clauses sharing that variable), each of at most
    // N clauses, so the degree stays below k*N.
    if (!f.clauses.empty()) {
        const std::size_t N = f.max_occurrences();
        for (const auto& group : by_var)
            if (group.size() > N) throw std::logic_error("ksat occurrence count inconsistent");
        for (Vertex c = 0; c < m.events.size(); ++c)
            if (m.events.degree(c) >= k * N)
                throw std::logic_error("ksat event graph violates its structural bounds");
    }
    return m;
}

struct KsatCheck {
    std::size_t k = 0;
    std::size_t occurrences = 0;  // N: max occurrences of any variable
    std::size_t num_clauses = 0;
    std::size_t num_variables = 0;
    double p = 0.0;    // 2^-k
    double mu0 = 0.0;  // 1/((k-1) N)
    bool exact_holds = false;       // 2^-k <= mu0 / (1 + N mu0)^k
    bool simplified_holds = false;  // N <= 2^k/(e k)
    double exact_threshold_N = 0.0;       // 2^k (k-1)^{k-1} / k^k
    double simplified_threshold_N = 0.0;  // 2^k / (e k)
    bool trivial = false;                 // no clauses
    bool holds = false;                   // certifies satisfiability
    std::optional<double> lower_bound;    // on the uniform-assignment success rate
    CertificateReport instance_report;
    std::optional<std::string> note;
};

inline KsatCheck check_ksat(const CnfFormula& f, double tolerance = kDefaultTolerance) {
    KsatModel m = build_ksat_dependency(f);
    KsatCheck out;
    out.k = f.width();
    out.num_clauses = f.clauses.size();
    out.num_variables = f.variables;
    out.p = m.p;
    out.trivial = f.clauses.empty();
    if (out.trivial) {
        out.holds = true;
        out.lower_bound = 1.0;
        out.instance_report = check_improved(m.events, {}, {}, tolerance);
        return out;
    }
    if (out.k < 2)
        throw invalid_input("certification needs clause width at least 2 (got " +
                            std::to_string(out.k) + ")");
    const auto kd = static_cast<double>(out.k);
    out.occurrences = f.max_occurrences();
    const auto Nd = static_cast<double>(out.occurrences);
    out.mu0 = 1.0 / ((kd - 1.0) * Nd);
    out.exact_holds = out.p <= out.mu0 / std::pow(1.0 + Nd * out.mu0, kd) + tolerance;
    out.exact_threshold_N =
        std::exp(kd * std::log(2.0) + (kd - 1.0) * std::log(kd - 1.0) - kd * std::log(kd));
    out.simplified_threshold_N = std::exp(kd * std::log(2.0) - 1.0) / kd;
    out.simplified_holds = Nd <= out.simplified_threshold_N + tolerance;
    out.holds = out.exact_holds;

    auto inst = detail::run_instance_check(m.events, m.p, out.mu0, tolerance, out.holds);
    out.instance_report = std::move(inst.report);
    out.note = inst.note;
    if (out.holds) out.lower_bound = inst.lower_bound;
    return out;
}

struct KsatSample {
    std::vector<std::uint8_t> assignment;  // one bit per variable, 1-based
    bool satisfied = false;
};

inline KsatSample sample_ksat(const CnfFormula& f, Rng& rng) {
    KsatSample sample;
    sample.assignment.resize(f.variables + 1);
    for (std::uint32_t v = 1; v <= f.variables; ++v)
        sample.assignment[v] = static_cast<std::uint8_t>(rng.below(2));
    sample.satisfied = true;
    for (const auto& clause : f.clauses) {
        bool sat = false;
        for (std::int32_t lit : clause) {
            bool value = sample.assignment[std::abs(lit)] != 0;
            if ((lit > 0) == value) {
                sat = true;
                break;
            }
        }
        if (!sat) {
            sample.satisfied = false;
            break;
        }
    }
    return sample;
}

inline KsatSample sample_ksat(const CnfFormula& f, std::uint64_t seed) {
    Rng rng = Rng::for_stream(seed, 0);
    return sample_ksat(f, rng);
}

inline MonteCarloSummary monte_carlo_ksat(const CnfFormula& f, std::uint64_t trials,
                                          std::uint64_t seed) {
    return monte_carlo([&](Rng& rng) { return sample_ksat(f, rng).satisfied; }, trials, seed);
}

}  // namespace llx
