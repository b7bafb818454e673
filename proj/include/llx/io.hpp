#pragma once

// File formats and JSON serialization.  All reports carry the schema tag
// "llx/1"; parse failures throw invalid_input with "<source>:<line>: ..."
// messages.

#include <fstream>
#include <istream>
#include <sstream>

#include <json.hpp>

#include "llx/applications.hpp"

namespace llx {

inline constexpr const char* kSchemaTag = "llx/1";

namespace detail {

[[noreturn]] inline void parse_fail(std::string_view source, std::size_t line,
                                    const std::string& message) {
    std::ostringstream os;
    os << source << ":" << line << ": " << message;
    throw invalid_input(os.str());
}

inline std::vector<std::string> tokenize(const std::string& line) {
    std::istringstream is(line);
    std::vector<std::string> tokens;
    std::string tok;
    while (is >> tok) tokens.push_back(tok);
    return tokens;
}

}  // namespace detail

// ── graphs ──────────────────────────────────────────────────────────────────
//
// Edge-list format: one edge per line as two whitespace-separated labels.
// '#' starts a comment; "vertex <label>" declares an isolated vertex.
inline DependencyGraph parse_edge_list(std::istream& in, std::string_view source = "<input>") {
    DependencyGraph g;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        if (tokens[0] == "vertex") {
            if (tokens.size() != 2)
                detail::parse_fail(source, lineno, "expected 'vertex <label>'");
            if (g.find(tokens[1]))
                detail::parse_fail(source, lineno, "vertex '" + tokens[1] + "' declared twice");
            g.add_vertex(tokens[1]);
            continue;
        }
        if (tokens.size() != 2)
            detail::parse_fail(source, lineno, "expected two labels per edge line");
        if (tokens[0] == tokens[1])
            detail::parse_fail(source, lineno, "self-loop at '" + tokens[0] + "'");
        Vertex u = g.ensure_vertex(tokens[0]);
        Vertex v = g.ensure_vertex(tokens[1]);
        if (g.has_edge(u, v))
            detail::parse_fail(source, lineno,
                               "duplicate edge '" + tokens[0] + "' -- '" + tokens[1] + "'");
        g.add_edge(u, v);
    }
    return g;
}

// JSON format: {"vertices": [...], "edges": [[u, v], ...]} with labels given
// as strings or integers.  The vertices array is optional; when present it is
// authoritative and fixes the vertex order.
inline DependencyGraph parse_graph_json(const nlohmann::json& j) {
    if (!j.is_object()) throw invalid_input("graph json must be an object");
    auto as_label = [](const nlohmann::json& v) -> std::string {
        if (v.is_string()) return v.get<std::string>();
        if (v.is_number_integer()) return std::to_string(v.get<long long>());
        throw invalid_input("graph labels must be strings or integers");
    };
    DependencyGraph g;
    bool strict = j.contains("vertices");
    if (strict) {
        if (!j.at("vertices").is_array()) throw invalid_input("'vertices' must be an array");
        for (const auto& v : j.at("vertices")) {
            std::string label = as_label(v);
            if (g.find(label)) throw invalid_input("vertex '" + label + "' declared twice");
            g.add_vertex(label);
        }
    }
    if (j.contains("edges")) {
        if (!j.at("edges").is_array()) throw invalid_input("'edges' must be an array");
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2)
                throw invalid_input("each edge must be a two-element array");
            std::string a = as_label(e[0]);
            std::string b = as_label(e[1]);
            Vertex u = strict ? g.require(a) : g.ensure_vertex(a);
            Vertex v = strict ? g.require(b) : g.ensure_vertex(b);
            g.add_edge(u, v);  // rejects self-loops and duplicates
        }
    }
    return g;
}

inline DependencyGraph load_graph(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open graph file '" + path + "'");
    if (path.size() >= 5 && path.substr(path.size() - 5) == ".json") {
        nlohmann::json j;
        try {
            in >> j;
        } catch (const nlohmann::json::exception& e) {
            throw invalid_input(path + ": " + e.what());
        }
        try {
            return parse_graph_json(j);
        } catch (const invalid_input& e) {
            throw invalid_input(path + ": " + e.what());
        }
    }
    return parse_edge_list(in, path);
}

// ── vertex classes ──────────────────────────────────────────────────────────
//
// One class per line: whitespace-separated vertex labels; '#' comments.
inline std::vector<VertexSet> parse_classes(std::istream& in, const DependencyGraph& g,
                                            std::string_view source = "<input>") {
    std::vector<VertexSet> classes;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        auto tokens = detail::tokenize(line);
        if (tokens.empty()) continue;
        VertexSet cls;
        for (const auto& label : tokens) {
            auto v = g.find(label);
            if (!v) detail::parse_fail(source, lineno, "unknown vertex label '" + label + "'");
            cls.push_back(*v);
        }
        VertexSet sorted = make_vertex_set(cls);
        if (sorted.size() != cls.size())
            detail::parse_fail(source, lineno, "class repeats a vertex");
        classes.push_back(std::move(sorted));
    }
    return classes;
}

inline std::vector<VertexSet> load_classes(const std::string& path, const DependencyGraph& g) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open classes file '" + path + "'");
    return parse_classes(in, g, path);
}

// ── CNF (DIMACS) ────────────────────────────────────────────────────────────
inline CnfFormula parse_dimacs(std::istream& in, std::string_view source = "<input>") {
    CnfFormula f;
    bool have_header = false;
    std::size_t declared_clauses = 0;
    std::vector<std::int32_t> pending;
    std::string line;
    std::size_t lineno = 0;
    bool done = false;
    while (!done && std::getline(in, line)) {
        ++lineno;
        auto tokens = detail::tokenize(line);
        if (tokens.empty() || tokens[0] == "c") continue;
        if (tokens[0] == "%") break;  // conventional end marker
        if (tokens[0] == "p") {
            if (have_header) detail::parse_fail(source, lineno, "second header line");
            if (tokens.size() != 4 || tokens[1] != "cnf")
                detail::parse_fail(source, lineno, "expected 'p cnf <variables> <clauses>'");
            try {
                f.variables = static_cast<std::uint32_t>(std::stoul(tokens[2]));
                declared_clauses = std::stoul(tokens[3]);
            } catch (const std::exception&) {
                detail::parse_fail(source, lineno, "malformed header counts");
            }
            have_header = true;
            continue;
        }
        if (!have_header) detail::parse_fail(source, lineno, "clause before 'p cnf' header");
        for (const auto& tok : tokens) {
            std::int32_t lit = 0;
            try {
                lit = std::stoi(tok);
            } catch (const std::exception&) {
                detail::parse_fail(source, lineno, "malformed literal '" + tok + "'");
            }
            if (lit == 0) {
                if (pending.empty())
                    detail::parse_fail(source, lineno, "empty clause");
                f.clauses.push_back(pending);
                pending.clear();
                continue;
            }
            if (static_cast<std::uint32_t>(std::abs(lit)) > f.variables)
                detail::parse_fail(source, lineno,
                                   "literal " + tok + " exceeds the declared variable count");
            for (std::int32_t seen : pending) {
                if (seen == lit)
                    detail::parse_fail(source, lineno, "duplicate literal " + tok);
                if (seen == -lit)
                    detail::parse_fail(source, lineno,
                                       "clause contains both a literal and its negation");
            }
            pending.push_back(lit);
            if (!f.clauses.empty() && pending.size() > f.clauses.front().size())
                detail::parse_fail(source, lineno, "clause wider than the first clause");
        }
    }
    if (!have_header) detail::parse_fail(source, lineno, "missing 'p cnf' header");
    if (!pending.empty()) detail::parse_fail(source, lineno, "unterminated clause at end of file");
    if (f.clauses.size() != declared_clauses) {
        std::ostringstream os;
        os << "header declares " << declared_clauses << " clauses but the file has "
           << f.clauses.size();
        detail::parse_fail(source, lineno, os.str());
    }
    for (std::size_t c = 1; c < f.clauses.size(); ++c)
        if (f.clauses[c].size() != f.clauses.front().size())
            throw invalid_input(std::string(source) + ": clause " + std::to_string(c + 1) +
                                " has a different width than the first clause");
    f.validate();
    return f;
}

inline CnfFormula load_dimacs(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open cnf file '" + path + "'");
    return parse_dimacs(in, path);
}

// ── integer matrices (CSV) ──────────────────────────────────────────────────
inline IntegerMatrix parse_matrix_csv(std::istream& in, std::string_view source = "<input>") {
    std::vector<std::vector<long long>> rows;
    std::string line;
    std::size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (detail::tokenize(line).empty()) continue;
        std::vector<long long> row;
        std::istringstream is(line);
        std::string cell;
        while (std::getline(is, cell, ',')) {
            auto toks = detail::tokenize(cell);
            if (toks.size() != 1)
                detail::parse_fail(source, lineno, "malformed cell '" + cell + "'");
            try {
                row.push_back(std::stoll(toks[0]));
            } catch (const std::exception&) {
                detail::parse_fail(source, lineno, "cell '" + toks[0] + "' is not an integer");
            }
        }
        if (row.empty()) detail::parse_fail(source, lineno, "empty row");
        if (!rows.empty() && row.size() != rows.front().size())
            detail::parse_fail(source, lineno, "rows have differing lengths");
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw invalid_input(std::string(source) + ": matrix file is empty");
    if (rows.size() != rows.front().size())
        throw invalid_input(std::string(source) + ": matrix must be square");
    return IntegerMatrix::from_rows(rows);
}

inline IntegerMatrix load_matrix_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("cannot open matrix file '" + path + "'");
    return parse_matrix_csv(in, path);
}

// ── activity / probability vectors ──────────────────────────────────────────
//
// A vector is either a bare number (broadcast to every vertex) or an object
// mapping every vertex label to a number.
inline ActivityVector parse_activities(const nlohmann::json& j, const DependencyGraph& g,
                                       const char* role) {
    if (j.is_number()) return uniform_activities(g.size(), j.get<double>());
    if (j.is_object()) {
        ActivityVector out(g.size(), std::numeric_limits<double>::quiet_NaN());
        for (const auto& [label, value] : j.items()) {
            auto v = g.find(label);
            if (!v)
                throw invalid_input(std::string(role) + " mentions unknown vertex '" + label +
                                    "'");
            if (!value.is_number())
                throw invalid_input(std::string(role) + " entry for '" + label +
                                    "' is not a number");
            out[*v] = value.get<double>();
        }
        for (Vertex x = 0; x < g.size(); ++x)
            if (std::isnan(out[x]))
                throw invalid_input(std::string(role) + " is missing vertex '" + g.label(x) +
                                    "'");
        return out;
    }
    throw invalid_input(std::string(role) + " must be a number or a label-to-number object");
}

// ── JSON reports ────────────────────────────────────────────────────────────

inline nlohmann::json activities_to_json(const ActivityVector& v, const DependencyGraph& g) {
    nlohmann::json out = nlohmann::json::object();
    for (Vertex x = 0; x < g.size(); ++x) out[g.label(x)] = v[x];
    return out;
}

inline nlohmann::json labels_to_json(const VertexSet& s, const DependencyGraph& g) {
    nlohmann::json out = nlohmann::json::array();
    for (Vertex v : s) out.push_back(g.label(v));
    return out;
}

inline nlohmann::json certificate_to_json(const CertificateReport& r, const DependencyGraph& g) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["method"] = method_name(r.method);
    j["holds"] = r.holds;
    j["tolerance"] = r.tolerance;
    j["lower_bound"] = r.lower_bound ? nlohmann::json(*r.lower_bound) : nlohmann::json(nullptr);
    if (r.mu) j["mu"] = activities_to_json(*r.mu, g);
    nlohmann::json vertices = nlohmann::json::array();
    for (Vertex x = 0; x < g.size(); ++x) {
        const VertexCheck& vc = r.vertices[x];
        nlohmann::json entry;
        entry["label"] = g.label(x);
        entry["p"] = vc.p;
        entry["radius"] = std::isnan(vc.radius) ? nlohmann::json(nullptr) : nlohmann::json(vc.radius);
        entry["slack"] = std::isnan(vc.slack) ? nlohmann::json(nullptr) : nlohmann::json(vc.slack);
        vertices.push_back(std::move(entry));
    }
    j["vertices"] = std::move(vertices);
    if (r.worst_vertex) j["worst_vertex"] = g.label(*r.worst_vertex);
    if (r.min_subset_value) j["min_subset_value"] = *r.min_subset_value;
    if (r.worst_subset) j["worst_subset"] = labels_to_json(*r.worst_subset, g);
    if (r.note) j["note"] = *r.note;
    return j;
}

inline nlohmann::json trace_to_json(const FixedPointTrace& t, const DependencyGraph& g) {
    nlohmann::json j;
    j["verdict"] = verdict_name(t.verdict);
    j["iterations"] = t.iterations;
    j["residual"] = t.residual;
    j["nu"] = activities_to_json(t.nu, g);
    auto dump_list = [&](const std::vector<ActivityVector>& list) {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto& nu : list) arr.push_back(activities_to_json(nu, g));
        return arr;
    };
    j["iterates"] = dump_list(t.head);
    if (t.elided) {
        j["iterates_elided"] = true;
        j["trailing_iterates"] = dump_list(t.tail);
    }
    return j;
}

inline nlohmann::json montecarlo_to_json(const MonteCarloSummary& s) {
    nlohmann::json j;
    j["trials"] = s.trials;
    j["seed"] = s.seed;
    j["avoided"] = s.avoided;
    j["rate"] = s.rate;
    j["wilson99"] = {{"lower", s.wilson99.lower},
                     {"upper", s.wilson99.upper},
                     {"center", s.wilson99.center},
                     {"half_width", s.wilson99.half_width}};
    return j;
}

namespace detail {

inline nlohmann::json optional_number(const std::optional<double>& v) {
    return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

inline nlohmann::json finite_or_null(double v) {
    return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace detail

inline nlohmann::json transversal_check_to_json(const TransversalCheck& c,
                                                const DependencyGraph& events) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["application"] = "transversal";
    j["holds"] = c.holds;
    j["parameters"] = {{"s", c.s},
                       {"delta", c.delta},
                       {"classes", c.num_classes},
                       {"events", c.num_events}};
    j["p"] = c.p;
    j["mu0"] = detail::finite_or_null(c.mu0);
    j["thresholds"] = {{"worst_case_holds", c.threshold_holds},
                       {"required_s", 4.0 * static_cast<double>(c.delta)},
                       {"classical_required_s", c.classical_threshold_s}};
    j["trivial"] = c.trivial;
    j["lower_bound"] = detail::optional_number(c.lower_bound);
    j["instance_check"] = certificate_to_json(c.instance_report, events);
    if (c.note) j["note"] = *c.note;
    return j;
}

inline nlohmann::json latin_check_to_json(const LatinCheck& c, const DependencyGraph& events) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["application"] = "latin";
    j["holds"] = c.holds;
    j["parameters"] = {{"n", c.n}, {"k", c.k}, {"events", c.num_events}};
    j["p"] = c.p;
    j["mu0"] = c.mu0;
    j["thresholds"] = {{"worst_case_holds", c.worst_case_holds},
                       {"max_k", c.worst_case_threshold_k}};
    j["trivial"] = c.trivial;
    j["lower_bound"] = detail::optional_number(c.lower_bound);
    j["instance_check"] = certificate_to_json(c.instance_report, events);
    if (c.note) j["note"] = *c.note;
    return j;
}

inline nlohmann::json ksat_check_to_json(const KsatCheck& c, const DependencyGraph& events) {
    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["application"] = "ksat";
    j["holds"] = c.holds;
    j["satisfiable"] = c.holds;  // a pass certifies satisfiability
    j["parameters"] = {{"k", c.k},
                       {"occurrences", c.occurrences},
                       {"clauses", c.num_clauses},
                       {"variables", c.num_variables}};
    j["p"] = c.p;
    j["mu0"] = c.mu0;
    j["thresholds"] = {{"exact_holds", c.exact_holds},
                       {"simplified_holds", c.simplified_holds},
                       {"exact_max_occurrences", c.exact_threshold_N},
                       {"simplified_max_occurrences", c.simplified_threshold_N}};
    j["trivial"] = c.trivial;
    j["lower_bound"] = detail::optional_number(c.lower_bound);
    j["instance_check"] = certificate_to_json(c.instance_report, events);
    if (c.note) j["note"] = *c.note;
    return j;
}

}  // namespace llx
