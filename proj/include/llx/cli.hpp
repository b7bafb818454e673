#pragma once

// Command-line front end.  Three subcommands:
//   check   - certify explicit probabilities on a dependency graph
//   app     - build and certify one of the worked applications
//   findmu  - search for certifying activities via the fixed-point iteration
// Exit codes: 0 the condition holds, 1 it fails, 2 bad input.  Stdout carries
// the JSON report; the human summary goes to stderr unless --json-only.

#include <cstdlib>
#include <iostream>

#include <CLI11.hpp>

#include "llx/io.hpp"

namespace llx {

struct RunConfig {
    std::string graph_path;
    std::string classes_path;
    std::string matrix_path;
    std::string cnf_path;
    std::string p_spec;
    std::string mu_spec = "auto";
    std::string method = "improved";
    std::string app_name;
    double tolerance = kDefaultTolerance;
    double safety = 0.999;
    std::uint64_t montecarlo_trials = 0;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::size_t max_vertices = 0;  // 0: keep the per-method defaults
    bool json_only = false;

    EnumLimits enum_limits() const {
        EnumLimits limits;
        if (max_vertices > 0) limits.max_scope = max_vertices;
        return limits;
    }

    ShearerLimits shearer_limits() const {
        ShearerLimits limits;
        if (max_vertices > 0) {
            limits.max_vertices = max_vertices;
            limits.enum_limits.max_scope = std::max(limits.enum_limits.max_scope, max_vertices);
        }
        return limits;
    }
};

namespace detail {

inline nlohmann::json parse_value_spec(const std::string& spec, const char* role) {
    if (!spec.empty() && spec.front() == '{') {
        try {
            return nlohmann::json::parse(spec);
        } catch (const nlohmann::json::exception& e) {
            throw invalid_input(std::string(role) + ": " + e.what());
        }
    }
    char* end = nullptr;
    double v = std::strtod(spec.c_str(), &end);
    if (end != spec.c_str() && end != nullptr && *end == '\0') return v;
    std::ifstream in(spec);
    if (!in)
        throw invalid_input(std::string(role) + " value '" + spec +
                            "' is neither a number, inline JSON, nor a readable file");
    try {
        nlohmann::json j;
        in >> j;
        return j;
    } catch (const nlohmann::json::exception& e) {
        throw invalid_input(spec + ": " + e.what());
    }
}

inline ActivityVector resolve_activities(const std::string& spec, const DependencyGraph& g,
                                         const char* role) {
    return parse_activities(parse_value_spec(spec, role), g, role);
}

inline CertificateReport failed_search_report(const DependencyGraph& g, const ActivityVector& p,
                                              Method method, double tolerance,
                                              const FixedPointTrace& trace) {
    CertificateReport report;
    report.method = method;
    report.tolerance = tolerance;
    report.holds = false;
    for (Vertex x = 0; x < g.size(); ++x)
        report.vertices.push_back({p[x], std::numeric_limits<double>::quiet_NaN(),
                                   std::numeric_limits<double>::quiet_NaN()});
    report.note = std::string("activity search ") + verdict_name(trace.verdict) + " after " +
                  std::to_string(trace.iterations) + " iterations";
    return report;
}

inline CertificateReport run_one_method(const DependencyGraph& g, const ActivityVector& p,
                                        Method method, const RunConfig& cfg) {
    if (method == Method::shearer) return check_shearer(g, p, cfg.tolerance, cfg.shearer_limits());
    if (cfg.mu_spec == "auto") {
        FindMuResult fm = find_mu(g, p, cfg.safety, {}, cfg.enum_limits());
        if (!fm.success) return failed_search_report(g, p, method, cfg.tolerance, fm.trace);
        return method == Method::classical
                   ? check_classical(g, p, fm.mu, cfg.tolerance)
                   : check_improved(g, p, fm.mu, cfg.tolerance, cfg.enum_limits());
    }
    ActivityVector mu = resolve_activities(cfg.mu_spec, g, "mu");
    return method == Method::classical
               ? check_classical(g, p, mu, cfg.tolerance)
               : check_improved(g, p, mu, cfg.tolerance, cfg.enum_limits());
}

inline void summarize_certificate(const CertificateReport& r, const DependencyGraph& g,
                                  std::ostream& out) {
    out << method_name(r.method) << ": ";
    if (r.holds) {
        out << "holds";
        if (r.lower_bound) out << " (avoid-everything probability >= " << *r.lower_bound << ")";
    } else if (r.note) {
        out << "fails (" << *r.note << ")";
    } else if (r.method == Method::shearer && r.min_subset_value) {
        out << "fails (min subset value " << *r.min_subset_value << ")";
    } else if (r.worst_vertex) {
        const VertexCheck& vc = r.vertices[*r.worst_vertex];
        out << "fails at vertex '" << g.label(*r.worst_vertex) << "' (p " << vc.p << " > radius "
            << vc.radius << ")";
    } else {
        out << "fails";
    }
    out << "\n";
}

inline int run_check(const RunConfig& cfg) {
    DependencyGraph g = load_graph(cfg.graph_path);
    ActivityVector p = resolve_activities(cfg.p_spec, g, "p");

    std::vector<Method> methods;
    if (cfg.method == "all")
        methods = {Method::classical, Method::improved, Method::shearer};
    else if (cfg.method == "classical")
        methods = {Method::classical};
    else if (cfg.method == "improved")
        methods = {Method::improved};
    else if (cfg.method == "shearer")
        methods = {Method::shearer};
    else
        throw invalid_input("unknown method '" + cfg.method + "'");

    bool any_holds = false;
    nlohmann::json reports = nlohmann::json::array();
    nlohmann::json single;
    for (Method m : methods) {
        nlohmann::json entry;
        try {
            CertificateReport r = run_one_method(g, p, m, cfg);
            any_holds = any_holds || r.holds;
            entry = certificate_to_json(r, g);
            if (!cfg.json_only) summarize_certificate(r, g, std::cerr);
        } catch (const resource_limit& e) {
            if (methods.size() == 1) throw;
            entry["method"] = method_name(m);
            entry["skipped"] = e.what();
            if (!cfg.json_only) std::cerr << method_name(m) << ": skipped (" << e.what() << ")\n";
        }
        reports.push_back(entry);
        single = entry;
    }

    if (methods.size() == 1) {
        std::cout << single.dump(2) << "\n";
    } else {
        nlohmann::json j;
        j["schema"] = kSchemaTag;
        j["method"] = "all";
        j["holds"] = any_holds;
        j["reports"] = std::move(reports);
        std::cout << j.dump(2) << "\n";
    }
    return any_holds ? 0 : 1;
}

inline int run_findmu(const RunConfig& cfg) {
    DependencyGraph g = load_graph(cfg.graph_path);
    ActivityVector p = resolve_activities(cfg.p_spec, g, "p");
    FindMuResult fm = find_mu(g, p, cfg.safety, {}, cfg.enum_limits());

    nlohmann::json j;
    j["schema"] = kSchemaTag;
    j["success"] = fm.success;
    j["safety"] = fm.safety;
    j["trace"] = trace_to_json(fm.trace, g);
    if (fm.success) {
        j["mu"] = activities_to_json(fm.mu, g);
        CertificateReport r = check_improved(g, p, fm.mu, cfg.tolerance, cfg.enum_limits());
        j["check"] = certificate_to_json(r, g);
        if (!cfg.json_only) {
            std::cerr << "found certifying activities after " << fm.trace.iterations
                      << " iterations\n";
            summarize_certificate(r, g, std::cerr);
        }
        std::cout << j.dump(2) << "\n";
        return r.holds ? 0 : 1;
    }
    if (!cfg.json_only)
        std::cerr << "activity search " << verdict_name(fm.trace.verdict) << " after "
                  << fm.trace.iterations << " iterations\n";
    std::cout << j.dump(2) << "\n";
    return 1;
}

inline int run_app(const RunConfig& cfg) {
    nlohmann::json j;
    bool holds = false;
    std::string summary;

    if (cfg.app_name == "transversal") {
        if (cfg.graph_path.empty() || cfg.classes_path.empty())
            throw invalid_input("transversal needs --graph and --classes");
        PartitionedGraph pg;
        pg.base = load_graph(cfg.graph_path);
        pg.classes = load_classes(cfg.classes_path, pg.base);
        TransversalModel m = build_transversal_dependency(pg);
        TransversalCheck c = check_transversal(m, pg.classes.size(), cfg.tolerance);
        j = transversal_check_to_json(c, m.events);
        if (cfg.montecarlo_trials > 0)
            j["montecarlo"] =
                montecarlo_to_json(monte_carlo_transversal(m, cfg.montecarlo_trials, cfg.seed));
        holds = c.holds;
        std::ostringstream os;
        os << "transversal: " << (holds ? "certified" : "not certified") << " (s=" << c.s
           << ", delta=" << c.delta << ", events=" << c.num_events << ")";
        summary = os.str();
    } else if (cfg.app_name == "latin") {
        if (cfg.matrix_path.empty()) throw invalid_input("latin needs --matrix");
        IntegerMatrix a = load_matrix_csv(cfg.matrix_path);
        LatinModel m = build_latin_structures(a);
        LatinCheck c = check_latin(a, cfg.tolerance);
        j = latin_check_to_json(c, m.events);
        if (cfg.montecarlo_trials > 0)
            j["montecarlo"] =
                montecarlo_to_json(monte_carlo_latin(a, cfg.montecarlo_trials, cfg.seed));
        holds = c.holds;
        std::ostringstream os;
        os << "latin: " << (holds ? "certified" : "not certified") << " (n=" << c.n
           << ", k=" << c.k << ", events=" << c.num_events << ")";
        summary = os.str();
    } else if (cfg.app_name == "ksat") {
        if (cfg.cnf_path.empty()) throw invalid_input("ksat needs --cnf");
        CnfFormula f = load_dimacs(cfg.cnf_path);
        KsatModel m = build_ksat_dependency(f);
        KsatCheck c = check_ksat(f, cfg.tolerance);
        j = ksat_check_to_json(c, m.events);
        if (cfg.montecarlo_trials > 0)
            j["montecarlo"] =
                montecarlo_to_json(monte_carlo_ksat(f, cfg.montecarlo_trials, cfg.seed));
        holds = c.holds;
        std::ostringstream os;
        os << "ksat: " << (holds ? "certified satisfiable" : "not certified") << " (k=" << c.k
           << ", occurrences=" << c.occurrences << ", clauses=" << c.num_clauses << ")";
        summary = os.str();
    } else {
        throw invalid_input("unknown application '" + cfg.app_name + "'");
    }

    if (!cfg.json_only) std::cerr << summary << "\n";
    std::cout << j.dump(2) << "\n";
    return holds ? 0 : 1;
}

}  // namespace detail

inline int run_cli(int argc, const char* const* argv) {
    CLI::App app{"certificates and bounds for avoiding bad events on a dependency graph"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--tol", cfg.tolerance, "comparison tolerance for the conditions");
        sub->add_option("--max-vertices", cfg.max_vertices,
                        "override the enumeration and subset-walk caps");
        sub->add_flag("--json-only", cfg.json_only, "suppress the human-readable summary");
    };

    CLI::App* check = app.add_subcommand("check", "certify probabilities on a dependency graph");
    check->add_option("--graph", cfg.graph_path, "edge-list or .json graph file")->required();
    check->add_option("--p", cfg.p_spec, "probabilities: number, inline JSON map, or JSON file")
        ->required();
    check->add_option("--mu", cfg.mu_spec,
                      "activities: number, inline JSON map, JSON file, or 'auto'");
    check->add_option("--method", cfg.method, "classical | improved | shearer | all");
    check->add_option("--safety", cfg.safety, "safety factor for --mu auto");
    add_common(check);

    CLI::App* findmu = app.add_subcommand("findmu", "search for certifying activities");
    findmu->add_option("--graph", cfg.graph_path, "edge-list or .json graph file")->required();
    findmu->add_option("--p", cfg.p_spec, "probabilities: number, inline JSON map, or JSON file")
        ->required();
    findmu->add_option("--safety", cfg.safety, "inflate targets by 1/safety before iterating");
    add_common(findmu);

    CLI::App* application = app.add_subcommand("app", "certify one of the worked applications");
    application->add_option("name", cfg.app_name, "transversal | latin | ksat")
        ->required()
        ->check(CLI::IsMember({"transversal", "latin", "ksat"}));
    application->add_option("--graph", cfg.graph_path, "edge-list or .json graph file");
    application->add_option("--classes", cfg.classes_path, "one class of labels per line");
    application->add_option("--matrix", cfg.matrix_path, "square integer matrix, CSV");
    application->add_option("--cnf", cfg.cnf_path, "DIMACS CNF file");
    auto* trials_opt = application->add_option("--montecarlo", cfg.montecarlo_trials,
                                               "number of sampling trials to run");
    auto* seed_opt = application->add_option("--seed", cfg.seed, "seed for the sampling trials");
    trials_opt->needs(seed_opt);
    add_common(application);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);  // prints help or the parse error
        return rc == 0 ? 0 : 2;
    }

    try {
        if (check->parsed()) return detail::run_check(cfg);
        if (findmu->parsed()) return detail::run_findmu(cfg);
        return detail::run_app(cfg);
    } catch (const invalid_input& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << nlohmann::json{{"schema", kSchemaTag}, {"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const resource_limit& e) {
        std::cerr << "error: " << e.what() << "\n";
        std::cout << nlohmann::json{{"schema", kSchemaTag}, {"error", e.what()}}.dump(2) << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace llx
