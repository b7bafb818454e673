#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "llx/applications.hpp"
#include "oracles.hpp"

using namespace llx;
using Catch::Approx;

namespace {

// Two classes of size s, with cross edges a_i - b_{i+shift} for each listed
// shift; every vertex then has degree = number of shifts.
PartitionedGraph two_class_instance(std::size_t s, const std::vector<std::size_t>& shifts) {
    PartitionedGraph pg;
    VertexSet left, right;
    for (std::size_t i = 0; i < s; ++i)
        left.push_back(pg.base.add_vertex("a" + std::to_string(i + 1)));
    for (std::size_t i = 0; i < s; ++i)
        right.push_back(pg.base.add_vertex("b" + std::to_string(i + 1)));
    for (std::size_t shift : shifts)
        for (std::size_t i = 0; i < s; ++i)
            pg.base.add_edge(left[i], right[(i + shift) % s]);
    pg.classes = {left, right};
    return pg;
}

// N clauses of width k that all share variable 1 and are otherwise disjoint.
CnfFormula shared_variable_formula(std::size_t k, std::size_t N) {
    CnfFormula f;
    f.variables = static_cast<std::uint32_t>(1 + N * (k - 1));
    std::int32_t next = 2;
    for (std::size_t c = 0; c < N; ++c) {
        std::vector<std::int32_t> clause{1};
        for (std::size_t i = 1; i < k; ++i) clause.push_back(next++);
        f.clauses.push_back(std::move(clause));
    }
    return f;
}

// Order-n matrix with distinct entries except for one value planted k times
// along the diagonal (pairwise distinct rows and columns).
IntegerMatrix planted_matrix(std::size_t n, std::size_t k) {
    IntegerMatrix a;
    a.n = n;
    a.cells.resize(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            a.cells[i * n + j] = static_cast<long long>(i * n + j + 1);
    for (std::size_t i = 0; i < k; ++i) a.cells[i * n + i] = -1;
    return a;
}

}  // namespace

// ───────────────────────────── independent transversals ─────────────────────

TEST_CASE("transversal model construction") {
    SECTION("single cross edge") {
        PartitionedGraph pg = two_class_instance(4, {});
        pg.base.add_edge(pg.base.require("a1"), pg.base.require("b1"));
        TransversalModel m = build_transversal_dependency(pg);
        CHECK(m.s == 4);
        CHECK(m.delta == 1);
        CHECK(m.p == Approx(1.0 / 16.0));
        CHECK(m.events.size() == 1);
        CHECK(m.events.label(0) == "a1~b1");
    }

    SECTION("intra-class edges produce no events") {
        PartitionedGraph pg = two_class_instance(3, {});
        pg.base.add_edge(pg.base.require("a1"), pg.base.require("a2"));
        TransversalModel m = build_transversal_dependency(pg);
        CHECK(m.events.size() == 0);
        TransversalCheck c = check_transversal(pg);
        CHECK(c.trivial);
        CHECK(c.holds);
        CHECK(*c.lower_bound == 1.0);
    }

    SECTION("events sharing a class are adjacent") {
        PartitionedGraph pg = two_class_instance(4, {0, 1});  // degree-2 cycle
        TransversalModel m = build_transversal_dependency(pg);
        CHECK(m.events.size() == 8);
        // every pair of events touches both classes here, so H is complete
        CHECK(m.events.edge_count() == 8 * 7 / 2);
    }

    SECTION("unequal classes are truncated to the lexicographically first labels") {
        PartitionedGraph pg;
        Vertex x = pg.base.add_vertex("x");
        Vertex z = pg.base.add_vertex("z");
        Vertex y = pg.base.add_vertex("y");
        pg.base.add_edge(x, z);
        pg.base.add_edge(x, y);
        pg.classes = {VertexSet{x}, VertexSet{z, y}};
        TransversalModel m = build_transversal_dependency(pg);
        CHECK(m.s == 1);
        CHECK(m.sample_graph.size() == 2);
        CHECK(m.sample_graph.find("y").has_value());  // 'y' sorts before 'z'
        CHECK_FALSE(m.sample_graph.find("z").has_value());
        CHECK(m.events.size() == 1);  // only x~y survives
    }

    SECTION("partition validation") {
        PartitionedGraph pg = two_class_instance(2, {0});
        pg.classes[1] = pg.classes[0];  // overlap
        CHECK_THROWS_AS(build_transversal_dependency(pg), invalid_input);
        PartitionedGraph pg2 = two_class_instance(2, {0});
        pg2.classes.pop_back();  // b's now uncovered
        CHECK_THROWS_AS(build_transversal_dependency(pg2), invalid_input);
    }
}

TEST_CASE("transversal certification threshold") {
    SECTION("s = 4*delta passes with equality") {
        for (std::size_t delta = 1; delta <= 3; ++delta) {
            std::vector<std::size_t> shifts(delta);
            std::iota(shifts.begin(), shifts.end(), 0);
            TransversalCheck c = check_transversal(two_class_instance(4 * delta, shifts));
            CHECK(c.delta == delta);
            CHECK(c.threshold_holds);
            CHECK(c.holds);
            REQUIRE(c.lower_bound.has_value());
            CHECK(*c.lower_bound > 0.0);
            CHECK(c.instance_report.holds);
        }
    }
    SECTION("s = 4*delta - 1 fails") {
        for (std::size_t delta = 1; delta <= 3; ++delta) {
            std::vector<std::size_t> shifts(delta);
            std::iota(shifts.begin(), shifts.end(), 0);
            TransversalCheck c = check_transversal(two_class_instance(4 * delta - 1, shifts));
            CHECK_FALSE(c.threshold_holds);
            CHECK_FALSE(c.holds);
            CHECK_FALSE(c.lower_bound.has_value());
        }
    }
    SECTION("the comparable classical demand is steeper") {
        TransversalCheck c = check_transversal(two_class_instance(4, {0}));
        CHECK(c.classical_threshold_s == Approx(2.0 * std::exp(1.0)));
        CHECK(4.0 < c.classical_threshold_s);  // 4*delta beats 2e*delta for delta = 1
    }
}

TEST_CASE("transversal event graph structure on random instances") {
    Rng rng(8086);
    for (int trial = 0; trial < 15; ++trial) {
        std::size_t classes = 2 + rng.below(3);
        std::size_t size = 2 + rng.below(4);
        PartitionedGraph pg;
        std::vector<VertexSet> cls(classes);
        for (std::size_t c = 0; c < classes; ++c)
            for (std::size_t i = 0; i < size; ++i)
                cls[c].push_back(
                    pg.base.add_vertex("c" + std::to_string(c) + "_" + std::to_string(i)));
        for (Vertex u = 0; u < pg.base.size(); ++u)
            for (Vertex v = u + 1; v < pg.base.size(); ++v)
                if (rng.next_double() < 0.25) pg.base.add_edge(u, v);
        pg.classes = cls;
        // the builder asserts the clique-cover shape internally
        TransversalModel m = build_transversal_dependency(pg);
        for (Vertex e = 0; e < m.events.size(); ++e)
            CHECK(m.events.degree(e) < 2 * m.s * m.delta);
    }
}

TEST_CASE("transversal sampling") {
    PartitionedGraph pg = two_class_instance(4, {});
    pg.base.add_edge(pg.base.require("a1"), pg.base.require("b1"));
    TransversalModel m = build_transversal_dependency(pg);

    SECTION("samples are reproducible") {
        TransversalSample s1 = sample_transversal(m, std::uint64_t{42});
        TransversalSample s2 = sample_transversal(m, std::uint64_t{42});
        CHECK(s1.chosen == s2.chosen);
        CHECK(s1.independent == s2.independent);
    }

    SECTION("empirical rate near the exact 15/16") {
        CHECK(oracle::exact_avoid_transversal(m) == Approx(15.0 / 16.0));
        MonteCarloSummary mc = monte_carlo_transversal(m, 5000, 2718);
        CHECK(std::abs(mc.rate - 15.0 / 16.0) < 0.015);
        CHECK(mc.wilson99.lower <= 15.0 / 16.0);
        CHECK(15.0 / 16.0 <= mc.wilson99.upper);
    }

    SECTION("monte carlo is bit reproducible") {
        MonteCarloSummary a = monte_carlo_transversal(m, 400, 99);
        MonteCarloSummary b = monte_carlo_transversal(m, 400, 99);
        CHECK(a.avoided == b.avoided);
        CHECK(a.rate == b.rate);
        MonteCarloSummary c = monte_carlo_transversal(m, 400, 100);
        CHECK((a.avoided != c.avoided || a.rate == c.rate));  // different seed may differ
    }
}

// ─────────────────────────────── Latin transversals ─────────────────────────

TEST_CASE("latin model construction") {
    SECTION("order-2 exchange matrix has two adjacent events") {
        IntegerMatrix a = IntegerMatrix::from_rows({{1, 2}, {2, 1}});
        LatinModel m = build_latin_structures(a);
        CHECK(m.n == 2);
        CHECK(m.k == 2);
        CHECK(m.p == Approx(0.5));
        REQUIRE(m.tuples.size() == 2);
        CHECK(m.events.label(0) == "(1,1,2,2)");
        CHECK(m.events.label(1) == "(1,2,2,1)");
        CHECK(m.events.has_edge(0, 1));
    }

    SECTION("same-row and same-column repeats produce no events") {
        IntegerMatrix a = IntegerMatrix::from_rows({{1, 1, 2}, {3, 4, 5}, {6, 7, 8}});
        LatinModel m = build_latin_structures(a);
        CHECK(m.tuples.empty());
        IntegerMatrix b = IntegerMatrix::from_rows({{1, 2, 3}, {1, 4, 5}, {6, 7, 8}});
        CHECK(build_latin_structures(b).tuples.empty());
    }

    SECTION("counts on a small structured matrix") {
        IntegerMatrix a = IntegerMatrix::from_rows({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});
        LatinModel m = build_latin_structures(a);
        CHECK(m.k == 6);
        CHECK(m.tuples.size() == 12);  // 3 from the diagonal value, 9 from the rest
    }

    SECTION("degenerate orders are rejected") {
        CHECK_THROWS_AS(build_latin_structures(IntegerMatrix::from_rows({{7}})), invalid_input);
    }
}

TEST_CASE("latin event graph structure on random matrices") {
    Rng rng(5050);
    for (int trial = 0; trial < 12; ++trial) {
        std::size_t n = 3 + rng.below(8);
        std::vector<std::vector<long long>> rows(n, std::vector<long long>(n));
        for (auto& row : rows)
            for (auto& cell : row) cell = static_cast<long long>(rng.below(2 * n));
        IntegerMatrix a = IntegerMatrix::from_rows(rows);
        LatinModel m = build_latin_structures(a);  // asserts the clique cover internally
        for (Vertex t = 0; t < m.events.size(); ++t)
            CHECK(m.events.degree(t) < 4 * m.n * m.k);
    }
}

TEST_CASE("latin certification threshold") {
    SECTION("all-distinct matrices pass trivially") {
        LatinCheck c = check_latin(planted_matrix(6, 0));
        CHECK(c.trivial);
        CHECK(c.holds);
        CHECK(*c.lower_bound == 1.0);
        CHECK_FALSE(c.worst_case_holds);  // k = 1 still exceeds 27(n-1)/256 here
    }

    SECTION("n = 100 admits k = 10 but not k = 11") {
        LatinCheck pass = check_latin(planted_matrix(100, 10));
        CHECK(pass.worst_case_threshold_k == Approx(27.0 * 99.0 / 256.0));
        CHECK(pass.worst_case_holds);
        CHECK(pass.holds);
        REQUIRE(pass.lower_bound.has_value());
        CHECK(*pass.lower_bound > 0.0);
        CHECK(pass.instance_report.holds);

        LatinCheck fail = check_latin(planted_matrix(100, 11));
        CHECK_FALSE(fail.worst_case_holds);
        CHECK_FALSE(fail.holds);
        CHECK_FALSE(fail.lower_bound.has_value());
        // the per-instance diagnostic may still pass; it just cannot certify
        CHECK(fail.instance_report.holds);
    }
}

TEST_CASE("latin sampling") {
    IntegerMatrix a = IntegerMatrix::from_rows({{1, 2, 2}, {2, 1, 2}, {2, 2, 1}});

    SECTION("this matrix has no latin transversal at all") {
        CHECK(oracle::exact_avoid_latin(a) == 0.0);
        MonteCarloSummary mc = monte_carlo_latin(a, 300, 5);
        CHECK(mc.avoided == 0);
    }

    SECTION("samples are permutations and reproducible") {
        LatinSample s1 = sample_latin(a, std::uint64_t{7});
        LatinSample s2 = sample_latin(a, std::uint64_t{7});
        CHECK(s1.sigma == s2.sigma);
        std::vector<std::uint32_t> sorted = s1.sigma;
        std::sort(sorted.begin(), sorted.end());
        CHECK(sorted == std::vector<std::uint32_t>{0, 1, 2});
    }

    SECTION("empirical rate matches an exhaustive count") {
        IntegerMatrix b = planted_matrix(4, 2);
        double exact = oracle::exact_avoid_latin(b);
        MonteCarloSummary mc = monte_carlo_latin(b, 20000, 1234);
        CHECK(std::abs(mc.rate - exact) < 0.02);
    }
}

// ──────────────────────────────────── k-SAT ─────────────────────────────────

TEST_CASE("ksat model construction") {
    SECTION("clauses sharing a variable are adjacent") {
        CnfFormula f = shared_variable_formula(3, 3);
        KsatModel m = build_ksat_dependency(f);
        CHECK(m.p == Approx(0.125));
        CHECK(m.events.size() == 3);
        CHECK(m.events.edge_count() == 3);  // a triangle through variable 1
        CHECK(m.events.label(0) == "c1");
    }

    SECTION("disjoint clauses are isolated") {
        CnfFormula f;
        f.variables = 6;
        f.clauses = {{1, 2, 3}, {4, 5, 6}};
        KsatModel m = build_ksat_dependency(f);
        CHECK(m.events.edge_count() == 0);
    }

    SECTION("formula validation") {
        CnfFormula f;
        f.variables = 3;
        f.clauses = {{1, 2, 2}};
        CHECK_THROWS_AS(build_ksat_dependency(f), invalid_input);
        f.clauses = {{1, 2, 7}};
        CHECK_THROWS_AS(build_ksat_dependency(f), invalid_input);
        f.clauses = {{1, 2, 3}, {1, 2}};
        CHECK_THROWS_AS(build_ksat_dependency(f), invalid_input);
    }
}

TEST_CASE("ksat certification thresholds") {
    SECTION("width 2 with disjoint clauses sits exactly on the boundary") {
        CnfFormula f;
        f.variables = 2;
        f.clauses = {{1, 2}};
        KsatCheck c = check_ksat(f);
        CHECK(c.k == 2);
        CHECK(c.occurrences == 1);
        CHECK(c.exact_holds);
        CHECK(c.holds);
        REQUIRE(c.lower_bound.has_value());
        CHECK(*c.lower_bound == Approx(0.75));  // and a uniform assignment satisfies 3/4
        CHECK(oracle::exact_avoid_ksat(f) == Approx(0.75));
    }

    SECTION("frozen occurrence thresholds for widths 3 through 10") {
        const std::size_t exact_max[] = {1, 1, 2, 4, 7, 12, 22, 39};
        const std::size_t simplified_max[] = {0, 1, 2, 3, 6, 11, 20, 37};
        for (std::size_t k = 3; k <= 10; ++k) {
            std::size_t bound = exact_max[k - 3];
            KsatCheck pass = check_ksat(shared_variable_formula(k, bound));
            CHECK(pass.exact_holds);
            CHECK(pass.holds);
            KsatCheck fail = check_ksat(shared_variable_formula(k, bound + 1));
            CHECK_FALSE(fail.exact_holds);
            CHECK_FALSE(fail.holds);
            // the simplified demand is never weaker than the exact one
            CHECK(pass.simplified_threshold_N <= pass.exact_threshold_N + 1e-9);
            CHECK(pass.simplified_holds == (bound <= simplified_max[k - 3]));
        }
    }

    SECTION("a formula without clauses is trivially satisfiable") {
        CnfFormula f;
        f.variables = 5;
        KsatCheck c = check_ksat(f);
        CHECK(c.trivial);
        CHECK(c.holds);
        CHECK(*c.lower_bound == 1.0);
    }

    SECTION("width below 2 cannot be certified") {
        CnfFormula f;
        f.variables = 2;
        f.clauses = {{1}, {2}};
        CHECK_THROWS_AS(check_ksat(f), invalid_input);
    }
}

TEST_CASE("ksat sampling") {
    CnfFormula f = shared_variable_formula(3, 1);  // one clause over three variables

    SECTION("assignments are reproducible") {
        KsatSample s1 = sample_ksat(f, std::uint64_t{11});
        KsatSample s2 = sample_ksat(f, std::uint64_t{11});
        CHECK(s1.assignment == s2.assignment);
        CHECK(s1.satisfied == s2.satisfied);
    }

    SECTION("empirical rate matches the exhaustive count") {
        double exact = oracle::exact_avoid_ksat(f);  // 7/8
        CHECK(exact == Approx(0.875));
        MonteCarloSummary mc = monte_carlo_ksat(f, 20000, 31415);
        CHECK(std::abs(mc.rate - exact) < 0.01);
        CHECK(mc.wilson99.lower <= exact);
        CHECK(exact <= mc.wilson99.upper);
    }
}

TEST_CASE("wilson interval basics") {
    WilsonInterval w = wilson_score_99(9900, 10000);
    CHECK(w.lower < 0.99);
    CHECK(0.99 < w.upper);
    CHECK(w.half_width == Approx(0.00258).margin(2e-4));

    WilsonInterval all = wilson_score_99(100, 100);
    CHECK(all.upper == 1.0);
    CHECK(all.lower > 0.9);

    CHECK_THROWS_AS(wilson_score_99(0, 0), invalid_input);
}
