#include <catch2/catch_amalgamated.hpp>

#include "compnum/analyze.hpp"
#include "compnum/generate.hpp"
#include "compnum/sweep.hpp"

#include "test_util.hpp"

using namespace compnum;
using namespace testutil;

TEST_CASE("canonical form") {
    SECTION("relabelings land on the same representative") {
        std::mt19937_64 rng(31);
        for (int it = 0; it < 100; ++it) {
            int n = 1 + static_cast<int>(rng() % 8);
            Graph g = random_graph(n, 0.5, rng);
            std::vector<int> perm(n);
            std::iota(perm.begin(), perm.end(), 0);
            std::shuffle(perm.begin(), perm.end(), rng);
            std::vector<std::pair<int, int>> edges;
            for (auto [u, v] : g.edges()) edges.push_back({perm[u], perm[v]});
            CHECK(canonical_form(g) == canonical_form(Graph(n, edges)));
        }
    }
    SECTION("non-isomorphic graphs separate") {
        CHECK_FALSE(canonical_form(path_graph(4)) == canonical_form(cycle_graph(4)));
        CHECK_FALSE(canonical_form(Graph(4, {{0, 1}, {0, 2}, {0, 3}})) ==
                    canonical_form(path_graph(4)));
    }
}

TEST_CASE("exhaustive connected corpus matches the published counts") {
    const int want[] = {0, 1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        const auto& gs = connected_graphs(n);
        CHECK(static_cast<int>(gs.size()) == want[n]);
        for (const auto& g : gs) {
            CHECK(g.vertex_count() == n);
            CHECK(is_connected(g));
        }
    }
    CHECK_THROWS_AS(connected_graphs(8), PreconditionError);
}

TEST_CASE("corpus members are pairwise non-isomorphic at n=5") {
    const auto& gs = connected_graphs(5);
    std::set<std::string> forms;
    for (const auto& g : gs) forms.insert(canonical_form(g).serialize());
    CHECK(forms.size() == gs.size());
}

TEST_CASE("triangle-free corpus") {
    const int want[] = {0, 1, 1, 1, 3, 6, 19, 59, 267};
    for (int n = 1; n <= 8; ++n) {
        const auto& gs = connected_triangle_free_graphs(n);
        CHECK(static_cast<int>(gs.size()) == want[n]);
        for (const auto& g : gs) {
            CHECK(is_connected(g));
            CHECK(triangles(g).empty());
        }
    }
    SECTION("n=8 members are pairwise non-isomorphic") {
        std::set<std::string> forms;
        for (const auto& g : connected_triangle_free_graphs(8))
            forms.insert(canonical_form(g).serialize());
        CHECK(forms.size() == 267);
    }
}

TEST_CASE("random model is deterministic under a seed") {
    std::mt19937_64 a(99), b(99);
    for (int it = 0; it < 20; ++it) CHECK(random_graph(9, 0.37, a) == random_graph(9, 0.37, b));
    std::mt19937_64 c(100);
    int diff = 0;
    std::mt19937_64 a2(99);
    for (int it = 0; it < 20; ++it)
        if (!(random_graph(9, 0.37, a2) == random_graph(9, 0.37, c))) ++diff;
    CHECK(diff > 0);
}

TEST_CASE("analyze report fields") {
    SECTION("fig1") {
        Report r = analyze(fig1());
        CHECK(r.n == 9);
        CHECK(r.m == 14);
        CHECK(r.hole_count == 3);
        CHECK(r.dim_hole_space == 2);
        CHECK(r.dim_cycle_space == 6);
        CHECK(r.k_exact == 1);
        CHECK(r.upper_method.empty()); // no constructive method for fig1
        CHECK(r.conjecture == ConjectureStatus::holds);
        CHECK(r.slack == 2);
        CHECK(r.hole_list.size() == 3);
    }
    SECTION("P2 holds with equality") {
        Report r = analyze(path_graph(2));
        CHECK(r.hole_count == 0);
        CHECK(r.dim_hole_space == 0);
        CHECK(r.k_exact == 1);
        CHECK(r.conjecture == ConjectureStatus::holds);
        CHECK(r.slack == 0);
    }
    SECTION("K33 holds with equality via the triangle-free bound") {
        Report r = analyze(complete_bipartite(3, 3));
        CHECK(r.dim_hole_space == 4);
        CHECK(r.k_upper == 5);
        CHECK(r.upper_method == "triangle-free");
        CHECK(r.k_exact == 5);
        CHECK(r.slack == 0);
    }
    SECTION("oracle limit defers to the certificate") {
        AnalyzeOptions opt;
        opt.oracle_limit = 3;
        Report r = analyze(complete_bipartite(3, 3), opt);
        CHECK_FALSE(r.k_exact.has_value());
        CHECK(r.k_upper == 5);
        CHECK(r.conjecture == ConjectureStatus::holds); // upper bound suffices
    }
    SECTION("empty graph is flagged") {
        Report r = analyze(Graph(0, {}));
        CHECK(r.k_exact == 0);
        CHECK(r.conjecture == ConjectureStatus::holds);
        REQUIRE_FALSE(r.notes.empty());
    }
    SECTION("budget exhaustion reports unknown, never a guess") {
        AnalyzeOptions opt;
        opt.hole_budget.max_cycles = 1;
        Report r = analyze(complete_bipartite(3, 3), opt);
        CHECK_FALSE(r.dim_hole_space.has_value());
        CHECK(r.conjecture == ConjectureStatus::unknown);
        REQUIRE_FALSE(r.notes.empty());
    }
}

TEST_CASE("sweep") {
    SECTION("exhaustive n<=5 is clean") {
        std::vector<Graph> graphs;
        for (int n = 1; n <= 5; ++n)
            for (const auto& g : connected_graphs(n)) graphs.push_back(g);
        auto res = run_sweep(graphs);
        CHECK(res.summary.total == 31);
        CHECK(res.summary.holds == 31);
        CHECK(res.summary.violated == 0);
        CHECK(res.summary.unknown == 0);
        CHECK(std::is_sorted(res.reports.begin(), res.reports.end(),
                             [](const Report& a, const Report& b) { return a.id < b.id; }));
    }
    SECTION("C4 contributes zero slack") {
        auto res = run_sweep({cycle_graph(4)});
        REQUIRE(res.summary.slack_histogram.count(0) == 1);
        CHECK(res.summary.slack_histogram.at(0) == 1);
    }
    SECTION("multithreaded run agrees with single-threaded") {
        std::vector<Graph> graphs;
        for (const auto& g : connected_graphs(6)) graphs.push_back(g);
        SweepOptions seq, par;
        par.jobs = 4;
        auto a = run_sweep(graphs, seq);
        auto b = run_sweep(graphs, par);
        REQUIRE(a.reports.size() == b.reports.size());
        for (std::size_t i = 0; i < a.reports.size(); ++i) {
            CHECK(a.reports[i].id == b.reports[i].id);
            CHECK(a.reports[i].k_exact == b.reports[i].k_exact);
            CHECK(a.reports[i].dim_hole_space == b.reports[i].dim_hole_space);
        }
        CHECK(a.summary.holds == b.summary.holds);
    }
    SECTION("oracle size guard does not erase the pipeline result") {
        // path on 50 vertices: the oracle refuses, the chordal bound still holds
        std::vector<std::pair<int, int>> e;
        for (int i = 0; i < 49; ++i) e.push_back({i, i + 1});
        std::vector<Graph> graphs{Graph(50, e), cycle_graph(4)};
        SweepOptions opt;
        opt.analyze.oracle_limit = 100;
        auto res = run_sweep(graphs, opt);
        CHECK(res.summary.total == 2);
        CHECK(res.summary.unknown == 0);
        CHECK(res.summary.holds == 2);
    }
    SECTION("per-graph budget failures are isolated and the sweep continues") {
        std::vector<Graph> graphs{complete_bipartite(3, 3), cycle_graph(4)};
        SweepOptions opt;
        opt.analyze.hole_budget.max_cycles = 4; // K33 has 9 holes, C4 has 1
        auto res = run_sweep(graphs, opt);
        CHECK(res.summary.total == 2);
        CHECK(res.summary.unknown == 1);
        CHECK(res.summary.holds == 1);
    }
}
