#include <catch2/catch_amalgamated.hpp>

#include "compnum/certify.hpp"
#include "compnum/generate.hpp"
#include "compnum/json_io.hpp"

#include "test_util.hpp"

using namespace compnum;
using namespace testutil;

namespace {

SubgraphWitness witness_from_kept(const Graph& g, const EdgeSet& kept) {
    SubgraphWitness w{kept, g.all_edges_set(), {}};
    w.star_edges.subtract(kept);
    return w;
}

} // namespace

TEST_CASE("chordal certificate") {
    SECTION("K3 gets a 4-vertex digraph at k=1") {
        auto cert = chordal_certificate(complete_graph(3));
        CHECK(cert.k == 1);
        CHECK(cert.d.vertex_count() == 4);
        CHECK(verify_certificate(complete_graph(3), cert).ok);
    }
    SECTION("P3") {
        auto cert = chordal_certificate(path_graph(3));
        CHECK(cert.k == 1);
        CHECK(verify_certificate(path_graph(3), cert).ok);
    }
    SECTION("trees agree with the oracle at k=1") {
        std::mt19937_64 rng(13);
        for (int it = 0; it < 20; ++it) {
            int n = 2 + static_cast<int>(rng() % 7);
            Graph g = random_connected_graph(n, 0.3, rng);
            EdgeSet tree = spanning_tree_containing_forest(g, EdgeSet(g.edge_count()));
            EdgeSet drop = g.all_edges_set();
            drop.subtract(tree);
            Graph t = delete_edges(g, drop).graph;
            auto cert = chordal_certificate(t);
            CHECK(cert.k == 1);
            CHECK(verify_certificate(t, cert).ok);
            CHECK(competition_number_exact(t).k == 1);
        }
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(chordal_certificate(cycle_graph(4)), PreconditionError);
        CHECK_THROWS_AS(chordal_certificate(Graph(3, {})), PreconditionError);
        CHECK_THROWS_AS(chordal_certificate(Graph(4, {{0, 1}, {2, 3}})), PreconditionError);
    }
}

TEST_CASE("triangle-free certificate") {
    SECTION("C4 at k=2") {
        auto cert = triangle_free_certificate(cycle_graph(4));
        CHECK(cert.k == 2);
        CHECK(verify_certificate(cycle_graph(4), cert).ok);
    }
    SECTION("K23 at k=3") {
        auto cert = triangle_free_certificate(complete_bipartite(2, 3));
        CHECK(cert.k == 3);
        CHECK(verify_certificate(complete_bipartite(2, 3), cert).ok);
    }
    SECTION("K33 at k=5, the n^2-2n+2 value") {
        auto cert = triangle_free_certificate(complete_bipartite(3, 3));
        CHECK(cert.k == 5);
        CHECK(verify_certificate(complete_bipartite(3, 3), cert).ok);
    }
    SECTION("whole corpus verifies and k matches dim H + 1") {
        for (int n = 2; n <= 7; ++n)
            for (const auto& g : connected_triangle_free_graphs(n)) {
                auto cert = triangle_free_certificate(g);
                CHECK(cert.k == g.edge_count() - g.vertex_count() + 2);
                CHECK(cert.k == hole_space_dimension(g) + 1);
                CHECK(verify_certificate(g, cert).ok);
            }
    }
    SECTION("preconditions") {
        CHECK_THROWS_AS(triangle_free_certificate(complete_graph(3)), PreconditionError);
        CHECK_THROWS_AS(triangle_free_certificate(Graph(4, {{0, 1}, {2, 3}})),
                        PreconditionError);
    }
}

TEST_CASE("spanning-subgraph certificate") {
    SECTION("triangle-free graph with a spanning tree witness reproduces |E|-|V|+2") {
        for (const Graph& g : {complete_bipartite(2, 3), cycle_graph(6)}) {
            EdgeSet tree = spanning_tree_containing_forest(g, EdgeSet(g.edge_count()));
            auto res = newfamily_certificate(g, witness_from_kept(g, tree));
            CHECK(res.certificate.k == g.edge_count() - g.vertex_count() + 2);
            CHECK(res.star_rank == g.edge_count() - g.vertex_count() + 1);
            CHECK(verify_certificate(g, res.certificate).ok);
        }
    }
    SECTION("chordal graph with itself as witness degenerates to k=1") {
        Graph g = complete_graph(4);
        auto res = newfamily_certificate(g, witness_from_kept(g, g.all_edges_set()));
        CHECK(res.certificate.k == 1);
        CHECK(res.bridging_holes.empty());
        CHECK(verify_certificate(g, res.certificate).ok);
    }
    SECTION("domino with one kept-out edge per hole") {
        Graph g(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});
        EdgeSet kept = g.all_edges_set();
        kept.reset(g.edge_id(0, 1));
        kept.reset(g.edge_id(1, 2));
        auto res = newfamily_certificate(g, witness_from_kept(g, kept));
        CHECK(res.certificate.k == 3);
        CHECK(res.certificate.k == hole_space_dimension(g) + 1);
        CHECK(verify_certificate(g, res.certificate).ok);
        // the closing holes are exactly the two holes of the domino
        REQUIRE(res.bridging_holes.size() == 2);
        CHECK(res.star_rank == 2);
    }
    SECTION("invalid witnesses are named") {
        Graph g = fig1();
        // dropping a triangle edge violates the triangle condition
        EdgeSet kept = g.all_edges_set();
        kept.reset(g.edge_id(4, 5));
        CHECK_THROWS_MATCHES(newfamily_certificate(g, witness_from_kept(g, kept)),
                             PreconditionError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("triangle")));
        // keeping everything leaves fig1 non-chordal
        CHECK_THROWS_MATCHES(newfamily_certificate(g, witness_from_kept(g, g.all_edges_set())),
                             PreconditionError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("chordal")));
    }
    SECTION("user witness with k(G')=1 established by the oracle") {
        // fig1 plus a pendant path closing one extra hole through vertex 9
        Graph g(10, [] {
            Graph base = parse_edge_list("4 5\n5 6\n6 8\n4 8\n6 7\n4 7\n0 4\n0 5\n1 5\n1 6\n"
                                         "2 6\n2 7\n3 7\n3 4");
            auto e = base.edges();
            e.push_back({0, 9});
            e.push_back({3, 9});
            return e;
        }());
        EdgeSet kept = g.all_edges_set();
        kept.reset(g.edge_id(0, 9));
        // G' = fig1 + pendant: not chordal, but k(G') = 1
        CHECK_THROWS_AS(newfamily_certificate(g, witness_from_kept(g, kept)),
                        PreconditionError);
        auto res = newfamily_certificate(g, witness_from_kept(g, kept),
                                         /*allow_oracle_base=*/true);
        CHECK(res.certificate.k == 2);
        CHECK(verify_certificate(g, res.certificate).ok);
        CHECK(res.certificate.k <= hole_space_dimension(g) + 1);
    }
}

TEST_CASE("witness for at most three triangles") {
    SECTION("triangle-free graphs keep a spanning tree") {
        Graph g = cycle_graph(5);
        auto w = subgraph_for_three_triangles(g);
        CHECK(w.kept_edges.count() == 4);
        CHECK(w.chosen_edges.empty());
        CHECK(witness_violations(g, w).empty());
    }
    SECTION("K3 plus a pendant keeps everything") {
        Graph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}});
        auto w = subgraph_for_three_triangles(g);
        CHECK(w.kept_edges == g.all_edges_set());
        CHECK(w.star_edges.none());
    }
    SECTION("two triangles at a cut vertex plus an attached 4-cycle") {
        Graph g(8, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4},
                    {2, 5}, {5, 6}, {6, 7}, {2, 7}});
        auto w = subgraph_for_three_triangles(g);
        CHECK(witness_violations(g, w).empty());
        auto res = newfamily_certificate(g, w);
        CHECK(verify_certificate(g, res.certificate).ok);
        CHECK(res.certificate.k <= hole_space_dimension(g) + 1);
    }
    SECTION("rejects four triangles") {
        CHECK_THROWS_AS(subgraph_for_three_triangles(complete_graph(4)), PreconditionError);
        CHECK_THROWS_AS(subgraph_for_three_triangles(fig1()), PreconditionError);
    }
}

TEST_CASE("witness for G4 graphs") {
    SECTION("C5 drops one edge") {
        Graph g = cycle_graph(5);
        auto w = subgraph_for_g4(g);
        CHECK(w.star_edges.count() == 1);
        auto res = newfamily_certificate(g, w);
        CHECK(res.certificate.k == 2);
        CHECK(verify_certificate(g, res.certificate).ok);
    }
    SECTION("two disjoint 4-holes joined by an edge") {
        Graph g(8, {{0, 1}, {1, 2}, {2, 3}, {0, 3}, {4, 5}, {5, 6}, {6, 7}, {4, 7}, {3, 4}});
        auto w = subgraph_for_g4(g);
        CHECK(w.star_edges.count() == 2);
        auto res = newfamily_certificate(g, w);
        CHECK(res.certificate.k == 3);
        CHECK(verify_certificate(g, res.certificate).ok);
        auto exact = competition_number_exact(g);
        REQUIRE(exact.exact);
        CHECK(exact.k == 3); // triangle-free equality, independent cross-check
    }
    SECTION("fig1 is not in G4") {
        CHECK_THROWS_MATCHES(subgraph_for_g4(fig1()), PreconditionError,
                             Catch::Matchers::MessageMatches(
                                 Catch::Matchers::ContainsSubstring("G4")));
    }
}

TEST_CASE("upper bound pipeline") {
    SECTION("C6 reports the triangle-free equality path") {
        auto res = upper_bound_pipeline(cycle_graph(6));
        REQUIRE(res.found);
        CHECK(res.k_upper == 2);
        CHECK(res.method == CertMethod::triangle_free);
    }
    SECTION("K4 is chordal") {
        auto res = upper_bound_pipeline(complete_graph(4));
        REQUIRE(res.found);
        CHECK(res.k_upper == 1);
        CHECK(res.method == CertMethod::chordal);
    }
    SECTION("fig1 has no constructive method") {
        auto res = upper_bound_pipeline(fig1());
        CHECK_FALSE(res.found);
        auto exact = competition_number_exact(fig1());
        CHECK(exact.k == 1);
    }
    SECTION("every certificate on the small corpus verifies within the bound") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& g : connected_graphs(n)) {
                auto res = upper_bound_pipeline(g);
                if (!res.found) continue;
                CHECK(verify_certificate(g, *res.certificate).ok);
                CHECK(res.k_upper <= hole_space_dimension(g) + 1);
            }
    }
}

TEST_CASE("witness JSON") {
    Graph g = cycle_graph(5);
    auto w = subgraph_for_g4(g);
    json j = witness_to_json(g, w);
    CHECK(j["kept_edges"].size() == 4);
    CHECK(j["star_edges"].size() == 1);
    CHECK(j["chosen_edges"].size() == 1);
    auto back = witness_from_json(g, j);
    CHECK(back.kept_edges == w.kept_edges);
    CHECK(back.star_edges == w.star_edges);
    CHECK_THROWS_AS(witness_from_json(g, json{{"kept_edges", {{0, 2}}}}), ParseError);
}
