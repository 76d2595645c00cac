#include <catch2/catch_amalgamated.hpp>

#include "compnum/competition.hpp"
#include "compnum/generate.hpp"
#include "compnum/json_io.hpp"

#include "test_util.hpp"

using namespace compnum;
using namespace testutil;

TEST_CASE("competition graph") {
    SECTION("the fig2 digraph competes into fig1 plus one isolated vertex") {
        Certificate cert = fig2();
        CHECK(competition_graph(cert.d) == add_isolated_vertices(fig1(), 1));
    }
    SECTION("no arcs, no edges") {
        CHECK(competition_graph(Digraph(4, {})) == Graph(4, {}));
    }
    SECTION("one prey with three predators yields a triangle") {
        Digraph d(4, {{0, 3}, {1, 3}, {2, 3}});
        CHECK(competition_graph(d) == Graph(4, {{0, 1}, {0, 2}, {1, 2}}));
    }
}

TEST_CASE("topological order") {
    SECTION("fig2 is acyclic and the order is valid") {
        Certificate cert = fig2();
        auto topo = topological_order(cert.d);
        REQUIRE(topo.acyclic);
        std::vector<int> pos(cert.d.vertex_count());
        for (std::size_t i = 0; i < topo.order.size(); ++i) pos[topo.order[i]] = static_cast<int>(i);
        for (auto [u, v] : cert.d.arcs()) CHECK(pos[u] < pos[v]);
    }
    SECTION("a 2-cycle is caught with a witness") {
        auto topo = topological_order(Digraph(3, {{0, 1}, {1, 0}, {1, 2}}));
        REQUIRE_FALSE(topo.acyclic);
        REQUIRE(topo.cycle.size() == 2);
        std::vector<int> want{0, 1};
        std::vector<int> got = topo.cycle;
        std::sort(got.begin(), got.end());
        CHECK(got == want);
    }
    SECTION("empty digraph") { CHECK(topological_order(Digraph(0, {})).acyclic); }
}

TEST_CASE("certificate verification") {
    SECTION("fig2 verifies against fig1 at k=1") {
        auto check = verify_certificate(fig1(), fig2());
        CHECK(check.ok);
        CHECK(check.failure.empty());
    }
    SECTION("K3 with a single prey verifies at k=1") {
        Certificate c{Digraph(4, {{0, 3}, {1, 3}, {2, 3}}), 3, 1, CertMethod::user};
        CHECK(verify_certificate(complete_graph(3), c).ok);
    }
    SECTION("no certificate puts C4 at k=1") {
        Graph c4 = cycle_graph(4);
        // a plausible but wrong attempt: cover three edges through preys
        Certificate bogus{Digraph(5, {{0, 4}, {1, 4}, {1, 2}, {0, 3}}), 4, 1, CertMethod::user};
        auto check = verify_certificate(c4, bogus);
        CHECK_FALSE(check.ok);
        // and the oracle proves none exists
        auto res = competition_number_exact(c4);
        REQUIRE(res.exact);
        CHECK(res.k == 2);
        CHECK(res.infeasible_below);
    }
    SECTION("diagnostics name the first violated condition") {
        Graph k3 = complete_graph(3);
        auto cyc = verify_certificate(
            k3, Certificate{Digraph(4, {{0, 3}, {1, 3}, {2, 3}, {3, 0}, {0, 1}, {1, 0}}), 3, 1,
                            CertMethod::user});
        CHECK_THAT(cyc.failure, Catch::Matchers::ContainsSubstring("cycle"));
        auto missing =
            verify_certificate(k3, Certificate{Digraph(4, {{0, 3}, {1, 3}}), 3, 1, CertMethod::user});
        CHECK_THAT(missing.failure, Catch::Matchers::ContainsSubstring("missing edge"));
        auto spurious = verify_certificate(
            path_graph(3), Certificate{Digraph(4, {{0, 3}, {1, 3}, {2, 3}}), 3, 1, CertMethod::user});
        CHECK_THAT(spurious.failure, Catch::Matchers::ContainsSubstring("spurious edge"));
        auto notiso = verify_certificate(
            k3, Certificate{Digraph(4, {{0, 2}, {1, 2}, {0, 1}, {2, 1}, {0, 3}, {2, 3}}), 3, 1,
                            CertMethod::user});
        CHECK_THAT(notiso.failure, Catch::Matchers::ContainsSubstring("not isolated"));
        auto size = verify_certificate(
            k3, Certificate{Digraph(4, {{0, 3}, {1, 3}, {2, 3}}), 3, 2, CertMethod::user});
        CHECK_THAT(size.failure, Catch::Matchers::ContainsSubstring("vertices"));
    }
}

TEST_CASE("exact oracle") {
    SECTION("paper worked example") {
        auto res = competition_number_exact(fig1());
        REQUIRE(res.exact);
        CHECK(res.k == 1);
        CHECK(res.infeasible_below);
        CHECK(verify_certificate(fig1(), *res.certificate).ok);
    }
    SECTION("small named graphs") {
        CHECK(competition_number_exact(cycle_graph(4)).k == 2);
        CHECK(competition_number_exact(cycle_graph(5)).k == 2);
        CHECK(competition_number_exact(cocktail_party(3)).k == 2);
        CHECK(competition_number_exact(Graph(4, {})).k == 0);
        CHECK(competition_number_exact(Graph(0, {})).k == 0);
        CHECK(competition_number_exact(complete_graph(5)).k == 1);
        // an isolated vertex can serve as prey: K3 plus one loner needs k=0
        CHECK(competition_number_exact(Graph(4, {{0, 1}, {0, 2}, {1, 2}})).k == 0);
    }
    SECTION("chordal connected graphs sit at k=1") {
        for (int n = 2; n <= 6; ++n)
            for (const auto& g : connected_graphs(n))
                if (is_chordal(g).chordal) CHECK(competition_number_exact(g).k == 1);
    }
    SECTION("triangle-free equality on a sample") {
        for (const Graph& g :
             {complete_bipartite(2, 3), complete_bipartite(3, 3), cycle_graph(6)}) {
            auto res = competition_number_exact(g);
            REQUIRE(res.exact);
            CHECK(res.k == g.edge_count() - g.vertex_count() + 2);
        }
    }
    SECTION("every oracle certificate verifies") {
        std::mt19937_64 rng(41);
        for (int it = 0; it < 40; ++it) {
            Graph g = random_graph(7, 0.4, rng);
            auto res = competition_number_exact(g);
            REQUIRE(res.exact);
            CHECK(verify_certificate(g, *res.certificate).ok);
        }
    }
    SECTION("disconnected graphs are handled whole") {
        // two triangles: the second component's vertices host the first's preys
        Graph g(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}});
        auto res = competition_number_exact(g);
        REQUIRE(res.exact);
        CHECK(res.k == 0);
        CHECK(verify_certificate(g, *res.certificate).ok);
    }
}

TEST_CASE("direct brute force") {
    SECTION("named examples") {
        auto k3 = competition_number_direct_bruteforce(complete_graph(3));
        REQUIRE(k3.k.has_value());
        CHECK(*k3.k == 1);
        auto p3 = competition_number_direct_bruteforce(path_graph(3));
        REQUIRE(p3.k.has_value());
        CHECK(*p3.k == 1);
        auto e2 = competition_number_direct_bruteforce(Graph(2, {}));
        REQUIRE(e2.k.has_value());
        CHECK(*e2.k == 0);
    }
    SECTION("size guard") {
        CHECK_THROWS_AS(competition_number_direct_bruteforce(complete_graph(6)),
                        PreconditionError);
    }
    SECTION("C4 exhausts its window without an answer") {
        auto res = competition_number_direct_bruteforce(cycle_graph(4));
        CHECK_FALSE(res.k.has_value());
        CHECK(res.searched_max_k == 1);
    }
    SECTION("agreement with the search oracle") {
        for (int n = 1; n <= 4; ++n)
            for (const auto& g : connected_graphs(n)) {
                auto brute = competition_number_direct_bruteforce(g);
                auto exact = competition_number_exact(g);
                REQUIRE(exact.exact);
                if (brute.k) {
                    CHECK(*brute.k == exact.k);
                    CHECK(verify_certificate(g, *brute.certificate).ok);
                } else {
                    CHECK(exact.k > brute.searched_max_k);
                }
            }
    }
}

TEST_CASE("certificate JSON round trip") {
    Certificate cert = fig2();
    json j = certificate_to_json(cert);
    CHECK(j["base_n"] == 9);
    CHECK(j["k"] == 1);
    CHECK(j["arcs"].size() == 16);
    CHECK(j["topo_order"].is_array());
    Certificate back = certificate_from_json(j);
    CHECK(back.d == cert.d);
    CHECK(back.base_n == cert.base_n);
    CHECK(back.k == cert.k);
    CHECK_THROWS_AS(certificate_from_json(json{{"k", 1}}), ParseError);
}
