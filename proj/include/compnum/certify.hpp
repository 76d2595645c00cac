#pragma once

#include <algorithm>
#include <deque>
#include <optional>
#include <string>
#include <vector>

#include "compnum/competition.hpp"
#include "compnum/graph.hpp"
#include "compnum/holes.hpp"
#include "compnum/holespace.hpp"
#include "compnum/matching.hpp"

namespace compnum {

// A connected spanning subgraph G' = (V, kept_edges) that contains every
// triangle of G and is chordal; star_edges = E(G) \ E(G') each get a private
// prey in the certificate built from it.
struct SubgraphWitness {
    EdgeSet kept_edges;
    EdgeSet star_edges;
    std::vector<std::pair<Cycle, int>> chosen_edges; // per triangle e_T / per hole e_C
};

/// Names every violated witness invariant; empty means valid. Chordality of
/// G' may be replaced by an exact k(G')=1 proof, so it is reported separately.
inline std::vector<std::string> witness_violations(const Graph& g, const SubgraphWitness& w,
                                                   bool require_chordal = true) {
    std::vector<std::string> bad;
    if (w.kept_edges.size() != g.edge_count() || w.star_edges.size() != g.edge_count()) {
        bad.push_back("edge set size does not match graph");
        return bad;
    }
    if ((w.kept_edges & w.star_edges).any() ||
        (w.kept_edges | w.star_edges) != g.all_edges_set())
        bad.push_back("star edges are not the complement of kept edges");
    Graph sub = delete_edges(g, w.star_edges).graph;
    if (!is_connected(sub)) bad.push_back("subgraph is not connected and spanning");
    for (const auto& t : triangles(g))
        if (!t.edges.is_subset_of(w.kept_edges)) {
            bad.push_back("subgraph misses a triangle edge (triangle " +
                          std::to_string(t.vertices[0]) + "," + std::to_string(t.vertices[1]) +
                          "," + std::to_string(t.vertices[2]) + ")");
            break;
        }
    if (require_chordal && !is_chordal(sub).chordal) bad.push_back("subgraph is not chordal");
    return bad;
}

// ---------------------------------------------------------------------------

/// k=1 certificate for a connected chordal graph with at least one edge.
/// Along a perfect elimination ordering v_1..v_n, the clique {v_i} together
/// with the later neighbors of v_i preys on v_{i-1}, with v_0 a new vertex.
inline Certificate chordal_certificate(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    auto chord = is_chordal(g);
    if (!chord.chordal) throw PreconditionError("graph is not chordal");
    const int n = g.vertex_count();
    const auto& order = chord.elimination_order;
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    std::vector<std::pair<int, int>> arcs;
    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        const int prey = i == 0 ? n : order[i - 1];
        arcs.emplace_back(v, prey);
        const auto& nb = g.neighbors(v);
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (pos[u] > i) arcs.emplace_back(u, prey);
    }
    Certificate cert{Digraph(n + 1, std::move(arcs)), n, 1, CertMethod::chordal};
    if (auto check = verify_certificate(g, cert); !check.ok)
        throw std::logic_error("chordal certificate failed verification: " + check.failure);
    return cert;
}

/// k = |E|-|V|+2 certificate for a connected triangle-free graph: vertices in
/// BFS order followed by the added vertices; every edge is matched to a
/// distinct position strictly after both endpoints and becomes that prey's
/// in-neighborhood. Feasibility of the matching is guaranteed because every
/// BFS prefix spans a connected subgraph.
inline Certificate triangle_free_certificate(const Graph& g) {
    if (g.edge_count() == 0) throw PreconditionError("graph has no edges");
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    if (!triangles(g).empty()) throw PreconditionError("graph contains a triangle");
    const int n = g.vertex_count();
    const int m = g.edge_count();
    const int k = m - n + 2;
    std::vector<int> order, pos(n, -1);
    std::deque<int> q{0};
    pos[0] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        order.push_back(v);
        const auto& nb = g.neighbors(v);
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (pos[u] < 0) {
                pos[u] = 1; // seen
                q.push_back(u);
            }
    }
    for (int i = 0; i < n; ++i) pos[order[i]] = i;
    const int positions = n + k;
    std::vector<std::vector<int>> eligible(m);
    for (int e = 0; e < m; ++e) {
        auto [u, v] = g.edge(e);
        for (int p = std::max(pos[u], pos[v]) + 1; p < positions; ++p)
            eligible[e].push_back(p);
    }
    BipartiteMatcher matcher(m, positions, std::move(eligible));
    if (matcher.solve() != m)
        throw std::logic_error("edge-to-position matching failed on a triangle-free graph");
    std::vector<std::pair<int, int>> arcs;
    for (int e = 0; e < m; ++e) {
        int p = matcher.match_left()[e];
        int prey = p < n ? order[p] : n + (p - n);
        auto [u, v] = g.edge(e);
        arcs.emplace_back(u, prey);
        arcs.emplace_back(v, prey);
    }
    Certificate cert{Digraph(n + k, std::move(arcs)), n, k, CertMethod::triangle_free};
    if (auto check = verify_certificate(g, cert); !check.ok)
        throw std::logic_error("triangle-free certificate failed verification: " + check.failure);
    return cert;
}

// ---------------------------------------------------------------------------
// Spanning-subgraph certificates

struct NewFamilyResult {
    Certificate certificate;
    std::vector<Cycle> bridging_holes; // shortest cycle C_e through each star edge
    int star_rank = 0;                 // GF(2) rank of their chi vectors, == |E*|
};

namespace detail {

/// Lexicographically smallest shortest path from x to y (vertex sequence).
inline std::vector<int> lex_shortest_path(const Graph& g, int x, int y) {
    const int n = g.vertex_count();
    std::vector<int> dist(n, -1);
    std::deque<int> q{y};
    dist[y] = 0;
    while (!q.empty()) {
        int v = q.front();
        q.pop_front();
        const auto& nb = g.neighbors(v);
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (dist[u] < 0) {
                dist[u] = dist[v] + 1;
                q.push_back(u);
            }
    }
    if (dist[x] < 0) throw PreconditionError("no path between star edge endpoints");
    std::vector<int> path{x};
    int cur = x;
    while (cur != y) {
        const auto& nb = g.neighbors(cur);
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (dist[u] == dist[cur] - 1) {
                path.push_back(u);
                cur = u;
                break;
            }
    }
    return path;
}

} // namespace detail

/// Builds the k = |E*|+1 certificate from a witness subgraph: a k=1
/// certificate of G' plus one private prey per star edge. Also checks the
/// supporting claims: each star edge closes a hole of G'+e whose chi lies in
/// the hole space of G, and those vectors are linearly independent.
inline NewFamilyResult newfamily_certificate(const Graph& g, const SubgraphWitness& w,
                                             bool allow_oracle_base = false,
                                             const OracleOptions& oracle_opt = {}) {
    auto bad = witness_violations(g, w, /*require_chordal=*/!allow_oracle_base);
    if (!bad.empty()) throw PreconditionError("invalid witness: " + bad[0]);
    Graph sub = delete_edges(g, w.star_edges).graph;

    Certificate base;
    if (is_chordal(sub).chordal) {
        base = chordal_certificate(sub);
    } else if (allow_oracle_base) {
        auto res = competition_number_exact(sub, oracle_opt);
        if (!res.exact || res.k != 1)
            throw PreconditionError("subgraph is not chordal and k(G') != 1");
        base = *res.certificate;
    } else {
        throw PreconditionError("invalid witness: subgraph is not chordal");
    }

    const int n = g.vertex_count();
    auto star = w.star_edges.to_indices();
    const int k = static_cast<int>(star.size()) + 1;
    std::vector<std::pair<int, int>> arcs = base.d.arcs();
    for (std::size_t i = 0; i < star.size(); ++i) {
        auto [x, y] = g.edge(star[i]);
        int prey = n + 1 + static_cast<int>(i);
        arcs.emplace_back(x, prey);
        arcs.emplace_back(y, prey);
    }
    Certificate cert{Digraph(n + k, std::move(arcs)), n, k, CertMethod::newfamily};
    if (auto check = verify_certificate(g, cert); !check.ok)
        throw std::logic_error("spanning-subgraph certificate failed verification: " +
                               check.failure);

    NewFamilyResult out{std::move(cert), {}, 0};
    Gf2Basis hole_basis = hole_space_basis(g);
    Gf2Basis star_basis(g.edge_count());
    for (int e : star) {
        auto [x, y] = g.edge(e);
        auto path = detail::lex_shortest_path(sub, x, y);
        if (path.size() < 4)
            throw std::logic_error("star edge closes a triangle despite witness checks");
        Cycle ce = make_cycle(g, path);
        if (!is_chordless(sub, ce))
            throw std::logic_error("shortest closing cycle is not induced in G'+e");
        Gf2Vector v = chi(g, ce);
        if (!hole_basis.in_span(v))
            throw std::logic_error("closing hole is outside the hole space of G");
        star_basis.insert(std::move(v));
        out.bridging_holes.push_back(std::move(ce));
    }
    out.star_rank = star_basis.rank();
    if (out.star_rank != static_cast<int>(star.size()))
        throw std::logic_error("star-edge hole vectors are not linearly independent");
    return out;
}

/// Witness for a connected graph with at most three triangles: each triangle
/// donates an edge e_T in no other triangle; the remaining triangle edges
/// form a forest, which a spanning tree extends; adding the e_T back yields a
/// chordal connected spanning subgraph containing every triangle.
inline SubgraphWitness subgraph_for_three_triangles(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    auto tris = triangles(g);
    if (tris.size() > 3)
        throw PreconditionError("graph has " + std::to_string(tris.size()) +
                                " triangles, more than three");
    const int m = g.edge_count();
    std::vector<int> tri_count(m, 0);
    for (const auto& t : tris)
        for (int e = t.edges.next_set(0); e >= 0; e = t.edges.next_set(e + 1)) ++tri_count[e];
    SubgraphWitness w{EdgeSet(m), EdgeSet(m), {}};
    EdgeSet triangle_edges(m), removed(m);
    for (const auto& t : tris) {
        triangle_edges |= t.edges;
        int chosen = -1;
        for (int e = t.edges.next_set(0); e >= 0; e = t.edges.next_set(e + 1))
            if (tri_count[e] == 1) {
                chosen = e;
                break;
            }
        if (chosen < 0) throw std::logic_error("triangle without a private edge");
        removed.set(chosen);
        w.chosen_edges.emplace_back(t, chosen);
    }
    EdgeSet forest = triangle_edges;
    forest.subtract(removed);
    EdgeSet tree = spanning_tree_containing_forest(g, forest); // throws if F were cyclic
    w.kept_edges = tree | removed;
    w.star_edges = g.all_edges_set();
    w.star_edges.subtract(w.kept_edges);
    if (auto bad = witness_violations(g, w); !bad.empty())
        throw std::logic_error("three-triangle witness invalid: " + bad[0]);
    return w;
}

/// Witness for a connected graph where every hole C has an edge e_C on no
/// other induced cycle: removing all the e_C leaves a chordal connected
/// spanning subgraph that keeps every triangle.
inline SubgraphWitness subgraph_for_g4(const Graph& g) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    auto tags = recognize_families(g);
    if (!tags.g4_private_edge)
        throw PreconditionError("not in G4: some hole has no edge private to it");
    const int m = g.edge_count();
    SubgraphWitness w{EdgeSet(m), EdgeSet(m), tags.g4_edges};
    for (const auto& [hole, e] : tags.g4_edges) w.star_edges.set(e);
    w.kept_edges = g.all_edges_set();
    w.kept_edges.subtract(w.star_edges);
    if (auto bad = witness_violations(g, w); !bad.empty())
        throw std::logic_error("G4 witness invalid: " + bad[0]);
    return w;
}

// ---------------------------------------------------------------------------

struct PipelineResult {
    bool found = false;
    int k_upper = -1;
    CertMethod method = CertMethod::user;
    std::optional<Certificate> certificate;
};

/// Tries every applicable constructive certifier and reports the smallest k.
/// Ties prefer the triangle-free equality path, then chordal.
inline PipelineResult upper_bound_pipeline(const Graph& g, const HoleOptions& hole_opt = {}) {
    if (g.edge_count() == 0 || !is_connected(g))
        throw PreconditionError("pipeline needs a connected graph with at least one edge");
    auto tags = recognize_families(g, hole_opt);
    std::vector<Certificate> found; // in tie-break order
    if (tags.triangle_free) found.push_back(triangle_free_certificate(g));
    if (tags.chordal) found.push_back(chordal_certificate(g));
    if (!tags.triangle_free && tags.at_most_three_triangles) {
        auto res = newfamily_certificate(g, subgraph_for_three_triangles(g));
        res.certificate.method = CertMethod::three_triangles;
        found.push_back(std::move(res.certificate));
    }
    if (!tags.chordal && tags.g4_private_edge) {
        auto res = newfamily_certificate(g, subgraph_for_g4(g));
        res.certificate.method = CertMethod::g4;
        found.push_back(std::move(res.certificate));
    }
    PipelineResult out;
    for (auto& cert : found) {
        if (!out.found || cert.k < out.k_upper) {
            out.found = true;
            out.k_upper = cert.k;
            out.method = cert.method;
            out.certificate = std::move(cert);
        }
    }
    if (out.found) {
        int dim_h = hole_space_dimension(g, hole_opt);
        if (out.k_upper > dim_h + 1)
            throw std::logic_error("certifier exceeded the hole-dimension bound");
    }
    return out;
}

} // namespace compnum
