#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "compnum/bitset.hpp"
#include "compnum/errors.hpp"

namespace compnum {

// Simple undirected graph on vertices 0..n-1. The edge list is kept sorted
// lexicographically by (min endpoint, max endpoint) and the edge id equals
// the list position. That ordering is the coordinate system for every GF(2)
// vector in this library, so it must never change after construction.
class Graph {
public:
    Graph() = default;

    Graph(int n, std::vector<std::pair<int, int>> edge_pairs) : n_(n) {
        if (n < 0) throw PreconditionError("vertex count must be nonnegative");
        for (auto& [u, v] : edge_pairs) {
            if (u == v) throw PreconditionError("self-loop at vertex " + std::to_string(u));
            if (u > v) std::swap(u, v);
            if (u < 0 || v >= n_)
                throw PreconditionError("edge endpoint out of range: " + std::to_string(u) +
                                        " " + std::to_string(v));
        }
        std::sort(edge_pairs.begin(), edge_pairs.end());
        if (std::adjacent_find(edge_pairs.begin(), edge_pairs.end()) != edge_pairs.end())
            throw PreconditionError("duplicate edge");
        edges_ = std::move(edge_pairs);
        adj_.assign(n_, VertexSet(n_));
        for (auto [u, v] : edges_) {
            adj_[u].set(v);
            adj_[v].set(u);
        }
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::pair<int, int>>& edges() const { return edges_; }
    std::pair<int, int> edge(int id) const { return edges_.at(id); }

    /// Canonical edge id of {u,v}, or -1 when not an edge.
    int edge_id(int u, int v) const {
        if (u > v) std::swap(u, v);
        auto it = std::lower_bound(edges_.begin(), edges_.end(), std::make_pair(u, v));
        if (it == edges_.end() || *it != std::make_pair(u, v)) return -1;
        return static_cast<int>(it - edges_.begin());
    }

    bool adjacent(int u, int v) const { return u != v && adj_[u].test(v); }
    const VertexSet& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return adj_[v].count(); }

    EdgeSet all_edges_set() const {
        EdgeSet s(edge_count());
        for (int i = 0; i < edge_count(); ++i) s.set(i);
        return s;
    }

    /// Canonical text form: header line "n <count>", then one "u v" line per
    /// edge in id order. parse_edge_list(serialize()) reproduces the graph.
    std::string serialize() const {
        std::ostringstream out;
        out << "n " << n_ << "\n";
        for (auto [u, v] : edges_) out << u << " " << v << "\n";
        return out.str();
    }

    bool operator==(const Graph& o) const { return n_ == o.n_ && edges_ == o.edges_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> edges_;
    std::vector<VertexSet> adj_;
};

// ---------------------------------------------------------------------------
// Edge-list text format

namespace detail {

inline bool parse_int_token(const std::string& tok, long long& out) {
    if (tok.empty()) return false;
    std::size_t i = 0;
    for (; i < tok.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(tok[i]))) return false;
    try {
        out = std::stoll(tok);
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace detail

/// Parses lines "u v" (one edge per line). A first data line "n <count>" may
/// pin the vertex count; '#' starts a comment. Errors name the line.
inline Graph parse_edge_list(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    long long header_n = -1;
    bool seen_edge = false;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> edge_line; // line number per parsed edge
    long long max_id = -1;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue; // blank
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (!(ls >> b) || (ls >> extra))
            throw ParseError(where + "expected two whitespace-separated fields");
        if (a == "n") {
            long long val;
            if (seen_edge || header_n >= 0)
                throw ParseError(where + "header \"n <count>\" must be the first data line");
            if (!detail::parse_int_token(b, val))
                throw ParseError(where + "bad vertex count '" + b + "'");
            header_n = val;
            continue;
        }
        long long u, v;
        if (!detail::parse_int_token(a, u) || !detail::parse_int_token(b, v))
            throw ParseError(where + "expected nonnegative integers, got '" + a + " " + b + "'");
        if (u == v) throw ParseError(where + "self-loop at vertex " + std::to_string(u));
        if (u > 1'000'000 || v > 1'000'000) throw ParseError(where + "vertex id too large");
        if (u > v) std::swap(u, v);
        auto e = std::make_pair(static_cast<int>(u), static_cast<int>(v));
        for (std::size_t i = 0; i < pairs.size(); ++i)
            if (pairs[i] == e)
                throw ParseError(where + "duplicate edge " + std::to_string(u) + " " +
                                 std::to_string(v) + " (first on line " +
                                 std::to_string(edge_line[i]) + ")");
        pairs.push_back(e);
        edge_line.push_back(lineno);
        max_id = std::max(max_id, v);
        seen_edge = true;
    }
    long long n = std::max(header_n, max_id + 1);
    return Graph(static_cast<int>(std::max(0LL, n)), std::move(pairs));
}

// ---------------------------------------------------------------------------
// Structural operations

inline int connected_component_count(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    int count = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            const auto& nb = g.neighbors(v);
            for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
                if (comp[u] < 0) {
                    comp[u] = count;
                    stack.push_back(u);
                }
        }
        ++count;
    }
    return count;
}

/// True iff the graph has at most one connected component (n <= 1 included).
inline bool is_connected(const Graph& g) {
    return connected_component_count(g) <= 1;
}

namespace detail {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[a] = b;
        return true;
    }
};

} // namespace detail

/// Grows the forest F to a spanning tree of G by adding non-cycle-forming
/// edges in ascending id order. Requires G connected and F acyclic.
inline EdgeSet spanning_tree_containing_forest(const Graph& g, const EdgeSet& forest) {
    if (!is_connected(g)) throw PreconditionError("graph is disconnected");
    detail::UnionFind uf(g.vertex_count());
    EdgeSet tree(g.edge_count());
    for (int e = forest.next_set(0); e >= 0; e = forest.next_set(e + 1)) {
        auto [u, v] = g.edge(e);
        if (!uf.unite(u, v)) throw PreconditionError("forest contains a cycle");
        tree.set(e);
    }
    for (int e = 0; e < g.edge_count(); ++e) {
        if (tree.test(e)) continue;
        auto [u, v] = g.edge(e);
        if (uf.unite(u, v)) tree.set(e);
    }
    return tree;
}

struct EdgeDeletion {
    Graph graph;
    std::vector<int> edge_remap; // old id -> new id, -1 when deleted
};

/// Removes the given edge ids; vertices are unchanged, surviving edges are
/// re-labeled canonically and the old->new id map is returned.
inline EdgeDeletion delete_edges(const Graph& g, const EdgeSet& remove) {
    if (remove.size() != g.edge_count())
        throw PreconditionError("edge set size does not match graph");
    std::vector<std::pair<int, int>> kept;
    std::vector<int> remap(g.edge_count(), -1);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (remove.test(e)) continue;
        remap[e] = static_cast<int>(kept.size());
        kept.push_back(g.edge(e));
    }
    return EdgeDeletion{Graph(g.vertex_count(), std::move(kept)), std::move(remap)};
}

inline Graph add_isolated_vertices(const Graph& g, int k) {
    if (k < 0) throw PreconditionError("cannot add a negative number of vertices");
    return Graph(g.vertex_count() + k, g.edges());
}

// ---------------------------------------------------------------------------
// Directed graphs

class Digraph {
public:
    Digraph() = default;

    Digraph(int n, std::vector<std::pair<int, int>> arc_pairs) : n_(n) {
        for (auto [u, v] : arc_pairs) {
            if (u == v) throw PreconditionError("self-loop arc at vertex " + std::to_string(u));
            if (u < 0 || v < 0 || u >= n_ || v >= n_)
                throw PreconditionError("arc endpoint out of range");
        }
        std::sort(arc_pairs.begin(), arc_pairs.end());
        if (std::adjacent_find(arc_pairs.begin(), arc_pairs.end()) != arc_pairs.end())
            throw PreconditionError("duplicate arc");
        arcs_ = std::move(arc_pairs);
        out_.assign(n_, VertexSet(n_));
        in_.assign(n_, VertexSet(n_));
        for (auto [u, v] : arcs_) {
            out_[u].set(v);
            in_[v].set(u);
        }
    }

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<std::pair<int, int>>& arcs() const { return arcs_; }
    const VertexSet& out_neighbors(int v) const { return out_[v]; }
    const VertexSet& in_neighbors(int v) const { return in_[v]; }

    bool operator==(const Digraph& o) const { return n_ == o.n_ && arcs_ == o.arcs_; }

private:
    int n_ = 0;
    std::vector<std::pair<int, int>> arcs_;
    std::vector<VertexSet> out_, in_;
};

} // namespace compnum
