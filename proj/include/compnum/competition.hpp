#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <queue>
#include <sstream>
#include <string>
#include <unordered_set>
#include <vector>

#include "compnum/errors.hpp"
#include "compnum/graph.hpp"

namespace compnum {

/// C(D): edge between distinct x, y iff they share an out-neighbor in D.
inline Graph competition_graph(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<VertexSet> adj(n, VertexSet(n));
    for (int prey = 0; prey < n; ++prey) {
        const auto& in = d.in_neighbors(prey);
        for (int u = in.next_set(0); u >= 0; u = in.next_set(u + 1))
            for (int v = in.next_set(u + 1); v >= 0; v = in.next_set(v + 1)) {
                adj[u].set(v);
                adj[v].set(u);
            }
    }
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = adj[u].next_set(u + 1); v >= 0; v = adj[u].next_set(v + 1))
            edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

struct TopoResult {
    bool acyclic = false;
    std::vector<int> order; // valid topological order when acyclic
    std::vector<int> cycle; // a directed cycle otherwise
};

/// Kahn's algorithm with smallest-id-first tie break; extracts a directed
/// cycle from the leftover vertices on failure.
inline TopoResult topological_order(const Digraph& d) {
    const int n = d.vertex_count();
    std::vector<int> indeg(n, 0);
    for (auto [u, v] : d.arcs()) {
        (void)u;
        ++indeg[v];
    }
    std::priority_queue<int, std::vector<int>, std::greater<int>> ready;
    for (int v = 0; v < n; ++v)
        if (indeg[v] == 0) ready.push(v);
    TopoResult res;
    while (!ready.empty()) {
        int v = ready.top();
        ready.pop();
        res.order.push_back(v);
        const auto& out = d.out_neighbors(v);
        for (int u = out.next_set(0); u >= 0; u = out.next_set(u + 1))
            if (--indeg[u] == 0) ready.push(u);
    }
    if (static_cast<int>(res.order.size()) == n) {
        res.acyclic = true;
        return res;
    }
    res.order.clear();
    // every leftover vertex keeps an in-neighbor among the leftovers; walk
    // backwards until a vertex repeats
    std::vector<bool> seen(n, false);
    int start = 0;
    while (indeg[start] == 0) ++start;
    std::vector<int> walk;
    int cur = start;
    while (!seen[cur]) {
        seen[cur] = true;
        walk.push_back(cur);
        const auto& in = d.in_neighbors(cur);
        for (int u = in.next_set(0); u >= 0; u = in.next_set(u + 1))
            if (indeg[u] > 0) {
                cur = u;
                break;
            }
    }
    auto it = std::find(walk.begin(), walk.end(), cur);
    res.cycle.assign(it, walk.end());
    std::reverse(res.cycle.begin(), res.cycle.end()); // forward arc direction
    return res;
}

// ---------------------------------------------------------------------------
// Certificates

enum class CertMethod { oracle, chordal, triangle_free, newfamily, three_triangles, g4, user };

inline std::string to_string(CertMethod m) {
    switch (m) {
        case CertMethod::oracle: return "oracle";
        case CertMethod::chordal: return "chordal";
        case CertMethod::triangle_free: return "triangle-free";
        case CertMethod::newfamily: return "newfamily";
        case CertMethod::three_triangles: return "three-triangles";
        case CertMethod::g4: return "g4";
        case CertMethod::user: return "user";
    }
    return "user";
}

inline std::optional<CertMethod> cert_method_from_string(const std::string& s) {
    for (CertMethod m : {CertMethod::oracle, CertMethod::chordal, CertMethod::triangle_free,
                         CertMethod::newfamily, CertMethod::three_triangles, CertMethod::g4,
                         CertMethod::user})
        if (to_string(m) == s) return m;
    return std::nullopt;
}

// An acyclic digraph witnessing k(G) <= k: vertices 0..base_n-1 are G's, the
// remaining k are the added isolated vertices.
struct Certificate {
    Digraph d;
    int base_n = 0;
    int k = 0;
    CertMethod method = CertMethod::user;
};

/// Arc-list certificate format: '#' comments, a header line "base_n k"
/// (two integers), then one "u v" line per arc u -> v.
inline Certificate parse_certificate_text(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    std::optional<std::pair<int, int>> header;
    std::vector<std::pair<int, int>> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        if (auto pos = line.find('#'); pos != std::string::npos) line.erase(pos);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;
        const std::string where = "line " + std::to_string(lineno) + ": ";
        if (!(ls >> b) || (ls >> extra))
            throw ParseError(where + "expected two whitespace-separated integers");
        long long x, y;
        if (!detail::parse_int_token(a, x) || !detail::parse_int_token(b, y))
            throw ParseError(where + "expected nonnegative integers, got '" + a + " " + b + "'");
        if (!header) {
            header = {static_cast<int>(x), static_cast<int>(y)};
            continue;
        }
        arcs.emplace_back(static_cast<int>(x), static_cast<int>(y));
    }
    if (!header) throw ParseError("missing \"base_n k\" header line");
    auto [base_n, k] = *header;
    try {
        return Certificate{Digraph(base_n + k, std::move(arcs)), base_n, k, CertMethod::user};
    } catch (const PreconditionError& e) {
        throw ParseError(std::string("bad arc list: ") + e.what());
    }
}

struct VerifyResult {
    bool ok = false;
    std::string failure; // names the first violated condition
    explicit operator bool() const { return ok; }
};

inline VerifyResult verify_certificate(const Graph& g, const Certificate& cert) {
    auto fail = [](std::string why) { return VerifyResult{false, std::move(why)}; };
    if (cert.base_n != g.vertex_count())
        return fail("base_n " + std::to_string(cert.base_n) + " does not match graph order " +
                    std::to_string(g.vertex_count()));
    if (cert.k < 0) return fail("negative k");
    if (cert.d.vertex_count() != cert.base_n + cert.k)
        return fail("digraph has " + std::to_string(cert.d.vertex_count()) +
                    " vertices, expected base_n + k = " + std::to_string(cert.base_n + cert.k));
    auto topo = topological_order(cert.d);
    if (!topo.acyclic) {
        std::string cyc = "cycle found:";
        for (int v : topo.cycle) cyc += " " + std::to_string(v);
        return fail(cyc);
    }
    Graph comp = competition_graph(cert.d);
    for (auto [u, v] : g.edges())
        if (!comp.adjacent(u, v))
            return fail("missing edge " + std::to_string(u) + "-" + std::to_string(v));
    for (auto [u, v] : comp.edges()) {
        if (v < cert.base_n && !g.adjacent(u, v))
            return fail("spurious edge " + std::to_string(u) + "-" + std::to_string(v));
        if (v >= cert.base_n)
            return fail("added vertex " + std::to_string(v) + " not isolated (edge " +
                        std::to_string(u) + "-" + std::to_string(v) + ")");
    }
    return VerifyResult{true, ""};
}

// ---------------------------------------------------------------------------
// Exact competition number
//
// Search space: a topological order w_1..w_{n+k} of G's vertices plus k added
// vertices where each position i hosts a clique Q_i of G among {w_1..w_{i-1}}
// (the in-neighborhood of the prey w_i). The union of the pairs inside the
// Q_i must be exactly E(G). Every competition graph of an acyclic digraph
// arises this way, so iterative deepening over k gives k(G) exactly. The
// added vertices may be pinned to the last k positions, and once level k-1 is
// exhausted each added position must cover a new edge.

struct OracleOptions {
    int k_max = -1;                    // default: |E(G)|, always sufficient
    double level_time_budget = 60.0;   // seconds per (G, k) level
    std::size_t memo_limit = std::size_t{1} << 22;
};

struct OracleResult {
    bool exact = false;
    int k = -1;             // set when exact
    int lower_bound = 0;    // k(G) >= lower_bound is proven either way
    bool infeasible_below = false; // every level < the answer was exhausted
    std::optional<Certificate> certificate;
    double seconds = 0.0;
    std::uint64_t nodes = 0;
};

namespace detail {

inline void bron_kerbosch(std::uint64_t r, std::uint64_t p, std::uint64_t x,
                          const std::vector<std::uint64_t>& adj,
                          std::vector<std::uint64_t>& out) {
    if (!p && !x) {
        out.push_back(r);
        return;
    }
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t t = px; t;) {
        int v = std::countr_zero(t);
        t &= t - 1;
        int deg = std::popcount(p & adj[v]);
        if (deg > best) {
            best = deg;
            pivot = v;
        }
    }
    std::uint64_t cand = p & ~adj[pivot];
    while (cand) {
        int v = std::countr_zero(cand);
        cand &= cand - 1;
        std::uint64_t vb = std::uint64_t{1} << v;
        bron_kerbosch(r | vb, p & adj[v], x & adj[v], adj, out);
        p &= ~vb;
        x |= vb;
    }
}

struct U128Hash {
    std::size_t operator()(const std::pair<std::uint64_t, std::uint64_t>& p) const {
        std::uint64_t x = p.first * 0x9e3779b97f4a7c15ULL ^ (p.second + 0xbf58476d1ce4e5b9ULL);
        x ^= x >> 31;
        x *= 0x94d049bb133111ebULL;
        x ^= x >> 29;
        return static_cast<std::size_t>(x);
    }
};

class OracleSearch {
public:
    OracleSearch(const Graph& g, const OracleOptions& opt) : g_(g), opt_(opt) {
        n_ = g.vertex_count();
        m_ = g.edge_count();
        if (n_ > 48 || m_ > 64)
            throw PreconditionError("exact oracle supports at most 48 vertices and 64 edges");
        adj_.assign(n_, 0);
        eid_.assign(static_cast<std::size_t>(n_) * n_, -1);
        for (int e = 0; e < m_; ++e) {
            auto [u, v] = g.edge(e);
            adj_[u] |= std::uint64_t{1} << v;
            adj_[v] |= std::uint64_t{1} << u;
            eid_[static_cast<std::size_t>(u) * n_ + v] = e;
            eid_[static_cast<std::size_t>(v) * n_ + u] = e;
        }
        std::uint64_t allv = n_ ? (~std::uint64_t{0} >> (64 - n_)) : 0;
        bron_kerbosch(0, allv, 0, adj_, cliques_);
        omega_ = 0;
        clique_edges_.resize(cliques_.size());
        for (std::size_t i = 0; i < cliques_.size(); ++i) {
            omega_ = std::max(omega_, std::popcount(cliques_[i]));
            clique_edges_[i] = pair_mask(cliques_[i]);
        }
        // twins (N(u)\{v} == N(v)\{u}, adjacent or not) commute with the
        // search; only the smallest unplaced member of a twin pair may go next
        blocked_by_.assign(n_, 0);
        for (int v = 0; v < n_; ++v)
            for (int u = 0; u < v; ++u) {
                std::uint64_t mu = adj_[u] & ~(std::uint64_t{1} << v);
                std::uint64_t mv = adj_[v] & ~(std::uint64_t{1} << u);
                if (mu == mv) blocked_by_[v] |= std::uint64_t{1} << u;
            }
        full_edges_ = m_ ? (~std::uint64_t{0} >> (64 - m_)) : 0;
        percov_.resize(n_ + 1);
        for (int s = 0; s <= n_; ++s) {
            int c = std::min(s, omega_);
            percov_[s] = c * (c - 1) / 2;
        }
        cap_from_.assign(n_ + 1, 0);
        for (int p = n_ - 1; p >= 0; --p) cap_from_[p] = cap_from_[p + 1] + percov_[p];
    }

    OracleResult run() {
        auto t0 = std::chrono::steady_clock::now();
        OracleResult res;
        const int kmax = opt_.k_max < 0 ? m_ : opt_.k_max;
        for (int k = 0; k <= kmax; ++k) {
            k_ = k;
            if (cap_from_[0] + static_cast<std::uint64_t>(k) * percov_[n_] <
                static_cast<std::uint64_t>(m_)) {
                res.lower_bound = k + 1; // capacity bound: level infeasible
                continue;
            }
            deadline_ = std::chrono::steady_clock::now() +
                        std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                            std::chrono::duration<double>(opt_.level_time_budget));
            timed_out_ = false;
            memo_.clear();
            steps_.clear();
            bool found = dfs_real(0, full_edges_);
            if (timed_out_) {
                res.exact = false;
                res.lower_bound = k;
                res.infeasible_below = true; // all levels below k were exhausted
                res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count();
                res.nodes = nodes_;
                return res;
            }
            if (found) {
                res.exact = true;
                res.k = k;
                res.lower_bound = k;
                res.infeasible_below = true;
                res.certificate = build_certificate();
                res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
                                  .count();
                res.nodes = nodes_;
                return res;
            }
            res.lower_bound = k + 1;
        }
        res.exact = false;
        res.infeasible_below = true;
        res.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        res.nodes = nodes_;
        return res;
    }

private:
    struct Step {
        int vertex;            // -1 for an added prey
        std::uint64_t clique;  // in-neighborhood of this position's prey
    };

    std::uint64_t pair_mask(std::uint64_t vset) const {
        std::uint64_t em = 0;
        for (std::uint64_t t = vset; t;) {
            int u = std::countr_zero(t);
            t &= t - 1;
            for (std::uint64_t s = t; s;) {
                int v = std::countr_zero(s);
                s &= s - 1;
                em |= std::uint64_t{1} << eid_[static_cast<std::size_t>(u) * n_ + v];
            }
        }
        return em;
    }

    bool out_of_time() {
        if ((++nodes_ & 1023) == 0 && std::chrono::steady_clock::now() > deadline_)
            timed_out_ = true;
        return timed_out_;
    }

    bool dfs_real(std::uint64_t placed, std::uint64_t uncovered) {
        if (out_of_time()) return false;
        const int pos = std::popcount(placed);
        if (!uncovered) { // done: park the remaining vertices with empty cliques
            for (int v = 0; v < n_; ++v)
                if (!(placed >> v & 1)) steps_.push_back({v, 0});
            return true;
        }
        if (pos == n_) return dfs_added(uncovered, k_);
        if (cap_from_[pos] + static_cast<std::uint64_t>(k_) * percov_[n_] <
            static_cast<std::uint64_t>(std::popcount(uncovered)))
            return false;
        if (memo_.contains({placed, uncovered})) return false;

        // candidate cliques: maximal cliques restricted to the placed set,
        // kept when they cover a new edge and are set-maximal among candidates
        std::vector<std::pair<std::uint64_t, std::uint64_t>> cand; // (vertices, covered)
        for (std::size_t i = 0; i < cliques_.size(); ++i) {
            std::uint64_t c = cliques_[i] & placed;
            if (std::popcount(c) < 2) continue;
            std::uint64_t em = (c == cliques_[i]) ? clique_edges_[i] : pair_mask(c);
            if (!(em & uncovered)) continue;
            cand.emplace_back(c, em);
        }
        std::sort(cand.begin(), cand.end());
        cand.erase(std::unique(cand.begin(), cand.end()), cand.end());
        std::vector<std::pair<std::uint64_t, std::uint64_t>> maximal;
        for (const auto& a : cand) {
            bool dominated = std::any_of(cand.begin(), cand.end(), [&](const auto& b) {
                return a.first != b.first && (a.first & ~b.first) == 0;
            });
            if (!dominated) maximal.push_back(a);
        }
        cand.swap(maximal);
        std::sort(cand.begin(), cand.end(), [&](const auto& a, const auto& b) {
            int ca = std::popcount(a.second & uncovered), cb = std::popcount(b.second & uncovered);
            return ca != cb ? ca > cb : a.first < b.first;
        });

        auto next_vertices = [&] {
            std::vector<int> vs;
            for (int v = 0; v < n_; ++v)
                if (!(placed >> v & 1) && (blocked_by_[v] & ~placed) == 0) vs.push_back(v);
            std::stable_sort(vs.begin(), vs.end(), [&](int a, int b) {
                return std::popcount(adj_[a] & placed) > std::popcount(adj_[b] & placed);
            });
            return vs;
        };
        const auto vs = next_vertices();
        for (const auto& [cv, cem] : cand) {
            std::uint64_t u2 = uncovered & ~cem;
            for (int w : vs) {
                steps_.push_back({w, cv});
                if (dfs_real(placed | (std::uint64_t{1} << w), u2)) return true;
                steps_.pop_back();
                if (timed_out_) return false;
            }
        }
        for (int w : vs) { // the "do nothing" position
            steps_.push_back({w, 0});
            if (dfs_real(placed | (std::uint64_t{1} << w), uncovered)) return true;
            steps_.pop_back();
            if (timed_out_) return false;
        }
        if (memo_.size() < opt_.memo_limit) memo_.insert({placed, uncovered});
        return false;
    }

    // Added preys are a set cover of the leftover edges by maximal cliques;
    // branch on the covers of the first uncovered edge.
    bool dfs_added(std::uint64_t uncovered, int kleft) {
        if (out_of_time()) return false;
        if (!uncovered) return true;
        if (kleft == 0 ||
            static_cast<std::uint64_t>(kleft) * percov_[n_] <
                static_cast<std::uint64_t>(std::popcount(uncovered)))
            return false;
        int e = std::countr_zero(uncovered);
        auto [eu, ev] = g_.edge(e);
        std::uint64_t need = (std::uint64_t{1} << eu) | (std::uint64_t{1} << ev);
        std::vector<std::size_t> cover;
        for (std::size_t i = 0; i < cliques_.size(); ++i)
            if ((cliques_[i] & need) == need) cover.push_back(i);
        std::sort(cover.begin(), cover.end(), [&](std::size_t a, std::size_t b) {
            int ca = std::popcount(clique_edges_[a] & uncovered);
            int cb = std::popcount(clique_edges_[b] & uncovered);
            return ca != cb ? ca > cb : a < b;
        });
        for (std::size_t i : cover) {
            steps_.push_back({-1, cliques_[i]});
            if (dfs_added(uncovered & ~clique_edges_[i], kleft - 1)) return true;
            steps_.pop_back();
            if (timed_out_) return false;
        }
        return false;
    }

    Certificate build_certificate() const {
        std::vector<std::pair<int, int>> arcs;
        int next_added = n_;
        for (const auto& s : steps_) {
            int prey = s.vertex >= 0 ? s.vertex : next_added++;
            for (std::uint64_t t = s.clique; t;) {
                int u = std::countr_zero(t);
                t &= t - 1;
                arcs.emplace_back(u, prey);
            }
        }
        Certificate cert{Digraph(n_ + k_, std::move(arcs)), n_, k_, CertMethod::oracle};
        auto check = verify_certificate(g_, cert);
        if (!check.ok)
            throw std::logic_error("oracle produced an invalid certificate: " + check.failure);
        return cert;
    }

    const Graph& g_;
    OracleOptions opt_;
    int n_ = 0, m_ = 0, omega_ = 0, k_ = 0;
    std::vector<int> eid_;
    std::vector<std::uint64_t> adj_, cliques_, clique_edges_, blocked_by_;
    std::vector<int> percov_;
    std::vector<std::uint64_t> cap_from_;
    std::uint64_t full_edges_ = 0;
    std::chrono::steady_clock::time_point deadline_;
    bool timed_out_ = false;
    std::uint64_t nodes_ = 0;
    std::vector<Step> steps_;
    std::unordered_set<std::pair<std::uint64_t, std::uint64_t>, U128Hash> memo_;
};

} // namespace detail

/// Iterative-deepening exact competition number with certificate extraction.
/// A level that exceeds its time budget yields a proven lower bound instead
/// of a guess.
inline OracleResult competition_number_exact(const Graph& g, const OracleOptions& opt = {}) {
    return detail::OracleSearch(g, opt).run();
}

// ---------------------------------------------------------------------------
// Independent cross-validation oracle: enumerate raw arc subsets on at most 5
// labeled vertices, filter to acyclic, and compare competition graphs.

struct BruteForceResult {
    std::optional<int> k;     // set when the search concluded
    int searched_max_k = -1;  // levels 0..searched_max_k were fully enumerated
    std::optional<Certificate> certificate;
};

inline BruteForceResult competition_number_direct_bruteforce(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 5) throw PreconditionError("brute force limited to 5 total vertices");
    BruteForceResult res;
    for (int k = 0; n + k <= 5; ++k) {
        const int nt = n + k;
        std::vector<std::pair<int, int>> arc_of;
        for (int u = 0; u < nt; ++u)
            for (int v = 0; v < nt; ++v)
                if (u != v) arc_of.emplace_back(u, v);
        const int na = static_cast<int>(arc_of.size());
        // expected pair set: exactly E(G), nothing touching added vertices
        auto pair_idx = [nt](int u, int v) {
            if (u > v) std::swap(u, v);
            return v * (v - 1) / 2 + u;
        };
        std::uint64_t want = 0;
        for (auto [u, v] : g.edges()) want |= std::uint64_t{1} << pair_idx(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << na); ++mask) {
            std::uint64_t in_nb[5] = {0, 0, 0, 0, 0};
            for (std::uint64_t t = mask; t;) {
                int a = std::countr_zero(t);
                t &= t - 1;
                in_nb[arc_of[a].second] |= std::uint64_t{1} << arc_of[a].first;
            }
            std::uint64_t got = 0;
            for (int w = 0; w < nt; ++w) {
                for (std::uint64_t s = in_nb[w]; s;) {
                    int u = std::countr_zero(s);
                    s &= s - 1;
                    for (std::uint64_t r = s; r;) {
                        int v = std::countr_zero(r);
                        r &= r - 1;
                        got |= std::uint64_t{1} << pair_idx(u, v);
                    }
                }
            }
            if (got != want) continue;
            // acyclicity: repeatedly delete sources
            std::uint64_t alive = (std::uint64_t{1} << nt) - 1;
            bool progress = true;
            while (alive && progress) {
                progress = false;
                for (int v = 0; v < nt; ++v)
                    if ((alive >> v & 1) && !(in_nb[v] & alive)) {
                        alive &= ~(std::uint64_t{1} << v);
                        progress = true;
                    }
            }
            if (alive) continue;
            std::vector<std::pair<int, int>> arcs;
            for (std::uint64_t t = mask; t;) {
                int a = std::countr_zero(t);
                t &= t - 1;
                arcs.push_back(arc_of[a]);
            }
            res.k = k;
            res.searched_max_k = k;
            res.certificate = Certificate{Digraph(nt, std::move(arcs)), n, k, CertMethod::oracle};
            return res;
        }
        res.searched_max_k = k;
    }
    return res;
}

} // namespace compnum
