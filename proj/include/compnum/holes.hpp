#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "compnum/errors.hpp"
#include "compnum/graph.hpp"

namespace compnum {

// A cycle of a host graph, stored in canonical form: the vertex sequence is
// rotated to start at the minimum vertex id and oriented so the second entry
// is the smaller of that vertex's two cycle-neighbors.
struct Cycle {
    std::vector<int> vertices;
    EdgeSet edges;

    int length() const { return static_cast<int>(vertices.size()); }
    bool operator==(const Cycle& o) const { return vertices == o.vertices; }
    bool operator<(const Cycle& o) const { return vertices < o.vertices; }
};

/// Validates a vertex sequence as a cycle of g and canonicalizes it.
inline Cycle make_cycle(const Graph& g, std::vector<int> seq) {
    const int len = static_cast<int>(seq.size());
    if (len < 3) throw PreconditionError("cycle needs at least 3 vertices");
    {
        auto sorted = seq;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            throw PreconditionError("cycle repeats a vertex");
    }
    EdgeSet es(g.edge_count());
    for (int i = 0; i < len; ++i) {
        int u = seq[i], v = seq[(i + 1) % len];
        int id = g.edge_id(u, v);
        if (id < 0)
            throw PreconditionError("cycle uses non-edge " + std::to_string(u) + "-" +
                                    std::to_string(v));
        es.set(id);
    }
    int mpos = static_cast<int>(std::min_element(seq.begin(), seq.end()) - seq.begin());
    int prev = seq[(mpos + len - 1) % len], next = seq[(mpos + 1) % len];
    std::vector<int> canon(len);
    if (next <= prev) {
        for (int i = 0; i < len; ++i) canon[i] = seq[(mpos + i) % len];
    } else {
        for (int i = 0; i < len; ++i) canon[i] = seq[(mpos - i + 2 * len) % len];
    }
    return Cycle{std::move(canon), std::move(es)};
}

/// Independent chord check: no edge between non-consecutive cycle vertices.
inline bool is_chordless(const Graph& g, const Cycle& c) {
    const int len = c.length();
    for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (g.adjacent(c.vertices[i], c.vertices[j])) return false;
        }
    return true;
}

struct HoleOptions {
    std::uint64_t max_cycles = 1'000'000;
    std::uint64_t max_steps = 50'000'000;
};

namespace detail {

// Anchored DFS over induced paths. For each anchor u (the minimum id on the
// cycle) and each neighbor a > u, paths u,a,... are extended by vertices
// above u that see only the path tip; a neighbor of u closes a cycle and is
// never extended past, which keeps every emitted cycle chordless. Requiring
// second vertex < closing vertex emits each cycle exactly once, already in
// canonical form.
class ChordlessCycleSearch {
public:
    ChordlessCycleSearch(const Graph& g, int min_len, HoleOptions opt,
                         std::function<bool(const Cycle&)> emit)
        : g_(g), min_len_(min_len), opt_(opt), emit_(std::move(emit)) {}

    void run() {
        const int n = g_.vertex_count();
        on_path_ = VertexSet(n);
        for (anchor_ = 0; anchor_ < n; ++anchor_) {
            const auto& nb = g_.neighbors(anchor_);
            for (int a = nb.next_set(anchor_ + 1); a >= 0; a = nb.next_set(a + 1)) {
                path_ = {anchor_, a};
                on_path_.set(anchor_);
                on_path_.set(a);
                if (!extend(a)) return;
                on_path_.reset(anchor_);
                on_path_.reset(a);
            }
        }
    }

    std::uint64_t cycles_found = 0;

private:
    bool extend(int tip) {
        if (++steps_ > opt_.max_steps)
            throw BudgetExceeded("hole budget exceeded (search steps over " +
                                 std::to_string(opt_.max_steps) + ")");
        const auto& nb = g_.neighbors(tip);
        for (int y = nb.next_set(anchor_ + 1); y >= 0; y = nb.next_set(y + 1)) {
            if (on_path_.test(y)) continue;
            bool chord = false;
            for (std::size_t i = 1; i + 1 < path_.size(); ++i)
                if (g_.adjacent(y, path_[i])) {
                    chord = true;
                    break;
                }
            if (chord) continue;
            if (g_.adjacent(y, anchor_)) {
                // closes a chordless cycle; extending past y would chord it
                if (static_cast<int>(path_.size()) + 1 >= min_len_ && path_[1] < y) {
                    if (++cycles_found > opt_.max_cycles)
                        throw BudgetExceeded("hole budget exceeded (over " +
                                             std::to_string(opt_.max_cycles) + " cycles)");
                    auto cyc = path_;
                    cyc.push_back(y);
                    EdgeSet es(g_.edge_count());
                    for (std::size_t i = 0; i < cyc.size(); ++i)
                        es.set(g_.edge_id(cyc[i], cyc[(i + 1) % cyc.size()]));
                    if (!emit_(Cycle{std::move(cyc), std::move(es)})) return false;
                }
                continue;
            }
            path_.push_back(y);
            on_path_.set(y);
            bool go_on = extend(y);
            path_.pop_back();
            on_path_.reset(y);
            if (!go_on) return false;
        }
        return true;
    }

    const Graph& g_;
    int min_len_;
    HoleOptions opt_;
    std::function<bool(const Cycle&)> emit_;
    int anchor_ = 0;
    std::vector<int> path_;
    VertexSet on_path_;
    std::uint64_t steps_ = 0;
};

inline void for_each_chordless_cycle(const Graph& g, int min_len, const HoleOptions& opt,
                                     std::function<bool(const Cycle&)> emit) {
    ChordlessCycleSearch(g, min_len, opt, std::move(emit)).run();
}

} // namespace detail

/// All chordless cycles of length >= min_len, canonically sorted.
inline std::vector<Cycle> chordless_cycles(const Graph& g, int min_len,
                                           const HoleOptions& opt = {}) {
    std::vector<Cycle> out;
    detail::for_each_chordless_cycle(g, min_len, opt, [&](const Cycle& c) {
        out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

/// All triangles (3-cycles are chordless by definition).
inline std::vector<Cycle> triangles(const Graph& g) {
    std::vector<Cycle> out;
    for (int u = 0; u < g.vertex_count(); ++u) {
        const auto& nu = g.neighbors(u);
        for (int v = nu.next_set(u + 1); v >= 0; v = nu.next_set(v + 1)) {
            VertexSet common = nu & g.neighbors(v);
            for (int w = common.next_set(v + 1); w >= 0; w = common.next_set(w + 1)) {
                EdgeSet es(g.edge_count());
                es.set(g.edge_id(u, v));
                es.set(g.edge_id(u, w));
                es.set(g.edge_id(v, w));
                out.push_back(Cycle{{u, v, w}, std::move(es)});
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

/// The holes of g: induced cycles of length >= 4.
inline std::vector<Cycle> holes(const Graph& g, const HoleOptions& opt = {}) {
    return chordless_cycles(g, 4, opt);
}

/// All chordless cycles (length >= 3) through the given edge.
inline std::vector<Cycle> induced_cycles_through_edge(const Graph& g, int eid,
                                                      const HoleOptions& opt = {}) {
    if (eid < 0 || eid >= g.edge_count()) throw PreconditionError("edge id out of range");
    std::vector<Cycle> out;
    detail::for_each_chordless_cycle(g, 3, opt, [&](const Cycle& c) {
        if (c.edges.test(eid)) out.push_back(c);
        return true;
    });
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Chordality

struct ChordalityResult {
    bool chordal = false;
    // Perfect elimination ordering when chordal: for each position i, the
    // neighbors of order[i] among order[i+1..] form a clique.
    std::vector<int> elimination_order;
    std::optional<Cycle> witness; // one hole when not chordal
};

/// Maximum cardinality search plus a direct simplicial check; on failure a
/// hole through the failing vertex is extracted.
inline ChordalityResult is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0), visit;
    std::vector<bool> numbered(n, false);
    visit.reserve(n);
    for (int step = 0; step < n; ++step) {
        int best = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[v] && (best < 0 || weight[v] > weight[best])) best = v;
        numbered[best] = true;
        visit.push_back(best);
        const auto& nb = g.neighbors(best);
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (!numbered[u]) ++weight[u];
    }
    std::vector<int> order(visit.rbegin(), visit.rend());
    std::vector<int> pos(n);
    for (int i = 0; i < n; ++i) pos[order[i]] = i;

    for (int i = 0; i < n; ++i) {
        const int v = order[i];
        const auto& nb = g.neighbors(v);
        std::vector<int> later;
        for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1))
            if (pos[u] > i) later.push_back(u);
        for (std::size_t a = 0; a < later.size(); ++a)
            for (std::size_t b = a + 1; b < later.size(); ++b) {
                if (g.adjacent(later[a], later[b])) continue;
                // non-simplicial vertex: recover a hole v-x-...-y-v via a
                // shortest x..y path that avoids the rest of N[v]
                int x = later[a], y = later[b];
                std::vector<int> prev(n, -1);
                std::vector<bool> blocked(n, false);
                blocked[v] = true;
                for (int u = nb.next_set(0); u >= 0; u = nb.next_set(u + 1)) blocked[u] = true;
                blocked[x] = blocked[y] = false;
                std::deque<int> q{x};
                prev[x] = x;
                while (!q.empty() && prev[y] < 0) {
                    int cur = q.front();
                    q.pop_front();
                    const auto& cn = g.neighbors(cur);
                    for (int u = cn.next_set(0); u >= 0; u = cn.next_set(u + 1))
                        if (!blocked[u] && prev[u] < 0) {
                            prev[u] = cur;
                            q.push_back(u);
                        }
                }
                std::optional<Cycle> wit;
                if (prev[y] >= 0) {
                    std::vector<int> seq{v};
                    for (int cur = y; cur != x; cur = prev[cur]) seq.push_back(cur);
                    seq.push_back(x);
                    std::reverse(seq.begin() + 1, seq.end());
                    Cycle c = make_cycle(g, std::move(seq));
                    if (c.length() >= 4 && is_chordless(g, c)) wit = std::move(c);
                }
                if (!wit) {
                    auto hs = holes(g);
                    if (hs.empty())
                        throw std::logic_error("simplicial check failed on a chordal graph");
                    wit = hs.front();
                }
                return ChordalityResult{false, {}, std::move(wit)};
            }
    }
    return ChordalityResult{true, std::move(order), std::nullopt};
}

// ---------------------------------------------------------------------------
// Graph families

struct FamilyTags {
    int triangle_count = 0;
    int hole_count = 0;
    bool chordal = false;
    bool triangle_free = false;
    bool exactly_one_triangle = false;
    bool at_most_three_triangles = false;
    bool g1_two_holes = false;           // h(G) = 2
    bool g2_independent_holes = false;   // every hole independent
    bool g3_edge_disjoint_holes = false; // holes pairwise edge-disjoint
    bool g4_private_edge = false;        // every hole has an edge in no other induced cycle
    std::vector<std::pair<Cycle, int>> g4_edges; // hole -> chosen private edge id
};

inline FamilyTags recognize_families(const Graph& g, const HoleOptions& opt = {}) {
    FamilyTags tags;
    auto all = chordless_cycles(g, 3, opt);
    std::vector<Cycle> hs;
    // per-edge count of induced cycles (any length >= 3) through it
    std::vector<int> cycles_through(g.edge_count(), 0);
    for (const auto& c : all) {
        if (c.length() == 3)
            ++tags.triangle_count;
        else
            hs.push_back(c);
        for (int e = c.edges.next_set(0); e >= 0; e = c.edges.next_set(e + 1))
            ++cycles_through[e];
    }
    tags.hole_count = static_cast<int>(hs.size());
    tags.chordal = hs.empty();
    tags.triangle_free = tags.triangle_count == 0;
    tags.exactly_one_triangle = tags.triangle_count == 1;
    tags.at_most_three_triangles = tags.triangle_count <= 3;
    tags.g1_two_holes = tags.hole_count == 2;

    tags.g2_independent_holes = true;
    tags.g3_edge_disjoint_holes = true;
    for (std::size_t i = 0; i < hs.size() && (tags.g2_independent_holes ||
                                              tags.g3_edge_disjoint_holes);
         ++i) {
        VertexSet vi(g.vertex_count());
        for (int v : hs[i].vertices) vi.set(v);
        for (std::size_t j = 0; j < hs.size(); ++j) {
            if (i == j) continue;
            if (i < j && hs[i].edges.intersects(hs[j].edges))
                tags.g3_edge_disjoint_holes = false;
            int shared_v = 0;
            for (int v : hs[j].vertices) shared_v += vi.test(v);
            if (shared_v > 2) tags.g2_independent_holes = false;
            if (shared_v == 2) {
                int shared_e = (hs[i].edges & hs[j].edges).count();
                if (shared_e != 1 || hs[i].length() < 5) tags.g2_independent_holes = false;
            }
        }
    }

    tags.g4_private_edge = true;
    for (const auto& h : hs) {
        int chosen = -1;
        for (int e = h.edges.next_set(0); e >= 0; e = h.edges.next_set(e + 1))
            if (cycles_through[e] == 1) {
                chosen = e;
                break;
            }
        if (chosen < 0) {
            tags.g4_private_edge = false;
            tags.g4_edges.clear();
            break;
        }
        tags.g4_edges.emplace_back(h, chosen);
    }
    if (hs.empty()) tags.g4_private_edge = true;
    return tags;
}

} // namespace compnum
