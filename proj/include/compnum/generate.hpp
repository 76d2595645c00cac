#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <random>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "compnum/errors.hpp"
#include "compnum/graph.hpp"
#include "compnum/holes.hpp"

namespace compnum {

inline std::uint64_t fnv1a64(std::string_view s) {
    std::uint64_t h = 14695981039346656037ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

/// Stable hex id of a graph's canonical serialization.
inline std::string graph_hash(const Graph& g) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(g.serialize())));
    return buf;
}

namespace detail {

// Canonical labeling for tiny graphs: place vertices one at a time; placing
// vertex number L appends the block of adjacency bits toward the L already
// placed vertices (earliest placed most significant). The lexicographically
// smallest block sequence over all placements is canonical. Only candidates
// achieving the per-level minimum block are expanded, and tied candidates
// that are twins collapse to one branch. No heap allocation in the search;
// this runs millions of times during exhaustive enumeration.
class CanonicalLabeler {
public:
    static constexpr int kMaxN = 16;

    CanonicalLabeler(const std::uint32_t* adj, int n) : n_(n), adj_(adj) {}

    /// Block sequence of the canonical labeling.
    std::vector<std::uint32_t> canonical_blocks() {
        for (int i = 0; i + 1 < kMaxN; ++i) best_[i] = ~std::uint32_t{0};
        use_threshold_ = false;
        aborted_ = false;
        search();
        return std::vector<std::uint32_t>(best_, best_ + std::max(0, n_ - 1));
    }

    /// True iff no relabeling beats the identity labeling (used to accept
    /// exactly one member of each isomorphism class during enumeration).
    bool identity_is_canonical() {
        for (int v = 1; v < n_; ++v) {
            std::uint32_t block = 0;
            for (int i = 0; i < v; ++i)
                block |= ((adj_[v] >> i) & 1u) << (v - 1 - i);
            threshold_[v - 1] = best_[v - 1] = block;
        }
        use_threshold_ = true;
        aborted_ = false;
        search();
        return !aborted_;
    }

private:
    void search() {
        nplaced_ = 0;
        placed_mask_ = 0;
        if (n_ == 0) return;
        dfs(0);
    }

    void dfs(int level) {
        if (aborted_ || level == n_) return;
        std::uint32_t bmin = ~std::uint32_t{0};
        std::uint32_t blocks[kMaxN];
        for (int v = 0; v < n_; ++v) {
            if (placed_mask_ >> v & 1) continue;
            std::uint32_t block = 0;
            for (int i = 0; i < level; ++i)
                block |= ((adj_[v] >> placed_[i]) & 1u) << (level - 1 - i);
            blocks[v] = block;
            if (block < bmin) bmin = block;
        }
        if (level > 0) {
            const int slot = level - 1;
            if (bmin > best_[slot]) return;
            if (bmin < best_[slot]) {
                best_[slot] = bmin;
                for (int i = slot + 1; i + 1 < n_; ++i) best_[i] = ~std::uint32_t{0};
                if (use_threshold_ && beats_threshold(slot)) {
                    aborted_ = true;
                    return;
                }
            }
        }
        // only per-level minima can start a lexicographically minimal suffix;
        // tied candidates that are twins lead to identical subtrees
        int expanded[kMaxN];
        int nexp = 0;
        for (int v = 0; v < n_; ++v) {
            if ((placed_mask_ >> v & 1) || blocks[v] != bmin) continue;
            bool dup = false;
            for (int i = 0; i < nexp; ++i) {
                int u = expanded[i];
                if ((adj_[u] & ~(1u << v)) == (adj_[v] & ~(1u << u))) {
                    dup = true;
                    break;
                }
            }
            if (dup) continue;
            expanded[nexp++] = v;
            placed_[nplaced_++] = v;
            placed_mask_ |= 1u << v;
            dfs(level + 1);
            --nplaced_;
            placed_mask_ &= ~(1u << v);
            if (aborted_) return;
        }
    }

    bool beats_threshold(int slot) const {
        for (int i = 0; i <= slot; ++i) {
            if (best_[i] < threshold_[i]) return true;
            if (best_[i] > threshold_[i]) return false;
        }
        return false;
    }

    int n_;
    const std::uint32_t* adj_;
    int placed_[kMaxN];
    int nplaced_ = 0;
    std::uint32_t placed_mask_ = 0;
    std::uint32_t best_[kMaxN];
    std::uint32_t threshold_[kMaxN];
    bool use_threshold_ = false;
    bool aborted_ = false;
};

inline std::vector<std::uint32_t> adjacency_rows(const Graph& g) {
    if (g.vertex_count() > 16)
        throw PreconditionError("canonical labeling supports at most 16 vertices");
    std::vector<std::uint32_t> rows(g.vertex_count(), 0);
    for (auto [u, v] : g.edges()) {
        rows[u] |= 1u << v;
        rows[v] |= 1u << u;
    }
    return rows;
}

inline Graph graph_from_blocks(int n, const std::vector<std::uint32_t>& blocks) {
    std::vector<std::pair<int, int>> edges;
    for (int v = 1; v < n; ++v)
        for (int i = 0; i < v; ++i)
            if ((blocks[v - 1] >> (v - 1 - i)) & 1u) edges.emplace_back(i, v);
    return Graph(n, std::move(edges));
}

} // namespace detail

/// Isomorphism-canonical representative (n <= 16).
inline Graph canonical_form(const Graph& g) {
    auto rows = detail::adjacency_rows(g);
    detail::CanonicalLabeler lab(rows.data(), g.vertex_count());
    return detail::graph_from_blocks(g.vertex_count(), lab.canonical_blocks());
}

namespace detail {

inline bool mask_connected(int n, std::uint64_t mask) {
    if (n <= 1) return true;
    std::uint32_t rows[16] = {};
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1) {
                rows[i] |= 1u << j;
                rows[j] |= 1u << i;
            }
    std::uint32_t seen = 1, frontier = 1;
    while (frontier) {
        int v = std::countr_zero(frontier);
        frontier &= frontier - 1;
        std::uint32_t fresh = rows[v] & ~seen;
        seen |= fresh;
        frontier |= fresh;
    }
    return seen == (std::uint32_t{1} << n) - 1;
}

inline Graph graph_from_mask(int n, std::uint64_t mask) {
    std::vector<std::pair<int, int>> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit)
            if (mask >> bit & 1) edges.emplace_back(i, j);
    return Graph(n, std::move(edges));
}

} // namespace detail

/// Every connected graph on exactly n vertices, one per isomorphism class:
/// all labeled graphs are enumerated and exactly the canonically labeled
/// ones kept. Counts match 1, 1, 2, 6, 21, 112, 853 for n = 1..7.
inline const std::vector<Graph>& connected_graphs(int n) {
    if (n < 1 || n > 7)
        throw PreconditionError("exhaustive generator supports 1 <= n <= 7");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<Graph> out;
    const int nbits = n * (n - 1) / 2;
    std::uint32_t rows[detail::CanonicalLabeler::kMaxN];
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << nbits); ++mask) {
        if (!detail::mask_connected(n, mask)) continue;
        for (int i = 0; i < n; ++i) rows[i] = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i, ++bit)
                if (mask >> bit & 1) {
                    rows[i] |= 1u << j;
                    rows[j] |= 1u << i;
                }
        if (detail::CanonicalLabeler(rows, n).identity_is_canonical())
            out.push_back(detail::graph_from_mask(n, mask));
    }
    return cache.emplace(n, std::move(out)).first->second;
}

/// Connected triangle-free graphs on exactly n vertices up to isomorphism.
/// For n <= 7 this filters the exhaustive corpus; for n = 8 every graph is
/// reached by attaching a new vertex to a nonempty independent set of a
/// 7-vertex member (every connected graph has a non-cut vertex, and deleting
/// one from a triangle-free graph stays triangle-free and connected).
inline const std::vector<Graph>& connected_triangle_free_graphs(int n) {
    if (n < 1 || n > 8)
        throw PreconditionError("triangle-free generator supports 1 <= n <= 8");
    static std::mutex mu;
    static std::map<int, std::vector<Graph>> cache;
    {
        std::lock_guard<std::mutex> lock(mu);
        if (auto it = cache.find(n); it != cache.end()) return it->second;
    }
    std::vector<Graph> out;
    if (n <= 7) {
        for (const auto& g : connected_graphs(n))
            if (triangles(g).empty()) out.push_back(g);
    } else {
        std::set<std::vector<std::uint32_t>> seen;
        for (const auto& base : connected_triangle_free_graphs(7)) {
            std::vector<std::uint32_t> rows = detail::adjacency_rows(base);
            for (std::uint32_t attach = 1; attach < (1u << 7); ++attach) {
                bool independent = true;
                for (std::uint32_t t = attach; t && independent;) {
                    int v = std::countr_zero(t);
                    t &= t - 1;
                    if (rows[v] & attach) independent = false;
                }
                if (!independent) continue;
                auto edges = base.edges();
                for (std::uint32_t t = attach; t;) {
                    int v = std::countr_zero(t);
                    t &= t - 1;
                    edges.emplace_back(v, 7);
                }
                Graph g(8, std::move(edges));
                auto grows = detail::adjacency_rows(g);
                auto blocks = detail::CanonicalLabeler(grows.data(), 8).canonical_blocks();
                if (seen.insert(blocks).second)
                    out.push_back(detail::graph_from_blocks(8, blocks));
            }
        }
    }
    std::lock_guard<std::mutex> lock(mu);
    return cache.emplace(n, std::move(out)).first->second;
}

/// G(n, p) sample; edge decisions consume one RNG draw each, so results are
/// reproducible for a fixed seed across platforms.
inline Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<std::pair<int, int>> edges;
    const double scale = 9007199254740992.0; // 2^53
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (static_cast<double>(rng() >> 11) < p * scale) edges.emplace_back(u, v);
    return Graph(n, std::move(edges));
}

} // namespace compnum
