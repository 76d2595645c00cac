#pragma once

#include <algorithm>
#include <vector>

#include "compnum/graph.hpp"
#include "compnum/holes.hpp"

namespace compnum {

// GF(2) row space in echelon form; each stored row has a distinct highest set
// bit, which is its pivot.
class Gf2Basis {
public:
    Gf2Basis() = default;
    explicit Gf2Basis(int dim) : dim_(dim) {}

    int dimension() const { return dim_; }
    int rank() const { return static_cast<int>(rows_.size()); }
    const std::vector<Gf2Vector>& rows() const { return rows_; }

    Gf2Vector reduce(Gf2Vector v) const {
        if (v.size() != dim_) throw PreconditionError("GF(2) vector length mismatch");
        for (const auto& row : rows_) {
            int p = row.highest_set();
            if (v.test(p)) v ^= row;
        }
        return v;
    }

    bool in_span(const Gf2Vector& v) const { return reduce(v).none(); }

    /// Inserts v if independent; returns true when the rank grew.
    bool insert(Gf2Vector v) {
        v = reduce(std::move(v));
        if (v.none()) return false;
        rows_.push_back(std::move(v));
        std::sort(rows_.begin(), rows_.end(),
                  [](const Gf2Vector& a, const Gf2Vector& b) {
                      return a.highest_set() > b.highest_set();
                  });
        return true;
    }

private:
    int dim_ = 0;
    std::vector<Gf2Vector> rows_;
};

/// Characteristic vector of the cycle's edge set in canonical edge order.
inline Gf2Vector chi(const Graph& g, const Cycle& c) {
    Gf2Vector v(g.edge_count());
    for (std::size_t i = 0; i < c.vertices.size(); ++i) {
        int id = g.edge_id(c.vertices[i], c.vertices[(i + 1) % c.vertices.size()]);
        if (id < 0) throw PreconditionError("cycle uses an edge not present in the graph");
        v.set(id);
    }
    return v;
}

inline Gf2Vector chi(const Graph& g, const std::vector<int>& cycle_seq) {
    return chi(g, make_cycle(g, cycle_seq));
}

/// dim C(G) = |E| - |V| + (number of connected components).
inline int cycle_space_dimension(const Graph& g) {
    return g.edge_count() - g.vertex_count() + connected_component_count(g);
}

/// GF(2) rank of {chi_C : C a hole of g}. Stops early once the rank reaches
/// the cycle space dimension.
inline int hole_space_dimension(const Graph& g, const HoleOptions& opt = {}) {
    Gf2Basis basis(g.edge_count());
    const int cap = cycle_space_dimension(g);
    if (cap == 0) return 0;
    detail::for_each_chordless_cycle(g, 4, opt, [&](const Cycle& c) {
        basis.insert(chi(g, c));
        return basis.rank() < cap;
    });
    return basis.rank();
}

/// Echelon basis of the hole space (no early stop; rank == hole dimension).
inline Gf2Basis hole_space_basis(const Graph& g, const HoleOptions& opt = {}) {
    Gf2Basis basis(g.edge_count());
    detail::for_each_chordless_cycle(g, 4, opt, [&](const Cycle& c) {
        basis.insert(chi(g, c));
        return true;
    });
    return basis;
}

namespace detail {

// Chord whose shorter section is minimal, ties by smallest edge id.
struct ChordChoice {
    int i = -1, j = -1;   // positions in the cycle sequence
    int short_len = 0;    // edges in the shorter section
    int edge = -1;
};

inline ChordChoice pick_chord(const Graph& g, const std::vector<int>& seq) {
    const int len = static_cast<int>(seq.size());
    ChordChoice best;
    for (int i = 0; i < len; ++i)
        for (int j = i + 2; j < len; ++j) {
            if (i == 0 && j == len - 1) continue;
            if (!g.adjacent(seq[i], seq[j])) continue;
            int s = std::min(j - i, len - (j - i));
            int e = g.edge_id(seq[i], seq[j]);
            if (best.edge < 0 || s < best.short_len ||
                (s == best.short_len && e < best.edge)) {
                best = ChordChoice{i, j, s, e};
            }
        }
    return best;
}

inline void decompose_rec(const Graph& g, std::vector<int> seq, std::vector<Cycle>& out) {
    ChordChoice ch = pick_chord(g, seq);
    if (ch.edge < 0) { // chordless: a triangle or a hole
        out.push_back(make_cycle(g, std::move(seq)));
        return;
    }
    const int len = static_cast<int>(seq.size());
    std::vector<int> shorter, longer;
    if (ch.j - ch.i <= len - (ch.j - ch.i)) {
        shorter.assign(seq.begin() + ch.i, seq.begin() + ch.j + 1);
        longer.assign(seq.begin() + ch.j, seq.end());
        longer.insert(longer.end(), seq.begin(), seq.begin() + ch.i + 1);
    } else {
        shorter.assign(seq.begin() + ch.j, seq.end());
        shorter.insert(shorter.end(), seq.begin(), seq.begin() + ch.i + 1);
        longer.assign(seq.begin() + ch.i, seq.begin() + ch.j + 1);
    }
    // the shorter section plus the chord is chordless by minimality
    out.push_back(make_cycle(g, std::move(shorter)));
    decompose_rec(g, std::move(longer), out);
}

} // namespace detail

/// Splits a cycle along chords into triangles and holes whose characteristic
/// vectors XOR to chi of the input; every piece stays within V(C).
inline std::vector<Cycle> decompose_cycle(const Graph& g, const Cycle& c) {
    Cycle checked = make_cycle(g, c.vertices); // validates against g
    std::vector<Cycle> out;
    detail::decompose_rec(g, checked.vertices, out);
    return out;
}

} // namespace compnum
