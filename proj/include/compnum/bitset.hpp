#pragma once

#include <bit>
#include <cassert>
#include <cstdint>
#include <string>
#include <vector>

namespace compnum {

// Fixed-length bitset sized at runtime. Doubles as a GF(2) vector: addition
// is operator^=. Bit i of an edge set corresponds to canonical edge id i.
class Bitset {
public:
    Bitset() = default;
    explicit Bitset(int nbits) : nbits_(nbits), words_((nbits + 63) / 64, 0) {}

    int size() const { return nbits_; }

    bool test(int i) const {
        assert(i >= 0 && i < nbits_);
        return (words_[i >> 6] >> (i & 63)) & 1u;
    }
    void set(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] |= std::uint64_t{1} << (i & 63);
    }
    void reset(int i) {
        assert(i >= 0 && i < nbits_);
        words_[i >> 6] &= ~(std::uint64_t{1} << (i & 63));
    }

    int count() const {
        int c = 0;
        for (auto w : words_) c += std::popcount(w);
        return c;
    }
    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }
    bool none() const { return !any(); }

    /// Highest set bit, or -1 when empty. Used as the GF(2) pivot.
    int highest_set() const {
        for (int w = static_cast<int>(words_.size()) - 1; w >= 0; --w)
            if (words_[w]) return w * 64 + 63 - std::countl_zero(words_[w]);
        return -1;
    }

    /// Lowest set bit, or -1 when empty.
    int lowest_set() const {
        for (std::size_t w = 0; w < words_.size(); ++w)
            if (words_[w]) return static_cast<int>(w) * 64 + std::countr_zero(words_[w]);
        return -1;
    }

    /// First set bit at position >= from, or -1.
    int next_set(int from) const {
        if (from >= nbits_) return -1;
        int w = from >> 6;
        std::uint64_t cur = words_[w] & (~std::uint64_t{0} << (from & 63));
        while (true) {
            if (cur) return w * 64 + std::countr_zero(cur);
            if (++w >= static_cast<int>(words_.size())) return -1;
            cur = words_[w];
        }
    }

    Bitset& operator^=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
        return *this;
    }
    Bitset& operator|=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
        return *this;
    }
    Bitset& operator&=(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
        return *this;
    }
    /// Remove every bit that is set in o.
    Bitset& subtract(const Bitset& o) {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
        return *this;
    }

    friend Bitset operator^(Bitset a, const Bitset& b) { return a ^= b; }
    friend Bitset operator|(Bitset a, const Bitset& b) { return a |= b; }
    friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }

    bool intersects(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & o.words_[i]) return true;
        return false;
    }
    bool is_subset_of(const Bitset& o) const {
        assert(nbits_ == o.nbits_);
        for (std::size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & ~o.words_[i]) return false;
        return true;
    }

    bool operator==(const Bitset& o) const = default;

    std::vector<int> to_indices() const {
        std::vector<int> out;
        for (int i = next_set(0); i >= 0; i = next_set(i + 1)) out.push_back(i);
        return out;
    }

    static Bitset from_indices(int nbits, const std::vector<int>& idx) {
        Bitset b(nbits);
        for (int i : idx) b.set(i);
        return b;
    }

    /// "0101..." with bit 0 first; matches the canonical edge order.
    std::string to01() const {
        std::string s(nbits_, '0');
        for (int i = 0; i < nbits_; ++i)
            if (test(i)) s[i] = '1';
        return s;
    }

private:
    int nbits_ = 0;
    std::vector<std::uint64_t> words_;
};

using VertexSet = Bitset;
using EdgeSet = Bitset;
using Gf2Vector = Bitset;

} // namespace compnum
