#pragma once

#include <string>
#include <vector>

#include "compnum/errors.hpp"
#include "compnum/graph.hpp"

namespace compnum {

// graph6: 6 bits per printable byte (offset 63), upper-triangular adjacency
// matrix packed column by column, i.e. pair order (0,1),(0,2),(1,2),(0,3),...
// with the first pair in the most significant position of each group.

namespace detail {

inline int g6_value(char c, const std::string& where) {
    if (c < 63 || c > 126)
        throw ParseError(where + ": byte '" + std::string(1, c) + "' outside graph6 range");
    return c - 63;
}

} // namespace detail

inline Graph parse_graph6(const std::string& line) {
    const std::string where = "graph6";
    std::size_t pos = 0;
    if (line.empty()) throw ParseError(where + ": empty line");
    long long n;
    if (line[0] != '~') {
        n = detail::g6_value(line[0], where);
        pos = 1;
    } else {
        if (line.size() >= 2 && line[1] == '~')
            throw ParseError(where + ": graphs over 258047 vertices not supported");
        if (line.size() < 4) throw ParseError(where + ": truncated vertex count");
        n = 0;
        for (int i = 1; i <= 3; ++i) n = (n << 6) | detail::g6_value(line[i], where);
        pos = 4;
    }
    if (n > 4096) throw ParseError(where + ": graph too large (n > 4096)");
    const long long nbits = n * (n - 1) / 2;
    const std::size_t nbytes = static_cast<std::size_t>((nbits + 5) / 6);
    if (line.size() - pos != nbytes)
        throw ParseError(where + ": payload length " + std::to_string(line.size() - pos) +
                         ", expected " + std::to_string(nbytes));
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    for (std::size_t b = 0; b < nbytes; ++b) {
        int val = detail::g6_value(line[pos + b], where);
        for (int s = 5; s >= 0; --s, ++bit) {
            bool on = (val >> s) & 1;
            if (bit >= nbits) {
                if (on) throw ParseError(where + ": nonzero padding bits");
                continue;
            }
            if (on) {
                // bit index k corresponds to pair (i, j) with k = j(j-1)/2 + i
                long long j = 1;
                while ((j + 1) * j / 2 <= bit) ++j;
                long long i = bit - j * (j - 1) / 2;
                edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    return Graph(static_cast<int>(n), std::move(edges));
}

inline std::string to_graph6(const Graph& g) {
    const long long n = g.vertex_count();
    if (n > 4096) throw PreconditionError("graph6 encoding limited to 4096 vertices");
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back('~');
        for (int s = 12; s >= 0; s -= 6) out.push_back(static_cast<char>(((n >> s) & 63) + 63));
    }
    const long long nbits = n * (n - 1) / 2;
    std::vector<bool> bits(static_cast<std::size_t>(nbits), false);
    for (auto [u, v] : g.edges()) bits[static_cast<std::size_t>(v) * (v - 1) / 2 + u] = true;
    for (long long b = 0; b < nbits; b += 6) {
        int val = 0;
        for (int s = 0; s < 6; ++s)
            val = (val << 1) | (b + s < nbits && bits[static_cast<std::size_t>(b + s)] ? 1 : 0);
        out.push_back(static_cast<char>(val + 63));
    }
    return out;
}

} // namespace compnum
