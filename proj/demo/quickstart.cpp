// Builds a small graph, inspects its holes and hole space, and produces a
// verified competition-number certificate.

#include <cstdio>

#include "compnum/compnum.hpp"

int main() {
    using namespace compnum;

    // "domino": two 4-holes sharing an edge
    //   0 - 1 - 2
    //   |   |   |
    //   3 - 4 - 5
    Graph g(6, {{0, 1}, {1, 2}, {0, 3}, {1, 4}, {2, 5}, {3, 4}, {4, 5}});

    std::printf("n=%d m=%d connected=%s\n", g.vertex_count(), g.edge_count(),
                is_connected(g) ? "yes" : "no");

    for (const auto& h : holes(g)) {
        std::printf("hole:");
        for (int v : h.vertices) std::printf(" %d", v);
        std::printf("   chi = %s\n", chi(g, h).to01().c_str());
    }
    std::printf("dim C(G) = %d, dim H(G) = %d\n", cycle_space_dimension(g),
                hole_space_dimension(g));

    auto pipe = upper_bound_pipeline(g);
    if (pipe.found)
        std::printf("constructive bound: k <= %d via %s\n", pipe.k_upper,
                    to_string(pipe.method).c_str());

    auto exact = competition_number_exact(g);
    std::printf("exact competition number: k = %d\n", exact.k);
    std::printf("certificate:\n%s\n", certificate_to_json(*exact.certificate).dump(2).c_str());
    return 0;
}
