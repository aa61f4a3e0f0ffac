#ifndef RAINBOW_TEST_SUPPORT_HPP
#define RAINBOW_TEST_SUPPORT_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace testsupport {

inline double next_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline int next_int(std::mt19937_64& rng, int bound) {
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

inline rainbow::Graph random_graph(int n, double p, std::mt19937_64& rng) {
    std::vector<rainbow::Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (next_real(rng) < p) edges.emplace_back(a, b);
    return rainbow::Graph(n, edges);
}

// Plain DFS reachability, kept separate from the library's BFS machinery.
inline bool connected_naive(const rainbow::Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return false;
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<int> stack{0};
    seen[0] = true;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                stack.push_back(w);
            }
        }
    }
    for (bool s : seen)
        if (!s) return false;
    return true;
}

inline rainbow::Graph random_connected_graph(int n, double p, std::mt19937_64& rng) {
    for (;;) {
        auto g = random_graph(n, p, rng);
        if (connected_naive(g)) return g;
    }
}

inline rainbow::EdgeColoring random_coloring(const rainbow::Graph& g, int k,
                                             std::mt19937_64& rng) {
    rainbow::EdgeColoring c;
    c.palette = k;
    c.colors.resize(static_cast<std::size_t>(g.edge_count()));
    for (auto& col : c.colors) col = 1 + next_int(rng, k);
    return c;
}

} // namespace testsupport

#endif
