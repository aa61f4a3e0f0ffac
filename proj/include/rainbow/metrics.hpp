#ifndef RAINBOW_METRICS_HPP
#define RAINBOW_METRICS_HPP

#include <span>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// All-pairs hop distances plus the derived eccentricity data.
struct CenterMetrics {
    std::vector<std::vector<int>> dist; // dist[v][x], BFS hops
    std::vector<int> ecc;               // per-vertex eccentricity
    int radius = 0;                     // min eccentricity
    int diameter = 0;                   // max eccentricity
    std::vector<int> centers;           // vertices with ecc == radius, ascending
};

// Hop distances from source; -1 where unreachable.
std::vector<int> bfs_distances(const Graph& g, int source);

// BFS from every vertex; throws Disconnected if some pair has no path.
CenterMetrics metrics(const Graph& g);

// The minimum-eccentricity vertex, ties broken by smallest id.
int center(const Graph& g);

// N^k(X) = { v : d(v,X) = k }, ascending. N^0(X) = X.
std::vector<int> k_neighborhood(const Graph& g, std::span<const int> xs, int k);

// Edges whose removal disconnects g, by one DFS with low-link values.
std::vector<Edge> bridges(const Graph& g);

// Lexicographically smallest shortest s-t path as a vertex sequence.
// Empty if unreachable.
std::vector<int> shortest_path(const Graph& g, int s, int t);

} // namespace rainbow

#endif
