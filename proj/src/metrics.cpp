#include "rainbow/metrics.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

std::vector<int> bfs_distances(const Graph& g, int source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) fail(Errc::invalid_graph, "BFS source out of range");
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    queue.reserve(static_cast<std::size_t>(n));
    dist[static_cast<std::size_t>(source)] = 0;
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    return dist;
}

CenterMetrics metrics(const Graph& g) {
    const int n = g.vertex_count();
    CenterMetrics out;
    out.dist.reserve(static_cast<std::size_t>(n));
    out.ecc.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int x = 0; x < n; ++x) {
            int d = dist[static_cast<std::size_t>(x)];
            if (d < 0)
                fail(Errc::disconnected, "no path between " + std::to_string(v) + " and " +
                                             std::to_string(x));
            ecc = std::max(ecc, d);
        }
        out.dist.push_back(std::move(dist));
        out.ecc.push_back(ecc);
    }
    if (n == 0) fail(Errc::disconnected, "empty graph");
    out.radius = *std::min_element(out.ecc.begin(), out.ecc.end());
    out.diameter = *std::max_element(out.ecc.begin(), out.ecc.end());
    for (int v = 0; v < n; ++v)
        if (out.ecc[static_cast<std::size_t>(v)] == out.radius) out.centers.push_back(v);
    return out;
}

int center(const Graph& g) { return metrics(g).centers.front(); }

std::vector<int> k_neighborhood(const Graph& g, std::span<const int> xs, int k) {
    const int n = g.vertex_count();
    if (k < 0) fail(Errc::invalid_graph, "negative k");
    std::vector<int> dist(static_cast<std::size_t>(n), -1);
    std::vector<int> queue;
    for (int v : xs) {
        if (v < 0 || v >= n) fail(Errc::invalid_graph, "vertex out of range");
        if (dist[static_cast<std::size_t>(v)] != 0) {
            dist[static_cast<std::size_t>(v)] = 0;
            queue.push_back(v);
        }
    }
    std::sort(queue.begin(), queue.end());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<std::size_t>(w)] < 0) {
                dist[static_cast<std::size_t>(w)] = dist[static_cast<std::size_t>(v)] + 1;
                queue.push_back(w);
            }
        }
    }
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (dist[static_cast<std::size_t>(v)] == k) out.push_back(v);
    return out;
}

std::vector<Edge> bridges(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) fail(Errc::disconnected, "empty graph");
    // Connectivity first: the contract is for connected graphs.
    {
        auto dist = bfs_distances(g, 0);
        for (int v = 0; v < n; ++v)
            if (dist[static_cast<std::size_t>(v)] < 0)
                fail(Errc::disconnected, "vertex " + std::to_string(v) + " unreachable");
    }
    std::vector<int> disc(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<Edge> out;
    // Iterative DFS; frame = (vertex, edge index used to enter, neighbor cursor).
    struct Frame {
        int v;
        int via_edge;
        std::size_t cursor;
    };
    std::vector<Frame> stack;
    int timer = 0;
    disc[0] = low[0] = timer++;
    stack.push_back({0, -1, 0});
    while (!stack.empty()) {
        Frame& f = stack.back();
        auto nb = g.neighbors(f.v);
        auto ei = g.edge_indices(f.v);
        if (f.cursor < nb.size()) {
            int w = nb[f.cursor];
            int e = ei[f.cursor];
            ++f.cursor;
            if (e == f.via_edge) continue; // don't ride the entering edge back
            if (disc[static_cast<std::size_t>(w)] >= 0) {
                low[static_cast<std::size_t>(f.v)] =
                    std::min(low[static_cast<std::size_t>(f.v)], disc[static_cast<std::size_t>(w)]);
            } else {
                disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
                stack.push_back({w, e, 0});
            }
        } else {
            int v = f.v;
            int via = f.via_edge;
            stack.pop_back();
            if (!stack.empty()) {
                int parent = stack.back().v;
                low[static_cast<std::size_t>(parent)] =
                    std::min(low[static_cast<std::size_t>(parent)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] > disc[static_cast<std::size_t>(parent)])
                    out.push_back(g.edge(via));
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> shortest_path(const Graph& g, int s, int t) {
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n) fail(Errc::invalid_graph, "vertex out of range");
    if (s == t) return {s};
    // BFS in ascending neighbor order; the first-visit parent chain is the
    // lexicographically smallest shortest path.
    std::vector<int> parent(static_cast<std::size_t>(n), -2);
    std::vector<int> queue;
    parent[static_cast<std::size_t>(s)] = -1;
    queue.push_back(s);
    for (std::size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (parent[static_cast<std::size_t>(w)] == -2) {
                parent[static_cast<std::size_t>(w)] = v;
                if (w == t) {
                    std::vector<int> path;
                    for (int cur = t; cur != -1; cur = parent[static_cast<std::size_t>(cur)])
                        path.push_back(cur);
                    std::reverse(path.begin(), path.end());
                    return path;
                }
                queue.push_back(w);
            }
        }
    }
    return {};
}

} // namespace rainbow
