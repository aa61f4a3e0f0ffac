#include "rainbow/graph.hpp"

#include <algorithm>
#include <string>

#include "rainbow/errors.hpp"

namespace rainbow {

Graph::Graph(int n, std::span<const Edge> edge_list) : n_(n) {
    if (n < 0) fail(Errc::invalid_graph, "negative vertex count");
    edges_.reserve(edge_list.size());
    for (const auto& [a, b] : edge_list) {
        if (a == b) fail(Errc::invalid_graph, "self-loop at vertex " + std::to_string(a));
        if (a < 0 || a >= n || b < 0 || b >= n)
            fail(Errc::invalid_graph, "edge (" + std::to_string(a) + "," + std::to_string(b) +
                                          ") out of range for n=" + std::to_string(n));
        edges_.push_back(make_edge(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());

    std::vector<std::vector<std::pair<int, int>>> adj(static_cast<std::size_t>(n));
    for (int e = 0; e < static_cast<int>(edges_.size()); ++e) {
        const auto& [a, b] = edges_[static_cast<std::size_t>(e)];
        adj[static_cast<std::size_t>(a)].emplace_back(b, e);
        adj[static_cast<std::size_t>(b)].emplace_back(a, e);
    }
    adj_start_.assign(static_cast<std::size_t>(n) + 1, 0);
    adj_flat_.reserve(2 * edges_.size());
    eidx_flat_.reserve(2 * edges_.size());
    for (int v = 0; v < n; ++v) {
        auto& row = adj[static_cast<std::size_t>(v)];
        std::sort(row.begin(), row.end());
        for (const auto& [w, e] : row) {
            adj_flat_.push_back(w);
            eidx_flat_.push_back(e);
        }
        adj_start_[static_cast<std::size_t>(v) + 1] = adj_flat_.size();
    }
}

bool Graph::has_edge(int a, int b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(int a, int b) const {
    if (a < 0 || a >= n_ || b < 0 || b >= n_ || a == b) return -1;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return -1;
    return eidx_flat_[adj_start_[static_cast<std::size_t>(a)] +
                      static_cast<std::size_t>(it - nb.begin())];
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices) {
    InducedSubgraph out;
    out.from_parent.assign(static_cast<std::size_t>(g.vertex_count()), -1);
    std::vector<int> sorted(vertices.begin(), vertices.end());
    std::sort(sorted.begin(), sorted.end());
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    for (int v : sorted) {
        if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_graph, "vertex out of range");
        out.from_parent[static_cast<std::size_t>(v)] = static_cast<int>(out.to_parent.size());
        out.to_parent.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& [a, b] : g.edges()) {
        int na = out.from_parent[static_cast<std::size_t>(a)];
        int nb = out.from_parent[static_cast<std::size_t>(b)];
        if (na >= 0 && nb >= 0) edges.push_back(make_edge(na, nb));
    }
    out.graph = Graph(static_cast<int>(out.to_parent.size()), edges);
    return out;
}

std::vector<Edge> edge_cut(const Graph& g, std::span<const int> xs, std::span<const int> ys) {
    std::vector<bool> in_x(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<bool> in_y(static_cast<std::size_t>(g.vertex_count()), false);
    for (int v : xs) {
        if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_graph, "vertex out of range");
        in_x[static_cast<std::size_t>(v)] = true;
    }
    for (int v : ys) {
        if (v < 0 || v >= g.vertex_count()) fail(Errc::invalid_graph, "vertex out of range");
        in_y[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Edge> cut;
    for (const auto& [a, b] : g.edges()) {
        bool ab = in_x[static_cast<std::size_t>(a)] && in_y[static_cast<std::size_t>(b)];
        bool ba = in_x[static_cast<std::size_t>(b)] && in_y[static_cast<std::size_t>(a)];
        if (ab || ba) cut.emplace_back(a, b);
    }
    return cut;
}

} // namespace rainbow
