#ifndef RAINBOW_GRAPH_HPP
#define RAINBOW_GRAPH_HPP

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace rainbow {

// Unordered edge, normalized to first < second on construction.
using Edge = std::pair<int, int>;

inline Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

/// Simple undirected graph on dense vertex ids 0..n-1.
///
/// Immutable after construction. Edges are deduplicated and kept in
/// lexicographic order, which fixes the edge indexing used by EdgeColoring.
class Graph {
public:
    Graph() = default;

    // Validates and builds: rejects self-loops and out-of-range endpoints,
    // collapses duplicate and reversed-duplicate pairs.
    Graph(int n, std::span<const Edge> edge_list);
    Graph(int n, std::initializer_list<Edge> edge_list)
        : Graph(n, std::span<const Edge>(edge_list.begin(), edge_list.size())) {}

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    // Neighbors of v in ascending order.
    std::span<const int> neighbors(int v) const {
        return {adj_flat_.data() + adj_start_[static_cast<std::size_t>(v)],
                adj_flat_.data() + adj_start_[static_cast<std::size_t>(v) + 1]};
    }
    int degree(int v) const {
        return static_cast<int>(adj_start_[static_cast<std::size_t>(v) + 1] -
                                adj_start_[static_cast<std::size_t>(v)]);
    }

    bool has_edge(int a, int b) const;
    // Index into edges() for (a,b), or -1 if absent.
    int edge_index(int a, int b) const;
    // Edge index aligned with neighbors(v): edge_indices(v)[i] is the index
    // of the edge {v, neighbors(v)[i]}.
    std::span<const int> edge_indices(int v) const {
        return {eidx_flat_.data() + adj_start_[static_cast<std::size_t>(v)],
                eidx_flat_.data() + adj_start_[static_cast<std::size_t>(v) + 1]};
    }

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && edges_ == other.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::size_t> adj_start_;
    std::vector<int> adj_flat_;
    std::vector<int> eidx_flat_;
};

struct InducedSubgraph {
    Graph graph;
    std::vector<int> to_parent;   // new id -> old id
    std::vector<int> from_parent; // old id -> new id, -1 if absent
};

// Subgraph induced on the given vertices (duplicates ignored), with the
// old<->new id mapping. New ids follow ascending old ids.
InducedSubgraph induced_subgraph(const Graph& g, std::span<const int> vertices);

// E[X,Y]: edges with one end in X and the other in Y, lexicographically sorted.
std::vector<Edge> edge_cut(const Graph& g, std::span<const int> xs, std::span<const int> ys);

} // namespace rainbow

#endif
