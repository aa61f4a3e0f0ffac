#include <doctest.h>

#include <algorithm>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "test_support.hpp"

using namespace rainbow;

TEST_CASE("build collapses duplicates and validates") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK(c4.vertex_count() == 4);
    CHECK(c4.edge_count() == 4);

    Graph dedup(3, {{0, 1}, {1, 0}});
    CHECK(dedup.edge_count() == 1);

    CHECK_THROWS_AS(Graph(2, {{0, 0}}), Error);
    CHECK_THROWS_AS(Graph(2, {{0, 2}}), Error);
    CHECK_THROWS_AS(Graph(2, {{-1, 1}}), Error);
}

TEST_CASE("adjacency is sorted and consistent with the edge set") {
    Graph g(5, {{3, 1}, {0, 3}, {1, 0}, {2, 4}});
    auto nb = g.neighbors(1);
    CHECK(std::vector<int>(nb.begin(), nb.end()) == std::vector<int>{0, 3});
    CHECK(g.degree(3) == 2);
    CHECK(g.has_edge(4, 2));
    CHECK(!g.has_edge(0, 4));
    CHECK(g.edge_index(3, 0) == g.edge_index(0, 3));
    int degree_sum = 0;
    for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("induced subgraphs keep internal edges and the id mapping") {
    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<int> xs{0, 1, 2};
    auto sub = induced_subgraph(k4, xs);
    CHECK(sub.graph.vertex_count() == 3);
    CHECK(sub.graph.edge_count() == 3); // K3
    CHECK(sub.to_parent == std::vector<int>{0, 1, 2});
    CHECK(sub.from_parent[3] == -1);

    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<int> pair{0, 1};
    CHECK(induced_subgraph(c4, pair).graph.edge_count() == 1);
    std::vector<int> antipodal{0, 2};
    CHECK(induced_subgraph(c4, antipodal).graph.edge_count() == 0);
}

TEST_CASE("edge cuts match the examples") {
    Graph c4(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    std::vector<int> x{0}, y{1, 3};
    CHECK(edge_cut(c4, x, y) == std::vector<Edge>{{0, 1}, {0, 3}});
    std::vector<int> z{2};
    CHECK(edge_cut(c4, x, z).empty());

    Graph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    std::vector<int> a{0, 1}, b{2, 3};
    CHECK(edge_cut(k4, a, b).size() == 4);
}

TEST_CASE("e(X,Y) = e(Y,X) on random graphs and subsets") {
    std::mt19937_64 rng(12345);
    for (int round = 0; round < 50; ++round) {
        auto g = testsupport::random_graph(8, 0.4, rng);
        std::vector<int> xs, ys;
        for (int v = 0; v < 8; ++v) {
            if (testsupport::next_real(rng) < 0.4) xs.push_back(v);
            if (testsupport::next_real(rng) < 0.4) ys.push_back(v);
        }
        CHECK(edge_cut(g, xs, ys).size() == edge_cut(g, ys, xs).size());
    }
}
