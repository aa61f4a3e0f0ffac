#include <doctest.h>

#include <algorithm>
#include <set>

#include "rainbow/errors.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/metrics.hpp"
#include "rainbow/verify.hpp"
#include "test_support.hpp"

using namespace rainbow;

namespace {

// Naive oracle: enumerate every simple s-t path with no pruning at all and
// test the rainbow condition on the complete path.
bool rainbow_exists_naive(const Graph& g, const EdgeColoring& c, int s, int t,
                          std::vector<int>& path, std::vector<bool>& used) {
    int v = path.back();
    if (v == t) {
        std::set<int> colors;
        for (std::size_t i = 0; i + 1 < path.size(); ++i)
            colors.insert(c.color_at(g, path[i], path[i + 1]));
        return colors.size() == path.size() - 1;
    }
    for (int w : g.neighbors(v)) {
        if (used[static_cast<std::size_t>(w)]) continue;
        used[static_cast<std::size_t>(w)] = true;
        path.push_back(w);
        if (rainbow_exists_naive(g, c, s, t, path, used)) {
            path.pop_back();
            used[static_cast<std::size_t>(w)] = false;
            return true;
        }
        path.pop_back();
        used[static_cast<std::size_t>(w)] = false;
    }
    return false;
}

bool rainbow_exists_naive(const Graph& g, const EdgeColoring& c, int s, int t) {
    std::vector<int> path{s};
    std::vector<bool> used(static_cast<std::size_t>(g.vertex_count()), false);
    used[static_cast<std::size_t>(s)] = true;
    return rainbow_exists_naive(g, c, s, t, path, used);
}

// Independent exact-rc oracle: full k^m enumeration (no symmetry pruning),
// verified pair-by-pair with the naive path oracle. Tiny graphs only.
int rc_naive(const Graph& g, int k_cap) {
    const int m = g.edge_count();
    REQUIRE(m <= 6);
    for (int k = 1; k <= k_cap; ++k) {
        std::vector<int> colors(static_cast<std::size_t>(m), 1);
        for (;;) {
            EdgeColoring c{k, colors};
            bool all = true;
            for (int s = 0; s < g.vertex_count() && all; ++s)
                for (int t = s + 1; t < g.vertex_count() && all; ++t)
                    all = rainbow_exists_naive(g, c, s, t);
            if (all) return k;
            int pos = m - 1;
            while (pos >= 0 && colors[static_cast<std::size_t>(pos)] == k) {
                colors[static_cast<std::size_t>(pos)] = 1;
                --pos;
            }
            if (pos < 0) break;
            ++colors[static_cast<std::size_t>(pos)];
        }
    }
    return k_cap + 1;
}

void check_certificate(const Graph& g, const EdgeColoring& c, const RainbowCertificate& cert) {
    // Independent re-check of the three path invariants plus coverage.
    std::size_t expected = static_cast<std::size_t>(g.vertex_count()) *
                           static_cast<std::size_t>(g.vertex_count() - 1) / 2;
    REQUIRE(cert.witnesses.size() == expected);
    for (const auto& [pair, path] : cert.witnesses) {
        REQUIRE(path.size() >= 2);
        CHECK(path.front() == pair.first);
        CHECK(path.back() == pair.second);
        std::set<int> seen_colors;
        std::set<int> seen_vertices(path.begin(), path.end());
        CHECK(seen_vertices.size() == path.size());
        for (std::size_t i = 0; i + 1 < path.size(); ++i) {
            CHECK(g.has_edge(path[i], path[i + 1]));
            seen_colors.insert(c.color_at(g, path[i], path[i + 1]));
        }
        CHECK(seen_colors.size() == path.size() - 1);
    }
}

EdgeColoring coloring_of(const Graph& g, std::vector<int> colors, int k) {
    REQUIRE(static_cast<int>(colors.size()) == g.edge_count());
    EdgeColoring c;
    c.palette = k;
    c.colors = std::move(colors);
    return c;
}

} // namespace

TEST_CASE("rainbow_path on the worked examples") {
    Graph single(2, {{0, 1}});
    auto p = rainbow_path(single, coloring_of(single, {1}, 1), 0, 1);
    REQUIRE(p.has_value());
    CHECK(*p == std::vector<int>{0, 1});

    auto c4 = make_cycle(4);
    CHECK(!rainbow_path(c4, coloring_of(c4, {1, 1, 1, 1}, 1), 0, 2).has_value());

    // Edge index order for C4 is (0,1),(0,3),(1,2),(2,3), so alternating
    // colors 1,2,1,2 around the cycle are {1,2,2,1} by index. The simple 0-2
    // paths are [0,1,2] with colors (1,2) and [0,3,2] with colors (2,1); both
    // are rainbow and [0,1,2] is the lexicographically smaller.
    auto alternating = coloring_of(c4, {1, 2, 2, 1}, 2);
    auto q = rainbow_path(c4, alternating, 0, 2);
    REQUIRE(q.has_value());
    CHECK(*q == std::vector<int>{0, 1, 2});
    CHECK(rainbow_exists_naive(c4, alternating, 0, 2));
}

TEST_CASE("is_rainbow_connected: certificates and failing pairs") {
    auto k4 = make_complete(4);
    auto all_one = coloring_of(k4, std::vector<int>(6, 1), 1);
    auto ok = is_rainbow_connected(k4, all_one);
    REQUIRE(ok.ok);
    check_certificate(k4, all_one, ok.certificate);

    auto c4 = make_cycle(4);
    auto bad = is_rainbow_connected(c4, coloring_of(c4, {1, 1, 1, 1}, 1));
    REQUIRE(!bad.ok);
    CHECK(bad.failing_pair == std::pair<int, int>{0, 2});

    auto good = is_rainbow_connected(c4, coloring_of(c4, {1, 2, 2, 1}, 2));
    REQUIRE(good.ok);
    check_certificate(c4, coloring_of(c4, {1, 2, 2, 1}, 2), good.certificate);
}

TEST_CASE("palette cap") {
    Graph single(2, {{0, 1}});
    auto c = coloring_of(single, {1}, 17);
    CHECK_THROWS_AS((void)rainbow_path(single, c, 0, 1), Error);
    CHECK_THROWS_AS((void)rainbow_path(single, c, 0, 1, 16), Error);
    CHECK(rainbow_path(single, c, 0, 1, 17).has_value());
}

TEST_CASE("brute-force path search agrees with the examples") {
    Graph single(2, {{0, 1}});
    CHECK(rainbow_path_bruteforce(single, coloring_of(single, {1}, 1), 0, 1).has_value());

    auto c4 = make_cycle(4);
    CHECK(!rainbow_path_bruteforce(c4, coloring_of(c4, {1, 1, 1, 1}, 1), 0, 2).has_value());
    CHECK(rainbow_path_bruteforce(c4, coloring_of(c4, {1, 2, 2, 1}, 2), 0, 2).has_value());

    auto c5 = make_cycle(5);
    auto distinct = coloring_of(c5, {1, 2, 3, 4, 5}, 5);
    for (int s = 0; s < 5; ++s)
        for (int t = s + 1; t < 5; ++t)
            CHECK(rainbow_path_bruteforce(c5, distinct, s, t).has_value());

    CHECK_THROWS_AS(
        (void)rainbow_path_bruteforce(make_path(13), coloring_of(make_path(13), std::vector<int>(12, 1), 1), 0, 1),
        Error);
}

TEST_CASE("rainbow_path, brute force and the naive oracle agree") {
    std::mt19937_64 rng(31337);
    for (int round = 0; round < 30; ++round) {
        int n = 4 + round % 4; // up to 7
        auto g = testsupport::random_connected_graph(n, 0.5, rng);
        for (int trial = 0; trial < 6; ++trial) {
            int k = 1 + testsupport::next_int(rng, 5);
            auto c = testsupport::random_coloring(g, k, rng);
            for (int s = 0; s < n; ++s) {
                for (int t = s + 1; t < n; ++t) {
                    bool fast = rainbow_path(g, c, s, t).has_value();
                    bool brute = rainbow_path_bruteforce(g, c, s, t).has_value();
                    bool naive = rainbow_exists_naive(g, c, s, t);
                    CHECK(fast == brute);
                    CHECK(fast == naive);
                }
            }
        }
    }
}

TEST_CASE("returned rainbow paths satisfy their own invariants") {
    std::mt19937_64 rng(5150);
    for (int round = 0; round < 40; ++round) {
        int n = 4 + round % 5;
        auto g = testsupport::random_connected_graph(n, 0.5, rng);
        auto c = testsupport::random_coloring(g, 1 + testsupport::next_int(rng, 5), rng);
        int s = testsupport::next_int(rng, n);
        int t = (s + 1 + testsupport::next_int(rng, n - 1)) % n;
        if (s == t) continue;
        auto p = rainbow_path(g, c, s, t);
        auto b = rainbow_path_bruteforce(g, c, s, t);
        REQUIRE(p.has_value() == b.has_value());
        if (p) {
            CHECK(*p == *b); // both tie-break to the lex-smallest shortest path
            CHECK(p->front() == s);
            CHECK(p->back() == t);
            std::set<int> colors;
            for (std::size_t i = 0; i + 1 < p->size(); ++i) {
                CHECK(g.has_edge((*p)[i], (*p)[i + 1]));
                colors.insert(c.color_at(g, (*p)[i], (*p)[i + 1]));
            }
            CHECK(colors.size() == p->size() - 1);
        }
    }
}

TEST_CASE("rc_exact on the worked examples") {
    CHECK(rc_exact(make_complete(4), 5).rc == 1);
    CHECK(rc_exact(make_cycle(4), 5).rc == 2);
    CHECK(rc_exact(make_cycle(5), 5).rc == 3);
    CHECK(rc_exact(make_path(3), 5).rc == 2);

    // The same values from the fully independent k^m oracle.
    CHECK(rc_naive(make_cycle(4), 3) == 2);
    CHECK(rc_naive(make_cycle(5), 4) == 3);
    CHECK(rc_naive(make_path(3), 3) == 2);
    CHECK(rc_naive(make_complete(3), 2) == 1);
}

TEST_CASE("rc_exact resolves the Petersen graph") {
    auto r = rc_exact(make_petersen(), 5);
    REQUIRE(!r.exceeded);
    CHECK(r.rc == 3);
}

TEST_CASE("rc_exact agrees with the naive oracle on tiny graphs") {
    std::mt19937_64 rng(2718);
    int done = 0;
    while (done < 12) {
        auto g = testsupport::random_connected_graph(4 + done % 2, 0.5, rng);
        if (g.edge_count() > 6) continue;
        int naive = rc_naive(g, 4);
        auto exact = rc_exact(g, 4);
        if (naive <= 4) {
            REQUIRE(!exact.exceeded);
            CHECK(exact.rc == naive);
        } else {
            CHECK(exact.exceeded);
        }
        ++done;
    }
}

TEST_CASE("rc_exact caps and edge cases") {
    CHECK(rc_exact(make_path(7), 5).exceeded); // rc(P7) = 6
    CHECK_THROWS_AS((void)rc_exact(make_complete(9), 5), Error); // 36 edges > hard cap
    Graph single(2, {{0, 1}});
    CHECK(rc_exact(single, 5).rc == 1);
    CHECK(rc_exact(make_complete(6), 5).rc == 1); // m=15: resolved at the k=1 level
    Graph lone(1, {});
    CHECK(rc_exact(lone, 5).rc == 0); // no pairs to connect
    CHECK(is_rainbow_connected(lone, EdgeColoring{0, {}}).ok);
}

TEST_CASE("rc_exact is bounded below by the diameter") {
    std::mt19937_64 rng(161803);
    int checked = 0;
    while (checked < 40) {
        auto g = testsupport::random_connected_graph(4 + checked % 4, 0.45, rng);
        if (g.edge_count() > 12) continue;
        auto r = rc_exact(g, 5);
        if (!r.exceeded) CHECK(r.rc >= lower_bound_diameter(g));
        ++checked;
    }
}

TEST_CASE("rc_exact is 1 exactly for complete graphs") {
    std::mt19937_64 rng(515253);
    for (int n = 3; n <= 6; ++n) CHECK(rc_exact(make_complete(n), 5).rc == 1);
    int checked = 0;
    while (checked < 25) {
        auto g = testsupport::random_connected_graph(4 + checked % 3, 0.6, rng);
        if (g.edge_count() > 12) continue;
        bool complete = g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
        if (complete) continue;
        auto r = rc_exact(g, 5);
        if (!r.exceeded) CHECK(r.rc >= 2);
        ++checked;
    }
}

TEST_CASE("spanning-subgraph monotonicity") {
    std::mt19937_64 rng(906090);
    int checked = 0;
    while (checked < 20) {
        auto g = testsupport::random_connected_graph(5 + checked % 2, 0.55, rng);
        if (g.edge_count() > 12) continue;
        // h: drop one non-bridge edge, keeping the graph connected and spanning.
        std::vector<Edge> kept;
        int dropped = -1;
        for (int e = 0; e < g.edge_count(); ++e) kept.push_back(g.edge(e));
        for (int e = 0; e < g.edge_count() && dropped < 0; ++e) {
            std::vector<Edge> attempt;
            for (int f = 0; f < g.edge_count(); ++f)
                if (f != e) attempt.push_back(g.edge(f));
            Graph h(g.vertex_count(), attempt);
            if (testsupport::connected_naive(h)) {
                kept = attempt;
                dropped = e;
            }
        }
        if (dropped < 0) continue; // a tree: no spanning proper subgraph
        Graph h(g.vertex_count(), kept);
        auto rg = rc_exact(g, 5);
        auto rh = rc_exact(h, 5);
        if (!rg.exceeded && !rh.exceeded) CHECK(rg.rc <= rh.rc);
        if (rg.exceeded) CHECK(rh.exceeded);
        ++checked;
    }
}

TEST_CASE("all-distinct colorings rainbow-connect any connected graph") {
    std::mt19937_64 rng(135791);
    for (int round = 0; round < 15; ++round) {
        auto g = testsupport::random_connected_graph(5 + round % 4, 0.45, rng);
        EdgeColoring c;
        c.palette = g.edge_count();
        for (int e = 0; e < g.edge_count(); ++e) c.colors.push_back(e + 1);
        if (c.palette > kDefaultPaletteCap) continue;
        CHECK(is_rainbow_connected(g, c).ok);
    }
}

TEST_CASE("lower_bound_diameter matches the metric") {
    CHECK(lower_bound_diameter(make_cycle(4)) == 2);
    CHECK(lower_bound_diameter(make_complete(4)) == 1);
    CHECK(lower_bound_diameter(make_path(3)) == 2);
}
