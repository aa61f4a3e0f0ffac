#include "rainbow/verify.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/metrics.hpp"

namespace rainbow {

int EdgeColoring::color_at(const Graph& g, int a, int b) const {
    int e = g.edge_index(a, b);
    if (e < 0)
        fail(Errc::invalid_graph,
             "no edge (" + std::to_string(a) + "," + std::to_string(b) + ")");
    return colors[static_cast<std::size_t>(e)];
}

int EdgeColoring::colors_used() const {
    std::vector<int> seen;
    for (int c : colors)
        if (std::find(seen.begin(), seen.end(), c) == seen.end()) seen.push_back(c);
    return static_cast<int>(seen.size());
}

void EdgeColoring::check_total(const Graph& g) const {
    if (static_cast<int>(colors.size()) != g.edge_count())
        fail(Errc::invalid_graph, "coloring is not total: " + std::to_string(colors.size()) +
                                      " colors for " + std::to_string(g.edge_count()) + " edges");
    for (int c : colors)
        if (c < 1 || c > palette)
            fail(Errc::invalid_graph, "color " + std::to_string(c) + " outside palette 1.." +
                                          std::to_string(palette));
}

namespace {

// Breadth-first search over (vertex, used-color-set) states. Each step adds a
// new color, so all states at queue level L carry exactly L colors; a state is
// expanded only if its color set is not a superset of one already stored at
// the vertex (any rainbow extension of the superset extends the subset too).
// Expanding neighbors in ascending order makes the first path reaching a
// vertex the lexicographically smallest among the shortest rainbow ones.
class ColorsetSearch {
public:
    ColorsetSearch(const Graph& g, const EdgeColoring& c, int palette_cap)
        : g_(g), c_(c) {
        c.check_total(g);
        if (c.palette > palette_cap)
            fail(Errc::palette_too_large, "palette " + std::to_string(c.palette) +
                                              " exceeds cap " + std::to_string(palette_cap));
    }

    void run(int source) {
        const std::size_t n = static_cast<std::size_t>(g_.vertex_count());
        if (masks_.size() != n) masks_.resize(n);
        for (auto& m : masks_) m.clear();
        first_state_.assign(n, -1);
        vertex_.clear();
        mask_.clear();
        parent_.clear();
        push(source, 0, -1);
        for (std::size_t head = 0; head < vertex_.size(); ++head) {
            int v = vertex_[head];
            std::uint32_t used = mask_[head];
            auto nb = g_.neighbors(v);
            auto ei = g_.edge_indices(v);
            for (std::size_t i = 0; i < nb.size(); ++i) {
                std::uint32_t bit = 1u << (c_.colors[static_cast<std::size_t>(ei[i])] - 1);
                if (used & bit) continue;
                std::uint32_t next = used | bit;
                if (dominated(nb[i], next)) continue;
                push(nb[i], next, static_cast<int>(head));
            }
        }
    }

    bool reached(int v) const { return first_state_[static_cast<std::size_t>(v)] >= 0; }

    std::vector<int> path_to(int v) const {
        std::vector<int> path;
        for (int s = first_state_[static_cast<std::size_t>(v)]; s >= 0; s = parent_[static_cast<std::size_t>(s)])
            path.push_back(vertex_[static_cast<std::size_t>(s)]);
        std::reverse(path.begin(), path.end());
        return path;
    }

private:
    bool dominated(int v, std::uint32_t next) const {
        for (std::uint32_t m : masks_[static_cast<std::size_t>(v)])
            if ((m & next) == m) return true;
        return false;
    }

    void push(int v, std::uint32_t mask, int parent) {
        masks_[static_cast<std::size_t>(v)].push_back(mask);
        if (first_state_[static_cast<std::size_t>(v)] < 0)
            first_state_[static_cast<std::size_t>(v)] = static_cast<int>(vertex_.size());
        vertex_.push_back(v);
        mask_.push_back(mask);
        parent_.push_back(parent);
    }

    const Graph& g_;
    const EdgeColoring& c_;
    std::vector<std::vector<std::uint32_t>> masks_;
    std::vector<int> first_state_;
    std::vector<int> vertex_;
    std::vector<std::uint32_t> mask_;
    std::vector<int> parent_;
};

} // namespace

std::optional<std::vector<int>> rainbow_path(const Graph& g, const EdgeColoring& c, int s, int t,
                                             int palette_cap) {
    const int n = g.vertex_count();
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
        fail(Errc::invalid_graph, "bad path endpoints");
    ColorsetSearch search(g, c, palette_cap);
    search.run(s);
    if (!search.reached(t)) return std::nullopt;
    return search.path_to(t);
}

VerifyOutcome is_rainbow_connected(const Graph& g, const EdgeColoring& c, int palette_cap) {
    const int n = g.vertex_count();
    VerifyOutcome out;
    ColorsetSearch search(g, c, palette_cap);
    for (int s = 0; s + 1 < n; ++s) {
        search.run(s);
        for (int t = s + 1; t < n; ++t) {
            if (!search.reached(t)) {
                out.ok = false;
                out.failing_pair = {s, t};
                out.certificate.witnesses.clear();
                return out;
            }
            out.certificate.witnesses.push_back({{s, t}, search.path_to(t)});
        }
    }
    out.ok = true;
    return out;
}

std::optional<std::pair<int, int>> first_failing_pair(const Graph& g, const EdgeColoring& c,
                                                      int palette_cap) {
    const int n = g.vertex_count();
    ColorsetSearch search(g, c, palette_cap);
    for (int s = 0; s + 1 < n; ++s) {
        search.run(s);
        for (int t = s + 1; t < n; ++t)
            if (!search.reached(t)) return std::make_pair(s, t);
    }
    return std::nullopt;
}

namespace {

bool bruteforce_dfs(const Graph& g, const EdgeColoring& c, int t, int remaining,
                    std::vector<int>& path, std::vector<bool>& on_path, std::uint32_t used) {
    int v = path.back();
    if (remaining == 0) return v == t;
    if (v == t) return false; // simple paths cannot revisit the target
    auto nb = g.neighbors(v);
    auto ei = g.edge_indices(v);
    for (std::size_t i = 0; i < nb.size(); ++i) {
        int w = nb[i];
        if (on_path[static_cast<std::size_t>(w)]) continue;
        std::uint32_t bit = 1u << (c.colors[static_cast<std::size_t>(ei[i])] - 1);
        if (used & bit) continue;
        path.push_back(w);
        on_path[static_cast<std::size_t>(w)] = true;
        if (bruteforce_dfs(g, c, t, remaining - 1, path, on_path, used | bit)) return true;
        on_path[static_cast<std::size_t>(w)] = false;
        path.pop_back();
    }
    return false;
}

} // namespace

std::optional<std::vector<int>> rainbow_path_bruteforce(const Graph& g, const EdgeColoring& c,
                                                        int s, int t) {
    const int n = g.vertex_count();
    if (n > 12)
        fail(Errc::instance_too_large,
             "brute-force path enumeration capped at 12 vertices, got " + std::to_string(n));
    if (s < 0 || s >= n || t < 0 || t >= n || s == t)
        fail(Errc::invalid_graph, "bad path endpoints");
    c.check_total(g);
    // A rainbow path has pairwise-distinct edge colors, so its length is
    // bounded by the palette as well as by n-1.
    int max_len = std::min(n - 1, c.palette);
    for (int len = 1; len <= max_len; ++len) {
        std::vector<int> path{s};
        std::vector<bool> on_path(static_cast<std::size_t>(n), false);
        on_path[static_cast<std::size_t>(s)] = true;
        if (bruteforce_dfs(g, c, t, len, path, on_path, 0)) return path;
    }
    return std::nullopt;
}

int lower_bound_diameter(const Graph& g) { return metrics(g).diameter; }

namespace {

constexpr std::uint64_t kLevelBudget = 5'000'000;
constexpr int kHardEdgeCap = 30;

// Stirling numbers of the second kind, saturating well above the budget.
std::uint64_t stirling2(int n, int k) {
    if (k <= 0 || k > n) return n == 0 && k == 0 ? 1 : 0;
    constexpr std::uint64_t cap = std::numeric_limits<std::uint64_t>::max() / 64;
    std::vector<std::uint64_t> row(static_cast<std::size_t>(k) + 1, 0);
    row[std::min<std::size_t>(1, static_cast<std::size_t>(k))] = 1; // S(1,1)
    for (int i = 2; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j) {
            std::uint64_t v = row[static_cast<std::size_t>(j)];
            std::uint64_t left = row[static_cast<std::size_t>(j) - 1];
            std::uint64_t next = v > cap / static_cast<std::uint64_t>(j)
                                     ? cap
                                     : static_cast<std::uint64_t>(j) * v;
            next = next > cap - left ? cap : next + left;
            row[static_cast<std::size_t>(j)] = next;
        }
        row[0] = 0;
    }
    return row[static_cast<std::size_t>(k)];
}

// Connectivity check for one candidate coloring, sources ordered so that the
// far-apart pairs are tested first and bad colorings die early.
bool connected_under(const Graph& g, const EdgeColoring& c, std::span<const int> source_order) {
    const int n = g.vertex_count();
    std::vector<bool> done(static_cast<std::size_t>(n), false);
    ColorsetSearch search(g, c, kDefaultPaletteCap);
    int remaining_sources = n;
    for (int s : source_order) {
        if (--remaining_sources == 0) break; // last vertex's pairs were all checked
        search.run(s);
        for (int t = 0; t < n; ++t)
            if (t != s && !done[static_cast<std::size_t>(t)] && !search.reached(t)) return false;
        done[static_cast<std::size_t>(s)] = true;
    }
    return true;
}

// Enumerates colorings that use exactly k colors, as restricted growth
// strings: edge 0 gets color 1, and color j+1 may appear only after color j.
bool rgs_search(const Graph& g, std::vector<int>& colors, int pos, int max_used, int k,
                std::span<const int> source_order) {
    const int m = static_cast<int>(colors.size());
    if (pos == m) {
        if (max_used != k) return false;
        EdgeColoring c{k, colors};
        return connected_under(g, c, source_order);
    }
    if (k - max_used > m - pos) return false; // not enough edges left to introduce k colors
    int limit = std::min(max_used + 1, k);
    for (int col = 1; col <= limit; ++col) {
        colors[static_cast<std::size_t>(pos)] = col;
        if (rgs_search(g, colors, pos + 1, std::max(max_used, col), k, source_order)) return true;
    }
    return false;
}

} // namespace

RcExactResult rc_exact(const Graph& g, int k_max) {
    const int n = g.vertex_count();
    const int m = g.edge_count();
    if (k_max < 1) fail(Errc::invalid_graph, "k_max must be positive");
    if (n <= 1) return {0, false};
    if (m > kHardEdgeCap)
        fail(Errc::instance_too_large, "rc_exact capped at " + std::to_string(kHardEdgeCap) +
                                           " edges, got " + std::to_string(m));
    CenterMetrics met = metrics(g); // throws Disconnected
    int lo = std::max(1, met.diameter);
    if (lo > k_max) return {0, true};

    std::vector<int> source_order(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) source_order[static_cast<std::size_t>(v)] = v;
    std::stable_sort(source_order.begin(), source_order.end(), [&](int a, int b) {
        return met.ecc[static_cast<std::size_t>(a)] > met.ecc[static_cast<std::size_t>(b)];
    });

    for (int k = lo; k <= std::min(k_max, m); ++k) {
        if (stirling2(m, k) > kLevelBudget)
            fail(Errc::instance_too_large,
                 "enumeration of " + std::to_string(k) + "-colorings over " + std::to_string(m) +
                     " edges exceeds the search budget");
        std::vector<int> colors(static_cast<std::size_t>(m), 0);
        if (rgs_search(g, colors, 0, 0, k, source_order)) return {k, false};
    }
    return {0, true};
}

} // namespace rainbow
