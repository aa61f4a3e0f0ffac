#include "rainbow/gen.hpp"

#include <algorithm>
#include <random>
#include <string>

#include "rainbow/errors.hpp"
#include "rainbow/metrics.hpp"

namespace rainbow {

namespace {

constexpr int kRetryCap = 10'000;

// mt19937_64 output is pinned by the standard; the mappings below avoid
// std::uniform_*_distribution, whose results vary across implementations.
double next_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

bool is_connected(const Graph& g) {
    if (g.vertex_count() == 0) return false;
    auto dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(), [](int d) { return d < 0; });
}

int diameter_or_minus1(const Graph& g) {
    if (!is_connected(g)) return -1;
    return metrics(g).diameter;
}

Graph sample_er(int n, double p, std::mt19937_64& rng) {
    std::vector<Edge> edges;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (next_real(rng) < p) edges.emplace_back(a, b);
    return Graph(n, edges);
}

// Erdős–Rényi sample completed to diameter 2: every pair left at distance
// greater than 2 gets a direct edge (a no-op whenever the raw sample already
// qualifies), then the bridgeless and diameter-exactly-2 checks decide
// acceptance. Pure rejection cannot reach moderate p at n beyond ~15: the
// expected count of common-neighbor-free pairs makes diameter 2
// exponentially unlikely there.
Graph generate_diam2_bridgeless(const GeneratorSpec& spec) {
    if (spec.n < 3) fail(Errc::generation_exhausted, "family needs n >= 3");
    std::mt19937_64 rng(spec.seed);
    const int max_edges = spec.n * (spec.n - 1) / 2;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Graph g = sample_er(spec.n, spec.p, rng);
        if (!is_connected(g)) continue;
        std::vector<Edge> edges = g.edges();
        for (int v = 0; v < spec.n; ++v) {
            auto dist = bfs_distances(g, v);
            for (int w = v + 1; w < spec.n; ++w)
                if (dist[static_cast<std::size_t>(w)] > 2) edges.emplace_back(v, w);
        }
        Graph completed(spec.n, edges);
        if (completed.edge_count() == max_edges) continue; // complete: diameter 1
        if (!bridges(completed).empty()) continue;
        return completed;
    }
    fail(Errc::generation_exhausted, "no diameter-2 bridgeless graph with n=" +
                                         std::to_string(spec.n) + " p=" + std::to_string(spec.p) +
                                         " within " + std::to_string(kRetryCap) + " attempts");
}

// Core on n-2 vertices with no isolated vertex, plus a universal center
// (vertex n-2) and a pendant leaf (vertex n-1) attached to it.
Graph generate_radius1_pendant(const GeneratorSpec& spec) {
    if (spec.n < 4) fail(Errc::generation_exhausted, "family needs n >= 4");
    std::mt19937_64 rng(spec.seed);
    const int base = spec.n - 2;
    for (int attempt = 0; attempt < kRetryCap; ++attempt) {
        Graph h = sample_er(base, spec.p, rng);
        bool isolated = false;
        for (int v = 0; v < base && !isolated; ++v) isolated = h.degree(v) == 0;
        if (isolated) continue;
        std::vector<Edge> edges = h.edges();
        const int hub = base;
        for (int v = 0; v < base; ++v) edges.emplace_back(v, hub);
        edges.emplace_back(hub, base + 1);
        return Graph(spec.n, edges);
    }
    fail(Errc::generation_exhausted, "no isolated-vertex-free core with n=" +
                                         std::to_string(spec.n) + " p=" + std::to_string(spec.p) +
                                         " within " + std::to_string(kRetryCap) + " attempts");
}

// Parses names of the form prefix_k or prefix_s_t.
bool parse_counted(const std::string& name, const std::string& prefix, std::vector<int>& args) {
    if (name.rfind(prefix + "_", 0) != 0) return false;
    args.clear();
    std::string rest = name.substr(prefix.size() + 1);
    std::size_t pos = 0;
    while (pos < rest.size()) {
        std::size_t next = rest.find('_', pos);
        std::string token = rest.substr(pos, next == std::string::npos ? next : next - pos);
        if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos)
            return false;
        args.push_back(std::stoi(token));
        if (next == std::string::npos) break;
        pos = next + 1;
    }
    return !args.empty();
}

Graph generate_named(const std::string& name) {
    if (name == "petersen") return make_petersen();
    std::vector<int> args;
    if (parse_counted(name, "wheel", args) && args.size() == 1) return make_wheel(args[0]);
    if (parse_counted(name, "cycle", args) && args.size() == 1) return make_cycle(args[0]);
    if (parse_counted(name, "complete_bipartite", args) && args.size() == 2)
        return make_complete_bipartite(args[0], args[1]);
    if (parse_counted(name, "complete", args) && args.size() == 1) return make_complete(args[0]);
    if (parse_counted(name, "path", args) && args.size() == 1) return make_path(args[0]);
    fail(Errc::unknown_name, "unknown named graph '" + name + "'");
}

} // namespace

const char* family_name(Family f) {
    switch (f) {
    case Family::random_diam2_bridgeless: return "random_diam2_bridgeless";
    case Family::radius1_pendant: return "radius1_pendant";
    case Family::named: return "named";
    }
    return "unknown";
}

Family family_from_name(const std::string& name) {
    if (name == "random_diam2_bridgeless" || name == "random-diam2" || name == "diam2")
        return Family::random_diam2_bridgeless;
    if (name == "radius1_pendant" || name == "pendant") return Family::radius1_pendant;
    if (name == "named") return Family::named;
    fail(Errc::unknown_name, "unknown family '" + name + "'");
}

Graph generate(const GeneratorSpec& spec) {
    if (spec.p < 0.0 || spec.p > 1.0) fail(Errc::invalid_graph, "p outside [0,1]");
    switch (spec.family) {
    case Family::random_diam2_bridgeless: return generate_diam2_bridgeless(spec);
    case Family::radius1_pendant: return generate_radius1_pendant(spec);
    case Family::named: return generate_named(spec.name);
    }
    fail(Errc::unknown_name, "unknown family");
}

bool validate_family(const Graph& g, const GeneratorSpec& spec) {
    switch (spec.family) {
    case Family::random_diam2_bridgeless: {
        if (!is_connected(g)) return false;
        if (diameter_or_minus1(g) != 2) return false;
        return bridges(g).empty();
    }
    case Family::radius1_pendant: {
        if (!is_connected(g)) return false;
        auto br = bridges(g);
        if (br.size() != 1) return false;
        auto [a, b] = br.front();
        int leaf, core_center;
        if (g.degree(b) == 1) {
            leaf = b;
            core_center = a;
        } else if (g.degree(a) == 1) {
            leaf = a;
            core_center = b;
        } else {
            return false;
        }
        std::vector<int> keep;
        for (int v = 0; v < g.vertex_count(); ++v)
            if (v != leaf) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);
        if (sub.graph.vertex_count() < 3) return false;
        if (!bridges(sub.graph).empty()) return false;
        auto dist = bfs_distances(sub.graph,
                                  sub.from_parent[static_cast<std::size_t>(core_center)]);
        return std::all_of(dist.begin(), dist.end(), [](int d) { return d >= 0 && d <= 1; });
    }
    case Family::named: {
        return g == generate_named(spec.name);
    }
    }
    return false;
}

Graph make_petersen() {
    std::vector<Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5); // outer 5-cycle
        edges.emplace_back(i, i + 5);       // spokes
        edges.emplace_back(5 + i, 5 + (i + 2) % 5); // inner pentagram
    }
    return Graph(10, edges);
}

Graph make_wheel(int rim) {
    if (rim < 3) fail(Errc::unknown_name, "wheel rim must be >= 3");
    std::vector<Edge> edges;
    for (int i = 1; i <= rim; ++i) {
        edges.emplace_back(0, i);
        edges.emplace_back(i, i % rim + 1);
    }
    return Graph(rim + 1, edges);
}

Graph make_cycle(int k) {
    if (k < 3) fail(Errc::unknown_name, "cycle length must be >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(i, (i + 1) % k);
    return Graph(k, edges);
}

Graph make_complete(int k) {
    if (k < 1) fail(Errc::unknown_name, "complete graph needs >= 1 vertex");
    std::vector<Edge> edges;
    for (int a = 0; a < k; ++a)
        for (int b = a + 1; b < k; ++b) edges.emplace_back(a, b);
    return Graph(k, edges);
}

Graph make_complete_bipartite(int s, int t) {
    if (s < 1 || t < 1) fail(Errc::unknown_name, "bipartition sides must be >= 1");
    std::vector<Edge> edges;
    for (int a = 0; a < s; ++a)
        for (int b = 0; b < t; ++b) edges.emplace_back(a, s + b);
    return Graph(s + t, edges);
}

Graph make_path(int k) {
    if (k < 1) fail(Errc::unknown_name, "path needs >= 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.emplace_back(i, i + 1);
    return Graph(k, edges);
}

} // namespace rainbow
