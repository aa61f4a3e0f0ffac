#ifndef RAINBOW_VERIFY_HPP
#define RAINBOW_VERIFY_HPP

#include <optional>
#include <utility>
#include <vector>

#include "rainbow/graph.hpp"

namespace rainbow {

/// Total edge coloring: colors[i] is the color of g.edge(i), in 1..palette.
struct EdgeColoring {
    int palette = 0;         // k
    std::vector<int> colors; // one entry per edge index

    int color_at(const Graph& g, int a, int b) const;
    int colors_used() const; // number of distinct colors present
    // Throws invalid_graph if not total on g or a color is outside 1..palette.
    void check_total(const Graph& g) const;
};

/// Per-pair rainbow witness paths, keyed by (s,t) with s < t, ascending.
struct RainbowCertificate {
    std::vector<std::pair<std::pair<int, int>, std::vector<int>>> witnesses;
};

struct VerifyOutcome {
    bool ok = false;
    RainbowCertificate certificate;    // populated when ok
    std::pair<int, int> failing_pair{-1, -1}; // lexicographically smallest, when !ok
};

inline constexpr int kDefaultPaletteCap = 16;

// Shortest rainbow s-t path (lexicographically smallest vertex sequence among
// the shortest ones), or nullopt. Search runs over (vertex, used-color-set)
// states with dominance pruning. Throws palette_too_large if
// c.palette > palette_cap.
std::optional<std::vector<int>> rainbow_path(const Graph& g, const EdgeColoring& c,
                                             int s, int t,
                                             int palette_cap = kDefaultPaletteCap);

// Full verification: certificate for every pair, or the smallest failing pair.
VerifyOutcome is_rainbow_connected(const Graph& g, const EdgeColoring& c,
                                   int palette_cap = kDefaultPaletteCap);

// Verification without certificate construction.
std::optional<std::pair<int, int>> first_failing_pair(const Graph& g, const EdgeColoring& c,
                                                      int palette_cap = kDefaultPaletteCap);

// Exhaustive oracle: enumerates simple s-t paths in increasing length
// (lexicographic within a length) and returns the first rainbow one.
// Throws instance_too_large for n > 12.
std::optional<std::vector<int>> rainbow_path_bruteforce(const Graph& g, const EdgeColoring& c,
                                                        int s, int t);

struct RcExactResult {
    int rc = 0;            // meaningful when !exceeded
    bool exceeded = false; // rc(g) > k_max
};

// Smallest k <= k_max admitting a rainbow-connecting k-coloring, by exhaustive
// enumeration over colorings as restricted growth strings (color-permutation
// symmetry quotient). Throws instance_too_large beyond the caps.
RcExactResult rc_exact(const Graph& g, int k_max);

// diam(g), a certified lower bound on rc(g).
int lower_bound_diameter(const Graph& g);

} // namespace rainbow

#endif
