#ifndef RAINBOW_ALGO_HPP
#define RAINBOW_ALGO_HPP

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/errors.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

/// One cycle chosen while covering the spoke residue, with the pattern
/// variant it was colored by.
struct CycleChoice {
    std::vector<int> vertices; // starts at the center u
    int variant = 0;           // 3, 4 or 5 (C3/C4/C5)
};

/// Full record of the coloring run's choices. Vertex sets are ascending;
/// fields are filled up to the step where the run stopped.
struct ColoringTrace {
    int center = -1;
    std::vector<std::pair<int, std::vector<int>>> blocks; // (b_i, B_i)
    std::vector<int> extension_block;                     // B_{b+1}
    std::vector<int> residual;                            // B_{b+2}
    std::vector<int> covered;                             // running cover after the cycle loop
    std::vector<CycleChoice> cycles;                      // chosen cycles R
    std::vector<int> x_side, y_side;                      // spoke split X / Y
    std::vector<int> s_class, t_class, q_class;           // second-layer classes S / T / Q
    std::vector<int> p1, p2;                              // residual classes P_1 / P_2
    std::vector<std::pair<int, std::vector<int>>> d_blocks; // (d_i, D_i)
    std::vector<int> d_residual;                          // D_{d+1}
    std::vector<int> x1, x2, p1_prime, p2_prime;          // case-12 sets
    std::string completion_case;                          // step2..step13, degenerate_*
    int repair_iterations = 0;

    // Rewrite all vertex ids through the map (new id = map[old id]).
    void remap(std::span<const int> map);
};

struct ColorResult {
    EdgeColoring coloring;
    int colors_used = 0;
    ColoringTrace trace;
    RainbowCertificate certificate;
};

class CompletionFailedError : public Error {
public:
    CompletionFailedError(ColoringTrace trace, const std::string& message)
        : Error(Errc::completion_failed, message), trace(std::move(trace)) {}

    ColoringTrace trace;
};

// The fixed color patterns for 3-, 4- and 5-cycles through the center.
// cycle = [u, v1, ..., v_{L-1}]; layers[i] is the distance from u of
// cycle[i], so layers must be one of [0,1,1], [0,1,2,1], [0,1,2,2,1].
// Returns (edge, color) pairs along the cycle. Throws bad_cycle_pattern.
std::vector<std::pair<Edge, int>> appropriate_coloring(std::span<const int> cycle,
                                                       std::span<const int> layers);

// A minimum-length cycle containing edge (u,v); among those, one with the
// most vertices outside `covered`; final tie-break by lexicographic vertex
// sequence. Returned as [u, v, ...]. Throws no_cycle if uv is a bridge.
std::vector<int> shortest_cycle_through(const Graph& g, int u, int v,
                                        const std::vector<bool>& covered);

// Rainbow-colors a connected bridgeless graph of diameter exactly 2 with at
// most 5 colors, following the step-by-step construction; the output is
// verified and repaired before being returned.
ColorResult color_bridgeless_diam2(const Graph& g);

// Rainbow-colors a graph made of a bridgeless radius-1 core plus one pendant
// edge at the core's center, with at most 4 colors.
ColorResult color_radius1_pendant(const Graph& g);

// The dispatcher for graphs promised to have rc = 2: picks the branch by
// structure, handles K2 and P3 degenerately, rejects everything else.
ColorResult color_rc2(const Graph& g);

} // namespace rainbow

#endif
