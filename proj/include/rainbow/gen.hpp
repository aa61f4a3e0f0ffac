#ifndef RAINBOW_GEN_HPP
#define RAINBOW_GEN_HPP

#include <cstdint>
#include <string>

#include "rainbow/graph.hpp"

namespace rainbow {

enum class Family {
    random_diam2_bridgeless,
    radius1_pendant,
    named,
};

const char* family_name(Family f);
Family family_from_name(const std::string& name); // throws unknown_name

/// Seeded recipe for a test graph. Identical specs produce identical graphs;
/// the random source is std::mt19937_64 with fixed mappings, so corpora
/// reproduce bit-exactly across platforms.
struct GeneratorSpec {
    Family family = Family::named;
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
    std::string name; // for Family::named: petersen, wheel_k, cycle_k,
                      // complete_k, complete_bipartite_s_t, path_k
};

// Throws generation_exhausted after 10,000 rejected samples, unknown_name for
// a bad named spec.
Graph generate(const GeneratorSpec& spec);

// Re-checks the family's defining predicate with the graph-core primitives.
bool validate_family(const Graph& g, const GeneratorSpec& spec);

// Canonical constructions.
Graph make_petersen();
Graph make_wheel(int rim);                    // hub 0 joined to rim-cycle 1..rim
Graph make_cycle(int k);
Graph make_complete(int k);
Graph make_complete_bipartite(int s, int t);
Graph make_path(int k);                       // k vertices, k-1 edges

} // namespace rainbow

#endif
