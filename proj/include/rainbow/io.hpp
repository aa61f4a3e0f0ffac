#ifndef RAINBOW_IO_HPP
#define RAINBOW_IO_HPP

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "rainbow/algo.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/graph.hpp"
#include "rainbow/verify.hpp"

namespace rainbow {

// Edge-list document: header "n m", then m lines "u v" (0-based ids).
// '#' lines are comments; blank lines are skipped. Throws parse_error.
Graph parse_edge_list(std::istream& in);
Graph parse_edge_list_file(const std::string& path);
std::string serialize_edge_list(const Graph& g);

// Coloring document: header "n m k", then m lines "u v c" with c in 1..k.
struct ColoringDocument {
    int n = 0;
    int k = 0;
    std::vector<std::pair<Edge, int>> entries; // ((u,v), color)
};

ColoringDocument parse_coloring(std::istream& in);
ColoringDocument parse_coloring_file(const std::string& path);
// Binds a parsed document to its graph: requires the same n and exactly the
// graph's edge set. Throws document_mismatch.
EdgeColoring bind_coloring(const Graph& g, const ColoringDocument& doc);
std::string serialize_coloring(const Graph& g, const EdgeColoring& c);

// Trace document: JSON mirroring ColoringTrace field-for-field, fixed key
// order for diffability.
std::string trace_to_json(const ColoringTrace& trace);

// GeneratorSpec as a JSON document with fields family, n, p, seed, name.
GeneratorSpec generator_spec_from_json(const std::string& text);
std::string generator_spec_to_json(const GeneratorSpec& spec);

} // namespace rainbow

#endif
