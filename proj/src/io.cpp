#include "rainbow/io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rainbow/errors.hpp"

namespace rainbow {

namespace {

// Strips comments and blank lines, yields whitespace-separated tokens.
std::vector<std::string> tokenize(std::istream& in) {
    std::vector<std::string> tokens;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) {
            if (tok[0] == '#') break;
            tokens.push_back(tok);
        }
    }
    return tokens;
}

int to_int(const std::string& tok, const char* what) {
    try {
        std::size_t used = 0;
        int value = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        return value;
    } catch (const std::exception&) {
        fail(Errc::parse_error, std::string("bad ") + what + " '" + tok + "'");
    }
}

std::ifstream open_or_fail(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::parse_error, "cannot open '" + path + "'");
    return in;
}

} // namespace

Graph parse_edge_list(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 2) fail(Errc::parse_error, "missing 'n m' header");
    int n = to_int(tokens[0], "vertex count");
    int m = to_int(tokens[1], "edge count");
    if (m < 0 || tokens.size() != static_cast<std::size_t>(2 + 2 * m))
        fail(Errc::parse_error, "expected " + std::to_string(m) + " edge lines");
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) {
        int a = to_int(tokens[static_cast<std::size_t>(2 + 2 * i)], "vertex id");
        int b = to_int(tokens[static_cast<std::size_t>(3 + 2 * i)], "vertex id");
        edges.emplace_back(a, b);
    }
    try {
        return Graph(n, edges);
    } catch (const Error& e) {
        fail(Errc::parse_error, e.what());
    }
}

Graph parse_edge_list_file(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_edge_list(in);
}

std::string serialize_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [a, b] : g.edges()) out << a << ' ' << b << '\n';
    return out.str();
}

ColoringDocument parse_coloring(std::istream& in) {
    auto tokens = tokenize(in);
    if (tokens.size() < 3) fail(Errc::parse_error, "missing 'n m k' header");
    ColoringDocument doc;
    doc.n = to_int(tokens[0], "vertex count");
    int m = to_int(tokens[1], "edge count");
    doc.k = to_int(tokens[2], "palette size");
    if (m < 0 || tokens.size() != static_cast<std::size_t>(3 + 3 * m))
        fail(Errc::parse_error, "expected " + std::to_string(m) + " colored-edge lines");
    for (int i = 0; i < m; ++i) {
        int a = to_int(tokens[static_cast<std::size_t>(3 + 3 * i)], "vertex id");
        int b = to_int(tokens[static_cast<std::size_t>(4 + 3 * i)], "vertex id");
        int c = to_int(tokens[static_cast<std::size_t>(5 + 3 * i)], "color");
        if (c < 1 || c > doc.k)
            fail(Errc::parse_error, "color " + std::to_string(c) + " outside palette 1.." +
                                        std::to_string(doc.k));
        doc.entries.emplace_back(make_edge(a, b), c);
    }
    return doc;
}

ColoringDocument parse_coloring_file(const std::string& path) {
    auto in = open_or_fail(path);
    return parse_coloring(in);
}

EdgeColoring bind_coloring(const Graph& g, const ColoringDocument& doc) {
    if (doc.n != g.vertex_count())
        fail(Errc::document_mismatch, "coloring is for n=" + std::to_string(doc.n) +
                                          ", graph has n=" + std::to_string(g.vertex_count()));
    if (static_cast<int>(doc.entries.size()) != g.edge_count())
        fail(Errc::document_mismatch,
             "coloring has " + std::to_string(doc.entries.size()) + " edges, graph has " +
                 std::to_string(g.edge_count()));
    EdgeColoring coloring;
    coloring.palette = doc.k;
    coloring.colors.assign(static_cast<std::size_t>(g.edge_count()), 0);
    for (const auto& [edge, color] : doc.entries) {
        int e = g.edge_index(edge.first, edge.second);
        if (e < 0)
            fail(Errc::document_mismatch, "colored edge (" + std::to_string(edge.first) + "," +
                                              std::to_string(edge.second) +
                                              ") is not in the graph");
        if (coloring.colors[static_cast<std::size_t>(e)] != 0)
            fail(Errc::document_mismatch, "edge (" + std::to_string(edge.first) + "," +
                                              std::to_string(edge.second) + ") colored twice");
        coloring.colors[static_cast<std::size_t>(e)] = color;
    }
    return coloring;
}

std::string serialize_coloring(const Graph& g, const EdgeColoring& c) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << ' ' << c.palette << '\n';
    for (int e = 0; e < g.edge_count(); ++e) {
        const auto& [a, b] = g.edge(e);
        out << a << ' ' << b << ' ' << c.colors[static_cast<std::size_t>(e)] << '\n';
    }
    return out.str();
}

namespace {

nlohmann::ordered_json vertex_set(const std::vector<int>& vs) {
    return nlohmann::ordered_json(vs);
}

nlohmann::ordered_json block_list(const std::vector<std::pair<int, std::vector<int>>>& blocks) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& [center, members] : blocks) {
        nlohmann::ordered_json b;
        b["center"] = center;
        b["members"] = members;
        arr.push_back(std::move(b));
    }
    return arr;
}

} // namespace

std::string trace_to_json(const ColoringTrace& trace) {
    nlohmann::ordered_json j;
    j["u"] = trace.center;
    j["blocks"] = block_list(trace.blocks);
    j["extension_block"] = vertex_set(trace.extension_block);
    j["residual"] = vertex_set(trace.residual);
    j["covered"] = vertex_set(trace.covered);
    nlohmann::ordered_json cycles = nlohmann::ordered_json::array();
    for (const auto& cyc : trace.cycles) {
        nlohmann::ordered_json c;
        c["vertices"] = cyc.vertices;
        c["variant"] = "C" + std::to_string(cyc.variant);
        cycles.push_back(std::move(c));
    }
    j["cycles"] = std::move(cycles);
    j["X"] = vertex_set(trace.x_side);
    j["Y"] = vertex_set(trace.y_side);
    j["S"] = vertex_set(trace.s_class);
    j["T"] = vertex_set(trace.t_class);
    j["Q"] = vertex_set(trace.q_class);
    j["P1"] = vertex_set(trace.p1);
    j["P2"] = vertex_set(trace.p2);
    j["D_blocks"] = block_list(trace.d_blocks);
    j["D_residual"] = vertex_set(trace.d_residual);
    j["X1"] = vertex_set(trace.x1);
    j["X2"] = vertex_set(trace.x2);
    j["P1_prime"] = vertex_set(trace.p1_prime);
    j["P2_prime"] = vertex_set(trace.p2_prime);
    j["completion_case"] = trace.completion_case;
    j["repair_iterations"] = trace.repair_iterations;
    return j.dump(2) + "\n";
}

GeneratorSpec generator_spec_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse_error, std::string("bad generator spec JSON: ") + e.what());
    }
    GeneratorSpec spec;
    try {
        spec.family = family_from_name(j.at("family").get<std::string>());
        if (j.contains("n")) spec.n = j.at("n").get<int>();
        if (j.contains("p")) spec.p = j.at("p").get<double>();
        if (j.contains("seed")) spec.seed = j.at("seed").get<std::uint64_t>();
        if (j.contains("name")) spec.name = j.at("name").get<std::string>();
    } catch (const nlohmann::json::exception& e) {
        fail(Errc::parse_error, std::string("bad generator spec field: ") + e.what());
    }
    return spec;
}

std::string generator_spec_to_json(const GeneratorSpec& spec) {
    nlohmann::ordered_json j;
    j["family"] = family_name(spec.family);
    j["n"] = spec.n;
    j["p"] = spec.p;
    j["seed"] = spec.seed;
    j["name"] = spec.name;
    return j.dump(2) + "\n";
}

} // namespace rainbow
