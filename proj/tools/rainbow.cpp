#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "rainbow/algo.hpp"
#include "rainbow/errors.hpp"
#include "rainbow/gen.hpp"
#include "rainbow/io.hpp"
#include "rainbow/metrics.hpp"
#include "rainbow/verify.hpp"

namespace {

// Exit codes are part of the contract: 0 ok, 1 parse/usage, 2 structure
// rejected, 3 completion failed, 4 not rainbow connected, 5 instance too
// large.
constexpr int kExitOk = 0;
constexpr int kExitParse = 1;
constexpr int kExitStructure = 2;
constexpr int kExitCompletion = 3;
constexpr int kExitNotConnected = 4;
constexpr int kExitTooLarge = 5;

int exit_code_for(const rainbow::Error& e) {
    switch (e.code()) {
    case rainbow::Errc::parse_error:
    case rainbow::Errc::document_mismatch:
    case rainbow::Errc::invalid_graph:
    case rainbow::Errc::unknown_name:
    case rainbow::Errc::generation_exhausted:
        return kExitParse;
    case rainbow::Errc::not_rc2_structure:
    case rainbow::Errc::not_diameter2:
    case rainbow::Errc::has_bridge:
    case rainbow::Errc::not_pendant_structure:
    case rainbow::Errc::disconnected:
    case rainbow::Errc::no_cycle:
    case rainbow::Errc::bad_cycle_pattern:
        return kExitStructure;
    case rainbow::Errc::completion_failed:
        return kExitCompletion;
    case rainbow::Errc::instance_too_large:
    case rainbow::Errc::palette_too_large:
        return kExitTooLarge;
    }
    return kExitParse;
}

rainbow::Graph read_graph(const std::string& path) {
    if (path == "-") return rainbow::parse_edge_list(std::cin);
    return rainbow::parse_edge_list_file(path);
}

void write_text(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) rainbow::fail(rainbow::Errc::parse_error, "cannot write '" + path + "'");
    out << text;
}

struct ColorOptions {
    std::string input = "-";
    std::string output = "-";
    std::string mode = "auto";
    std::string trace_path;
};

int run_color(const ColorOptions& opt) {
    rainbow::Graph g = read_graph(opt.input);
    rainbow::ColorResult result;
    if (opt.mode == "auto")
        result = rainbow::color_rc2(g);
    else if (opt.mode == "diam2")
        result = rainbow::color_bridgeless_diam2(g);
    else
        result = rainbow::color_radius1_pendant(g);
    write_text(opt.output, rainbow::serialize_coloring(g, result.coloring));
    if (!opt.trace_path.empty())
        write_text(opt.trace_path, rainbow::trace_to_json(result.trace));
    return kExitOk;
}

int run_verify(const std::string& graph_path, const std::string& coloring_path) {
    rainbow::Graph g = read_graph(graph_path);
    auto doc = rainbow::parse_coloring_file(coloring_path);
    auto coloring = rainbow::bind_coloring(g, doc);
    rainbow::VerifyOutcome outcome;
    try {
        outcome = rainbow::is_rainbow_connected(g, coloring);
    } catch (const rainbow::Error& e) {
        if (e.code() != rainbow::Errc::palette_too_large) throw;
        // Palette beyond the state-search cap: fall back to the brute-force
        // oracle, which only needs the instance to be small.
        outcome.ok = true;
        for (int s = 0; s < g.vertex_count() && outcome.ok; ++s) {
            for (int t = s + 1; t < g.vertex_count(); ++t) {
                auto path = rainbow::rainbow_path_bruteforce(g, coloring, s, t);
                if (!path) {
                    outcome.ok = false;
                    outcome.failing_pair = {s, t};
                    outcome.certificate.witnesses.clear();
                    break;
                }
                outcome.certificate.witnesses.push_back({{s, t}, std::move(*path)});
            }
        }
    }
    if (!outcome.ok) {
        std::cout << "NOT-RAINBOW-CONNECTED failing_pair=" << outcome.failing_pair.first << ","
                  << outcome.failing_pair.second << "\n";
        return kExitNotConnected;
    }
    std::size_t max_len = 0;
    for (const auto& [pair, path] : outcome.certificate.witnesses)
        max_len = std::max(max_len, path.size() - 1);
    std::cout << "RAINBOW-CONNECTED pairs=" << outcome.certificate.witnesses.size()
              << " max_witness_length=" << max_len << " colors_used=" << coloring.colors_used()
              << "\n";
    return kExitOk;
}

int run_rc(const std::string& graph_path, int k_max) {
    rainbow::Graph g = read_graph(graph_path);
    auto result = rainbow::rc_exact(g, k_max);
    if (result.exceeded)
        std::cout << "> " << k_max << "\n";
    else
        std::cout << result.rc << "\n";
    return kExitOk;
}

struct GenOptions {
    std::string family = "named";
    std::string name;
    std::string spec_path;
    std::string output = "-";
    int n = 0;
    double p = 0.0;
    std::uint64_t seed = 0;
};

int run_gen(const GenOptions& opt) {
    rainbow::GeneratorSpec spec;
    if (!opt.spec_path.empty()) {
        std::ifstream in(opt.spec_path);
        if (!in) rainbow::fail(rainbow::Errc::parse_error, "cannot open '" + opt.spec_path + "'");
        std::stringstream buf;
        buf << in.rdbuf();
        spec = rainbow::generator_spec_from_json(buf.str());
    } else {
        spec.family = rainbow::family_from_name(opt.family);
        spec.n = opt.n;
        spec.p = opt.p;
        spec.seed = opt.seed;
        spec.name = opt.name;
    }
    rainbow::Graph g = rainbow::generate(spec);
    write_text(opt.output, rainbow::serialize_edge_list(g));
    return kExitOk;
}

struct BenchOptions {
    int count = 100;
    int n_min = 10;
    int n_max = 40;
    std::uint64_t seed = 1;
    std::string family = "diam2";
    std::string output = "-";
    bool no_time = false;
};

// Edge probabilities cycle over a fixed schedule, floored so that rejection
// sampling stays feasible at the given size.
double bench_probability(int index, int n) {
    static const double schedule[] = {0.35, 0.5, 0.65, 0.8};
    double base = schedule[index % 4];
    double floor_p = 1.1 * std::sqrt(std::log(static_cast<double>(n)) / n);
    return std::min(0.95, std::max(base, floor_p));
}

struct BenchRow {
    std::uint64_t seed = 0;
    int n = 0;
    int m = 0;
    int colors_used = 0;
    std::string completion_case;
    int repair_iterations = 0;
    double wall_ms = 0.0;
};

int run_bench(const BenchOptions& opt) {
    std::vector<BenchRow> rows;
    const int span = opt.n_max - opt.n_min + 1;
    if (span <= 0 || opt.count <= 0)
        rainbow::fail(rainbow::Errc::parse_error, "empty bench range");
    for (int i = 0; i < opt.count; ++i) {
        BenchRow row;
        row.n = opt.n_min + i % span;
        row.seed = opt.seed + static_cast<std::uint64_t>(i);
        rainbow::GeneratorSpec spec;
        spec.family = opt.family == "pendant" ? rainbow::Family::radius1_pendant
                                              : rainbow::Family::random_diam2_bridgeless;
        spec.n = row.n;
        spec.p = bench_probability(i, row.n);
        spec.seed = row.seed;
        try {
            rainbow::Graph g = rainbow::generate(spec);
            row.m = g.edge_count();
            auto start = std::chrono::steady_clock::now();
            auto result = opt.family == "pendant" ? rainbow::color_radius1_pendant(g)
                                                  : rainbow::color_bridgeless_diam2(g);
            auto stop = std::chrono::steady_clock::now();
            row.colors_used = result.colors_used;
            row.completion_case = result.trace.completion_case;
            row.repair_iterations = result.trace.repair_iterations;
            row.wall_ms =
                std::chrono::duration_cast<std::chrono::duration<double, std::milli>>(stop - start)
                    .count();
        } catch (const rainbow::Error& e) {
            row.completion_case = std::string("error:") + rainbow::errc_name(e.code());
        }
        rows.push_back(std::move(row));
    }
    std::stable_sort(rows.begin(), rows.end(), [](const BenchRow& a, const BenchRow& b) {
        return a.n != b.n ? a.n < b.n : a.seed < b.seed;
    });
    std::ostringstream out;
    out << "seed,n,m,colors_used,completion_case,repair_iterations,wall_time_ms\n";
    int max_colors = 0;
    int repaired = 0;
    int failed = 0;
    for (const auto& row : rows) {
        out << row.seed << ',' << row.n << ',' << row.m << ',' << row.colors_used << ','
            << row.completion_case << ',' << row.repair_iterations << ',';
        if (opt.no_time)
            out << "0";
        else
            out << row.wall_ms;
        out << '\n';
        max_colors = std::max(max_colors, row.colors_used);
        if (row.repair_iterations > 0) ++repaired;
        if (row.completion_case.rfind("error:", 0) == 0) ++failed;
    }
    out << "# summary instances=" << rows.size() << " max_colors_used=" << max_colors
        << " repair_rate=" << static_cast<double>(repaired) / static_cast<double>(rows.size())
        << " failures=" << failed << "\n";
    write_text(opt.output, out.str());
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"rainbow connection toolkit: color rc=2 graphs with at most 5 colors, "
                 "verify colorings, compute exact rc, generate corpora"};
    app.require_subcommand(1);

    ColorOptions color_opt;
    auto* color = app.add_subcommand("color", "rainbow-color a graph (edge-list document)");
    color->add_option("input", color_opt.input, "edge-list file, or - for stdin");
    color->add_option("-o,--output", color_opt.output, "coloring output file (default stdout)");
    color->add_option("--mode", color_opt.mode, "auto, diam2 or pendant")
        ->check(CLI::IsMember({"auto", "diam2", "pendant"}));
    color->add_option("--trace", color_opt.trace_path, "write the JSON trace document here");

    std::string verify_graph, verify_coloring;
    auto* verify = app.add_subcommand("verify", "check a coloring for rainbow connectivity");
    verify->add_option("graph", verify_graph, "edge-list file")->required();
    verify->add_option("coloring", verify_coloring, "coloring file")->required();

    std::string rc_graph;
    int k_max = 5;
    auto* rc = app.add_subcommand("rc", "exact rainbow connection number (small graphs)");
    rc->add_option("graph", rc_graph, "edge-list file")->required();
    rc->add_option("--k-max", k_max, "largest palette to try (default 5)");

    GenOptions gen_opt;
    auto* gen = app.add_subcommand("gen", "generate a graph from a seeded spec");
    gen->add_option("--family", gen_opt.family,
                    "random_diam2_bridgeless, radius1_pendant or named");
    gen->add_option("--name", gen_opt.name, "named graph (petersen, wheel_5, cycle_4, ...)");
    gen->add_option("--n", gen_opt.n, "vertex count");
    gen->add_option("--p", gen_opt.p, "edge probability");
    gen->add_option("--seed", gen_opt.seed, "reproducibility seed");
    gen->add_option("--spec", gen_opt.spec_path, "JSON GeneratorSpec file (overrides flags)");
    gen->add_option("-o,--output", gen_opt.output, "output file (default stdout)");

    BenchOptions bench_opt;
    auto* bench = app.add_subcommand("bench", "color a generated corpus, emit a CSV report");
    bench->add_option("--count", bench_opt.count, "number of instances");
    bench->add_option("--n-min", bench_opt.n_min, "smallest vertex count");
    bench->add_option("--n-max", bench_opt.n_max, "largest vertex count");
    bench->add_option("--seed", bench_opt.seed, "base seed");
    bench->add_option("--family", bench_opt.family, "diam2 or pendant")
        ->check(CLI::IsMember({"diam2", "pendant"}));
    bench->add_flag("--no-time", bench_opt.no_time, "write 0 in the wall_time column");
    bench->add_option("-o,--output", bench_opt.output, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitParse;
    }

    try {
        if (*color) return run_color(color_opt);
        if (*verify) return run_verify(verify_graph, verify_coloring);
        if (*rc) return run_rc(rc_graph, k_max);
        if (*gen) return run_gen(gen_opt);
        if (*bench) return run_bench(bench_opt);
    } catch (const rainbow::CompletionFailedError& e) {
        std::cerr << e.what() << "\n";
        return kExitCompletion;
    } catch (const rainbow::Error& e) {
        std::cerr << e.what() << "\n";
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    }
    return kExitParse;
}
