#include <algorithm>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "tww/embed.hpp"
#include "tww/gen.hpp"
#include "tww/io.hpp"
#include "tww/oracle.hpp"
#include "tww/seq_bipartite.hpp"
#include "tww/seq_planar.hpp"

using namespace tww;

namespace {

AnyGraph load(const std::string& path) {
    if (path == "-") return read_any_graph(std::cin);
    return read_any_graph_file(path);
}

PlaneGraph load_plane(const std::string& path, bool embed_edges) {
    auto a = load(path);
    if (a.plane) return a.pg;
    if (!embed_edges) throw format_error(path + ": edge list needs --embed");
    return embed(a.g);
}

ContractionSequence load_seq(const std::string& path) {
    if (path == "-") return read_sequence(std::cin);
    return read_sequence_file(path);
}

// "-" or empty means stdout
template <class F>
void emit(const std::string& out, F&& write) {
    if (out.empty() || out == "-") {
        write(std::cout);
        return;
    }
    std::ofstream f(out);
    if (!f) throw format_error("cannot write " + out);
    write(f);
}

struct Built {
    ContractionSequence seq;
    int width = 0;
};

Built build_seq(const PlaneGraph& g, const std::string& mode, bool check) {
    if (mode == "planar") {
        auto r = planar_sequence(g, {check, {}});
        return {std::move(r.seq), r.report.width};
    }
    auto r = bipartite_sequence(g, {check, {}});
    return {std::move(r.seq), r.report.width};
}

std::vector<int> parse_sizes(const std::string& s) {
    std::vector<int> out;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) continue;
        try {
            out.push_back(std::stoi(tok));
        } catch (const std::exception&) {
            throw format_error("bad size '" + tok + "'");
        }
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"twin-width contraction sequences for planar graphs"};
    app.require_subcommand(1);

    std::string mode = "planar", graph_path, seq_path, out;
    bool assert_mode = false, embed_edges = false;

    auto* seq = app.add_subcommand("seq", "build a contraction sequence and verify it");
    seq->add_option("--mode", mode)->check(CLI::IsMember({"planar", "bipartite"}));
    seq->add_option("graph", graph_path)->required();
    seq->add_option("--out", out, "sequence file ('-' for stdout)");
    seq->add_flag("--assert", assert_mode, "per-step invariant checks");
    seq->add_flag("--embed", embed_edges, "embed an edge-list input first");

    auto* ver = app.add_subcommand("verify", "replay a sequence and print its width");
    ver->add_option("graph", graph_path)->required();
    ver->add_option("seq", seq_path)->required();

    int limit = default_oracle_limit;
    std::string witness;
    auto* ex = app.add_subcommand("exact", "exact twin-width of a small graph");
    ex->add_option("graph", graph_path)->required();
    ex->add_option("--limit", limit, "largest n searched");
    ex->add_option("--witness", witness, "write an optimal sequence here");

    std::string what;
    auto* prep = app.add_subcommand("prep", "complete to a triangulation or quadrangulation");
    prep->add_option("what", what)->required()->check(CLI::IsMember({"triangulate", "quadrangulate"}));
    prep->add_option("graph", graph_path)->required();
    prep->add_option("--out", out);
    prep->add_flag("--embed", embed_edges);

    std::string kind;
    int n = 0, rows = 0, cols = 0;
    std::uint64_t seed = 0;
    bool bip = false;
    auto* gen = app.add_subcommand("gen", "generate a plane graph");
    gen->add_option("kind", kind)->required()->check(CLI::IsMember({"tri", "quad", "grid", "sparse", "solid"}));
    std::string solid;
    gen->add_option("--n", n);
    gen->add_option("--name", solid, "solid: tetra|cube|octa|dodeca|ico")
        ->check(CLI::IsMember({"tetra", "cube", "octa", "dodeca", "ico"}));
    gen->add_option("--seed", seed);
    gen->add_option("--rows", rows, "grid rows (kind grid, or quad as a grid)");
    gen->add_option("--cols", cols);
    gen->add_flag("--bipartite", bip, "sparse: bipartite variant");
    gen->add_option("--out", out);

    std::string sizes = "1000,10000,100000";
    int seeds = 3;
    std::string bench_mode = "both";
    auto* bench = app.add_subcommand("bench", "width and build time table (TSV)");
    bench->add_option("--sizes", sizes, "comma separated vertex counts");
    bench->add_option("--seeds", seeds);
    bench->add_option("--mode", bench_mode)->check(CLI::IsMember({"planar", "bipartite", "both"}));

    int root = -1;
    auto* tree = app.add_subcommand("tree", "left-aligned BFS tree as a parent array");
    tree->add_option("graph", graph_path)->required();
    tree->add_option("--root", root, "default: tail of the outer dart");
    tree->add_flag("--embed", embed_edges);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (*seq) {
            auto g = load_plane(graph_path, embed_edges);
            auto b = build_seq(g, mode, assert_mode);
            auto check = verify_sequence(graph_of(g), b.seq);
            if (check.width != b.width || !check.full) throw invariant_error("verifier disagrees with the builder");
            if (!out.empty()) emit(out, [&](std::ostream& o) { write_sequence(o, b.seq); });
            (out == "-" ? std::cerr : std::cout) << "width " << b.width << '\n';
        } else if (*ver) {
            auto a = load(graph_path);
            auto s = load_seq(seq_path);
            if (s.n != a.g.n) throw format_error("sequence is for " + std::to_string(s.n) + " vertices, graph has " +
                                                 std::to_string(a.g.n));
            auto r = verify_sequence(a.g, s);
            std::cout << "width " << r.width << '\n';
            if (!r.full) std::cout << "c sequence is partial\n";
        } else if (*ex) {
            auto a = load(graph_path);
            if (a.g.n > limit) throw format_error("exact search is limited to " + std::to_string(limit) + " vertices");
            auto r = exact_twinwidth(a.g, std::nullopt, limit);
            std::cout << "width " << r.width << '\n';
            if (!witness.empty()) emit(witness, [&](std::ostream& o) { write_sequence(o, r.witness); });
        } else if (*prep) {
            auto g = load_plane(graph_path, embed_edges);
            if (!is_simple(g)) throw format_error("graph is not simple");
            auto [c, m1] = connect_components(g);
            auto [h, m2] = what == "triangulate" ? triangulate(c) : quadrangulate(c);
            (void)m1;
            (void)m2;
            emit(out, [&](std::ostream& o) { write_plane(o, h, what + "d input, first " + std::to_string(g.n) + " vertices kept"); });
        } else if (*gen) {
            PlaneGraph g;
            std::string note;
            if (kind == "tri") {
                if (n < 4) throw format_error("tri needs --n >= 4");
                g = gen_triangulation(n, seed);
                note = generator_comment("stacked-triangulation", seed, n);
            } else if (kind == "quad" && rows == 0) {
                if (n < 4) throw format_error("quad needs --n >= 4 or --rows/--cols");
                g = gen_stacked_quadrangulation(n, seed);
                note = generator_comment("stacked-quadrangulation", seed, n);
            } else if (kind == "quad" || kind == "grid") {
                if (rows < 2 || cols < 2) throw format_error("grid needs --rows and --cols >= 2");
                g = kind == "quad" ? gen_grid_quadrangulation(rows, cols) : gen_grid(rows, cols);
                note = kind + " " + std::to_string(rows) + "x" + std::to_string(cols);
            } else if (kind == "solid") {
                if (solid.empty()) throw format_error("solid needs --name");
                g = solid == "tetra" ? tetrahedron()
                    : solid == "cube" ? cube()
                    : solid == "octa" ? octahedron()
                    : solid == "dodeca" ? dodecahedron()
                                        : icosahedron();
                note = "platonic " + solid;
            } else {
                if (n < 2) throw format_error("sparse needs --n >= 2");
                g = gen_sparse_planar(n, seed, bip);
                note = generator_comment(bip ? "sparse-bipartite" : "sparse-planar", seed, n);
            }
            validate(g);
            emit(out, [&](std::ostream& o) { write_plane(o, g, note); });
        } else if (*bench) {
            std::cout << "n\tmode\twidth\tmillis\n";
            for (int sz : parse_sizes(sizes)) {
                for (const char* md : {"planar", "bipartite"}) {
                    if (bench_mode != "both" && bench_mode != md) continue;
                    for (int s = 0; s < seeds; ++s) {
                        auto g = std::string(md) == "planar" ? gen_triangulation(sz, s) : gen_stacked_quadrangulation(sz, s);
                        auto t0 = std::chrono::steady_clock::now();
                        auto b = build_seq(g, md, false);
                        auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                        std::cout << sz << '\t' << md << '\t' << b.width << '\t' << ms << '\n';
                    }
                }
            }
        } else if (*tree) {
            auto g = load_plane(graph_path, embed_edges);
            if (g.n == 0) return 0;
            if (root < 0) root = g.outer >= 0 ? g.tail(g.outer) : 0;
            if (root >= g.n) throw format_error("root out of range");
            int comps = 0;
            components(g, comps);
            if (comps != 1) throw format_error("graph is not connected");
            auto t = left_aligned_bfs_tree(g, root);
            std::cout << "c root " << root << '\n';
            for (int v = 0; v < g.n; ++v) std::cout << t.parent[v] << (v + 1 < g.n ? ' ' : '\n');
        }
    } catch (const format_error& e) {
        std::cerr << "format error: " << e.what() << '\n';
        return 1;
    } catch (const invariant_error& e) {
        std::cerr << "invariant violation: " << e.what() << '\n';
        return 2;
    }
    return 0;
}
