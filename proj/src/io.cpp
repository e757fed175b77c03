#include "tww/io.hpp"

#include <fstream>
#include <sstream>

namespace tww {

namespace {

struct LineReader {
    std::istream& in;
    int lineno = 0;
    std::string line;
    // next non-comment, non-blank line
    bool next(std::istringstream& ss) {
        while (std::getline(in, line)) {
            ++lineno;
            size_t p = line.find_first_not_of(" \t\r");
            if (p == std::string::npos || line[p] == 'c') continue;
            ss.clear();
            ss.str(line);
            return true;
        }
        return false;
    }
    [[noreturn]] void fail(const std::string& why) const {
        throw format_error("line " + std::to_string(lineno) + ": " + why);
    }
};

template <typename T>
T need(std::istringstream& ss, const LineReader& r, const char* what) {
    T v;
    if (!(ss >> v)) r.fail(std::string("expected ") + what);
    return v;
}

void no_trailing(std::istringstream& ss, const LineReader& r) {
    std::string extra;
    if (ss >> extra) r.fail("unexpected token '" + extra + "'");
}

PlaneGraph parse_plane_body(LineReader& r, int n, int m) {
    if (n < 0 || m < 0) r.fail("negative size");
    std::vector<std::array<int, 2>> edges(m, {-1, -1});
    std::vector<std::vector<int>> rot(n);
    std::vector<char> has_rot(n, 0);
    int oe = -1, ov = -1;
    bool outer_seen = false;
    std::istringstream ss;
    while (r.next(ss)) {
        std::string tag;
        ss >> tag;
        if (tag == "e") {
            int id = need<int>(ss, r, "edge id"), u = need<int>(ss, r, "endpoint"), v = need<int>(ss, r, "endpoint");
            no_trailing(ss, r);
            if (id < 0 || id >= m) r.fail("edge id out of range");
            if (edges[id][0] != -1) r.fail("edge id repeated");
            if (u < 0 || u >= n || v < 0 || v >= n) r.fail("vertex out of range");
            edges[id] = {u, v};
        } else if (tag == "r") {
            int v = need<int>(ss, r, "vertex");
            if (v < 0 || v >= n) r.fail("vertex out of range");
            if (has_rot[v]) r.fail("rotation repeated");
            has_rot[v] = 1;
            int e;
            while (ss >> e) rot[v].push_back(e);
            if (!ss.eof()) r.fail("bad rotation entry");
        } else if (tag == "outer") {
            oe = need<int>(ss, r, "edge id");
            ov = need<int>(ss, r, "vertex");
            no_trailing(ss, r);
            outer_seen = true;
        } else {
            r.fail("unknown line tag '" + tag + "'");
        }
    }
    for (int e = 0; e < m; ++e)
        if (edges[e][0] == -1) throw format_error("edge " + std::to_string(e) + " missing");
    if (m > 0 && !outer_seen) throw format_error("missing outer line");
    return build(n, edges, rot, oe, ov);
}

Graph parse_edge_body(LineReader& r, int n, int m) {
    Graph g;
    g.n = n;
    std::istringstream ss;
    while (r.next(ss)) {
        std::string tag;
        ss >> tag;
        if (tag != "e") r.fail("unknown line tag '" + tag + "'");
        int u = need<int>(ss, r, "endpoint"), v = need<int>(ss, r, "endpoint");
        no_trailing(ss, r);
        if (u < 0 || u >= n || v < 0 || v >= n) r.fail("vertex out of range");
        g.edges.push_back({u, v});
    }
    if (static_cast<int>(g.edges.size()) != m) throw format_error("edge count differs from header");
    return g;
}

}  // namespace

AnyGraph read_any_graph(std::istream& in) {
    LineReader r{in, 0, {}};
    std::istringstream ss;
    if (!r.next(ss)) throw format_error("empty graph file");
    std::string p = need<std::string>(ss, r, "p"), kind = need<std::string>(ss, r, "format");
    if (p != "p") r.fail("expected header line");
    int n = need<int>(ss, r, "n"), m = need<int>(ss, r, "m");
    no_trailing(ss, r);
    AnyGraph a;
    if (kind == "plane") {
        a.plane = true;
        try {
            a.pg = parse_plane_body(r, n, m);
        } catch (const invariant_error& e) {
            throw format_error(std::string("invalid embedding: ") + e.what());
        }
        a.g = graph_of(a.pg);
    } else if (kind == "edge") {
        a.g = parse_edge_body(r, n, m);
    } else {
        r.fail("unknown graph format '" + kind + "'");
    }
    return a;
}

PlaneGraph read_plane(std::istream& in) {
    auto a = read_any_graph(in);
    if (!a.plane) throw format_error("expected a plane graph (p plane ...)");
    return a.pg;
}

Graph read_edge_list(std::istream& in) { return read_any_graph(in).g; }

void write_plane(std::ostream& out, const PlaneGraph& g, const std::string& comment) {
    std::istringstream cs(comment);
    for (std::string l; std::getline(cs, l);) out << "c " << l << '\n';
    out << "p plane " << g.n << ' ' << g.m() << '\n';
    for (int e = 0; e < g.m(); ++e) out << "e " << e << ' ' << g.edges[e][0] << ' ' << g.edges[e][1] << '\n';
    for (int v = 0; v < g.n; ++v) {
        out << "r " << v;
        for (int d : g.rot[v]) out << ' ' << (d >> 1);
        out << '\n';
    }
    if (g.outer >= 0) out << "outer " << (g.outer >> 1) << ' ' << g.tail(g.outer) << '\n';
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "p edge " << g.n << ' ' << g.edges.size() << '\n';
    for (auto& e : g.edges) out << "e " << e[0] << ' ' << e[1] << '\n';
}

ContractionSequence read_sequence(std::istream& in) {
    LineReader r{in, 0, {}};
    std::istringstream ss;
    if (!r.next(ss)) throw format_error("empty sequence file");
    std::string p = need<std::string>(ss, r, "p"), kind = need<std::string>(ss, r, "format");
    if (p != "p" || kind != "tww-seq") r.fail("expected 'p tww-seq <n> <steps>'");
    int n = need<int>(ss, r, "n"), k = need<int>(ss, r, "steps");
    no_trailing(ss, r);
    ContractionSequence s;
    s.n = n;
    while (r.next(ss)) {
        std::string tag;
        ss >> tag;
        Step st;
        if (tag == "k") {
            st.kind = StepKind::contract;
            st.x = need<int>(ss, r, "x");
            st.y = need<int>(ss, r, "y");
            st.z = need<int>(ss, r, "z");
            if (st.z != s.next_id()) r.fail("fresh id must be " + std::to_string(s.next_id()));
        } else if (tag == "d") {
            st.kind = StepKind::decrease;
            st.x = need<int>(ss, r, "x");
        } else {
            r.fail("unknown step tag '" + tag + "'");
        }
        no_trailing(ss, r);
        s.push(st);
    }
    if (static_cast<int>(s.steps.size()) != k) throw format_error("step count differs from header");
    return s;
}

void write_sequence(std::ostream& out, const ContractionSequence& s) {
    out << "p tww-seq " << s.n << ' ' << s.steps.size() << '\n';
    for (auto& st : s.steps) {
        if (st.kind == StepKind::contract)
            out << "k " << st.x << ' ' << st.y << ' ' << st.z << '\n';
        else
            out << "d " << st.x << '\n';
    }
}

namespace {
std::ifstream open_in(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw format_error("cannot open " + path);
    return f;
}
}  // namespace

PlaneGraph read_plane_file(const std::string& path) {
    auto f = open_in(path);
    return read_plane(f);
}

AnyGraph read_any_graph_file(const std::string& path) {
    auto f = open_in(path);
    return read_any_graph(f);
}

ContractionSequence read_sequence_file(const std::string& path) {
    auto f = open_in(path);
    return read_sequence(f);
}

}  // namespace tww
