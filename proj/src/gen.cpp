#include "tww/gen.hpp"

#include <algorithm>

namespace tww {

std::uint64_t uniform_below(Rng& rng, std::uint64_t k) {
    if (k <= 1) return 0;
    std::uint64_t t = (0 - k) % k;
    std::uint64_t x;
    do x = rng();
    while (x < t);
    return x % k;
}

namespace {

void stellate_triangle(EmbedBuilder& b, std::vector<int>& faces, size_t idx) {
    auto w = b.face_walk(faces[idx]);
    int y = b.add_vertex();
    int last = -1;
    for (int d : w) last = 2 * b.add_edge(b.tail(d), d, y, last) + 1;
    faces[idx] = w[0];
    faces.push_back(w[1]);
    faces.push_back(w[2]);
}

EmbedBuilder triangle(int& outer) {
    EmbedBuilder b;
    for (int i = 0; i < 3; ++i) b.add_vertex();
    int e0 = b.add_edge(0, -1, 1, -1);
    int e1 = b.add_edge(1, 2 * e0 + 1, 2, -1);
    b.add_edge(2, 2 * e1 + 1, 0, 2 * e0);
    outer = 2 * e0;
    return b;
}

}  // namespace

PlaneGraph gen_triangulation(int n, std::uint64_t seed) {
    if (n < 4) throw invariant_error("stacked triangulations start at n = 4");
    Rng rng(seed);
    int outer;
    EmbedBuilder b = triangle(outer);
    std::vector<int> faces{1};
    stellate_triangle(b, faces, 0);
    faces.push_back(outer);
    while (b.vertex_count() < n) stellate_triangle(b, faces, uniform_below(rng, faces.size()));
    return b.finish(outer);
}

PlaneGraph gen_stacked_quadrangulation(int n, std::uint64_t seed) {
    if (n < 4) throw invariant_error("stacked quadrangulations start at n = 4");
    Rng rng(seed);
    EmbedBuilder b;
    for (int i = 0; i < 4; ++i) b.add_vertex();
    int e0 = b.add_edge(0, -1, 1, -1);
    int e1 = b.add_edge(1, 2 * e0 + 1, 2, -1);
    int e2 = b.add_edge(2, 2 * e1 + 1, 3, -1);
    b.add_edge(3, 2 * e2 + 1, 0, 2 * e0);
    std::vector<int> faces{2 * e0, 2 * e0 + 1};
    while (b.vertex_count() < n) {
        size_t idx = uniform_below(rng, faces.size());
        auto w = b.face_walk(faces[idx]);
        int s = static_cast<int>(uniform_below(rng, 2));
        int d0 = w[s], d2 = w[s + 2];
        int y = b.add_vertex();
        int a = b.add_edge(b.tail(d0), d0, y, -1);
        b.add_edge(b.tail(d2), d2, y, 2 * a + 1);
        faces[idx] = d0;
        faces.push_back(d2);
    }
    return b.finish(2 * e0);
}

PlaneGraph gen_grid(int rows, int cols) {
    if (rows < 1 || cols < 1) throw invariant_error("grid needs positive dimensions");
    auto id = [&](int i, int j) { return i * cols + j; };
    std::vector<std::array<int, 2>> edges;
    std::vector<int> right(rows * cols, -1), up(rows * cols, -1);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j + 1 < cols; ++j) {
            right[id(i, j)] = static_cast<int>(edges.size());
            edges.push_back({id(i, j), id(i, j + 1)});
        }
    for (int i = 0; i + 1 < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            up[id(i, j)] = static_cast<int>(edges.size());
            edges.push_back({id(i, j), id(i + 1, j)});
        }
    std::vector<std::vector<int>> rot(rows * cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) {
            auto& r = rot[id(i, j)];
            if (j + 1 < cols) r.push_back(right[id(i, j)]);
            if (i + 1 < rows) r.push_back(up[id(i, j)]);
            if (j > 0) r.push_back(right[id(i, j - 1)]);
            if (i > 0) r.push_back(up[id(i - 1, j)]);
        }
    if (cols >= 2) return build(rows * cols, edges, rot, right[0], 1);
    if (rows >= 2) return build(rows * cols, edges, rot, up[0], 1);
    return build(1, edges, rot, -1, -1);
}

PlaneGraph gen_grid_quadrangulation(int rows, int cols) { return quadrangulate(gen_grid(rows, cols)).first; }

PlaneGraph tetrahedron() { return from_faces(4, {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}}); }

PlaneGraph octahedron() {
    std::vector<std::vector<int>> f;
    for (int a : {0, 1})
        for (int b : {2, 3})
            for (int c : {4, 5}) f.push_back({a, b, c});
    return from_faces(6, f);
}

PlaneGraph cube() {
    std::vector<std::vector<int>> f;
    for (int k = 0; k < 3; ++k)
        for (int s = 0; s < 2; ++s) {
            int i = (k + 1) % 3, j = (k + 2) % 3;
            std::vector<int> c;
            for (int code : {0, 1, 3, 2}) {
                int v = s << k;
                v |= (code & 1) << i;
                v |= ((code >> 1) & 1) << j;
                c.push_back(v);
            }
            f.push_back(c);
        }
    return from_faces(8, f);
}

PlaneGraph icosahedron() {
    std::vector<std::vector<int>> f;
    for (int i = 0; i < 5; ++i) {
        int j = (i + 1) % 5;
        f.push_back({0, 1 + i, 1 + j});
        f.push_back({1 + i, 1 + j, 6 + i});
        f.push_back({6 + i, 6 + j, 1 + j});
        f.push_back({11, 6 + i, 6 + j});
    }
    return from_faces(12, f);
}

PlaneGraph dodecahedron() {
    std::vector<std::vector<int>> f;
    auto t = [](int i) { return i % 5; };
    auto u = [](int i) { return 5 + i % 5; };
    auto l = [](int i) { return 10 + i % 5; };
    auto b = [](int i) { return 15 + i % 5; };
    f.push_back({t(0), t(1), t(2), t(3), t(4)});
    f.push_back({b(0), b(1), b(2), b(3), b(4)});
    for (int i = 0; i < 5; ++i) {
        f.push_back({t(i), t(i + 1), u(i + 1), l(i), u(i)});
        f.push_back({b(i), b(i + 1), l(i + 1), u(i + 1), l(i)});
    }
    return from_faces(20, f);
}

namespace {

bool connected_without(const PlaneGraph& g, const std::vector<char>& keep_edge) {
    std::vector<char> seen(g.n, 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int d : g.rot[v]) {
            if (!keep_edge[d >> 1]) continue;
            int w = g.head(d);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                st.push_back(w);
            }
        }
    }
    return cnt == g.n;
}

}  // namespace

PlaneGraph gen_sparse_planar(int n, std::uint64_t seed, bool bipartite) {
    Rng rng(seed);
    if (n < 1) throw invariant_error("need at least one vertex");
    if (n == 1) return build(1, {}, {{}}, -1, -1);
    if (n == 2) return build(2, {{0, 1}}, {{0}, {0}}, 0, 0);
    PlaneGraph base;
    if (n == 3) {
        if (bipartite || uniform_below(rng, 2))
            base = build(3, {{0, 1}, {1, 2}}, {{0}, {0, 1}, {1}}, 0, 0);
        else
            base = from_faces(3, {{0, 1, 2}, {0, 2, 1}});
        return base;
    }
    base = bipartite ? gen_stacked_quadrangulation(n, rng()) : gen_triangulation(n, rng());
    std::vector<char> keep_edge(base.m(), 1), keep_vertex(base.n, 1);
    std::vector<int> order(base.m());
    for (int e = 0; e < base.m(); ++e) order[e] = e;
    for (int i = base.m() - 1; i > 0; --i) std::swap(order[i], order[uniform_below(rng, i + 1)]);
    std::uint64_t keep_pct = 20 + uniform_below(rng, 70);
    for (int e : order) {
        if (uniform_below(rng, 100) < keep_pct) continue;
        keep_edge[e] = 0;
        if (!connected_without(base, keep_edge)) keep_edge[e] = 1;
    }
    return plane_subgraph(base, keep_vertex, keep_edge);
}

Graph gen_cograph(int n, std::uint64_t seed) {
    Rng rng(seed);
    Graph g{n, {}};
    // each node of the cotree covers a contiguous id range
    std::vector<std::pair<int, int>> st{{0, n}};
    while (!st.empty()) {
        auto [lo, hi] = st.back();
        st.pop_back();
        if (hi - lo <= 1) continue;
        int mid = lo + 1 + static_cast<int>(uniform_below(rng, hi - lo - 1));
        if (uniform_below(rng, 2))
            for (int a = lo; a < mid; ++a)
                for (int b = mid; b < hi; ++b) g.edges.push_back({a, b});
        st.push_back({lo, mid});
        st.push_back({mid, hi});
    }
    return g;
}

std::string generator_comment(const std::string& kind, std::uint64_t seed, int n) {
    return "generator " + kind + " prng mt19937_64 seed " + std::to_string(seed) + " n " + std::to_string(n);
}

}  // namespace tww
