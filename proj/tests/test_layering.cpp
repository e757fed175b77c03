#include "doctest.h"
#include "fixtures.hpp"
#include "tww/gen.hpp"
#include "tww/layering.hpp"

using namespace tww;

namespace {
std::vector<int> layer_sizes(const std::vector<int>& dist) {
    std::vector<int> s;
    for (int d : dist) {
        if (d >= static_cast<int>(s.size())) s.resize(d + 1, 0);
        ++s[d];
    }
    return s;
}
}  // namespace

TEST_CASE("bfs_layering") {
    auto k3 = from_faces(3, {{0, 1, 2}, {0, 2, 1}});
    CHECK(layer_sizes(bfs_layering(k3, 1)) == std::vector<int>{1, 2});
    auto p4 = gen_grid(1, 4);
    CHECK(layer_sizes(bfs_layering(p4, 0)) == std::vector<int>{1, 1, 1, 1});
    auto g3 = gen_grid(3, 3);
    CHECK(layer_sizes(bfs_layering(g3, 0)) == std::vector<int>{1, 2, 3, 2, 1});
    CHECK_THROWS_AS(bfs_layering(g3, 9), invariant_error);
    CHECK_THROWS_AS(bfs_layering(build(2, {}, {{}, {}}, -1, -1), 0), invariant_error);
}

TEST_CASE("left-aligned tree of a tree is the tree itself") {
    auto p = gen_grid(1, 6);
    auto t = left_aligned_bfs_tree(p, 0);
    for (int v = 1; v < 6; ++v) CHECK(t.parent[v] == v - 1);
    CHECK_FALSE(check_left_aligned(p, t).has_value());
}

TEST_CASE("sample tree violates left alignment only at {u,v}") {
    auto f = fixtures::sample_tree();
    auto t = tree_from_parents(f.g, f.r, f.parent);
    CHECK_NOTHROW(check_bfs_tree(f.g, t));
    CHECK(is_left_of(f.g, t, f.u, f.v));
    CHECK_FALSE(is_left_of(f.g, t, f.v, f.u));
    auto bad = check_left_aligned(f.g, t);
    REQUIRE(bad.has_value());
    CHECK(bad->first == f.u);
    CHECK(bad->second == f.v);

    auto la = left_aligned_bfs_tree(f.g, f.r);
    CHECK_FALSE(check_left_aligned(f.g, la).has_value());
    CHECK(la.parent != f.parent);
    CHECK(la.parent[f.v] == f.u);
}

TEST_CASE("is_left_of errors") {
    auto f = fixtures::sample_tree();
    auto t = tree_from_parents(f.g, f.r, f.parent);
    CHECK_THROWS_AS(is_left_of(f.g, t, 1, 5), invariant_error);
}

TEST_CASE("left-aligned trees of random triangulations") {
    for (std::uint64_t s = 0; s < 1000; ++s) {
        auto g = gen_triangulation(4 + static_cast<int>(s % 60), s);
        int r = g.tail(g.outer);
        auto t = left_aligned_bfs_tree(g, r);
        CHECK_NOTHROW(check_bfs_tree(g, t));
        CHECK_FALSE(check_left_aligned(g, t).has_value());
        if (s % 50 == 0) {
            // antisymmetry on every layer-crossing non-tree edge
            TreeIndex ix(g, t);
            for (int e = 0; e < g.m(); ++e) {
                int a = g.edges[e][0], b = g.edges[e][1];
                if ((t.parent_dart[a] >> 1) == e || (t.parent_dart[b] >> 1) == e) continue;
                if (ix.is_ancestor(a, b) || ix.is_ancestor(b, a)) continue;
                CHECK(is_left_of(g, t, a, b) != is_left_of(g, t, b, a));
                CHECK(is_left_of(g, t, a, b) == (ix.tin[a] < ix.tin[b]));
            }
        }
    }
}

TEST_CASE("left-aligned trees of quadrangulations") {
    for (std::uint64_t s = 0; s < 200; ++s) {
        auto g = gen_stacked_quadrangulation(4 + static_cast<int>(s % 80), s);
        auto t = left_aligned_bfs_tree(g, g.tail(g.outer));
        CHECK_FALSE(check_left_aligned(g, t).has_value());
    }
}

TEST_CASE("root must be on the outer face") {
    auto g = gen_grid(3, 3);
    CHECK_THROWS_AS(left_aligned_bfs_tree(g, 4), invariant_error);
}

TEST_CASE("vertical_path") {
    auto p = gen_grid(1, 5);
    auto t = left_aligned_bfs_tree(p, 0);
    CHECK(vertical_path(t, 0, [](int) { return false; }) == std::vector<int>{0});
    CHECK(vertical_path(t, 4, [](int) { return false; }) == std::vector<int>{4, 3, 2, 1, 0});
    CHECK(vertical_path(t, 4, [](int v) { return v == 2; }) == std::vector<int>{4, 3, 2});
}

TEST_CASE("tree index: ancestors and wrapped interior counts") {
    for (std::uint64_t s = 0; s < 30; ++s) {
        auto g = gen_triangulation(30 + static_cast<int>(s), s);
        auto t = left_aligned_bfs_tree(g, g.tail(g.outer));
        TreeIndex ix(g, t);
        for (int v = 0; v < g.n; ++v)
            for (int d = 0; d <= t.depth[v]; ++d) {
                int a = ix.anc(v, d);
                CHECK(t.depth[a] == d);
                CHECK(ix.is_ancestor(a, v));
            }
        // every non-tree edge closes a wrapped cycle; compare with a flood fill
        for (int d0 = 0; d0 < 2 * g.m(); d0 += 3) {
            int l = g.tail(d0), r = g.head(d0);
            if ((t.parent_dart[l] >> 1) == (d0 >> 1) || (t.parent_dart[r] >> 1) == (d0 >> 1)) continue;
            if (ix.is_ancestor(l, r) || ix.is_ancestor(r, l)) continue;
            int lo = 0;
            while (ix.anc(l, lo + 1) == ix.anc(r, lo + 1)) ++lo;
            // cycle vertices
            std::vector<char> on(g.n, 0);
            for (int x = l; x != ix.anc(l, lo); x = t.parent[x]) on[x] = 1;
            for (int x = r; x != ix.anc(r, lo); x = t.parent[x]) on[x] = 1;
            on[ix.anc(l, lo)] = 1;
            if (ix.tin[l] > ix.tin[r]) continue;
            // region on the left of d0: flood over faces without crossing cycle edges
            std::vector<char> cyc_edge(g.m(), 0);
            cyc_edge[d0 >> 1] = 1;
            for (int x = l; x != ix.anc(l, lo); x = t.parent[x]) cyc_edge[t.parent_dart[x] >> 1] = 1;
            for (int x = r; x != ix.anc(r, lo); x = t.parent[x]) cyc_edge[t.parent_dart[x] >> 1] = 1;
            std::vector<int> fid;
            int nf = face_ids(g, fid);
            std::vector<char> fin(nf, 0), in(g.n, 0);
            std::vector<int> st{fid[d0]};
            fin[fid[d0]] = 1;
            while (!st.empty()) {
                int f = st.back();
                st.pop_back();
                for (int x = 0; x < 2 * g.m(); ++x) {
                    if (fid[x] != f) continue;
                    if (!on[g.tail(x)]) in[g.tail(x)] = 1;
                    if (cyc_edge[x >> 1]) continue;
                    int o = fid[PlaneGraph::rev(x)];
                    if (!fin[o]) {
                        fin[o] = 1;
                        st.push_back(o);
                    }
                }
            }
            long cnt = 0;
            for (char c : in) cnt += c;
            CHECK(ix.wrapped_interior(d0, lo) == cnt);
        }
    }
}
