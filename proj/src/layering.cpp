#include "tww/layering.hpp"

#include <algorithm>

namespace tww {

std::vector<int> bfs_layering(const PlaneGraph& g, int r) {
    if (r < 0 || r >= g.n) throw invariant_error("root out of range");
    std::vector<int> dist(g.n, -1), q{r};
    dist[r] = 0;
    for (size_t h = 0; h < q.size(); ++h) {
        int v = q[h];
        for (int d : g.rot[v]) {
            int w = g.head(d);
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push_back(w);
            }
        }
    }
    if (static_cast<int>(q.size()) != g.n) throw invariant_error("graph is disconnected");
    return dist;
}

int outer_dart_at(const PlaneGraph& g, int r) {
    if (g.outer < 0) return -1;
    if (g.tail(g.outer) == r) return g.outer;
    int x = g.outer;
    do {
        if (g.tail(x) == r) return x;
        x = g.face_next(x);
    } while (x != g.outer);
    return -1;
}

namespace {
int key_at(const PlaneGraph& g, int ref, int d) {
    int deg = g.degree(g.tail(d));
    return ((g.pos[d] - g.pos[ref] - 1) % deg + deg) % deg;
}
int ref_of(const PlaneGraph& g, const BfsTree& t, int v) {
    (void)g;
    return v == t.root ? t.root_ref : t.parent_dart[v];
}
}  // namespace

BfsTree left_aligned_bfs_tree(const PlaneGraph& g, int r) {
    auto dist = bfs_layering(g, r);
    BfsTree t;
    t.root = r;
    t.depth = dist;
    t.parent.assign(g.n, -1);
    t.parent_dart.assign(g.n, -1);
    t.children.assign(g.n, {});
    if (g.n == 1) return t;
    t.root_ref = outer_dart_at(g, r);
    if (t.root_ref < 0) throw invariant_error("root is not on the outer face");
    std::vector<char> treed(g.n, 0);
    treed[r] = 1;
    std::vector<std::pair<int, int>> stack{{r, 0}};
    auto expand = [&](int v) {
        int ref = ref_of(g, t, v);
        int deg = g.degree(v);
        auto& ch = t.children[v];
        for (int k = 1; k <= deg; ++k) {
            int d = g.rot[v][(g.pos[ref] + k) % deg];
            int w = g.head(d);
            if (dist[w] != dist[v] + 1) continue;
            if (!treed[w]) {
                treed[w] = 1;
                t.parent[w] = v;
                t.parent_dart[w] = PlaneGraph::rev(d);
                ch.push_back(w);
            } else if (t.parent[w] == v && (d >> 1) < (t.parent_dart[w] >> 1)) {
                t.parent_dart[w] = PlaneGraph::rev(d);
            }
        }
        std::sort(ch.begin(), ch.end(), [&](int a, int b) {
            return key_at(g, ref, PlaneGraph::rev(t.parent_dart[a])) < key_at(g, ref, PlaneGraph::rev(t.parent_dart[b]));
        });
    };
    expand(r);
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < static_cast<int>(t.children[v].size())) {
            int w = t.children[v][i++];
            expand(w);
            stack.push_back({w, 0});
        } else {
            stack.pop_back();
        }
    }
    return t;
}

BfsTree tree_from_parents(const PlaneGraph& g, int root, const std::vector<int>& parent) {
    BfsTree t;
    t.root = root;
    t.parent = parent;
    t.parent_dart.assign(g.n, -1);
    t.depth.assign(g.n, -1);
    t.children.assign(g.n, {});
    t.root_ref = outer_dart_at(g, root);
    for (int v = 0; v < g.n; ++v) {
        if (v == root) continue;
        for (int d : g.rot[v])
            if (g.head(d) == parent[v] && (t.parent_dart[v] < 0 || (d >> 1) < (t.parent_dart[v] >> 1)))
                t.parent_dart[v] = d;
        if (t.parent_dart[v] < 0) throw invariant_error("parent is not a neighbour");
        t.children[parent[v]].push_back(v);
    }
    std::vector<int> q{root};
    t.depth[root] = 0;
    for (size_t h = 0; h < q.size(); ++h)
        for (int w : t.children[q[h]]) {
            t.depth[w] = t.depth[q[h]] + 1;
            q.push_back(w);
        }
    if (static_cast<int>(q.size()) != g.n) throw invariant_error("parent array is not a spanning tree");
    for (int v = 0; v < g.n; ++v) {
        int ref = ref_of(g, t, v);
        if (ref < 0) continue;
        std::sort(t.children[v].begin(), t.children[v].end(), [&](int a, int b) {
            return key_at(g, ref, PlaneGraph::rev(t.parent_dart[a])) < key_at(g, ref, PlaneGraph::rev(t.parent_dart[b]));
        });
    }
    return t;
}

void check_bfs_tree(const PlaneGraph& g, const BfsTree& t) {
    auto dist = bfs_layering(g, t.root);
    for (int v = 0; v < g.n; ++v) {
        if (t.depth[v] != dist[v]) throw invariant_error("tree depth differs from BFS distance");
        if (v == t.root) continue;
        int d = t.parent_dart[v];
        if (d < 0 || g.tail(d) != v || g.head(d) != t.parent[v]) throw invariant_error("bad parent dart");
        if (t.depth[t.parent[v]] != t.depth[v] - 1) throw invariant_error("parent not one layer up");
    }
}

bool is_left_of(const PlaneGraph& g, const BfsTree& t, int u, int v) {
    std::vector<int> pu{u}, pv{v};
    while (t.parent[pu.back()] >= 0) pu.push_back(t.parent[pu.back()]);
    while (t.parent[pv.back()] >= 0) pv.push_back(t.parent[pv.back()]);
    int i = static_cast<int>(pu.size()) - 1, j = static_cast<int>(pv.size()) - 1;
    while (i > 0 && j > 0 && pu[i - 1] == pv[j - 1]) --i, --j;
    if (i == 0 || j == 0) throw invariant_error("vertices lie on a common vertical path");
    int lca = pu[i];
    int ref = ref_of(g, t, lca);
    int fu = PlaneGraph::rev(t.parent_dart[pu[i - 1]]);
    int fv = PlaneGraph::rev(t.parent_dart[pv[j - 1]]);
    return key_at(g, ref, fu) < key_at(g, ref, fv);
}

std::optional<std::pair<int, int>> check_left_aligned(const PlaneGraph& g, const BfsTree& t) {
    check_bfs_tree(g, t);
    TreeIndex ix(g, t);
    for (int e = 0; e < g.m(); ++e) {
        int a = g.edges[e][0], b = g.edges[e][1];
        if (t.depth[a] == t.depth[b]) continue;
        int u = t.depth[a] < t.depth[b] ? a : b;
        int v = u == a ? b : a;
        if ((t.parent_dart[v] >> 1) == e) continue;
        if (ix.is_ancestor(u, v)) continue;
        if (ix.tin[u] < ix.tin[v]) return std::make_pair(u, v);
    }
    return std::nullopt;
}

std::vector<int> vertical_path(const BfsTree& t, int v, const std::function<bool(int)>& stop) {
    std::vector<int> p{v};
    while (!stop(p.back()) && t.parent[p.back()] >= 0) p.push_back(t.parent[p.back()]);
    return p;
}

TreeIndex::TreeIndex(const PlaneGraph& g_, const BfsTree& t_) : g(g_), t(t_) {
    int n = g.n;
    tin.assign(n, 0);
    tout.assign(n, 0);
    sz.assign(n, 1);
    int maxd = 0;
    for (int v = 0; v < n; ++v) maxd = std::max(maxd, t.depth[v]);
    by_depth_tin_.assign(maxd + 1, {});
    by_depth_v_.assign(maxd + 1, {});
    std::vector<int> order;
    order.reserve(n);
    std::vector<std::pair<int, int>> st{{t.root, 0}};
    int timer = 0;
    tin[t.root] = timer++;
    order.push_back(t.root);
    while (!st.empty()) {
        auto& [v, i] = st.back();
        if (i < static_cast<int>(t.children[v].size())) {
            int w = t.children[v][i++];
            tin[w] = timer++;
            order.push_back(w);
            st.push_back({w, 0});
        } else {
            tout[v] = timer - 1;
            st.pop_back();
        }
    }
    for (int k = n - 1; k >= 0; --k) {
        int v = order[k];
        if (t.parent[v] >= 0) sz[t.parent[v]] += sz[v];
    }
    for (int v : order) {
        by_depth_tin_[t.depth[v]].push_back(tin[v]);
        by_depth_v_[t.depth[v]].push_back(v);
    }
    off_.assign(n + 1, 0);
    for (int v = 0; v < n; ++v) off_[v + 1] = off_[v] + g.degree(v) + 1;
    pre_.assign(off_[n], 0);
    for (int v = 0; v < n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            int d = g.rot[v][i];
            int w = g.head(d);
            long mass = (t.parent_dart[w] == PlaneGraph::rev(d)) ? sz[w] : 0;
            pre_[off_[v] + i + 1] = pre_[off_[v] + i] + mass;
        }
    prw_.assign(n, 0);
    plw_.assign(n, 0);
    for (int v : order) {
        int p = t.parent[v];
        if (p < 0) continue;
        long rw = 0, lw = 0;
        if (p != t.root) {
            rw = wedge(down_dart(v), up_dart(p));
            lw = wedge(up_dart(p), down_dart(v));
        }
        prw_[v] = prw_[p] + rw;
        plw_[v] = plw_[p] + lw;
    }
}

int TreeIndex::anc(int v, int d) const {
    const auto& ts = by_depth_tin_[d];
    auto it = std::upper_bound(ts.begin(), ts.end(), tin[v]);
    return by_depth_v_[d][it - ts.begin() - 1];
}

int TreeIndex::lca(int a, int b) const {
    if (is_ancestor(a, b)) return a;
    if (is_ancestor(b, a)) return b;
    int lo = 0, hi = std::min(depth(a), depth(b));
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (is_ancestor(anc(a, mid), b))
            lo = mid;
        else
            hi = mid - 1;
    }
    return anc(a, lo);
}

long TreeIndex::wedge(int a, int b) const {
    int v = g.tail(a);
    const long* p = pre_.data() + off_[v];
    int ia = g.pos[a], ib = g.pos[b], deg = g.degree(v);
    if (ia < ib) return p[ib] - p[ia + 1];
    if (ia > ib) return p[deg] - p[ia + 1] + p[ib];
    return p[deg] - (p[ia + 1] - p[ia]);
}

long TreeIndex::wrapped_interior(int ld, int sd) const {
    int l = g.tail(ld), r = g.head(ld);
    int u = anc(l, sd);
    int cl = anc(l, sd + 1), cr = anc(r, sd + 1);
    long c = wedge(down_dart(cl), down_dart(cr));
    c += prw(l) - prw(cl);
    c += plw(r) - plw(cr);
    c += wedge(ld, up_dart(l));
    c += wedge(up_dart(r), PlaneGraph::rev(ld));
    (void)u;
    return c;
}

}  // namespace tww
