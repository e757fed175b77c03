#include "tww/plane_graph.hpp"

#include <algorithm>
#include <numeric>

namespace tww {

PlaneGraph build(int n, const std::vector<std::array<int, 2>>& edges,
                 const std::vector<std::vector<int>>& rotations, int outer_edge, int outer_vertex) {
    PlaneGraph g;
    g.n = n;
    g.edges = edges;
    int m = static_cast<int>(edges.size());
    for (auto& e : edges) {
        if (e[0] < 0 || e[0] >= n || e[1] < 0 || e[1] >= n)
            throw invariant_error("edge endpoint out of range");
        if (e[0] == e[1]) throw invariant_error("loop edge at vertex " + std::to_string(e[0]));
    }
    if (static_cast<int>(rotations.size()) != n) throw invariant_error("rotation count differs from n");
    g.rot.assign(n, {});
    g.pos.assign(2 * m, -1);
    for (int v = 0; v < n; ++v) {
        for (int e : rotations[v]) {
            if (e < 0 || e >= m) throw invariant_error("rotation of " + std::to_string(v) + " names unknown edge");
            int d;
            if (edges[e][0] == v)
                d = 2 * e;
            else if (edges[e][1] == v)
                d = 2 * e + 1;
            else
                throw invariant_error("edge " + std::to_string(e) + " not incident to " + std::to_string(v));
            if (g.pos[d] >= 0) throw invariant_error("dart of edge " + std::to_string(e) + " repeated at " + std::to_string(v));
            g.pos[d] = static_cast<int>(g.rot[v].size());
            g.rot[v].push_back(d);
        }
    }
    for (int d = 0; d < 2 * m; ++d)
        if (g.pos[d] < 0) throw invariant_error("dart of edge " + std::to_string(d / 2) + " missing from rotation");
    if (m > 0) {
        if (outer_edge < 0 || outer_edge >= m) throw invariant_error("outer edge out of range");
        if (edges[outer_edge][0] == outer_vertex)
            g.outer = 2 * outer_edge;
        else if (edges[outer_edge][1] == outer_vertex)
            g.outer = 2 * outer_edge + 1;
        else
            throw invariant_error("outer vertex not on outer edge");
    }
    validate(g);
    return g;
}

int face_ids(const PlaneGraph& g, std::vector<int>& fid) {
    fid.assign(2 * g.m(), -1);
    int f = 0;
    for (int d = 0; d < 2 * g.m(); ++d) {
        if (fid[d] >= 0) continue;
        int x = d;
        do {
            fid[x] = f;
            x = g.face_next(x);
        } while (x != d);
        ++f;
    }
    return f;
}

std::vector<Face> faces(const PlaneGraph& g) {
    std::vector<int> fid;
    std::vector<Face> out;
    fid.assign(2 * g.m(), -1);
    for (int d = 0; d < 2 * g.m(); ++d) {
        if (fid[d] >= 0) continue;
        Face f;
        int x = d;
        do {
            fid[x] = static_cast<int>(out.size());
            f.darts.push_back(x);
            if (x == g.outer) f.outer = true;
            x = g.face_next(x);
        } while (x != d);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<int> components(const PlaneGraph& g, int& count) {
    std::vector<int> comp(g.n, -1);
    count = 0;
    std::vector<int> stack;
    for (int s = 0; s < g.n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = count;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int d : g.rot[v]) {
                int w = g.head(d);
                if (comp[w] < 0) {
                    comp[w] = count;
                    stack.push_back(w);
                }
            }
        }
        ++count;
    }
    return comp;
}

void validate(const PlaneGraph& g) {
    int m = g.m();
    if (static_cast<int>(g.rot.size()) != g.n || static_cast<int>(g.pos.size()) != 2 * m)
        throw invariant_error("rotation arrays have wrong size");
    std::vector<char> seen(2 * m, 0);
    for (int v = 0; v < g.n; ++v)
        for (int i = 0; i < g.degree(v); ++i) {
            int d = g.rot[v][i];
            if (d < 0 || d >= 2 * m || seen[d] || g.tail(d) != v || g.pos[d] != i)
                throw invariant_error("inconsistent rotation at vertex " + std::to_string(v));
            seen[d] = 1;
        }
    for (int d = 0; d < 2 * m; ++d)
        if (!seen[d]) throw invariant_error("dart missing from rotations");
    for (auto& e : g.edges)
        if (e[0] == e[1]) throw invariant_error("loop edge");
    if (m > 0 && (g.outer < 0 || g.outer >= 2 * m)) throw invariant_error("outer dart missing");
    int cc = 0;
    auto comp = components(g, cc);
    std::vector<long> vc(cc, 0), ec(cc, 0), fc(cc, 0);
    for (int v = 0; v < g.n; ++v) ++vc[comp[v]];
    for (auto& e : g.edges) ++ec[comp[e[0]]];
    std::vector<int> fid;
    int nf = face_ids(g, fid);
    std::vector<int> first(nf, -1);
    for (int d = 0; d < 2 * m; ++d)
        if (first[fid[d]] < 0) {
            first[fid[d]] = d;
            ++fc[comp[g.tail(d)]];
        }
    for (int c = 0; c < cc; ++c) {
        long f = ec[c] == 0 ? 1 : fc[c];
        if (vc[c] - ec[c] + f != 2)
            throw invariant_error("Euler formula fails (V-E+F = " + std::to_string(vc[c] - ec[c] + f) +
                                  "), rotation system is not planar");
    }
}

bool is_simple(const PlaneGraph& g) {
    std::vector<int> mark(g.n, -1);
    for (int v = 0; v < g.n; ++v)
        for (int d : g.rot[v]) {
            int w = g.head(d);
            if (w == v || mark[w] == v) return false;
            mark[w] = v;
        }
    return true;
}

std::vector<std::vector<int>> adjacency(const PlaneGraph& g) {
    std::vector<std::vector<int>> adj(g.n);
    for (auto& e : g.edges) {
        adj[e[0]].push_back(e[1]);
        adj[e[1]].push_back(e[0]);
    }
    return adj;
}

std::vector<int> two_colouring(const PlaneGraph& g, std::vector<int>* odd_cycle) {
    std::vector<int> col(g.n, -1), par(g.n, -1), q;
    for (int s = 0; s < g.n; ++s) {
        if (col[s] >= 0) continue;
        col[s] = 0;
        q.assign(1, s);
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            for (int d : g.rot[v]) {
                int w = g.head(d);
                if (col[w] < 0) {
                    col[w] = col[v] ^ 1;
                    par[w] = v;
                    q.push_back(w);
                } else if (col[w] == col[v]) {
                    if (odd_cycle) {
                        std::vector<int> a{v}, b{w};
                        std::vector<char> on(g.n, 0);
                        for (int x = v; par[x] >= 0; x = par[x]) a.push_back(par[x]);
                        for (int x : a) on[x] = 1;
                        while (!on[b.back()]) b.push_back(par[b.back()]);
                        int top = b.back();
                        odd_cycle->clear();
                        for (int x : a) {
                            odd_cycle->push_back(x);
                            if (x == top) break;
                        }
                        for (int i = static_cast<int>(b.size()) - 2; i >= 0; --i) odd_cycle->push_back(b[i]);
                    }
                    return {};
                }
            }
        }
    }
    return col;
}

bool all_faces_simple_of_length(const PlaneGraph& g, int len) {
    std::vector<int> mark(g.n, -1);
    int k = 0;
    for (auto& f : faces(g)) {
        if (static_cast<int>(f.darts.size()) != len) return false;
        for (int d : f.darts) {
            if (mark[g.tail(d)] == k) return false;
            mark[g.tail(d)] = k;
        }
        ++k;
    }
    return true;
}

bool has_cut_vertex(const PlaneGraph& g) {
    if (g.n <= 2) return false;
    std::vector<int> tin(g.n, -1), low(g.n, 0), it(g.n, 0), par(g.n, -1);
    int timer = 0;
    for (int s = 0; s < g.n; ++s) {
        if (tin[s] >= 0) continue;
        int root_children = 0;
        std::vector<int> st{s};
        tin[s] = low[s] = timer++;
        while (!st.empty()) {
            int v = st.back();
            if (it[v] < g.degree(v)) {
                int w = g.head(g.rot[v][it[v]++]);
                if (tin[w] < 0) {
                    par[w] = v;
                    tin[w] = low[w] = timer++;
                    if (v == s) ++root_children;
                    st.push_back(w);
                } else if (w != par[v]) {
                    low[v] = std::min(low[v], tin[w]);
                }
            } else {
                st.pop_back();
                int p = par[v];
                if (p >= 0) {
                    low[p] = std::min(low[p], low[v]);
                    if (p != s && low[v] >= tin[p]) return true;
                }
            }
        }
        if (root_children > 1) return true;
    }
    return false;
}

EmbedBuilder::EmbedBuilder(const PlaneGraph& g) : n_(g.n), ends_(g.edges) {
    nxt_.resize(2 * g.m());
    prv_.resize(2 * g.m());
    first_.assign(g.n, -1);
    for (int v = 0; v < g.n; ++v) {
        if (g.rot[v].empty()) continue;
        first_[v] = g.rot[v][0];
        for (int d : g.rot[v]) {
            nxt_[d] = g.ccw_next(d);
            prv_[d] = g.ccw_prev(d);
        }
    }
}

int EmbedBuilder::add_vertex() {
    first_.push_back(-1);
    return n_++;
}

int EmbedBuilder::add_edge(int u, int du, int v, int dv) {
    int e = static_cast<int>(ends_.size());
    ends_.push_back({u, v});
    nxt_.resize(2 * e + 2);
    prv_.resize(2 * e + 2);
    auto place = [&](int x, int d, int after) {
        if (after < 0) {
            if (first_[x] >= 0) throw invariant_error("dart placement needs a reference dart");
            first_[x] = d;
            nxt_[d] = prv_[d] = d;
            return;
        }
        int nx = nxt_[after];
        nxt_[d] = nx;
        prv_[nx] = d;
        nxt_[after] = d;
        prv_[d] = after;
    };
    place(u, 2 * e, du);
    place(v, 2 * e + 1, dv);
    return e;
}

std::vector<int> EmbedBuilder::face_walk(int d) const {
    std::vector<int> w;
    int x = d;
    do {
        w.push_back(x);
        x = face_next(x);
    } while (x != d);
    return w;
}

PlaneGraph EmbedBuilder::finish(int outer) const {
    PlaneGraph g;
    g.n = n_;
    g.edges = ends_;
    g.rot.assign(n_, {});
    g.pos.assign(nxt_.size(), -1);
    for (int v = 0; v < n_; ++v) {
        if (first_[v] < 0) continue;
        int d = first_[v];
        do {
            g.pos[d] = static_cast<int>(g.rot[v].size());
            g.rot[v].push_back(d);
            d = nxt_[d];
        } while (d != first_[v]);
    }
    g.outer = outer;
    return g;
}

namespace {

VertexMap identity_map(int n) {
    VertexMap vm;
    vm.old_to_new.resize(n);
    std::iota(vm.old_to_new.begin(), vm.old_to_new.end(), 0);
    return vm;
}

void fill_added(VertexMap& vm, int from, int to) {
    for (int v = from; v < to; ++v) vm.added.push_back(v);
}

std::vector<std::vector<int>> face_walks(const PlaneGraph& g) {
    std::vector<std::vector<int>> out;
    for (auto& f : faces(g)) out.push_back(std::move(f.darts));
    return out;
}

bool walk_is_simple(const PlaneGraph& g, const std::vector<int>& w, std::vector<int>& mark, int stamp) {
    for (int d : w) {
        if (mark[g.tail(d)] == stamp) return false;
        mark[g.tail(d)] = stamp;
    }
    return true;
}

void require_simple_connected(const PlaneGraph& g) {
    if (!is_simple(g)) throw invariant_error("input graph is not simple");
    int cc = 0;
    components(g, cc);
    if (cc > 1) throw invariant_error("input graph is disconnected");
}

PlaneGraph cycle_graph(int k) {
    std::vector<std::array<int, 2>> e;
    std::vector<std::vector<int>> r(k);
    for (int i = 0; i < k; ++i) {
        e.push_back({i, (i + 1) % k});
        r[i] = {i, (i + k - 1) % k};
    }
    return build(k, e, r, 0, 0);
}

}  // namespace

std::pair<PlaneGraph, VertexMap> connect_components(const PlaneGraph& g) {
    int cc = 0;
    auto comp = components(g, cc);
    VertexMap vm = identity_map(g.n);
    if (cc <= 1) return {g, vm};
    int main_comp = g.outer >= 0 ? comp[g.tail(g.outer)] : comp[0];
    std::vector<int> rep(cc, -1);
    for (int v = 0; v < g.n; ++v)
        if (rep[comp[v]] < 0) rep[comp[v]] = v;
    EmbedBuilder b(g);
    int a = rep[main_comp];
    int da = g.outer;
    if (da >= 0) a = g.tail(da);
    int outer = g.outer;
    for (int c = 0; c < cc; ++c) {
        if (c == main_comp) continue;
        int v = rep[c];
        int w = b.add_vertex();
        int e1 = b.add_edge(a, da, w, -1);
        if (da < 0) {
            da = 2 * e1;
            outer = da;
        }
        int dv = g.rot[v].empty() ? -1 : g.rot[v][0];
        b.add_edge(v, dv, w, 2 * e1 + 1);
    }
    fill_added(vm, g.n, b.vertex_count());
    return {b.finish(outer), vm};
}

std::pair<PlaneGraph, VertexMap> triangulate(const PlaneGraph& g0) {
    require_simple_connected(g0);
    VertexMap vm = identity_map(g0.n);
    if (g0.m() == 0) {
        if (g0.n != 1) throw invariant_error("empty graph cannot be triangulated");
        fill_added(vm, 1, 3);
        return {cycle_graph(3), vm};
    }
    EmbedBuilder b(g0);
    std::vector<int> mark(g0.n, -1);
    int stamp = 0;
    for (auto& w : face_walks(g0)) {
        int len = static_cast<int>(w.size());
        bool simple = walk_is_simple(g0, w, mark, stamp++);
        if (simple && len == 3) continue;
        if (simple) {
            int y = b.add_vertex();
            int last = -1;
            for (int d : w) last = 2 * b.add_edge(g0.tail(d), d, y, last) + 1;
            continue;
        }
        std::vector<int> x(len), A(len), B(len), R(len);
        for (int i = 0; i < len; ++i) x[i] = b.add_vertex();
        for (int i = 0; i < len; ++i) A[i] = b.add_edge(g0.tail(w[i]), w[i], x[i], -1);
        for (int i = 0; i < len; ++i) {
            int j = (i + 1) % len;
            B[i] = b.add_edge(g0.tail(w[j]), 2 * A[j], x[i], 2 * A[i] + 1);
        }
        for (int i = 0; i < len; ++i) {
            int j = (i + 1) % len;
            R[i] = b.add_edge(x[i], 2 * B[i] + 1, x[j], b.ccw_prev(2 * A[j] + 1));
        }
        int y = b.add_vertex();
        int last = -1;
        for (int i = 0; i < len; ++i) last = 2 * b.add_edge(x[i], 2 * R[i], y, last) + 1;
    }
    fill_added(vm, g0.n, b.vertex_count());
    auto g = b.finish(g0.outer);
    validate(g);
    return {g, vm};
}

std::pair<PlaneGraph, VertexMap> quadrangulate(const PlaneGraph& g0) {
    require_simple_connected(g0);
    std::vector<int> odd;
    if (two_colouring(g0, &odd).empty()) {
        std::string s;
        for (int v : odd) s += " " + std::to_string(v);
        throw invariant_error("graph is not bipartite, odd cycle:" + s);
    }
    VertexMap vm = identity_map(g0.n);
    if (g0.m() == 0) {
        if (g0.n != 1) throw invariant_error("empty graph cannot be quadrangulated");
        fill_added(vm, 1, 4);
        return {cycle_graph(4), vm};
    }
    EmbedBuilder b(g0);
    std::vector<int> mark(g0.n, -1);
    int stamp = 0;
    for (auto& w : face_walks(g0)) {
        int len = static_cast<int>(w.size());
        bool simple = walk_is_simple(g0, w, mark, stamp++);
        if (simple && len == 4) continue;
        if (len == 2) {
            int x = b.add_vertex(), y = b.add_vertex();
            int e1 = b.add_edge(g0.tail(w[0]), w[0], x, -1);
            int e2 = b.add_edge(x, 2 * e1 + 1, y, -1);
            b.add_edge(g0.tail(w[1]), w[1], y, 2 * e2 + 1);
            continue;
        }
        std::vector<int> x(len), A(len), R(len);
        for (int i = 0; i < len; ++i) x[i] = b.add_vertex();
        for (int i = 0; i < len; ++i) A[i] = b.add_edge(g0.tail(w[i]), w[i], x[i], -1);
        for (int i = 0; i < len; ++i) {
            int j = (i + 1) % len;
            R[i] = b.add_edge(x[i], 2 * A[i] + 1, x[j], b.ccw_prev(2 * A[j] + 1));
        }
        int y = b.add_vertex();
        int last = -1;
        for (int i = 0; i < len; i += 2) last = 2 * b.add_edge(x[i], 2 * R[i], y, last) + 1;
    }
    fill_added(vm, g0.n, b.vertex_count());
    auto g = b.finish(g0.outer);
    validate(g);
    return {g, vm};
}

}  // namespace tww

#include <map>

namespace tww {

PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& face_cycles, int outer_face) {
    int F = static_cast<int>(face_cycles.size());
    std::map<std::pair<int, int>, std::vector<int>> uses;  // undirected edge -> faces
    for (int f = 0; f < F; ++f) {
        auto& c = face_cycles[f];
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            uses[{std::min(a, b), std::max(a, b)}].push_back(f);
        }
    }
    // orient every face like outer_face by propagating across shared edges
    std::vector<int> flip(F, -1);
    std::vector<int> q{outer_face};
    flip[outer_face] = 0;
    auto has_dart = [&](int f, int a, int b) {
        auto& c = face_cycles[f];
        for (size_t i = 0; i < c.size(); ++i)
            if (c[i] == a && c[(i + 1) % c.size()] == b) return true;
        return false;
    };
    for (size_t h = 0; h < q.size(); ++h) {
        int f = q[h];
        auto& c = face_cycles[f];
        for (size_t i = 0; i < c.size(); ++i) {
            int a = c[i], b = c[(i + 1) % c.size()];
            if (flip[f]) std::swap(a, b);
            for (int o : uses[{std::min(a, b), std::max(a, b)}]) {
                if (o == f || flip[o] >= 0) continue;
                flip[o] = has_dart(o, a, b) ? 1 : 0;
                q.push_back(o);
            }
        }
    }
    std::vector<std::array<int, 2>> edges;
    std::map<std::pair<int, int>, int> eid;
    for (auto& [k, fs] : uses) {
        if (fs.size() != 2) throw invariant_error("face list does not describe a closed surface");
        eid[k] = static_cast<int>(edges.size());
        edges.push_back({k.first, k.second});
    }
    auto dart = [&](int a, int b) {
        int e = eid.at({std::min(a, b), std::max(a, b)});
        return edges[e][0] == a ? 2 * e : 2 * e + 1;
    };
    // corner (a, v, b) on a face with v->b on the left: ccw_next(v->b) = v->a
    std::vector<int> nxt(2 * edges.size(), -1);
    for (int f = 0; f < F; ++f) {
        std::vector<int> c = face_cycles[f];
        if (flip[f] < 0) throw invariant_error("face list is not connected");
        if (flip[f]) std::reverse(c.begin(), c.end());
        int k = static_cast<int>(c.size());
        for (int i = 0; i < k; ++i) {
            int a = c[(i + k - 1) % k], v = c[i], b = c[(i + 1) % k];
            nxt[dart(v, b)] = dart(v, a);
        }
    }
    std::vector<std::vector<int>> rot(n);
    std::vector<char> seen(nxt.size(), 0);
    for (int v = 0; v < n; ++v) {
        int start = -1;
        for (int d = 0; d < static_cast<int>(nxt.size()); ++d)
            if (edges[d >> 1][d & 1] == v) {
                start = d;
                break;
            }
        if (start < 0) continue;
        int d = start;
        do {
            if (seen[d]) throw invariant_error("vertex is not a disc in the face list");
            seen[d] = 1;
            rot[v].push_back(d >> 1);
            d = nxt[d];
        } while (d != start);
    }
    auto& oc = face_cycles[outer_face];
    return build(n, edges, rot, eid.at({std::min(oc[0], oc[1]), std::max(oc[0], oc[1])}), oc[0]);
}

PlaneGraph plane_subgraph(const PlaneGraph& g, const std::vector<char>& keep_vertex,
                          const std::vector<char>& keep_edge, std::vector<int>* vertex_ids) {
    std::vector<int> vmap(g.n, -1), emap(g.m(), -1);
    int n = 0;
    for (int v = 0; v < g.n; ++v)
        if (keep_vertex[v]) {
            vmap[v] = n++;
            if (vertex_ids) vertex_ids->push_back(v);
        }
    std::vector<std::array<int, 2>> edges;
    for (int e = 0; e < g.m(); ++e)
        if (keep_edge[e] && vmap[g.edges[e][0]] >= 0 && vmap[g.edges[e][1]] >= 0) {
            emap[e] = static_cast<int>(edges.size());
            edges.push_back({vmap[g.edges[e][0]], vmap[g.edges[e][1]]});
        }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < g.n; ++v) {
        if (vmap[v] < 0) continue;
        for (int d : g.rot[v])
            if (emap[d >> 1] >= 0) rot[vmap[v]].push_back(emap[d >> 1]);
    }
    int oe = -1, ov = -1;
    if (g.outer >= 0 && emap[g.outer >> 1] >= 0) {
        oe = emap[g.outer >> 1];
        ov = vmap[g.tail(g.outer)];
    } else if (!edges.empty()) {
        oe = 0;
        ov = edges[0][0];
    }
    return build(n, edges, rot, oe, ov);
}

}  // namespace tww

namespace tww {
int face_count(const PlaneGraph& g) {
    std::vector<int> fid;
    int f = face_ids(g, fid);
    for (int v = 0; v < g.n; ++v)
        if (g.rot[v].empty()) ++f;
    return f;
}
}  // namespace tww
