#include "tww/skeletal.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace tww {

namespace {
using EdgeKey = std::pair<int, int>;
EdgeKey key(int a, int b) { return a < b ? EdgeKey{a, b} : EdgeKey{b, a}; }

std::set<EdgeKey> edge_set(const std::vector<int>& c) {
    std::set<EdgeKey> s;
    for (size_t i = 0; i < c.size(); ++i) s.insert(key(c[i], c[(i + 1) % c.size()]));
    return s;
}

void toggle(std::set<EdgeKey>& s, const std::set<EdgeKey>& t) {
    for (auto& e : t)
        if (!s.erase(e)) s.insert(e);
}

bool is_tree_edge(const BfsTree& t, int a, int b) { return t.parent[a] == b || t.parent[b] == a; }

int s_dart_before(const PlaneGraph& g, const Skeleton& s, int d) {
    int x = d;
    for (int i = 0; i < g.degree(g.tail(d)); ++i) {
        x = g.ccw_prev(x);
        if (s.edge_in[x >> 1]) return x;
    }
    return -1;
}

int find_dart(const PlaneGraph& g, int a, int b) {
    for (int d : g.rot[a])
        if (g.head(d) == b) return d;
    return -1;
}
}  // namespace

std::vector<std::array<int, 2>> cycle_edges(const std::vector<int>& c) {
    std::vector<std::array<int, 2>> out;
    for (size_t i = 0; i < c.size(); ++i) out.push_back({c[i], c[(i + 1) % c.size()]});
    return out;
}

std::vector<int> cycle_from_edges(const std::vector<std::array<int, 2>>& edges) {
    if (edges.size() < 3) return {};
    std::map<int, std::vector<int>> nb;
    for (auto& e : edges) {
        nb[e[0]].push_back(e[1]);
        nb[e[1]].push_back(e[0]);
    }
    for (auto& [v, l] : nb)
        if (l.size() != 2) return {};
    std::vector<int> c{edges[0][0]};
    int prev = -1, cur = edges[0][0];
    while (true) {
        auto& l = nb[cur];
        int nxt = l[0] == prev ? l[1] : l[0];
        if (nxt == c[0]) break;
        c.push_back(nxt);
        prev = cur;
        cur = nxt;
        if (c.size() > nb.size()) return {};
    }
    if (c.size() != nb.size()) return {};
    return c;
}

Skeleton skeleton_of_edges(const PlaneGraph& g, const std::vector<char>& edge_in) {
    Skeleton s;
    s.edge_in = edge_in;
    s.vertex_in.assign(g.n, 0);
    for (int e = 0; e < g.m(); ++e)
        if (edge_in[e]) s.vertex_in[g.edges[e][0]] = s.vertex_in[g.edges[e][1]] = 1;
    return s;
}

Skeleton skeleton_of_cycles(const PlaneGraph& g, const std::vector<std::vector<int>>& cycles) {
    std::set<EdgeKey> want;
    for (auto& c : cycles)
        for (auto& e : edge_set(c)) want.insert(e);
    std::vector<char> in(g.m(), 0);
    for (int e = 0; e < g.m(); ++e)
        if (want.count(key(g.edges[e][0], g.edges[e][1]))) in[e] = 1;
    return skeleton_of_edges(g, in);
}

std::vector<Bridge> bridges(const Trigraph& h, const std::vector<char>& in_s,
                            const std::vector<std::array<int, 2>>& s_edges) {
    std::set<EdgeKey> sk;
    for (auto& e : s_edges) sk.insert(key(e[0], e[1]));
    auto ids = h.live_ids();
    auto in = [&](int v) { return v < static_cast<int>(in_s.size()) && in_s[v]; };
    std::map<int, int> comp;
    std::vector<Bridge> out;
    for (int v : ids) {
        if (in(v) || comp.count(v)) continue;
        Bridge b;
        std::set<int> att;
        std::vector<int> q{v};
        comp[v] = static_cast<int>(out.size());
        for (size_t i = 0; i < q.size(); ++i) {
            for (auto& [w, c] : h.neighbours(q[i])) {
                (void)c;
                if (in(w)) {
                    att.insert(w);
                } else if (!comp.count(w)) {
                    comp[w] = static_cast<int>(out.size());
                    q.push_back(w);
                }
            }
        }
        std::sort(q.begin(), q.end());
        b.inner = q;
        b.attachments.assign(att.begin(), att.end());
        out.push_back(std::move(b));
    }
    for (int v : ids) {
        if (!in(v)) continue;
        for (auto& [w, c] : h.neighbours(v)) {
            (void)c;
            if (w <= v || !in(w) || sk.count(key(v, w))) continue;
            Bridge b;
            b.chord = {v, w};
            b.attachments = {v, w};
            out.push_back(std::move(b));
        }
    }
    return out;
}

SkeletonFaces skeleton_faces(const PlaneGraph& g, const Skeleton& s) {
    SkeletonFaces f;
    f.fid.assign(2 * g.m(), -1);
    for (int d = 0; d < 2 * g.m(); ++d) {
        if (!s.edge_in[d >> 1] || f.fid[d] >= 0) continue;
        int id = f.count();
        std::vector<int> cyc;
        int x = d;
        do {
            f.fid[x] = id;
            cyc.push_back(g.tail(x));
            x = s_dart_before(g, s, PlaneGraph::rev(x));
        } while (x != d);
        f.cycles.push_back(std::move(cyc));
    }
    return f;
}

Assignment natural_assignment(const PlaneGraph& g, const Skeleton& s) {
    Assignment a;
    a.faces = skeleton_faces(g, s);
    a.vertex_face.assign(g.n, -1);
    a.chord_face.assign(g.m(), -1);
    auto face_at = [&](int d) {
        int x = s_dart_before(g, s, d);
        return x < 0 ? -1 : a.faces.fid[x];
    };
    std::vector<char> seen(g.n, 0);
    for (int v = 0; v < g.n; ++v) {
        if (s.vertex_in[v] || seen[v]) continue;
        std::vector<int> q{v};
        seen[v] = 1;
        int face = -1;
        for (size_t i = 0; i < q.size(); ++i)
            for (int d : g.rot[q[i]]) {
                int w = g.head(d);
                if (s.vertex_in[w]) {
                    int f = face_at(PlaneGraph::rev(d));
                    if (face >= 0 && f != face) throw invariant_error("bridge touches two skeleton faces");
                    face = f;
                } else if (!seen[w]) {
                    seen[w] = 1;
                    q.push_back(w);
                }
            }
        for (int w : q) a.vertex_face[w] = face;
    }
    for (int e = 0; e < g.m(); ++e) {
        if (s.edge_in[e] || !s.vertex_in[g.edges[e][0]] || !s.vertex_in[g.edges[e][1]]) continue;
        int f0 = face_at(2 * e), f1 = face_at(2 * e + 1);
        if (f0 != f1) throw invariant_error("chord touches two skeleton faces");
        a.chord_face[e] = f0;
    }
    return a;
}

bool check_s_aware(std::vector<int>& vertex_face, const Step& step) {
    auto face = [&](int v) { return v >= 0 && v < static_cast<int>(vertex_face.size()) ? vertex_face[v] : -1; };
    if (step.kind == StepKind::decrease) return face(step.x) >= 0;
    int fx = face(step.x), fy = face(step.y);
    if (fx < 0 || fy < 0 || fx != fy) return false;
    if (step.z >= static_cast<int>(vertex_face.size())) vertex_face.resize(step.z + 1, -1);
    vertex_face[step.z] = fx;
    return true;
}

WrappedFace wrapped_info(const PlaneGraph& g, const BfsTree& t, const std::vector<int>& c) {
    int k = static_cast<int>(c.size());
    if (k < 3) throw invariant_error("cycle too short");
    int lid_at = -1;
    for (int i = 0; i < k; ++i) {
        if (is_tree_edge(t, c[i], c[(i + 1) % k])) continue;
        if (lid_at >= 0) throw invariant_error("cycle has two non-tree edges");
        lid_at = i;
    }
    if (lid_at < 0) throw invariant_error("cycle has no lid");
    WrappedFace wf;
    int a = c[lid_at], b = c[(lid_at + 1) % k];
    std::vector<int> walk;  // b .. a avoiding the lid
    for (int i = 1; i <= k; ++i) walk.push_back(c[(lid_at + i) % k]);
    int si = 0;
    for (int i = 0; i < k; ++i)
        if (t.depth[walk[i]] < t.depth[walk[si]]) si = i;
    for (int i = 0; i < k; ++i)
        if (i != si && t.depth[walk[i]] == t.depth[walk[si]]) throw invariant_error("sink is not unique");
    std::vector<int> to_b(walk.begin(), walk.begin() + si + 1);  // b .. sink
    std::reverse(to_b.begin(), to_b.end());
    std::vector<int> to_a(walk.begin() + si, walk.end());  // sink .. a
    for (auto* p : {&to_a, &to_b})
        for (size_t i = 1; i < p->size(); ++i)
            if (t.parent[(*p)[i]] != (*p)[i - 1]) throw invariant_error("wrapping path is not vertical");
    wf.sink = walk[si];
    bool a_left = is_left_of(g, t, a, b);
    wf.lid = a_left ? std::array<int, 2>{a, b} : std::array<int, 2>{b, a};
    wf.left_path = a_left ? to_a : to_b;
    wf.right_path = a_left ? to_b : to_a;
    wf.boundary = c;
    return wf;
}

bool is_k_reduced(const Trigraph& h, const std::vector<int>& face_vertices, int k) {
    std::map<int, int> cnt;
    for (int v : face_vertices)
        if (h.live(v) && ++cnt[h.level(v)] > k) return false;
    return true;
}

bool is_maximally_k_reduced(const Trigraph& h, const std::vector<int>& face_vertices,
                            const std::vector<int>& boundary, int k) {
    if (!is_k_reduced(h, face_vertices, k)) return false;
    int m = -1;
    for (int v : boundary) m = std::max(m, h.level(v));
    if (boundary.size() == 3) ++m;
    for (int v : face_vertices)
        if (h.live(v) && h.level(v) > m) return false;
    return true;
}

VhCheck validate_vh_division(const PlaneGraph& g, const Skeleton& s, const BfsTree& t,
                             const std::vector<int>& D, const std::vector<int>& C,
                             const std::vector<int>& B1, const std::vector<int>& B2) {
    auto fail = [](char cl, std::string why) { return VhCheck{false, cl, std::move(why)}; };
    auto in_s = [&](const std::vector<int>& c) {
        for (size_t i = 0; i < c.size(); ++i) {
            int d = find_dart(g, c[i], c[(i + 1) % c.size()]);
            if (d < 0 || !s.edge_in[d >> 1]) return false;
        }
        return true;
    };
    auto subset = [](const std::vector<int>& a, const std::vector<int>& b) {
        std::set<int> bs(b.begin(), b.end());
        for (int v : a)
            if (!bs.count(v)) return false;
        return true;
    };
    WrappedFace wd;
    try {
        wd = wrapped_info(g, t, D);
    } catch (const invariant_error& e) {
        return fail('a', std::string("D: ") + e.what());
    }
    for (auto* c : {&D, &C, &B1, &B2})
        if (!c->empty() && !in_s(*c)) return fail('a', "cycle not in the skeleton");
    auto sd = edge_set(C);
    if (!B1.empty()) toggle(sd, edge_set(B1));
    if (!B2.empty()) toggle(sd, edge_set(B2));
    if (sd != edge_set(D)) return fail('a', "symmetric difference differs from D");

    auto wrapped_nontriangle = [&](const std::vector<int>& b, WrappedFace& w, char cl,
                                   const char* name) -> std::optional<VhCheck> {
        try {
            w = wrapped_info(g, t, b);
        } catch (const invariant_error& e) {
            return fail(cl, std::string(name) + ": " + e.what());
        }
        if (b.size() == 3) return fail(cl, std::string(name) + " is a triangle");
        if (t.depth[w.lid[0]] != t.depth[w.lid[1]]) return fail(cl, std::string(name) + " lid is not horizontal");
        return std::nullopt;
    };
    auto faces = skeleton_faces(g, s);
    // the face must be the one on the interior side, left of the lid
    auto is_face = [&](const std::vector<int>& c) {
        auto es = edge_set(c);
        WrappedFace w;
        try {
            w = wrapped_info(g, t, c);
        } catch (const invariant_error&) {
            for (auto& f : faces.cycles)
                if (f.size() == c.size() && edge_set(f) == es) return true;
            return false;
        }
        auto& f = faces.cycles[faces.fid[find_dart(g, w.lid[0], w.lid[1])]];
        return f.size() == c.size() && edge_set(f) == es;
    };
    if (!B1.empty()) {
        WrappedFace w1;
        if (auto r = wrapped_nontriangle(B1, w1, 'b', "B1")) return *r;
        if (!is_face(B1)) return fail('b', "B1 is not a skeleton face");
        if (w1.sink != wd.sink) return fail('b', "B1 sink differs from D sink");
        if (!subset(w1.left_path, wd.left_path) || !subset(w1.right_path, wd.right_path))
            return fail('b', "B1 wrapping paths leave D");
    }
    if (B2.empty()) {
        if (!is_face(C)) return fail('c', "C is not a skeleton face");
        return {};
    }
    WrappedFace w2;
    if (auto r = wrapped_nontriangle(B2, w2, 'd', "B2")) return *r;
    if (!is_face(B2)) return fail('d', "B2 is not a skeleton face");
    if (!B1.empty()) {
        auto e1 = edge_set(B1);
        for (auto& e : edge_set(B2))
            if (e1.count(e)) return fail('d', "B1 and B2 share an edge");
    }
    if (!subset(w2.left_path, wd.left_path)) return fail('d', "B2 left path leaves P1");
    int v1 = wd.lid[0], v2 = wd.lid[1];
    int ld = find_dart(g, v1, v2);
    int f = faces.fid[ld];
    if (faces.cycles[f].size() != 3) return fail('d', "skeleton face at the lid is not a triangle");
    int v0 = -1;
    for (int x : faces.cycles[f])
        if (x != v1 && x != v2) v0 = x;
    if (g.head(g.face_next(g.face_next(ld))) != v1 || g.head(g.face_next(ld)) != v0)
        return fail('d', "face (v1,v2,v0) is not empty");
    std::set<int> dv(D.begin(), D.end());
    if (dv.count(v0)) return fail('d', "v0 lies on D");
    std::vector<int> p0{v0};
    while (!dv.count(p0.back())) {
        if (t.parent[p0.back()] < 0) return fail('d', "P0 does not reach D");
        p0.push_back(t.parent[p0.back()]);
    }
    std::vector<int> p0p2 = p0;
    p0p2.insert(p0p2.end(), wd.right_path.begin(), wd.right_path.end());
    if (!subset(w2.right_path, p0) && !(B1.empty() && subset(w2.right_path, p0p2)))
        return fail('d', "B2 right path leaves P0");
    if (std::find(p0.begin(), p0.end() - 1, w2.lid[1]) == p0.end() - 1) return fail('d', "B2 lid misses P0");
    // skeleton edges inside D
    std::set<EdgeKey> dset = edge_set(D), inside;
    std::vector<char> seen(faces.count(), 0);
    std::vector<int> q{f};
    seen[f] = 1;
    for (size_t i = 0; i < q.size(); ++i) {
        int fc = q[i];
        for (int d = 0; d < 2 * g.m(); ++d) {
            if (faces.fid[d] != fc) continue;
            auto e = key(g.tail(d), g.head(d));
            inside.insert(e);
            if (dset.count(e)) continue;
            int o = faces.fid[PlaneGraph::rev(d)];
            if (!seen[o]) {
                seen[o] = 1;
                q.push_back(o);
            }
        }
    }
    std::set<EdgeKey> want = dset;
    for (auto& e : edge_set(C)) want.insert(e);
    for (size_t i = 1; i < p0.size(); ++i) want.insert(key(p0[i - 1], p0[i]));
    want.insert(key(v0, v1));
    want.insert(key(v0, v2));
    if (inside != want) return fail('d', "skeleton inside D is not D+C+P0+{v0v1,v0v2}");
    return {};
}

void assert_sink_black(const Trigraph& h, const WrappedFace& wf, const std::function<bool(int)>& assigned) {
    if (!h.live(wf.sink)) throw invariant_error("sink is not live");
    for (int y : h.red_neighbours(wf.sink))
        if (assigned(y))
            throw invariant_error("red edge between sink " + std::to_string(wf.sink) + " and " + std::to_string(y));
}

void assert_left_align_exclusion(const Trigraph& h, const WrappedFace& wf,
                                 const std::function<bool(int)>& inside) {
    if (!h.has_levels()) throw invariant_error("left-align exclusion needs levels");
    for (int x : wf.right_path) {
        if (!h.live(x)) continue;
        for (auto& [y, c] : h.neighbours(x)) {
            (void)c;
            if (h.level(y) == h.level(x) - 1 && inside(y))
                throw invariant_error("vertex " + std::to_string(y) + " reaches right path vertex " +
                                      std::to_string(x) + " from the level above");
        }
    }
}

}  // namespace tww
