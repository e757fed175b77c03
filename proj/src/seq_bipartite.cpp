#include "tww/seq_bipartite.hpp"

#include <algorithm>
#include <memory>

#include "step_mirror.hpp"

namespace tww {

Column bi_second_stage(ContractionSequence& seq, FaceColumn col, int lo, const StepHook& hook) {
    Column& one = col.one;
    for (auto it = col.two.rbegin(); it != col.two.rend(); ++it) {
        auto [lev, x] = *it;
        auto f = one.find(lev);
        if (f == one.end()) {
            one[lev] = x;
            continue;
        }
        if (lev <= lo) throw invariant_error("two interior vertices at the lowest level of a face");
        int z = seq.next_id();
        seq.contract(std::min(x, f->second), std::max(x, f->second));
        if (hook) hook(seq.steps.back());
        f->second = z;
    }
    return std::move(one);
}

namespace {

struct Lid {
    int l = -1, r = -1;
};

struct Frame {
    Lid c;
    int sd = 0;
    int phase = 0;  // 0 start, 1 after the single child, 2 after C1, 3 after C2
    int in = 0;
    Lid f1, f2;
    std::vector<int> extra;  // A vertices inside C (single child) or U3 (two children)
    Column col1;
};

class BipartiteBuilder {
public:
    BipartiteBuilder(const PlaneGraph& g, const BfsTree& t, const BipartiteOptions& opt, ContractionSequence& seq)
        : g_(g), t_(t), ix_(g, t), opt_(opt), seq_(seq) {
        nbr_.resize(g.n);
        for (int v = 0; v < g.n; ++v) {
            for (int d : g.rot[v]) nbr_[v].push_back({g.head(d), d});
            std::sort(nbr_[v].begin(), nbr_[v].end());
        }
        if (opt.check) {
            mirror_ = std::make_unique<detail::Mirror>(graph_of(g), t.depth, true);
            label_.assign(g.n, -1);
        }
    }

    Column run(int l, int r) {
        push(l, r);
        while (!frames_.empty()) advance();
        return std::move(ret_);
    }

private:
    int depth(int v) const { return t_.depth[v]; }
    int par(int v) const { return t_.parent[v]; }
    bool isanc(int a, int v) const { return ix_.is_ancestor(a, v); }
    bool tree_edge(int a, int b) const { return par(a) == b || par(b) == a; }

    int dart(int a, int b) const {
        auto& l = nbr_[a];
        auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(b, -1));
        return it != l.end() && it->first == b ? it->second : -1;
    }

    [[noreturn]] void fail(const std::string& what) const {
        if (mirror_) mirror_->fail(what);
        throw invariant_error(what);
    }

    bool on_c(const Frame& f, int w) const {
        return (isanc(w, f.c.l) || isanc(w, f.c.r)) && depth(w) >= f.sd;
    }
    bool on_right(const Frame& f, int w) const { return isanc(w, f.c.r) && depth(w) >= f.sd; }

    void push(int l, int r) {
        if (ix_.tin[l] > ix_.tin[r]) std::swap(l, r);
        Frame f;
        f.c = {l, r};
        f.sd = depth(ix_.lca(l, r));
        f.in = counter_++;
        if (mirror_ && depth(l) != depth(r) + 1) fail("lid does not descend to the left");
        frames_.push_back(std::move(f));
    }

    void finish(Column col) {
        if (mirror_) {
            const Frame& f = frames_.back();
            int prev = -1;
            for (auto [lev, v] : col) {
                if (lev <= f.sd) fail("face column level out of range");
                if (!mirror_->h.live(v) || mirror_->h.level(v) != lev) fail("face column out of sync");
                if (lev == prev) fail("face is not 1-reduced");
                prev = lev;
            }
        }
        ret_ = std::move(col);
        frames_.pop_back();
    }

    void place(int v, const Frame& f) {
        if (!label_.empty()) label_[v] = f.in;
    }

    int emit(int x, int y) {
        int z = seq_.next_id();
        seq_.contract(std::min(x, y), std::max(x, y));
        check(seq_.steps.back());
        return z;
    }

    void advance() {
        size_t i = frames_.size() - 1;
        switch (frames_[i].phase) {
            case 0: start(i); break;
            case 1: {
                FaceColumn fc;
                fc.one = std::move(ret_);
                for (int v : frames_[i].extra) {
                    int lv = depth(v);
                    if (!fc.one.count(lv))
                        fc.one[lv] = v;
                    else if (!fc.two.count(lv))
                        fc.two[lv] = v;
                    else
                        fail("three interior vertices on one level");
                }
                close(std::move(fc));
                break;
            }
            case 2: {
                Frame& f = frames_[i];
                f.col1 = std::move(ret_);
                f.phase = 3;
                Lid f2 = f.f2;
                push(f2.l, f2.r);
                break;
            }
            case 3: merge(i); break;
        }
    }

    void close(FaceColumn fc) {
        StepHook hook;
        if (mirror_) hook = [this](const Step& s) { check(s); };
        finish(bi_second_stage(seq_, std::move(fc), frames_.back().sd, hook));
    }

    void start(size_t i) {
        Frame& f = frames_[i];
        int d = dart(f.c.l, f.c.r);
        if (ix_.wrapped_interior(d, f.sd) == 0) {
            finish({});
            return;
        }
        int d2 = g_.face_next(d), d3 = g_.face_next(d2), d4 = g_.face_next(d3);
        if (g_.face_next(d4) != d) fail("inner face at the lid is not a quadrangle");
        int v1 = f.c.l, v2 = f.c.r, v3 = g_.head(d2), v4 = g_.head(d3);
        std::array<Lid, 3> side{Lid{v1, v4}, Lid{v4, v3}, Lid{v3, v2}};
        std::vector<int> nt;
        for (int k = 0; k < 3; ++k)
            if (!tree_edge(side[k].l, side[k].r)) nt.push_back(k);
        bool in3 = !on_c(f, v3), in4 = !on_c(f, v4);
        if (nt.size() == 1) {
            if (opt_.on_case) {
                char cs = '?';
                if (nt[0] == 2) cs = 'a';
                if (nt[0] == 0) cs = 'c';
                if (nt[0] == 1) cs = in3 ? 'd' : 'b';
                opt_.on_case(cs);
            }
            if (in4) f.extra.push_back(v4);
            if (in3) f.extra.push_back(v3);
            for (int v : f.extra) place(v, f);
            f.phase = 1;
            Lid e = side[nt[0]];
            push(e.l, e.r);
            return;
        }
        if (nt.size() != 2) fail("face at the lid has " + std::to_string(nt.size()) + " non-tree sides");
        if (opt_.on_case) opt_.on_case(nt[0] == 0 && nt[1] == 2 ? 'e' : nt[0] == 0 ? 'f' : 'g');
        f.f1 = side[nt[0]];
        f.f2 = side[nt[1]];
        std::vector<int> seg;
        if (nt[0] == 0 && nt[1] == 2) seg = {v4, v3};
        else if (nt[0] == 0) seg = {v4};
        else seg = {v3};
        int s = seg[0];
        for (int v : seg)
            if (depth(v) > depth(s)) s = v;
        for (int x = s; !on_c(f, x); x = par(x)) f.extra.push_back(x);
        for (int v : {v3, v4})
            if (!on_c(f, v) && std::find(f.extra.begin(), f.extra.end(), v) == f.extra.end()) f.extra.push_back(v);
        for (int v : f.extra) place(v, f);
        f.phase = 2;
        Lid f1 = f.f1;
        push(f1.l, f1.r);
    }

    void merge(size_t i) {
        Column col2 = std::move(ret_);
        Frame& f = frames_[i];
        Column& col1 = f.col1;
        Column u3;
        for (int v : f.extra) {
            if (u3.count(depth(v))) fail("U3 has two vertices on one level");
            u3[depth(v)] = v;
        }
        int k = u3.empty() ? f.sd : u3.begin()->first;
        int m = u3.empty() ? f.sd : u3.rbegin()->first;
        std::vector<std::array<int, 2>> pairs;  // (level, source: 1 or 3)
        {
            const Column& a = col1.size() <= col2.size() ? col1 : col2;
            const Column& b = &a == &col1 ? col2 : col1;
            for (auto it = a.upper_bound(std::max(m, k)); it != a.end(); ++it)
                if (b.count(it->first)) pairs.push_back({it->first, 1});
        }
        for (auto it = u3.lower_bound(k); it != u3.end(); ++it)
            if (col2.count(it->first)) pairs.push_back({it->first, 3});
        std::sort(pairs.begin(), pairs.end(), [](auto& p, auto& q) { return p[0] > q[0]; });
        for (auto [lev, src] : pairs) {
            Column& from = src == 1 ? col1 : u3;
            auto it = from.find(lev);
            col2[lev] = emit(it->second, col2[lev]);
            from.erase(it);
        }
        FaceColumn fc;
        Column& big = col1.size() >= col2.size() ? col1 : col2;
        Column& small = &big == &col1 ? col2 : col1;
        auto add = [&](int lev, int v) {
            if (!big.count(lev))
                big[lev] = v;
            else if (!fc.two.count(lev))
                fc.two[lev] = v;
            else
                fail("three interior vertices on level " + std::to_string(lev));
        };
        for (auto [lev, v] : small) add(lev, v);
        for (auto [lev, v] : u3) add(lev, v);
        fc.one = std::move(big);
        close(std::move(fc));
    }

    bool inside(const Frame& a, int id) const { return label_[mirror_->rep[id]] >= a.in; }

    void check(const Step& s) {
        if (!mirror_) return;
        const Frame& top = frames_.back();
        if (!inside(top, s.x) || !inside(top, s.y)) mirror_->fail("step leaves the current face");
        int v = mirror_->apply(s);
        auto& h = mirror_->h;
        int n = mirror_->n;
        int sink = ix_.anc(top.c.l, top.sd);
        if (h.colour(v, sink) == Colour::red) mirror_->fail("red edge to the sink");
        int lv = h.level(v);
        std::vector<int> q{v};
        for (auto& [w, c] : h.neighbours(v)) {
            if (c == Colour::red) q.push_back(w);
            if (w >= n || h.level(w) != lv + 1) continue;
            for (const Frame& a : frames_) {
                if (!inside(a, v)) break;
                if (on_right(a, w)) mirror_->fail("neighbour on a right wrapping path one level down");
            }
        }
        for (int x : q) {
            bool orig = x < n;
            if ((!orig || label_[x] >= 0) && h.red_degree(x) > 6) mirror_->fail("interior red degree above 6");
            if (!orig) continue;
            for (const Frame& a : frames_) {
                if (!on_c(a, x)) continue;
                int cnt = 0;
                for (int y : h.red_neighbours(x))
                    if (inside(a, y)) ++cnt;
                if (cnt > (on_right(a, x) ? 2 : 4))
                    mirror_->fail("boundary vertex " + std::to_string(x) + " has " + std::to_string(cnt) +
                                  " red edges into its face");
            }
        }
    }

    const PlaneGraph& g_;
    const BfsTree& t_;
    TreeIndex ix_;
    const BipartiteOptions& opt_;
    ContractionSequence& seq_;
    std::vector<std::vector<std::pair<int, int>>> nbr_;
    std::vector<Frame> frames_;
    Column ret_;
    int counter_ = 0;
    std::vector<int> label_;
    std::unique_ptr<detail::Mirror> mirror_;
};

}  // namespace

CoreRun bipartite_core(const PlaneGraph& g, const BfsTree& t, int l, int r, const BipartiteOptions& opt) {
    CoreRun out;
    out.seq.n = g.n;
    BipartiteBuilder b(g, t, opt, out.seq);
    out.column = b.run(l, r);
    return out;
}

BipartiteResult bipartite_sequence(const PlaneGraph& g0, const BipartiteOptions& opt) {
    if (!is_simple(g0)) throw format_error("input graph is not simple");
    if (two_colouring(g0).empty() && g0.n > 0) throw format_error("input graph is not bipartite");
    BipartiteResult res;
    res.seq.n = g0.n;
    if (g0.n == 0) {
        res.report.full = true;
        return res;
    }
    auto [gc, m1] = connect_components(g0);
    auto [quad, m2] = quadrangulate(gc);
    (void)m1;
    (void)m2;
    int root = quad.tail(quad.outer);
    res.tree = left_aligned_bfs_tree(quad, root);
    if (opt.check) {
        if (auto bad = check_left_aligned(quad, res.tree))
            throw invariant_error("tree is not left-aligned at " + std::to_string(bad->first) + "," +
                                  std::to_string(bad->second));
    }
    const auto& t = res.tree;
    int d = quad.outer;
    std::array<int, 4> c{};
    for (int k = 0; k < 4; ++k, d = quad.face_next(d)) c[k] = quad.tail(d);
    if (d != quad.outer) throw invariant_error("outer face is not a quadrangle");
    // c[0] is the root, c[2] hangs from c[1] or c[3]; the other side is the lid
    int lid_end = t.parent[c[2]] == c[1] ? c[3] : c[1];
    ContractionSequence& seq = res.quad_seq;
    seq.n = quad.n;
    Column col;
    {
        BipartiteBuilder builder(quad, t, opt, seq);
        col = builder.run(c[2], lid_end);
    }
    // survivors farthest first, then V(C); each colour class is chained on its own so that
    // same-side vertices meet first, and the two class representatives are merged last
    std::vector<std::pair<int, int>> order;  // (level, id)
    for (auto it = col.rbegin(); it != col.rend(); ++it) order.push_back({it->first, it->second});
    std::vector<int> outer(c.begin(), c.end());
    std::sort(outer.begin(), outer.end(), [&](int a, int b) {
        return t.depth[a] != t.depth[b] ? t.depth[a] > t.depth[b] : a < b;
    });
    for (int v : outer) order.push_back({t.depth[v], v});
    std::array<int, 2> acc{-1, -1};
    for (auto [lev, v] : order) {
        int& a = acc[lev & 1];
        if (a < 0) {
            a = v;
            continue;
        }
        int z = seq.next_id();
        seq.contract(a, v);
        a = z;
    }
    seq.contract(acc[0], acc[1]);
    if (opt.check) {
        auto rep = verify_sequence(graph_of(quad), seq);
        if (rep.width > 6) throw invariant_error("width " + std::to_string(rep.width) + " on the quadrangulation");
    }
    std::vector<char> keep(quad.n, 0);
    for (int v = 0; v < g0.n; ++v) keep[v] = 1;
    res.seq = restrict_sequence(quad.n, seq, keep);
    res.report = verify_sequence(graph_of(g0), res.seq);
    res.quad = std::move(quad);
    return res;
}

}  // namespace tww
