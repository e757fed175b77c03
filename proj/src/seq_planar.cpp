#include "tww/seq_planar.hpp"

#include <algorithm>
#include <memory>

#include "step_mirror.hpp"
#include "tww/skeletal.hpp"

namespace tww {

Column second_stage(ContractionSequence& seq, FaceColumn col, int lo, int hi, const StepHook& hook) {
    auto merge = [&](int x, int y) {
        int z = seq.next_id();
        seq.contract(std::min(x, y), std::max(x, y));
        if (hook) hook(seq.steps.back());
        return z;
    };
    Column& one = col.one;
    for (auto it = col.two.rbegin(); it != col.two.rend(); ++it) {
        auto [lev, x] = *it;
        auto f = one.find(lev);
        if (f == one.end()) {
            one[lev] = x;
            continue;
        }
        if (lev <= lo) throw invariant_error("two interior vertices at the lowest level of a face");
        f->second = merge(f->second, x);
    }
    while (!one.empty() && one.rbegin()->first > hi) {
        auto top = std::prev(one.end());
        int j = top->first, x = top->second;
        one.erase(top);
        auto below = one.find(j - 1);
        if (below != one.end()) {
            below->second = merge(below->second, x);
        } else {
            seq.decrease(x);
            if (hook) hook(seq.steps.back());
            one[j - 1] = x;
        }
    }
    return std::move(one);
}

namespace {

struct Lid {
    int l = -1, r = -1;
    explicit operator bool() const { return l >= 0; }
};

// A wrapped cycle D with its division; B1 shares the sink of D, B2 hangs from P0.
struct Call {
    Lid D;
    int sd = 0;
    Lid B1, B2;
    int sd2 = -1;
    int u1 = -1, v0 = -1;
};

struct Frame {
    Call c;
    int phase = 0;  // 0 start, 1 after the single child, 2 after C1, 3 after C2
    int in = 0;
    int u1 = -1, v0 = -1;
    int top = 0, bot = 0;  // depths of the P0 part owned by this call
    bool special = false;
    bool fallback = false;
    Lid d1;
    int sd1 = 0;
    Column col1;
};

class PlanarBuilder {
public:
    PlanarBuilder(const PlaneGraph& g, const BfsTree& t, const PlanarOptions& opt, ContractionSequence& seq)
        : g_(g), t_(t), ix_(g, t), opt_(opt), seq_(seq) {
        nbr_.resize(g.n);
        for (int v = 0; v < g.n; ++v) {
            for (int d : g.rot[v]) nbr_[v].push_back({g.head(d), d});
            std::sort(nbr_[v].begin(), nbr_[v].end());
        }
        if (opt.check) {
            levels_ = t.depth;
            mirror_ = std::make_unique<detail::Mirror>(graph_of(g), levels_, false);
            label_.assign(g.n, -1);
        }
    }

    Column run(int l, int r) {
        if (ix_.tin[l] > ix_.tin[r]) std::swap(l, r);
        Call c;
        c.D = {l, r};
        c.sd = depth(ix_.lca(l, r));
        push(c);
        while (!frames_.empty()) advance();
        return std::move(ret_);
    }

    detail::Mirror* mirror() { return mirror_.get(); }

private:
    int depth(int v) const { return t_.depth[v]; }
    int par(int v) const { return t_.parent[v]; }
    bool isanc(int a, int v) const { return ix_.is_ancestor(a, v); }
    int anc(int v, int d) const { return ix_.anc(v, d); }

    int dart(int a, int b) const {
        auto& l = nbr_[a];
        auto it = std::lower_bound(l.begin(), l.end(), std::make_pair(b, -1));
        return it != l.end() && it->first == b ? it->second : -1;
    }

    [[noreturn]] void fail(const std::string& what) const {
        if (mirror_) mirror_->fail(what);
        throw invariant_error(what);
    }

    long count_u(const Call& c) const {
        long n = ix_.wrapped_interior(dart(c.D.l, c.D.r), c.sd);
        if (c.B1) n -= ix_.wrapped_interior(dart(c.B1.l, c.B1.r), c.sd);
        if (c.B2) n -= ix_.wrapped_interior(dart(c.B2.l, c.B2.r), c.sd2) + depth(c.B2.r) - depth(c.u1);
        return n;
    }

    bool on_d(const Call& c, int w) const {
        return (isanc(w, c.D.l) || isanc(w, c.D.r)) && depth(w) >= c.sd;
    }

    int top_of(const Call& c) const { return c.B1 ? depth(c.B1.l) : c.sd; }

    bool on_c(const Call& c, int w) const {
        int top = top_of(c), dw = depth(w);
        if (!c.B2) return dw >= top && (isanc(w, c.D.l) || isanc(w, c.D.r));
        int e = c.B2.r, cv = c.B2.l, u1 = c.u1;
        bool u1p1 = isanc(u1, c.D.l);
        if (isanc(w, e) && dw >= depth(u1)) return true;
        if (isanc(w, c.D.l)) return u1p1 ? (dw >= top && dw <= depth(u1)) || dw >= depth(cv) : dw >= depth(cv);
        if (isanc(w, c.D.r)) return dw >= (u1p1 ? top : depth(u1));
        return false;
    }

    int min_level(const Call& c) const {
        if (c.B2 && !isanc(c.u1, c.D.l)) return depth(c.u1);
        return top_of(c);
    }

    int drain_level(const Call& c) const {
        int m = std::max(depth(c.D.l), depth(c.D.r));
        if (c.B2) return std::max(m, depth(c.B2.r));
        int k = top_of(c);
        int len = depth(c.D.l) - k + depth(c.D.r) - k + (c.B1 ? 2 : 1);
        return len == 3 ? m + 1 : m;
    }

    int bound(const Call& c, int w) const {
        int b = c.B2 && w == c.B2.r ? 6 : 5;
        if (isanc(w, c.D.r) && depth(w) >= c.sd) b = std::min(b, 3);
        if ((c.B1 && (w == c.B1.l || w == c.B1.r)) || (c.B2 && w == c.B2.l)) b = std::min(b, 2);
        return b;
    }

    std::vector<int> path_down(int top, int v) const {
        std::vector<int> p;
        for (int x = v; x != top; x = par(x)) p.push_back(x);
        p.push_back(top);
        std::reverse(p.begin(), p.end());
        return p;
    }

    std::vector<int> wrapped_cycle(Lid f, int sd) const {
        int s = anc(f.l, sd);
        auto a = path_down(s, f.l), b = path_down(s, f.r);
        std::vector<int> c(a.begin(), a.end());
        for (int i = static_cast<int>(b.size()) - 1; i >= 1; --i) c.push_back(b[i]);
        return c;
    }

    void report_shape(const Call& c) const {
        CallShape s;
        s.D = wrapped_cycle(c.D, c.sd);
        std::vector<std::array<int, 2>> es;
        auto add = [&](const std::vector<int>& cyc) {
            for (auto e : cycle_edges(cyc)) {
                if (e[0] > e[1]) std::swap(e[0], e[1]);
                auto it = std::find(es.begin(), es.end(), e);
                if (it == es.end())
                    es.push_back(e);
                else
                    es.erase(it);
            }
        };
        add(s.D);
        if (c.B1) add(s.B1 = wrapped_cycle(c.B1, c.sd));
        if (c.B2) add(s.B2 = wrapped_cycle(c.B2, c.sd2));
        s.C = cycle_from_edges(es);
        opt_.on_call(s);
    }

    void push(const Call& c) {
        Frame f;
        f.c = c;
        f.in = counter_++;
        frames_.push_back(std::move(f));
    }

    void finish(Column col) {
        if (mirror_) {
            const Call& c = frames_.back().c;
            int lo = min_level(c), hi = drain_level(c);
            int prev = -1;
            for (auto [lev, v] : col) {
                if (lev <= lo || lev > hi) fail("face column level out of range");
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
                Frame& f = frames_[i];
                FaceColumn fc;
                fc.one = std::move(ret_);
                int lv = depth(f.v0);
                (fc.one.count(lv) ? fc.two : fc.one)[lv] = f.v0;
                close(std::move(fc));
                break;
            }
            case 2: second_child(i); break;
            case 3: merge(i); break;
        }
    }

    void close(FaceColumn fc) {
        const Call& c = frames_.back().c;
        StepHook hook;
        if (mirror_) hook = [this](const Step& s) { check(s); };
        finish(second_stage(seq_, std::move(fc), min_level(c), drain_level(c), hook));
    }

    void start(size_t i) {
        Call& c = frames_[i].c;
        int w = -1;
        while (true) {
            if (opt_.on_call) report_shape(c);
            long cnt = count_u(c);
            if (cnt < 0) fail("negative interior count");
            if (cnt == 0) {
                finish({});
                return;
            }
            if (c.B2) break;
            w = g_.head(g_.face_next(dart(c.D.l, c.D.r)));
            if (!on_d(c, w)) break;
            if (!on_c(c, w)) fail("apex lies on D outside C");
            if (w == par(c.D.l))
                c.D.l = w;
            else if (w == par(c.D.r))
                c.D.r = w;
            else
                fail("apex on C is not a parent of a lid end");
        }
        Frame& f = frames_[i];
        if (!c.B2) {
            f.v0 = w;
            int x = w;
            while (!on_d(c, x)) x = par(x);
            f.u1 = x;
            if (x == c.D.l || x == c.D.r) {
                place(w, f);
                Call ch = c;
                ch.D = x == c.D.l ? Lid{w, c.D.r} : Lid{c.D.l, w};
                if (ix_.tin[ch.D.l] > ix_.tin[ch.D.r]) fail("shortcut lid is misoriented");
                f.phase = 1;
                push(ch);
                return;
            }
        } else {
            f.v0 = c.v0;
            f.u1 = c.u1;
        }
        first_child(i);
    }

    void first_child(size_t i) {
        Frame& f = frames_[i];
        const Call c = f.c;
        int v0 = f.v0, u1 = f.u1, l = c.D.l;
        bool u1p1 = isanc(u1, l);
        int first = (c.B2 ? depth(c.B2.r) : depth(u1)) + 1;
        int top1 = top_of(c);
        int x1 = -1, x2 = -1;
        for (int d = first; d <= depth(v0) && d <= depth(l); ++d) {
            if ((u1p1 && d == depth(u1) + 1) || d < top1) continue;
            int a = anc(l, d), b = anc(v0, d);
            if (dart(a, b) >= 0) {
                x1 = a;
                x2 = b;
                break;
            }
        }
        f.fallback = x1 < 0 || (x1 == l && x2 == v0);
        f.d1 = f.fallback ? Lid{l, v0} : Lid{x1, x2};
        if (ix_.tin[f.d1.l] > ix_.tin[f.d1.r]) fail("f1 is misoriented");
        f.sd1 = depth(ix_.lca(f.d1.l, f.d1.r));
        f.top = first;
        f.bot = f.fallback ? depth(v0) : depth(x2);
        f.special = !c.B2 && u1p1;
        for (int d = f.top; d <= f.bot; ++d) place(anc(v0, d), f);
        Call c1;
        c1.D = f.d1;
        c1.sd = f.sd1;
        if (c.B2)
            c1.B1 = c.B2;
        else if (!u1p1 && c.B1)
            c1.B1 = c.B1;
        if (c1.B1 && mirror_ && depth(ix_.lca(c1.B1.l, c1.B1.r)) != c1.sd) fail("B1 does not share the sink");
        f.phase = 2;
        push(c1);
    }

    void second_child(size_t i) {
        Frame& f = frames_[i];
        f.col1 = std::move(ret_);
        const Call& c = f.c;
        bool u1p2 = isanc(f.u1, c.D.r);
        Lid b1 = (u1p2 || !c.B1) ? Lid{} : c.B1;
        Call c2;
        if (!f.fallback) {
            c2 = c;
            c2.B1 = b1;
            c2.B2 = f.d1;
            c2.sd2 = f.sd1;
            c2.u1 = f.u1;
            c2.v0 = f.v0;
        } else {
            c2.D = {f.v0, c.D.r};
            if (ix_.tin[f.v0] > ix_.tin[c.D.r]) fail("fallback lid is misoriented");
            c2.sd = depth(ix_.lca(f.v0, c.D.r));
            c2.B1 = b1;
        }
        f.phase = 3;
        push(c2);
    }

    void merge(size_t i) {
        Column col2 = std::move(ret_);
        Frame& f = frames_[i];
        Column& col1 = f.col1;
        for (int d = f.bot; d >= f.top; --d) {
            int y = anc(f.v0, d);
            Column& target = (d == f.top && f.special) ? col1 : col2;
            auto it = target.find(d);
            if (it != target.end())
                it->second = emit(y, it->second);
            else
                target[d] = y;
        }
        FaceColumn fc;
        Column& big = col1.size() >= col2.size() ? col1 : col2;
        Column& small = &big == &col1 ? col2 : col1;
        for (auto [lev, v] : small) (big.count(lev) ? fc.two : big)[lev] = v;
        fc.one = std::move(big);
        close(std::move(fc));
    }

    bool inside(const Frame& a, int id) const { return label_[mirror_->rep[id]] >= a.in; }

    void check(const Step& s) {
        if (!mirror_) return;
        const Frame& top = frames_.back();
        if (!inside(top, s.x) || (s.kind == StepKind::contract && !inside(top, s.y)))
            mirror_->fail("step leaves the current face");
        int v = mirror_->apply(s);
        auto& h = mirror_->h;
        int n = mirror_->n;
        const Call& tc = top.c;
        if (!tc.B1 && !tc.B2) {
            int sink = anc(tc.D.l, tc.sd);
            auto col = h.colour(v, sink);
            if (col == Colour::red) mirror_->fail("red edge to the sink");
            if (col && mirror_->lo[v] != mirror_->hi[v]) mirror_->fail("sequence is not sink-protecting");
        }
        int lv = h.level(v);
        std::vector<int> q{v};
        for (auto& [w, c] : h.neighbours(v)) {
            if (c == Colour::red) q.push_back(w);
            if (w >= n || h.level(w) != lv + 1) continue;
            for (const Frame& a : frames_) {
                if (!inside(a, v)) break;
                if (isanc(w, a.c.D.r) && depth(w) >= a.c.sd)
                    mirror_->fail("neighbour on a right wrapping path one level down");
            }
        }
        for (int x : q) {
            bool orig = x < n;
            if ((!orig || label_[x] >= 0) && h.red_degree(x) > 8) mirror_->fail("interior red degree above 8");
            if (!orig) continue;
            for (const Frame& a : frames_) {
                if (!on_c(a.c, x)) continue;
                int cnt = 0;
                for (int y : h.red_neighbours(x))
                    if (inside(a, y)) ++cnt;
                if (cnt > bound(a.c, x))
                    mirror_->fail("boundary vertex " + std::to_string(x) + " has " + std::to_string(cnt) +
                                  " red edges into its face");
            }
        }
    }

    const PlaneGraph& g_;
    const BfsTree& t_;
    TreeIndex ix_;
    const PlanarOptions& opt_;
    ContractionSequence& seq_;
    std::vector<std::vector<std::pair<int, int>>> nbr_;
    std::vector<Frame> frames_;
    Column ret_;
    int counter_ = 0;
    std::vector<int> levels_, label_;
    std::unique_ptr<detail::Mirror> mirror_;
};

}  // namespace

CoreRun planar_core(const PlaneGraph& g, const BfsTree& t, int l, int r, const PlanarOptions& opt) {
    CoreRun out;
    out.seq.n = g.n;
    PlanarBuilder b(g, t, opt, out.seq);
    out.column = b.run(l, r);
    return out;
}

PlanarResult planar_sequence(const PlaneGraph& g0, const PlanarOptions& opt) {
    if (!is_simple(g0)) throw format_error("input graph is not simple");
    PlanarResult res;
    res.seq.n = g0.n;
    if (g0.n == 0) {
        res.report.full = true;
        return res;
    }
    auto [gc, m1] = connect_components(g0);
    auto [tri, m2] = triangulate(gc);
    (void)m1;
    (void)m2;
    int root = tri.tail(tri.outer);
    res.tree = left_aligned_bfs_tree(tri, root);
    if (opt.check) {
        if (auto bad = check_left_aligned(tri, res.tree))
            throw invariant_error("tree is not left-aligned at " + std::to_string(bad->first) + "," +
                                  std::to_string(bad->second));
    }
    int a = tri.head(tri.outer), b = tri.head(tri.face_next(tri.outer));
    ContractionSequence& seq = res.tri_seq;
    seq.n = tri.n;
    Column col;
    {
        PlanarBuilder builder(tri, res.tree, opt, seq);
        col = builder.run(a, b);
    }
    std::vector<std::pair<int, int>> rest;  // (level, id)
    for (auto [lev, v] : col) rest.push_back({lev, v});
    for (int v : {root, a, b}) rest.push_back({res.tree.depth[v], v});
    std::sort(rest.begin(), rest.end(), [](auto& p, auto& q) {
        return p.first != q.first ? p.first > q.first : p.second < q.second;
    });
    int acc = rest[0].second;
    for (size_t i = 1; i < rest.size(); ++i) {
        int z = seq.next_id();
        seq.contract(acc, rest[i].second);
        acc = z;
    }
    if (opt.check) {
        auto rep = verify_sequence(graph_of(tri), seq, {&res.tree.depth, 0});
        if (rep.width > 8) throw invariant_error("width " + std::to_string(rep.width) + " on the triangulation");
    }
    std::vector<char> keep(tri.n, 0);
    for (int v = 0; v < g0.n; ++v) keep[v] = 1;
    res.seq = restrict_sequence(tri.n, seq, keep);
    res.report = verify_sequence(graph_of(g0), res.seq);
    res.tri = std::move(tri);
    return res;
}

}  // namespace tww
