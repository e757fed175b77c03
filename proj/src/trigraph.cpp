#include "tww/trigraph.hpp"

#include <algorithm>
#include <string>

namespace tww {

Graph graph_of(const PlaneGraph& g) { return Graph{g.n, g.edges}; }

int ContractionSequence::contractions() const { return contractions_; }

void ContractionSequence::push(const Step& s) {
    steps.push_back(s);
    if (s.kind == StepKind::contract) ++contractions_;
}

void ContractionSequence::contract(int x, int y) {
    int z = n + contractions_;
    steps.push_back({StepKind::contract, x, y, z});
    ++contractions_;
}

Trigraph::Trigraph(const Graph& g, const std::vector<int>* levels, bool track_provenance)
    : prov_on_(track_provenance) {
    int n = g.n;
    adj_.resize(n);
    slot_.resize(n);
    id_of_slot_.resize(n);
    red_.assign(n, 0);
    hist_.assign(2, 0);
    hist_[0] = n;
    live_ = n;
    for (int v = 0; v < n; ++v) slot_[v] = id_of_slot_[v] = v;
    for (auto& e : g.edges) {
        if (e[0] == e[1]) throw invariant_error("loop edge in trigraph input");
        if (e[0] < 0 || e[1] < 0 || e[0] >= n || e[1] >= n) throw invariant_error("edge endpoint out of range");
        if (!adj_[e[0]].emplace(e[1], Colour::black).second) throw invariant_error("parallel edge in trigraph input");
        adj_[e[1]].emplace(e[0], Colour::black);
    }
    if (levels) {
        if (static_cast<int>(levels->size()) != n) throw invariant_error("level vector has wrong size");
        lev_ = *levels;
    }
    if (prov_on_) {
        prov_.resize(n);
        for (int v = 0; v < n; ++v) prov_[v] = {v};
    }
}

void Trigraph::set_red_count(int s, int value) {
    --hist_[red_[s]];
    red_[s] = value;
    if (value >= static_cast<int>(hist_.size())) hist_.resize(value + 1, 0);
    ++hist_[value];
    if (value > maxptr_) maxptr_ = value;
}

int Trigraph::max_red_degree() const {
    while (maxptr_ > 0 && hist_[maxptr_] == 0) --maxptr_;
    return maxptr_;
}

std::optional<Colour> Trigraph::colour(int a, int b) const {
    auto& m = adj_[slot_[a]];
    auto it = m.find(slot_[b]);
    if (it == m.end()) return std::nullopt;
    return it->second;
}

std::vector<std::pair<int, Colour>> Trigraph::neighbours(int id) const {
    std::vector<std::pair<int, Colour>> out;
    for (auto& [s, c] : adj_[slot_[id]]) out.push_back({id_of_slot_[s], c});
    return out;
}

std::vector<int> Trigraph::red_neighbours(int id) const {
    std::vector<int> out;
    for (auto& [s, c] : adj_[slot_[id]])
        if (c == Colour::red) out.push_back(id_of_slot_[s]);
    return out;
}

std::vector<int> Trigraph::live_ids() const {
    std::vector<int> out;
    for (int id = 0; id < static_cast<int>(slot_.size()); ++id)
        if (slot_[id] >= 0) out.push_back(id);
    return out;
}

int Trigraph::contract(int x, int y) {
    if (x == y) throw invariant_error("contraction of a vertex with itself");
    if (!live(x) || !live(y)) throw invariant_error("contraction of a dead or unknown vertex");
    int sx = slot_[x], sy = slot_[y];
    int big = adj_[sx].size() >= adj_[sy].size() ? sx : sy;
    int small = big == sx ? sy : sx;
    auto& B = adj_[big];
    auto& S = adj_[small];
    if (auto it = B.find(small); it != B.end()) {
        if (it->second == Colour::red) {
            set_red_count(big, red_[big] - 1);
            set_red_count(small, red_[small] - 1);
        }
        B.erase(it);
        S.erase(big);
    }
    for (auto& [w, c] : B) {
        if (c == Colour::black && !S.count(w)) {
            c = Colour::red;
            adj_[w][big] = Colour::red;
            set_red_count(big, red_[big] + 1);
            set_red_count(w, red_[w] + 1);
        }
    }
    for (auto& [w, c] : S) {
        auto& W = adj_[w];
        W.erase(small);
        if (c == Colour::red) set_red_count(w, red_[w] - 1);
        auto it = B.find(w);
        if (it != B.end()) {
            if (c == Colour::red && it->second == Colour::black) {
                it->second = Colour::red;
                W[big] = Colour::red;
                set_red_count(big, red_[big] + 1);
                set_red_count(w, red_[w] + 1);
            }
        } else {
            B.emplace(w, Colour::red);
            W.emplace(big, Colour::red);
            set_red_count(big, red_[big] + 1);
            set_red_count(w, red_[w] + 1);
        }
    }
    S.clear();
    set_red_count(small, 0);
    --hist_[0];
    --live_;
    if (!lev_.empty()) lev_[big] = std::min(lev_[sx], lev_[sy]);
    if (prov_on_) {
        auto& pb = prov_[big];
        auto& ps = prov_[small];
        if (pb.size() < ps.size()) pb.swap(ps);
        pb.insert(pb.end(), ps.begin(), ps.end());
        ps.clear();
        ps.shrink_to_fit();
    }
    int z = static_cast<int>(slot_.size());
    slot_[x] = slot_[y] = -1;
    slot_.push_back(big);
    id_of_slot_[big] = z;
    id_of_slot_[small] = -1;
    return z;
}

void Trigraph::decrease_level(int x) {
    if (!live(x)) throw invariant_error("level decrease of a dead or unknown vertex");
    if (lev_.empty()) return;
    int s = slot_[x];
    for (auto& [w, c] : adj_[s])
        if (lev_[w] > lev_[s] - 1)
            throw invariant_error("level decrease of " + std::to_string(x) + " next to neighbour " +
                                  std::to_string(id_of_slot_[w]) + " at level " + std::to_string(lev_[w]));
    --lev_[s];
}

void Trigraph::recheck() const {
    for (size_t s = 0; s < adj_.size(); ++s) {
        if (id_of_slot_[s] < 0) continue;
        int r = 0;
        for (auto& [w, c] : adj_[s]) {
            if (c == Colour::red) ++r;
            auto it = adj_[w].find(static_cast<int>(s));
            if (it == adj_[w].end() || it->second != c) throw invariant_error("asymmetric trigraph adjacency");
        }
        if (r != red_[s]) throw invariant_error("red degree counter drifted");
    }
}

WidthReport verify_sequence(const Graph& g, const ContractionSequence& seq, const VerifyOptions& opt) {
    if (seq.n != g.n) throw format_error("sequence is for " + std::to_string(seq.n) + " vertices, graph has " +
                                         std::to_string(g.n));
    Trigraph t(g, opt.levels);
    WidthReport rep;
    int k = 0;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        try {
            if (s.kind == StepKind::contract) {
                if (s.z != t.next_id()) throw invariant_error("fresh id must be " + std::to_string(t.next_id()));
                t.contract(s.x, s.y);
                ++k;
            } else {
                t.decrease_level(s.x);
            }
        } catch (const invariant_error& e) {
            throw invariant_error("step " + std::to_string(i) + ": " + e.what());
        }
        int w = t.max_red_degree();
        rep.per_step_max.push_back(w);
        rep.width = std::max(rep.width, w);
        if (opt.recheck_every > 0 && (i + 1) % opt.recheck_every == 0) t.recheck();
    }
    rep.full = k == std::max(0, g.n - 1);
    return rep;
}

StepClass classify_step(const Trigraph& t, const Step& s) {
    if (s.kind == StepKind::decrease) {
        if (!t.live(s.x)) return StepClass::violation;
        for (auto& [w, c] : t.neighbours(s.x))
            if (t.level(w) > t.level(s.x) - 1) return StepClass::violation;
        return StepClass::level_respecting;
    }
    if (!t.live(s.x) || !t.live(s.y) || s.x == s.y) return StepClass::violation;
    int lx = t.level(s.x), ly = t.level(s.y);
    if (lx == ly) return StepClass::level_preserving;
    if (std::abs(lx - ly) != 1) return StepClass::violation;
    int lo = lx < ly ? s.x : s.y, hi = lo == s.x ? s.y : s.x;
    for (auto& [w, c] : t.neighbours(hi))
        if (w != lo && t.level(w) != t.level(lo)) return StepClass::violation;
    return StepClass::level_respecting;
}

void min_level_update(Trigraph& t, const Step& s) {
    if (s.kind == StepKind::decrease)
        t.decrease_level(s.x);
    else
        t.contract(s.x, s.y);
}

bool is_good_assignment(const Trigraph& t) {
    for (int id : t.live_ids())
        for (auto& [w, c] : t.neighbours(id))
            if (std::abs(t.level(id) - t.level(w)) > 1) return false;
    return true;
}

ContractionSequence restrict_sequence(int n, const ContractionSequence& seq, const std::vector<char>& keep) {
    std::vector<int> map(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (keep[v]) map[v] = k++;
    ContractionSequence out;
    out.n = k;
    int z = n;
    for (const Step& s : seq.steps) {
        if (s.kind == StepKind::decrease) {
            if (s.x < static_cast<int>(map.size()) && map[s.x] >= 0) out.decrease(map[s.x]);
            continue;
        }
        map.resize(std::max<int>(map.size(), z + 1), -1);
        int a = map[s.x], b = map[s.y];
        if (a >= 0 && b >= 0) {
            map[z] = out.next_id();
            out.contract(a, b);
        } else {
            map[z] = a >= 0 ? a : b;
        }
        ++z;
    }
    return out;
}

Graph induced_subgraph(const Graph& g, const std::vector<char>& keep) {
    std::vector<int> map(g.n, -1);
    Graph h;
    for (int v = 0; v < g.n; ++v)
        if (keep[v]) map[v] = h.n++;
    for (auto& e : g.edges)
        if (map[e[0]] >= 0 && map[e[1]] >= 0) h.edges.push_back({map[e[0]], map[e[1]]});
    return h;
}

}  // namespace tww
