#include "tww/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <string>
#include <unordered_set>

namespace tww {

namespace {

using mask = std::uint64_t;

struct Search {
    int n;
    std::vector<mask> adj;
    int bound = 0;
    long states = 0;
    std::unordered_set<std::string> failed;
    std::vector<std::pair<mask, mask>> path;

    int max_red(const std::vector<mask>& parts) const {
        int best = 0;
        for (size_t i = 0; i < parts.size(); ++i) {
            int red = 0;
            long sa = std::popcount(parts[i]);
            for (size_t j = 0; j < parts.size(); ++j) {
                if (i == j) continue;
                long cnt = 0;
                for (mask a = parts[i]; a; a &= a - 1) cnt += std::popcount(adj[std::countr_zero(a)] & parts[j]);
                if (cnt > 0 && cnt < sa * std::popcount(parts[j])) ++red;
            }
            best = std::max(best, red);
        }
        return best;
    }

    static std::string key(std::vector<mask> parts) {
        std::sort(parts.begin(), parts.end());
        return std::string(reinterpret_cast<const char*>(parts.data()), parts.size() * sizeof(mask));
    }

    bool dfs(const std::vector<mask>& parts) {
        ++states;
        if (parts.size() == 1) return true;
        auto k = key(parts);
        if (failed.count(k)) return false;
        std::vector<std::tuple<int, size_t, size_t>> moves;
        std::vector<mask> next;
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j) {
                next = merged(parts, i, j);
                int r = max_red(next);
                if (r <= bound) moves.emplace_back(r, i, j);
            }
        std::sort(moves.begin(), moves.end());
        for (auto& [r, i, j] : moves) {
            path.emplace_back(parts[i], parts[j]);
            if (dfs(merged(parts, i, j))) return true;
            path.pop_back();
        }
        failed.insert(std::move(k));
        return false;
    }

    static std::vector<mask> merged(const std::vector<mask>& parts, size_t i, size_t j) {
        std::vector<mask> out;
        out.reserve(parts.size() - 1);
        for (size_t k = 0; k < parts.size(); ++k)
            if (k != i && k != j) out.push_back(parts[k]);
        out.push_back(parts[i] | parts[j]);
        return out;
    }
};

}  // namespace

ExactResult exact_twinwidth(const Graph& g, std::optional<int> upper_bound_hint, int limit) {
    if (g.n > limit) throw invariant_error("oracle limit is " + std::to_string(limit) + " vertices");
    if (g.n > 63) throw invariant_error("oracle supports at most 63 vertices");
    ExactResult res;
    res.witness.n = g.n;
    if (g.n <= 1) return res;
    Search s;
    s.n = g.n;
    s.adj.assign(g.n, 0);
    for (auto& e : g.edges) {
        s.adj[e[0]] |= mask(1) << e[1];
        s.adj[e[1]] |= mask(1) << e[0];
    }
    std::vector<mask> start;
    for (int v = 0; v < g.n; ++v) start.push_back(mask(1) << v);
    int top = upper_bound_hint ? std::max(0, *upper_bound_hint) : g.n;
    for (s.bound = 0;; ++s.bound) {
        s.failed.clear();
        s.path.clear();
        if (s.dfs(start)) break;
        if (s.bound >= top && upper_bound_hint) throw invariant_error("upper bound hint is below the true width");
    }
    res.width = s.bound;
    res.states = s.states;
    std::vector<std::pair<mask, int>> ids;
    for (int v = 0; v < g.n; ++v) ids.push_back({mask(1) << v, v});
    auto id_of = [&](mask m) {
        for (auto& [k, id] : ids)
            if (k == m) return id;
        return -1;
    };
    for (auto& [a, b] : s.path) {
        int z = res.witness.next_id();
        res.witness.contract(id_of(a), id_of(b));
        ids.push_back({a | b, z});
    }
    return res;
}

WidthReport reference_verify(const Graph& g, const ContractionSequence& seq, const std::vector<int>* levels) {
    if (seq.n != g.n) throw format_error("sequence and graph sizes differ");
    int total = g.n + std::max(0, g.n - 1) + 1;
    std::vector<std::vector<char>> M(total, std::vector<char>(total, 0));
    for (auto& e : g.edges) M[e[0]][e[1]] = M[e[1]][e[0]] = 1;
    std::vector<char> alive(total, 0);
    for (int v = 0; v < g.n; ++v) alive[v] = 1;
    std::vector<int> lev(total, 0);
    if (levels)
        for (int v = 0; v < g.n; ++v) lev[v] = (*levels)[v];
    int fresh = g.n;
    WidthReport rep;
    for (size_t i = 0; i < seq.steps.size(); ++i) {
        const Step& s = seq.steps[i];
        auto fail = [&](const std::string& why) { throw invariant_error("step " + std::to_string(i) + ": " + why); };
        auto ok = [&](int v) { return v >= 0 && v < total && alive[v]; };
        if (s.kind == StepKind::contract) {
            if (s.z != fresh || fresh >= total) fail("bad fresh id");
            if (s.x == s.y || !ok(s.x) || !ok(s.y)) fail("bad contraction endpoints");
            int z = fresh++;
            for (int w = 0; w < total; ++w) {
                if (!alive[w] || w == s.x || w == s.y) continue;
                char a = M[s.x][w], b = M[s.y][w];
                char c = (a == 0 && b == 0) ? 0 : (a == 1 && b == 1) ? 1 : 2;
                M[z][w] = M[w][z] = c;
            }
            alive[s.x] = alive[s.y] = 0;
            alive[z] = 1;
            lev[z] = std::min(lev[s.x], lev[s.y]);
        } else {
            if (!ok(s.x)) fail("bad level decrease");
            if (levels)
                for (int w = 0; w < total; ++w)
                    if (alive[w] && M[s.x][w] && lev[w] > lev[s.x] - 1) fail("illegal level decrease");
            --lev[s.x];
        }
        int mx = 0;
        for (int v = 0; v < total; ++v) {
            if (!alive[v]) continue;
            int r = 0;
            for (int w = 0; w < total; ++w)
                if (alive[w] && M[v][w] == 2) ++r;
            mx = std::max(mx, r);
        }
        rep.per_step_max.push_back(mx);
        rep.width = std::max(rep.width, mx);
    }
    rep.full = fresh - g.n == std::max(0, g.n - 1);
    return rep;
}

}  // namespace tww
