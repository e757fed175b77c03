#pragma once
#include <algorithm>
#include <string>
#include <vector>

#include "tww/trigraph.hpp"

namespace tww::detail {

// Replays emitted steps on a levelled trigraph for the per-step assertions.
class Mirror {
public:
    Mirror(const Graph& g, const std::vector<int>& levels, bool exact_span)
        : h(g, &levels), n(g.n), exact_(exact_span) {
        rep.resize(n);
        lo = hi = levels;
        for (int v = 0; v < n; ++v) rep[v] = v;
    }

    // Returns the vertex whose edges changed.
    int apply(const Step& s) {
        index = count++;
        auto cls = classify_step(h, s);
        if (cls == StepClass::violation) fail("step is not min-level-respecting");
        if (exact_ && cls != StepClass::level_preserving) fail("step is not level-preserving");
        int v = s.x;
        if (s.kind == StepKind::contract) {
            if (s.z != h.next_id()) fail("unexpected fresh id");
            v = h.contract(s.x, s.y);
            rep.push_back(rep[s.x]);
            lo.push_back(std::min(lo[s.x], lo[s.y]));
            hi.push_back(std::max(hi[s.x], hi[s.y]));
        } else {
            h.decrease_level(s.x);
        }
        int lv = h.level(v);
        for (auto& [w, c] : h.neighbours(v)) {
            (void)c;
            int d = std::abs(h.level(w) - lv);
            if (d > 1 || (exact_ && d != 1))
                fail("edge " + std::to_string(v) + "-" + std::to_string(w) + " spans a wrong number of levels");
        }
        return v;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw invariant_error("step " + std::to_string(index) + ": " + what);
    }

    Trigraph h;
    int n;
    int index = 0, count = 0;
    std::vector<int> rep, lo, hi;

private:
    bool exact_;
};

}  // namespace tww::detail
