#pragma once
#include <functional>
#include <map>
#include <vector>

#include "tww/layering.hpp"
#include "tww/plane_graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

using Column = std::map<int, int>;  // level -> vertex id
using StepHook = std::function<void(const Step&)>;

// Face interior with at most two vertices per level: `one` holds a vertex of every occupied
// level, `two` the second vertex where there is one.
struct FaceColumn {
    Column one, two;
};

// Pass one contracts the pairs on levels above lo (top down), pass two drains every level
// above hi by contracting downwards or emitting a level decrease. Returns the 1-reduced column.
Column second_stage(ContractionSequence& seq, FaceColumn col, int lo, int hi, const StepHook& hook = {});

// Cycles of one recursive call, for inspection.
struct CallShape {
    std::vector<int> D, C, B1, B2;  // vertex cycles, B1/B2 empty if absent
};

struct PlanarOptions {
    bool check = false;  // per-step assertions, throws invariant_error("step i: ...")
    std::function<void(const CallShape&)> on_call;
};

struct CoreRun {
    ContractionSequence seq;
    Column column;  // what is left inside the cycle
};

// Recursion on the wrapped cycle with lid (l, r), interior on the left of l->r,
// in a triangulation g with left-aligned BFS tree t. Levels are tree depths.
CoreRun planar_core(const PlaneGraph& g, const BfsTree& t, int l, int r, const PlanarOptions& opt = {});

struct PlanarResult {
    ContractionSequence seq;  // on g0
    WidthReport report;
    PlaneGraph tri;                  // completed triangulation
    BfsTree tree;                    // on tri
    ContractionSequence tri_seq;     // on tri, with level decreases
};

// Throws format_error for non-simple input.
PlanarResult planar_sequence(const PlaneGraph& g0, const PlanarOptions& opt = {});

}  // namespace tww
