#pragma once
#include "tww/seq_planar.hpp"

namespace tww {

// Pairwise contraction of doubled levels above lo, top down. Returns the 1-reduced column.
Column bi_second_stage(ContractionSequence& seq, FaceColumn col, int lo, const StepHook& hook = {});

struct BipartiteOptions {
    bool check = false;
    // case letter a..g of every non-empty call, for inspection
    std::function<void(char)> on_case;
};

// Recursion on the wrapped facial 4-cycle-bounded face with lid (l, r) of a quadrangulation.
CoreRun bipartite_core(const PlaneGraph& g, const BfsTree& t, int l, int r, const BipartiteOptions& opt = {});

struct BipartiteResult {
    ContractionSequence seq;  // on g0
    WidthReport report;
    PlaneGraph quad;
    BfsTree tree;
    ContractionSequence quad_seq;
};

// Throws format_error for non-simple or non-bipartite input.
BipartiteResult bipartite_sequence(const PlaneGraph& g0, const BipartiteOptions& opt = {});

}  // namespace tww
