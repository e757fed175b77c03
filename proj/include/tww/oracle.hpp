#pragma once
#include <optional>

#include "tww/trigraph.hpp"

namespace tww {

constexpr int default_oracle_limit = 10;

struct ExactResult {
    int width = 0;
    ContractionSequence witness;
    long states = 0;
};

// Exhaustive search; throws invariant_error when g.n exceeds limit.
// Past n = 10 the state space grows like the Bell numbers.
ExactResult exact_twinwidth(const Graph& g, std::optional<int> upper_bound_hint = std::nullopt,
                            int limit = default_oracle_limit);

// Dense re-implementation of verify_sequence: full recount after every step.
WidthReport reference_verify(const Graph& g, const ContractionSequence& seq,
                             const std::vector<int>* levels = nullptr);

}  // namespace tww
