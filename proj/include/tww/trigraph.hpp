#pragma once
#include <array>
#include <optional>
#include <unordered_map>
#include <vector>

#include "tww/plane_graph.hpp"

namespace tww {

struct Graph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
};

Graph graph_of(const PlaneGraph& g);

enum class StepKind : char { contract = 'k', decrease = 'd' };

struct Step {
    StepKind kind = StepKind::contract;
    int x = -1, y = -1, z = -1;
};

struct ContractionSequence {
    int n = 0;
    std::vector<Step> steps;
    int contractions() const;
    void contract(int x, int y);  // appends k x y z with the next fresh id
    void decrease(int x) { steps.push_back({StepKind::decrease, x, -1, -1}); }
    int next_id() const { return n + contractions_; }
    void push(const Step& s);  // appends as given, z is not checked here

private:
    int contractions_ = 0;
};

struct WidthReport {
    int width = 0;
    std::vector<int> per_step_max;
    bool full = false;
};

enum class Colour : char { black = 1, red = 2 };

// Live vertices are addressed by sequence ids; internally the merged vertex reuses
// the slot of the endpoint with more neighbours.
class Trigraph {
public:
    Trigraph(const Graph& g, const std::vector<int>* levels = nullptr, bool track_provenance = false);

    int contract(int x, int y);  // returns the fresh id
    void decrease_level(int x);  // throws if some neighbour is not below x

    bool live(int id) const { return id >= 0 && id < static_cast<int>(slot_.size()) && slot_[id] >= 0; }
    int live_count() const { return live_; }
    int red_degree(int id) const { return red_[slot_[id]]; }
    int max_red_degree() const;
    int level(int id) const { return lev_[slot_[id]]; }
    bool has_levels() const { return !lev_.empty(); }
    std::optional<Colour> colour(int a, int b) const;
    int next_id() const { return static_cast<int>(slot_.size()); }
    // neighbours as (id, colour)
    std::vector<std::pair<int, Colour>> neighbours(int id) const;
    std::vector<int> red_neighbours(int id) const;
    const std::vector<int>& provenance(int id) const { return prov_[slot_[id]]; }
    std::vector<int> live_ids() const;
    // full recount of red degrees; throws if the incremental counters drifted
    void recheck() const;

private:
    void set_red_count(int s, int value);
    std::vector<std::unordered_map<int, Colour>> adj_;  // by slot
    std::vector<int> slot_, id_of_slot_, red_, lev_, hist_;
    std::vector<std::vector<int>> prov_;
    int live_ = 0;
    mutable int maxptr_ = 0;
    bool prov_on_ = false;
};

struct VerifyOptions {
    const std::vector<int>* levels = nullptr;
    int recheck_every = 0;  // 0 disables the periodic recount
};

WidthReport verify_sequence(const Graph& g, const ContractionSequence& seq, const VerifyOptions& opt = {});

enum class StepClass { level_preserving, level_respecting, violation };
StepClass classify_step(const Trigraph& t, const Step& s);
// Applies a step under the minimum level rule; throws on an illegal decrease.
void min_level_update(Trigraph& t, const Step& s);
bool is_good_assignment(const Trigraph& t);

ContractionSequence restrict_sequence(int n, const ContractionSequence& seq, const std::vector<char>& keep);
Graph induced_subgraph(const Graph& g, const std::vector<char>& keep);

}  // namespace tww
