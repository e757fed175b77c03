#pragma once
#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tww/layering.hpp"
#include "tww/plane_graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// A skeleton is a subgraph of a plane graph g, given by an edge mask over g.
struct Skeleton {
    std::vector<char> edge_in;
    std::vector<char> vertex_in;
};

Skeleton skeleton_of_edges(const PlaneGraph& g, const std::vector<char>& edge_in);
Skeleton skeleton_of_cycles(const PlaneGraph& g, const std::vector<std::vector<int>>& cycles);

struct Bridge {
    std::vector<int> inner;        // empty for a trivial bridge
    std::vector<int> attachments;  // sorted
    std::array<int, 2> chord{-1, -1};
    bool trivial() const { return inner.empty(); }
};

// Components of h - V(S) and the chords of h between S vertices that are not S edges.
std::vector<Bridge> bridges(const Trigraph& h, const std::vector<char>& in_s,
                            const std::vector<std::array<int, 2>>& s_edges);

struct SkeletonFaces {
    std::vector<int> fid;  // per g-dart, -1 for darts outside S
    std::vector<std::vector<int>> cycles;  // vertex cycle of each face, least dart first
    int count() const { return static_cast<int>(cycles.size()); }
};
SkeletonFaces skeleton_faces(const PlaneGraph& g, const Skeleton& s);

struct Assignment {
    SkeletonFaces faces;
    std::vector<int> vertex_face;  // -1 for S vertices
    std::vector<int> chord_face;   // per g-edge, -1 unless a chord
};

// Throws invariant_error when a bridge touches two faces.
Assignment natural_assignment(const PlaneGraph& g, const Skeleton& s);

// Contraction of x,y is S-aware iff neither is in S and both sit in one face; on success the
// fresh id inherits the face. vertex_face is indexed by trigraph id and grows as needed.
bool check_s_aware(std::vector<int>& vertex_face, const Step& step);

struct WrappedFace {
    int sink = -1;
    std::array<int, 2> lid{-1, -1};  // left end first
    std::vector<int> left_path, right_path;  // from the sink down
    std::vector<int> boundary;
};

// Throws invariant_error when c is not wrapped by t.
WrappedFace wrapped_info(const PlaneGraph& g, const BfsTree& t, const std::vector<int>& c);

bool is_k_reduced(const Trigraph& h, const std::vector<int>& face_vertices, int k);
bool is_maximally_k_reduced(const Trigraph& h, const std::vector<int>& face_vertices,
                            const std::vector<int>& boundary, int k);

struct VhCheck {
    bool ok = true;
    char clause = 0;  // 'a'..'d'
    std::string why;
    explicit operator bool() const { return ok; }
};

// Cycles are vertex lists; empty B1/B2 mean absent.
VhCheck validate_vh_division(const PlaneGraph& g, const Skeleton& s, const BfsTree& t,
                             const std::vector<int>& D, const std::vector<int>& C,
                             const std::vector<int>& B1, const std::vector<int>& B2);

// Throws invariant_error naming the offending pair.
void assert_sink_black(const Trigraph& h, const WrappedFace& wf, const std::function<bool(int)>& assigned);
void assert_left_align_exclusion(const Trigraph& h, const WrappedFace& wf,
                                 const std::function<bool(int)>& inside);

}  // namespace tww

namespace tww {
// Vertex cycle of a 2-regular connected edge set; empty if the set is not a single cycle.
std::vector<int> cycle_from_edges(const std::vector<std::array<int, 2>>& edges);
std::vector<std::array<int, 2>> cycle_edges(const std::vector<int>& c);
}  // namespace tww
