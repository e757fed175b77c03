#pragma once
#include <array>
#include <stdexcept>
#include <string>
#include <vector>

namespace tww {

struct format_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct invariant_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Darts: edge e has dart 2e leaving edges[e][0] and dart 2e+1 leaving edges[e][1].
// Rotations are counter-clockwise. The face of dart d is the face on its left,
// traced by face_next(d) = ccw predecessor of rev(d) at head(d).
struct PlaneGraph {
    int n = 0;
    std::vector<std::array<int, 2>> edges;
    std::vector<std::vector<int>> rot;
    std::vector<int> pos;  // index of a dart inside rot[tail]
    int outer = -1;

    int m() const { return static_cast<int>(edges.size()); }
    static int rev(int d) { return d ^ 1; }
    int tail(int d) const { return edges[d >> 1][d & 1]; }
    int head(int d) const { return edges[d >> 1][(d & 1) ^ 1]; }
    int degree(int v) const { return static_cast<int>(rot[v].size()); }
    int ccw_next(int d) const {
        const auto& r = rot[tail(d)];
        int i = pos[d] + 1;
        return r[i == static_cast<int>(r.size()) ? 0 : i];
    }
    int ccw_prev(int d) const {
        const auto& r = rot[tail(d)];
        int i = pos[d];
        return r[i == 0 ? r.size() - 1 : i - 1];
    }
    int face_next(int d) const { return ccw_prev(rev(d)); }
};

struct Face {
    std::vector<int> darts;
    bool outer = false;
};

struct VertexMap {
    std::vector<int> old_to_new;
    std::vector<int> added;
};

// rotations[v] lists edge ids ccw; each id denotes the dart of that edge leaving v.
PlaneGraph build(int n, const std::vector<std::array<int, 2>>& edges,
                 const std::vector<std::vector<int>>& rotations, int outer_edge, int outer_vertex);

// Throws invariant_error on a broken rotation system or Euler violation.
void validate(const PlaneGraph& g);

std::vector<Face> faces(const PlaneGraph& g);
// face id per dart, returns number of faces
int face_ids(const PlaneGraph& g, std::vector<int>& fid);

std::vector<int> components(const PlaneGraph& g, int& count);
bool is_simple(const PlaneGraph& g);
// 2-colouring, empty if not bipartite (odd_cycle filled when requested)
std::vector<int> two_colouring(const PlaneGraph& g, std::vector<int>* odd_cycle = nullptr);
std::vector<std::vector<int>> adjacency(const PlaneGraph& g);

std::pair<PlaneGraph, VertexMap> connect_components(const PlaneGraph& g);
std::pair<PlaneGraph, VertexMap> triangulate(const PlaneGraph& g0);
std::pair<PlaneGraph, VertexMap> quadrangulate(const PlaneGraph& g0);

bool all_faces_simple_of_length(const PlaneGraph& g, int len);
bool has_cut_vertex(const PlaneGraph& g);

// Linked-list rotation editor used by the completion routines and generators.
class EmbedBuilder {
public:
    EmbedBuilder() = default;
    explicit EmbedBuilder(const PlaneGraph& g);
    int add_vertex();
    // New edge u-v; dart u->v goes ccw right after du (or is alone if du < 0), same for v.
    int add_edge(int u, int du, int v, int dv);
    std::vector<int> face_walk(int d) const;  // darts of the face left of d
    int face_next(int d) const { return prv_[d ^ 1]; }
    int ccw_next(int d) const { return nxt_[d]; }
    int ccw_prev(int d) const { return prv_[d]; }
    int tail(int d) const { return ends_[d >> 1][d & 1]; }
    int head(int d) const { return ends_[d >> 1][(d & 1) ^ 1]; }
    int vertex_count() const { return n_; }
    int first_dart(int v) const { return first_[v]; }
    PlaneGraph finish(int outer) const;

private:
    int n_ = 0;
    std::vector<std::array<int, 2>> ends_;
    std::vector<int> nxt_, prv_, first_;
};

}  // namespace tww

namespace tww {

// Embedding from facial cycles of a 2-connected plane graph. Face orientation is
// normalised so that the listed outer face ends up on the left of its first dart.
PlaneGraph from_faces(int n, const std::vector<std::vector<int>>& face_cycles, int outer_face = 0);

// Subgraph on kept vertices/edges, renumbered in increasing order. The outer dart is
// kept if it survives, else the lowest surviving dart is used.
PlaneGraph plane_subgraph(const PlaneGraph& g, const std::vector<char>& keep_vertex,
                          const std::vector<char>& keep_edge, std::vector<int>* vertex_ids = nullptr);

}  // namespace tww

namespace tww {
// Number of faces, counting an isolated vertex as one face.
int face_count(const PlaneGraph& g);
}  // namespace tww
