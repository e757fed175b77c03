#pragma once
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "tww/plane_graph.hpp"

namespace tww {

struct BfsTree {
    int root = -1;
    int root_ref = -1;  // dart at root with the outer face on its left; "up" is just ccw after it
    std::vector<int> parent;
    std::vector<int> parent_dart;  // dart v -> parent(v), -1 at the root
    std::vector<int> depth;
    std::vector<std::vector<int>> children;  // ccw, starting after the up reference
};

// Tree given by a parent array (root has -1); the lowest edge id is used for parallel edges.
BfsTree tree_from_parents(const PlaneGraph& g, int root, const std::vector<int>& parent);
std::vector<int> bfs_layering(const PlaneGraph& g, int r);
BfsTree left_aligned_bfs_tree(const PlaneGraph& g, int r);
// Dart at r whose left face is the outer face, -1 if r is not on it.
int outer_dart_at(const PlaneGraph& g, int r);
// Checks depth/parent consistency against BFS distances, throws invariant_error.
void check_bfs_tree(const PlaneGraph& g, const BfsTree& t);
bool is_left_of(const PlaneGraph& g, const BfsTree& t, int u, int v);
std::optional<std::pair<int, int>> check_left_aligned(const PlaneGraph& g, const BfsTree& t);
std::vector<int> vertical_path(const BfsTree& t, int v, const std::function<bool(int)>& stop);

// Constant/log-time queries on a tree embedded in g.
class TreeIndex {
public:
    TreeIndex(const PlaneGraph& g, const BfsTree& t);
    const PlaneGraph& g;
    const BfsTree& t;
    std::vector<int> tin, tout, sz;
    int depth(int v) const { return t.depth[v]; }
    int parent(int v) const { return t.parent[v]; }
    bool is_ancestor(int a, int v) const { return tin[a] <= tin[v] && tout[v] <= tout[a]; }
    int anc(int v, int d) const;  // ancestor of v at depth d
    int lca(int a, int b) const;
    // child-subtree mass at tail(a) strictly ccw between darts a and b (both leaving the same vertex)
    long wedge(int a, int b) const;
    long prw(int v) const { return prw_[v]; }
    long plw(int v) const { return plw_[v]; }
    int down_dart(int v) const { return PlaneGraph::rev(t.parent_dart[v]); }  // parent(v) -> v
    int up_dart(int v) const { return t.parent_dart[v]; }
    // interior vertex count of the cycle l..anc(l,sd)..r closed by lid dart ld = l->r,
    // interior on the left of ld
    long wrapped_interior(int ld, int sd) const;

private:
    std::vector<int> off_;
    std::vector<long> pre_;
    std::vector<long> prw_, plw_;
    std::vector<std::vector<int>> by_depth_tin_, by_depth_v_;
};

}  // namespace tww
