#pragma once
#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "tww/plane_graph.hpp"

namespace fixtures {

// Embedding from straight-line coordinates: rotations sorted by angle.
inline tww::PlaneGraph from_coordinates(const std::vector<std::pair<double, double>>& xy,
                                        const std::vector<std::array<int, 2>>& edges, int outer_edge,
                                        int outer_vertex) {
    int n = static_cast<int>(xy.size());
    std::vector<std::vector<std::pair<double, int>>> tmp(n);
    for (int e = 0; e < static_cast<int>(edges.size()); ++e)
        for (int s = 0; s < 2; ++s) {
            int a = edges[e][s], b = edges[e][1 - s];
            tmp[a].push_back({std::atan2(xy[b].second - xy[a].second, xy[b].first - xy[a].first), e});
        }
    std::vector<std::vector<int>> rot(n);
    for (int v = 0; v < n; ++v) {
        std::sort(tmp[v].begin(), tmp[v].end());
        for (auto& p : tmp[v]) rot[v].push_back(p.second);
    }
    return tww::build(n, edges, rot, outer_edge, outer_vertex);
}

// Sample tree with one alignment defect between u and v: r=0, u=6, v=11.
struct SampleTree {
    tww::PlaneGraph g;
    std::vector<int> parent;
    int r = 0, u = 6, v = 11;
};

inline SampleTree sample_tree() {
    // a b bb bbb bbbb c cc ccc cccc d dd ddd e ee
    std::vector<std::pair<double, double>> xy{{0, 5},  {-2, 4},  {-1, 4}, {1, 4}, {2, 4},  {-2.5, 3}, {-0.5, 3},
                                              {1, 3},  {2.5, 3}, {-2, 2}, {0, 2}, {2, 2},  {-1.5, 1}, {1.5, 1}};
    enum { a, b, bb, bbb, bbbb, c, cc, ccc, cccc, d, dd, ddd, e, ee };
    std::vector<std::array<int, 2>> E{{a, b},     {b, bb},    {bb, a},     {a, bbb},  {bbb, bbbb}, {bbbb, a},
                                      {c, b},     {b, cc},    {cc, bb},    {bb, ccc}, {ccc, bbb},  {bbb, cccc},
                                      {cccc, bbbb}, {cc, ccc}, {c, d},     {d, dd},   {dd, cc},    {cc, ddd},
                                      {ddd, ccc}, {ccc, cccc}, {cccc, ddd}, {d, e},    {e, dd},     {dd, ee},
                                      {ee, ddd},  {ee, e}};
    SampleTree f;
    f.g = from_coordinates(xy, E, 5, a);
    f.parent = {-1, a, a, a, a, b, b, bb, bbb, c, cc, ccc, d, dd};
    return f;
}

}  // namespace fixtures
