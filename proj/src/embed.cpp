#include "tww/embed.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>
#include <set>

namespace tww {

PlaneGraph embed(const Graph& g) {
    using namespace boost;
    using BG = adjacency_list<vecS, vecS, undirectedS, property<vertex_index_t, int>, property<edge_index_t, int>>;
    std::set<std::pair<int, int>> seen;
    BG bg(g.n);
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        auto [u, v] = g.edges[e];
        if (u == v || !seen.insert({std::min(u, v), std::max(u, v)}).second)
            throw format_error("graph is not simple");
        add_edge(u, v, e, bg);
    }
    using Edge = graph_traits<BG>::edge_descriptor;
    std::vector<std::vector<Edge>> emb(g.n);
    auto idx = get(vertex_index, bg);
    bool ok = boyer_myrvold_planarity_test(boyer_myrvold_params::graph = bg,
                                           boyer_myrvold_params::embedding =
                                               make_iterator_property_map(emb.begin(), idx));
    if (!ok) throw format_error("graph is not planar");
    auto eid = get(edge_index, bg);
    std::vector<std::vector<int>> rot(g.n);
    for (int v = 0; v < g.n; ++v)
        for (auto& e : emb[v]) rot[v].push_back(get(eid, e));
    int outer = g.edges.empty() ? -1 : 0;
    return build(g.n, g.edges, rot, outer, outer < 0 ? -1 : g.edges[0][0]);
}

}  // namespace tww
