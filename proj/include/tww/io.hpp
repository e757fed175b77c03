#pragma once
#include <iosfwd>
#include <string>

#include "tww/plane_graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

PlaneGraph read_plane(std::istream& in);
void write_plane(std::ostream& out, const PlaneGraph& g, const std::string& comment = "");
Graph read_edge_list(std::istream& in);
void write_edge_list(std::ostream& out, const Graph& g);

// Either format, told apart by the header line.
struct AnyGraph {
    bool plane = false;
    PlaneGraph pg;
    Graph g;
};
AnyGraph read_any_graph(std::istream& in);

ContractionSequence read_sequence(std::istream& in);
void write_sequence(std::ostream& out, const ContractionSequence& s);

PlaneGraph read_plane_file(const std::string& path);
AnyGraph read_any_graph_file(const std::string& path);
ContractionSequence read_sequence_file(const std::string& path);

}  // namespace tww
