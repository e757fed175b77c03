#pragma once
#include "tww/plane_graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// Some planar embedding of an abstract simple graph; throws format_error if g is not planar.
// Not tuned for speed.
PlaneGraph embed(const Graph& g);

}  // namespace tww
