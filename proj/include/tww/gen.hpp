#pragma once
#include <cstdint>
#include <random>
#include <string>

#include "tww/plane_graph.hpp"
#include "tww/trigraph.hpp"

namespace tww {

// All generators draw from std::mt19937_64 and reduce with rejection sampling,
// so output depends only on (parameters, seed).
using Rng = std::mt19937_64;
std::uint64_t uniform_below(Rng& rng, std::uint64_t k);

PlaneGraph gen_triangulation(int n, std::uint64_t seed);          // stacked, n >= 4
PlaneGraph gen_stacked_quadrangulation(int n, std::uint64_t seed);  // n >= 4
PlaneGraph gen_grid(int rows, int cols);                          // plain grid, outer face not completed
PlaneGraph gen_grid_quadrangulation(int rows, int cols);          // grid with the outer face quadrangulated

PlaneGraph tetrahedron();
PlaneGraph cube();
PlaneGraph octahedron();
PlaneGraph dodecahedron();
PlaneGraph icosahedron();

// Connected plane graph on n vertices: random edge deletions from a stacked
// triangulation (or quadrangulation when bipartite is set; then n may grow by the
// quadrangulation seed rules, so n >= 2).
PlaneGraph gen_sparse_planar(int n, std::uint64_t seed, bool bipartite = false);

Graph gen_cograph(int n, std::uint64_t seed);

std::string generator_comment(const std::string& kind, std::uint64_t seed, int n);

}  // namespace tww
