#pragma once

#include <vector>

#include "copbench/graph.hpp"

namespace copbench {

// Exact isomorphism test by backtracking with degree and color-refinement
// pruning. Both orders must be <= limit (SizeExceeded otherwise).
bool are_isomorphic(const Graph& g, const Graph& h, int limit = 64);

// Orbit partition of the vertices under the full automorphism group,
// each orbit sorted, orbits ordered by smallest member.
std::vector<std::vector<int>> vertex_orbits(const Graph& g, int limit = 64);

bool is_vertex_transitive(const Graph& g, int limit = 64);

} // namespace copbench
