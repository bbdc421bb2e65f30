#pragma once

#include <cstdint>
#include <vector>

#include "copbench/graph.hpp"

namespace copbench {

Graph cycle_graph(int n);     // n >= 3
Graph path_graph(int n);      // n >= 1
Graph complete_graph(int n);
Graph star_graph(int leaves); // K_{1,leaves}, center = 0
Graph complete_bipartite(int a, int b);
Graph petersen_graph();
Graph circulant_graph(int n, const std::vector<int>& offsets);

// Erdos-Renyi-style G(n, p) with p = prob_percent/100, deterministic in seed.
Graph random_graph(int n, int prob_percent, std::uint64_t seed);

// Rejection-samples random_graph until connected.
Graph random_connected_graph(int n, int prob_percent, std::uint64_t seed);

} // namespace copbench
