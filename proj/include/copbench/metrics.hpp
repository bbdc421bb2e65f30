#pragma once

#include <map>
#include <optional>
#include <vector>

#include "copbench/graph.hpp"

namespace copbench {

// Structural summary of a graph. Infinite quantities (diameter of a
// disconnected graph, girth of an acyclic graph) are represented by an
// empty optional rather than a sentinel value.
struct Metrics {
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> diameter; // nullopt iff disconnected
    std::optional<int> girth;    // nullopt iff acyclic
    bool connected = false;
    std::map<int, int> degree_histogram;
};

Metrics metrics(const Graph& g);

std::vector<int> bfs_distances(const Graph& g, int src); // -1 for unreachable
bool is_connected(const Graph& g);

// Proper 2-coloring if one exists (colors 0/1), nullopt when an odd cycle
// obstructs. Disconnected graphs are colored per component.
std::optional<std::vector<int>> bipartition(const Graph& g);

// True iff no two distinct vertices have t or more common neighbors,
// i.e. no K_{2,t} subgraph (not merely induced). Requires t >= 1.
bool is_k2t_free(const Graph& g, int t);

// Exact subgraph counts of C3, C4 and C6, each cycle counted once.
struct CycleCensus {
    long long c3 = 0;
    long long c4 = 0;
    long long c6 = 0;
    bool operator==(const CycleCensus&) const = default;
};

CycleCensus cycle_census(const Graph& g);

} // namespace copbench
