#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "copbench/graph.hpp"

namespace copbench {

// Hypergraph on dense vertex ids; every edge is a nonempty sorted set.
struct Hypergraph {
    int n = 0;
    std::vector<std::vector<int>> edges;

    // Validates ranges and nonemptiness, sorts and dedups within edges.
    static Hypergraph make(int n, std::vector<std::vector<int>> edges);

    // Max number of edges through one vertex.
    int max_degree() const;
};

// Text format: first line "n e", then e lines of space-separated vertex
// indices (one edge per line).
Hypergraph load_hypergraph(std::istream& in);
Hypergraph load_hypergraph_file(const std::string& path);
void save_hypergraph(const Hypergraph& h, std::ostream& out);

// Open-neighborhood hypergraph: one edge N(w) per vertex w; blocking sets
// of it are exactly the total dominating sets. IsolatedVertex if some
// N(w) is empty.
Hypergraph open_neighborhood_hypergraph(const Graph& g);

} // namespace copbench
