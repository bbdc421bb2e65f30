#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace copbench {

// Immutable simple undirected graph on dense 0-based vertex ids.
// Adjacency lists are sorted; symmetry and loop-freeness are validated on
// construction, so a Graph value is always well-formed. Safe to share
// across threads for reads.
class Graph {
public:
    Graph() = default;

    // Builds from an edge list; rejects loops, out-of-range endpoints and
    // duplicate (or reversed-duplicate) edges.
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    // Builds from adjacency lists; sorts them and validates symmetry.
    static Graph from_adjacency(std::vector<std::vector<int>> adj);

    int order() const { return static_cast<int>(adj_.size()); }
    int edge_count() const { return edge_count_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    bool adjacent(int u, int v) const;

    // All edges as u < v pairs in lexicographic order.
    std::vector<std::pair<int, int>> edges() const;

    bool operator==(const Graph& o) const { return adj_ == o.adj_; }

private:
    std::vector<std::vector<int>> adj_;
    int edge_count_ = 0;
};

// Edge-list text format: first line "n m", then m lines "u v".
// Duplicate or reversed edges are rejected on load.
Graph load_edge_list(std::istream& in);
Graph load_edge_list_file(const std::string& path);
void save_edge_list(const Graph& g, std::ostream& out);
void save_edge_list_file(const Graph& g, const std::string& path);

} // namespace copbench
