#include "copbench/graph.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

#include "copbench/errors.hpp"

namespace copbench {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) fail(Err::FormatError, "negative vertex count");
    std::vector<std::vector<int>> adj(n);
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            fail(Err::FormatError, "edge endpoint out of range");
        if (u == v) fail(Err::FormatError, "loop edge rejected");
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second) fail(Err::FormatError, "duplicate edge rejected");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());
    Graph g;
    g.adj_ = std::move(adj);
    g.edge_count_ = static_cast<int>(seen.size());
    return g;
}

Graph Graph::from_adjacency(std::vector<std::vector<int>> adj) {
    const int n = static_cast<int>(adj.size());
    long long deg_sum = 0;
    for (int u = 0; u < n; ++u) {
        auto& a = adj[u];
        std::sort(a.begin(), a.end());
        if (std::adjacent_find(a.begin(), a.end()) != a.end())
            fail(Err::FormatError, "repeated neighbor");
        for (int v : a) {
            if (v < 0 || v >= n) fail(Err::FormatError, "neighbor out of range");
            if (v == u) fail(Err::FormatError, "loop rejected");
        }
        deg_sum += static_cast<long long>(a.size());
    }
    // symmetry
    for (int u = 0; u < n; ++u)
        for (int v : adj[u])
            if (!std::binary_search(adj[v].begin(), adj[v].end(), u))
                fail(Err::FormatError, "asymmetric adjacency");
    Graph g;
    g.adj_ = std::move(adj);
    g.edge_count_ = static_cast<int>(deg_sum / 2);
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> es;
    es.reserve(edge_count_);
    for (int u = 0; u < order(); ++u)
        for (int v : adj_[u])
            if (u < v) es.emplace_back(u, v);
    return es;
}

Graph load_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) fail(Err::FormatError, "missing n m header");
    if (n < 0 || m < 0) fail(Err::FormatError, "negative header values");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        int u, v;
        if (!(in >> u >> v)) fail(Err::FormatError, "truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph::from_edges(n, edges);
}

Graph load_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::FormatError, "cannot open " + path);
    return load_edge_list(in);
}

void save_edge_list(const Graph& g, std::ostream& out) {
    out << g.order() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void save_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) fail(Err::FormatError, "cannot write " + path);
    save_edge_list(g, out);
}

} // namespace copbench
