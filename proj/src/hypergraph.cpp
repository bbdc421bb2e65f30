#include "copbench/hypergraph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "copbench/errors.hpp"

namespace copbench {

Hypergraph Hypergraph::make(int n, std::vector<std::vector<int>> edges) {
    if (n < 0) fail(Err::FormatError, "negative vertex count");
    for (auto& e : edges) {
        if (e.empty()) fail(Err::EmptyEdge, "hyperedge must be nonempty");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        for (int v : e)
            if (v < 0 || v >= n) fail(Err::FormatError, "hyperedge vertex out of range");
    }
    Hypergraph h;
    h.n = n;
    h.edges = std::move(edges);
    return h;
}

int Hypergraph::max_degree() const {
    std::vector<int> deg(n, 0);
    for (const auto& e : edges)
        for (int v : e) deg[v]++;
    int d = 0;
    for (int v = 0; v < n; ++v) d = std::max(d, deg[v]);
    return d;
}

Hypergraph load_hypergraph(std::istream& in) {
    int n = 0, e = 0;
    if (!(in >> n >> e)) fail(Err::FormatError, "missing n e header");
    std::string line;
    std::getline(in, line); // finish header line
    std::vector<std::vector<int>> edges;
    while (static_cast<int>(edges.size()) < e && std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::vector<int> edge;
        int v;
        while (ls >> v) edge.push_back(v);
        edges.push_back(std::move(edge));
    }
    if (static_cast<int>(edges.size()) != e) fail(Err::FormatError, "truncated hypergraph");
    return Hypergraph::make(n, std::move(edges));
}

Hypergraph load_hypergraph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Err::FormatError, "cannot open " + path);
    return load_hypergraph(in);
}

void save_hypergraph(const Hypergraph& h, std::ostream& out) {
    out << h.n << ' ' << h.edges.size() << '\n';
    for (const auto& e : h.edges) {
        for (std::size_t i = 0; i < e.size(); ++i) out << (i ? " " : "") << e[i];
        out << '\n';
    }
}

Hypergraph open_neighborhood_hypergraph(const Graph& g) {
    std::vector<std::vector<int>> edges;
    for (int w = 0; w < g.order(); ++w) {
        if (g.degree(w) == 0)
            fail(Err::IsolatedVertex, "vertex " + std::to_string(w) + " has no neighbors");
        edges.push_back(g.neighbors(w));
    }
    return Hypergraph::make(g.order(), std::move(edges));
}

} // namespace copbench
