#include "copbench/generators.hpp"

#include <random>
#include <set>

#include "copbench/errors.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

Graph cycle_graph(int n) {
    if (n < 3) fail(Err::FormatError, "cycle needs n >= 3");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i) es.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, es);
}

Graph path_graph(int n) {
    if (n < 1) fail(Err::FormatError, "path needs n >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i + 1 < n; ++i) es.emplace_back(i, i + 1);
    return Graph::from_edges(n, es);
}

Graph complete_graph(int n) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph star_graph(int leaves) {
    std::vector<std::pair<int, int>> es;
    for (int i = 1; i <= leaves; ++i) es.emplace_back(0, i);
    return Graph::from_edges(leaves + 1, es);
}

Graph complete_bipartite(int a, int b) {
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < b; ++j) es.emplace_back(i, a + j);
    return Graph::from_edges(a + b, es);
}

Graph petersen_graph() {
    // outer C5 on 0..4, inner pentagram on 5..9, spokes i -- i+5
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < 5; ++i) {
        es.emplace_back(i, (i + 1) % 5);
        es.emplace_back(5 + i, 5 + (i + 2) % 5);
        es.emplace_back(i, i + 5);
    }
    return Graph::from_edges(10, es);
}

Graph circulant_graph(int n, const std::vector<int>& offsets) {
    if (n < 1) fail(Err::FormatError, "circulant needs n >= 1");
    std::set<std::pair<int, int>> es;
    for (int s : offsets) {
        int off = ((s % n) + n) % n;
        if (off == 0) fail(Err::FormatError, "circulant offset 0 mod n");
        for (int i = 0; i < n; ++i) {
            int j = (i + off) % n;
            if (i != j) es.insert(std::minmax(i, j));
        }
    }
    return Graph::from_edges(n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
}

Graph random_graph(int n, int prob_percent, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(0, 99);
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (dist(rng) < prob_percent) es.emplace_back(i, j);
    return Graph::from_edges(n, es);
}

Graph random_connected_graph(int n, int prob_percent, std::uint64_t seed) {
    for (std::uint64_t attempt = 0;; ++attempt) {
        Graph g = random_graph(n, prob_percent, seed + attempt * 0x9e3779b97f4a7c15ull);
        if (is_connected(g)) return g;
    }
}

} // namespace copbench
