#include "copbench/metrics.hpp"

#include <algorithm>
#include <deque>
#include <limits>

#include "copbench/errors.hpp"

namespace copbench {

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q{src};
    dist[src] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    return dist;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) return true;
    auto d = bfs_distances(g, 0);
    return std::find(d.begin(), d.end(), -1) == d.end();
}

std::optional<std::vector<int>> bipartition(const Graph& g) {
    const int n = g.order();
    std::vector<int> color(n, -1);
    std::deque<int> q;
    for (int s = 0; s < n; ++s) {
        if (color[s] >= 0) continue;
        color[s] = 0;
        q.push_back(s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int v : g.neighbors(u)) {
                if (color[v] < 0) {
                    color[v] = 1 - color[u];
                    q.push_back(v);
                } else if (color[v] == color[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    return color;
}

namespace {

// Shortest cycle via BFS from every vertex: any non-tree edge (u,w) seen
// from root v closes a walk of length dist[u]+dist[w]+1 containing a
// cycle; the minimum over all roots and edges is the girth.
std::optional<int> girth_of(const Graph& g) {
    const int n = g.order();
    int best = std::numeric_limits<int>::max();
    std::vector<int> dist(n), parent(n);
    std::deque<int> q;
    for (int s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[s] = 0;
        q.assign(1, s);
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            if (2 * dist[u] >= best) continue; // cannot improve from here
            for (int w : g.neighbors(u)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push_back(w);
                } else if (w != parent[u] && u != parent[w]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == std::numeric_limits<int>::max()) return std::nullopt;
    return best;
}

} // namespace

Metrics metrics(const Graph& g) {
    Metrics m;
    const int n = g.order();
    if (n == 0) {
        m.connected = true;
        m.diameter = 0;
        return m;
    }
    m.min_degree = std::numeric_limits<int>::max();
    for (int v = 0; v < n; ++v) {
        int d = g.degree(v);
        m.min_degree = std::min(m.min_degree, d);
        m.max_degree = std::max(m.max_degree, d);
        m.degree_histogram[d]++;
    }
    m.connected = true;
    int ecc_max = 0;
    for (int s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (int d : dist) {
            if (d < 0) m.connected = false;
            ecc_max = std::max(ecc_max, d);
        }
        if (!m.connected) break;
    }
    if (m.connected) m.diameter = ecc_max;
    m.girth = girth_of(g);
    return m;
}

bool is_k2t_free(const Graph& g, int t) {
    if (t < 1) fail(Err::FormatError, "is_k2t_free needs t >= 1");
    const int n = g.order();
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const auto& a = g.neighbors(u);
            const auto& b = g.neighbors(v);
            std::size_t i = 0, j = 0;
            int c = 0;
            while (i < a.size() && j < b.size()) {
                if (a[i] == b[j]) {
                    ++c;
                    ++i;
                    ++j;
                } else if (a[i] < b[j]) {
                    ++i;
                } else {
                    ++j;
                }
            }
            if (c >= t) return false;
        }
    }
    return true;
}

CycleCensus cycle_census(const Graph& g) {
    CycleCensus cc;
    const int n = g.order();
    // triangles: u < v adjacent, w > v common neighbor
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(u))
                if (w > v && g.adjacent(v, w)) cc.c3++;
        }
    // C4: v0 smallest, path v0-v1-v2-v3-v0 with v1 < v3
    for (int v0 = 0; v0 < n; ++v0)
        for (int v1 : g.neighbors(v0)) {
            if (v1 <= v0) continue;
            for (int v2 : g.neighbors(v1)) {
                if (v2 <= v0) continue;
                for (int v3 : g.neighbors(v2))
                    if (v3 > v1 && v3 != v2 && g.adjacent(v3, v0)) cc.c4++;
            }
        }
    // C6: v0 smallest, direction normalized by v1 < v5
    std::vector<char> used(n, 0);
    for (int v0 = 0; v0 < n; ++v0) {
        used[v0] = 1;
        for (int v1 : g.neighbors(v0)) {
            if (v1 <= v0) continue;
            used[v1] = 1;
            for (int v2 : g.neighbors(v1)) {
                if (v2 <= v0 || used[v2]) continue;
                used[v2] = 1;
                for (int v3 : g.neighbors(v2)) {
                    if (v3 <= v0 || used[v3]) continue;
                    used[v3] = 1;
                    for (int v4 : g.neighbors(v3)) {
                        if (v4 <= v0 || used[v4]) continue;
                        used[v4] = 1;
                        for (int v5 : g.neighbors(v4)) {
                            if (v5 <= v1 || used[v5]) continue; // v5 > v1 normalizes direction
                            if (g.adjacent(v5, v0)) cc.c6++;
                        }
                        used[v4] = 0;
                    }
                    used[v3] = 0;
                }
                used[v2] = 0;
            }
            used[v1] = 0;
        }
        used[v0] = 0;
    }
    return cc;
}

} // namespace copbench
