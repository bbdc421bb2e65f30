#include "copbench/isomorphism.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <numeric>

#include "copbench/errors.hpp"

namespace copbench {

namespace {

// Color refinement to a stable partition; colors are small dense ints.
std::vector<int> wl_colors(const Graph& g) {
    const int n = g.order();
    std::vector<int> col(n);
    for (int v = 0; v < n; ++v) col[v] = g.degree(v);
    // normalize
    for (int round = 0; round < n; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> s;
            s.reserve(g.degree(v) + 1);
            s.push_back(col[v]);
            for (int u : g.neighbors(v)) s.push_back(col[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            auto it = ids.find(sig[v].first);
            if (it == ids.end()) it = ids.emplace(sig[v].first, static_cast<int>(ids.size())).first;
            next[v] = it->second;
        }
        if (next == col) break;
        col = std::move(next);
    }
    return col;
}

// Backtracking mapper g -> h respecting a shared coloring; `forced` pins
// assignments before the search starts.
struct MappingSearch {
    const Graph& g;
    const Graph& h;
    std::vector<int> col_g, col_h;
    std::vector<int> img;  // g vertex -> h vertex or -1
    std::vector<int> pre;  // h vertex -> g vertex or -1

    MappingSearch(const Graph& g_, const Graph& h_) : g(g_), h(h_) {
        col_g = wl_colors(g);
        col_h = wl_colors(h);
        img.assign(g.order(), -1);
        pre.assign(h.order(), -1);
    }

    bool colors_compatible() const {
        auto hist = [](const std::vector<int>& c) {
            std::map<int, int> m;
            for (int x : c) m[x]++;
            return m;
        };
        return hist(col_g) == hist(col_h);
    }

    bool assign(int v, int w) {
        if (col_g[v] != col_h[w] || g.degree(v) != h.degree(w)) return false;
        for (int u = 0; u < g.order(); ++u) {
            if (img[u] < 0 || u == v) continue;
            if (g.adjacent(v, u) != h.adjacent(w, img[u])) return false;
        }
        img[v] = w;
        pre[w] = v;
        return true;
    }

    void unassign(int v) {
        pre[img[v]] = -1;
        img[v] = -1;
    }

    int pick_next() const {
        // prefer vertices touching the mapped region, then rare colors
        int best = -1;
        long long best_key = std::numeric_limits<long long>::min();
        std::map<int, int> class_size;
        for (int c : col_g) class_size[c]++;
        for (int v = 0; v < g.order(); ++v) {
            if (img[v] >= 0) continue;
            int touched = 0;
            for (int u : g.neighbors(v))
                if (img[u] >= 0) ++touched;
            long long key = static_cast<long long>(touched) * 1000000
                            - class_size.at(col_g[v]) * 100 - v;
            if (key > best_key) {
                best_key = key;
                best = v;
            }
        }
        return best;
    }

    bool extend() {
        int v = pick_next();
        if (v < 0) return true; // everything mapped
        for (int w = 0; w < h.order(); ++w) {
            if (pre[w] >= 0) continue;
            if (assign(v, w)) {
                if (extend()) return true;
                unassign(v);
            }
        }
        return false;
    }
};

} // namespace

bool are_isomorphic(const Graph& g, const Graph& h, int limit) {
    if (g.order() > limit || h.order() > limit)
        fail(Err::SizeExceeded, "isomorphism limit " + std::to_string(limit));
    if (g.order() != h.order() || g.edge_count() != h.edge_count()) return false;
    auto degs = [](const Graph& x) {
        std::vector<int> d(x.order());
        for (int v = 0; v < x.order(); ++v) d[v] = x.degree(v);
        std::sort(d.begin(), d.end());
        return d;
    };
    if (degs(g) != degs(h)) return false;
    MappingSearch s(g, h);
    if (!s.colors_compatible()) return false;
    return s.extend();
}

namespace {

bool exists_automorphism(const Graph& g, int from, int to) {
    MappingSearch s(g, g);
    if (!s.assign(from, to)) return false;
    return s.extend();
}

} // namespace

std::vector<std::vector<int>> vertex_orbits(const Graph& g, int limit) {
    const int n = g.order();
    if (n > limit) fail(Err::SizeExceeded, "orbit limit " + std::to_string(limit));
    std::vector<int> rep(n, -1); // orbit representative per vertex
    std::vector<int> reps;
    auto cols = wl_colors(g);
    for (int v = 0; v < n; ++v) {
        for (int r : reps) {
            if (cols[r] != cols[v]) continue; // different classes never mix
            if (exists_automorphism(g, r, v)) {
                rep[v] = r;
                break;
            }
        }
        if (rep[v] < 0) {
            rep[v] = v;
            reps.push_back(v);
        }
    }
    std::vector<std::vector<int>> orbits;
    for (int r : reps) {
        std::vector<int> orbit;
        for (int v = 0; v < n; ++v)
            if (rep[v] == r) orbit.push_back(v);
        orbits.push_back(std::move(orbit));
    }
    return orbits;
}

bool is_vertex_transitive(const Graph& g, int limit) {
    return vertex_orbits(g, limit).size() <= 1;
}

} // namespace copbench
