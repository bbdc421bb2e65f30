#include "copbench/constructions.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>
#include <set>

#include "copbench/errors.hpp"
#include "copbench/gf.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

// ---------------------------------------------------------------- incidence

Graph incidence_graph(const ProjectivePlane& plane) {
    const int N = plane.num_points();
    std::vector<std::pair<int, int>> es;
    for (int li = 0; li < N; ++li)
        for (int p : plane.lines[li]) es.emplace_back(p, N + li);
    return Graph::from_edges(2 * N, es);
}

std::vector<std::string> incidence_labels(const ProjectivePlane& plane) {
    std::vector<std::string> labels;
    auto coord = [](const std::array<int, 3>& c) {
        return "(" + std::to_string(c[0]) + "," + std::to_string(c[1]) + "," +
               std::to_string(c[2]) + ")";
    };
    for (const auto& p : plane.points) labels.push_back("point" + coord(p));
    for (const auto& l : plane.points) labels.push_back("line" + coord(l));
    return labels;
}

// ----------------------------------------------------------------- polarity

Graph polarity_graph(int q) {
    ProjectivePlane pl = projective_plane(q);
    GaloisField f(q);
    const int N = pl.num_points();
    auto dot = [&](const std::array<int, 3>& a, const std::array<int, 3>& b) {
        int s = 0;
        for (int i = 0; i < 3; ++i) s = f.add(s, f.mul(a[i], b[i]));
        return s;
    };
    std::vector<std::pair<int, int>> es;
    for (int a = 0; a < N; ++a)
        for (int b = a + 1; b < N; ++b)
            if (dot(pl.points[a], pl.points[b]) == 0) es.emplace_back(a, b);
    return Graph::from_edges(N, es);
}

std::vector<std::string> polarity_labels(int q) {
    ProjectivePlane pl = projective_plane(q);
    std::vector<std::string> labels;
    for (const auto& p : pl.points)
        labels.push_back("(" + std::to_string(p[0]) + "," + std::to_string(p[1]) + "," +
                         std::to_string(p[2]) + ")");
    return labels;
}

// ---------------------------------------------------------------- factorize

namespace {

int regular_degree(const Graph& g) {
    if (g.order() == 0) return 0;
    int k = g.degree(0);
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) != k) return -1;
    return k;
}

// Kuhn's augmenting-path matching on explicit adjacency (left side only).
bool try_kuhn(int u, const std::vector<std::vector<int>>& adj, std::vector<char>& used,
              std::vector<int>& match_of) {
    for (int v : adj[u]) {
        if (used[v]) continue;
        used[v] = 1;
        if (match_of[v] < 0 || try_kuhn(match_of[v], adj, used, match_of)) {
            match_of[v] = u;
            return true;
        }
    }
    return false;
}

// One perfect matching of a bipartite graph given as left-vertex adjacency,
// or empty if none exists.
std::vector<std::pair<int, int>> perfect_matching(const std::vector<int>& left,
                                                  const std::vector<std::vector<int>>& adj,
                                                  int n) {
    std::vector<int> match_of(n, -1);
    for (int u : left) {
        std::vector<char> used(n, 0);
        if (!try_kuhn(u, adj, used, match_of)) return {};
    }
    std::vector<std::pair<int, int>> m;
    for (int v = 0; v < n; ++v)
        if (match_of[v] >= 0) m.emplace_back(match_of[v], v);
    return m;
}

FactorDecomposition one_factorize(const Graph& g) {
    auto colors = bipartition(g);
    if (!colors) fail(Err::NotFactorizable, "1-factorization needs a bipartite host");
    int k = regular_degree(g);
    if (k < 0) fail(Err::NotFactorizable, "1-factorization needs a regular host");
    const int n = g.order();
    std::vector<int> left;
    for (int v = 0; v < n; ++v)
        if ((*colors)[v] == 0) left.push_back(v);

    std::vector<std::vector<int>> adj(n);
    for (int v = 0; v < n; ++v) adj[v] = g.neighbors(v);

    FactorDecomposition fd;
    fd.r = 1;
    for (int round = 0; round < k; ++round) {
        auto m = perfect_matching(left, adj, n);
        if (static_cast<int>(m.size()) * 2 != n)
            fail(Err::NotFactorizable, "no perfect matching remained");
        std::vector<std::pair<int, int>> factor;
        for (auto [u, v] : m) {
            factor.push_back(std::minmax(u, v));
            auto& au = adj[u];
            au.erase(std::find(au.begin(), au.end(), v));
            auto& av = adj[v];
            av.erase(std::find(av.begin(), av.end(), u));
        }
        std::sort(factor.begin(), factor.end());
        fd.factors.push_back(std::move(factor));
    }
    return fd;
}

FactorDecomposition two_factorize(const Graph& g) {
    int k = regular_degree(g);
    if (k < 0 || k % 2 != 0)
        fail(Err::NotFactorizable, "2-factorization needs a regular host of even degree");
    const int n = g.order();

    // Euler orientation per component (all degrees even): arcs u->v.
    std::vector<std::vector<int>> rem(n);
    for (int v = 0; v < n; ++v) rem[v] = g.neighbors(v);
    auto take = [&](int u, int v) {
        auto& a = rem[u];
        a.erase(std::find(a.begin(), a.end(), v));
        auto& b = rem[v];
        b.erase(std::find(b.begin(), b.end(), u));
    };
    std::vector<std::pair<int, int>> arcs;
    for (int s = 0; s < n; ++s) {
        while (!rem[s].empty()) {
            // Hierholzer circuit from s
            std::vector<int> stack{s}, circuit;
            while (!stack.empty()) {
                int u = stack.back();
                if (rem[u].empty()) {
                    circuit.push_back(u);
                    stack.pop_back();
                } else {
                    int v = rem[u].front();
                    take(u, v);
                    stack.push_back(v);
                }
            }
            for (std::size_t i = 0; i + 1 < circuit.size(); ++i)
                arcs.emplace_back(circuit[i], circuit[i + 1]);
        }
    }
    check(static_cast<int>(arcs.size()) == g.edge_count(), "euler orientation lost edges");

    // Out-copy/in-copy bipartite graph: (k/2)-regular, 1-factorize it;
    // each matching picks one out-arc and one in-arc per vertex, i.e. a
    // disjoint union of directed cycles = a 2-factor.
    const int nn = 2 * n;
    std::vector<std::vector<int>> adj(nn);
    for (auto [u, v] : arcs) adj[u].push_back(n + v);
    for (int u = 0; u < n; ++u) {
        std::sort(adj[u].begin(), adj[u].end());
        for (int w : adj[u]) adj[w].push_back(u);
    }
    std::vector<int> leftside(n);
    std::iota(leftside.begin(), leftside.end(), 0);

    FactorDecomposition fd;
    fd.r = 2;
    for (int round = 0; round < k / 2; ++round) {
        auto m = perfect_matching(leftside, adj, nn);
        if (static_cast<int>(m.size()) != n)
            fail(Err::NotFactorizable, "no perfect matching in arc graph");
        std::vector<std::pair<int, int>> factor;
        for (auto [u, w] : m) {
            int v = w - n;
            factor.push_back(std::minmax(u, v));
            auto& au = adj[u];
            au.erase(std::find(au.begin(), au.end(), w));
            auto& aw = adj[w];
            aw.erase(std::find(aw.begin(), aw.end(), u));
        }
        std::sort(factor.begin(), factor.end());
        fd.factors.push_back(std::move(factor));
    }
    return fd;
}

} // namespace

FactorDecomposition factorize(const Graph& g, int r) {
    FactorDecomposition fd;
    if (r == 1)
        fd = one_factorize(g);
    else if (r == 2)
        fd = two_factorize(g);
    else
        fail(Err::NotFactorizable, "only r in {1,2} supported");

    // decomposition postconditions: disjoint, r-regular, union = E(G)
    std::set<std::pair<int, int>> seen;
    for (const auto& f : fd.factors) {
        std::vector<int> deg(g.order(), 0);
        for (auto [u, v] : f) {
            check(g.adjacent(u, v), "factor edge not in host");
            check(seen.insert({u, v}).second, "factors overlap");
            deg[u]++;
            deg[v]++;
        }
        for (int v = 0; v < g.order(); ++v) check(deg[v] == fd.r, "factor not regular");
    }
    check(static_cast<int>(seen.size()) == g.edge_count(), "factors miss edges");
    return fd;
}

Graph strip_factors(const Graph& g, const FactorDecomposition& f, int i, double eps) {
    int k = regular_degree(g);
    if (k < 0) fail(Err::NotFactorizable, "strip needs a regular host");
    int bound = static_cast<int>(std::floor(eps * k / f.r));
    if (i < 1 || i > bound)
        fail(Err::IndexOutOfRange,
             "i=" + std::to_string(i) + " outside 1..floor(eps*k/r)=" + std::to_string(bound));
    check(i <= static_cast<int>(f.factors.size()), "not enough factors");
    std::set<std::pair<int, int>> es;
    for (auto e : g.edges()) es.insert(e);
    for (int j = 0; j < i; ++j)
        for (auto e : f.factors[j]) es.erase(e);
    Graph out =
        Graph::from_edges(g.order(), std::vector<std::pair<int, int>>(es.begin(), es.end()));
    check(regular_degree(out) == k - f.r * i, "stripped degree mismatch");
    return out;
}

// ------------------------------------------------- neighborhood deletion

namespace {

int min_degree_anchor(const Graph& g) {
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (g.degree(v) < g.degree(best)) best = v;
    return best;
}

} // namespace

DeletionVector make_deletion_vector(const Graph& g, double eps, std::vector<int> entries) {
    if (!(eps > 0.0 && eps < 1.0)) fail(Err::FormatError, "eps must be in (0,1)");
    DeletionVector dv;
    dv.anchor = min_degree_anchor(g);
    int delta = g.degree(dv.anchor);
    int a = static_cast<int>(std::ceil(eps * delta));
    const auto& nb = g.neighbors(dv.anchor);
    if (a > static_cast<int>(nb.size())) fail(Err::VectorOutOfRange, "not enough targets");
    dv.targets.assign(nb.begin(), nb.begin() + a);
    if (static_cast<int>(entries.size()) != a)
        fail(Err::BadVectorLength, "need ceil(eps*delta) = " + std::to_string(a) + " entries");
    for (int i = 0; i < a; ++i) {
        int cap = g.degree(dv.targets[i]) - 3;
        if (entries[i] < 0 || entries[i] > cap)
            fail(Err::VectorOutOfRange, "entry " + std::to_string(i) + " outside 0..deg-3");
    }
    dv.entries = std::move(entries);
    return dv;
}

Graph neighborhood_deletion(const Graph& g, const DeletionVector& dv) {
    if (cycle_census(g).c4 != 0) fail(Err::NotC4Free, "host has a C4");
    auto dist = bfs_distances(g, dv.anchor);
    if (dv.targets.size() != dv.entries.size()) fail(Err::BadVectorLength, "targets vs entries");
    std::set<std::pair<int, int>> es;
    for (auto e : g.edges()) es.insert(e);
    for (std::size_t i = 0; i < dv.targets.size(); ++i) {
        int vi = dv.targets[i];
        int xi = dv.entries[i];
        if (xi < 0 || xi > g.degree(vi) - 3) fail(Err::VectorOutOfRange, "entry outside 0..deg-3");
        int removed = 0;
        for (int w : g.neighbors(vi)) {
            if (removed == xi) break;
            if (dist[w] == 2) { // second neighborhood of the anchor
                es.erase(std::minmax(vi, w));
                ++removed;
            }
        }
        check(removed == xi, "not enough second-neighborhood edges");
    }
    Graph out =
        Graph::from_edges(g.order(), std::vector<std::pair<int, int>>(es.begin(), es.end()));
    check(is_connected(out), "deletion disconnected the host");
    return out;
}

// ----------------------------------------------- spanning profile family

namespace {

// Compositions of total into parts nonnegative parts, lexicographic;
// emit returns false to stop the enumeration early.
bool compositions(int total, int parts, std::vector<int>& cur,
                  const std::function<bool(const std::vector<int>&)>& emit) {
    if (parts == 1) {
        cur.push_back(total);
        bool go_on = emit(cur);
        cur.pop_back();
        return go_on;
    }
    for (int first = 0; first <= total; ++first) {
        cur.push_back(first);
        bool go_on = compositions(total - first, parts - 1, cur, emit);
        cur.pop_back();
        if (!go_on) return false;
    }
    return true;
}

} // namespace

std::vector<Graph> spanning_profile_family(const Graph& g, double eps, SpanMode mode,
                                           int max_count) {
    if (!(eps > 0.0 && eps < 1.0)) fail(Err::FormatError, "eps must be in (0,1)");
    Metrics m = metrics(g);
    int delta = m.min_degree;
    int d = 0;
    if (mode == SpanMode::Girth5) {
        if (m.girth.has_value() && *m.girth < 5)
            fail(Err::ModeHypothesisViolated, "girth below 5");
        d = delta - 1;
    } else {
        if (cycle_census(g).c4 != 0) fail(Err::ModeHypothesisViolated, "host has a C4");
        d = delta - 2;
    }
    if (d < 1) fail(Err::DegenerateDegree, "d = " + std::to_string(d) + " < 1");

    int anchor = min_degree_anchor(g);
    int a = static_cast<int>(std::ceil(eps * delta));
    const auto& nb = g.neighbors(anchor);
    std::vector<int> targets(nb.begin(), nb.begin() + a);

    std::set<std::pair<int, int>> base;
    for (auto e : g.edges()) base.insert(e);

    if (mode == SpanMode::C4Free) {
        // make the anchor's neighborhood independent (each vertex there
        // has at most one such edge, the host being C4-free)
        for (std::size_t i = 0; i < nb.size(); ++i)
            for (std::size_t j = i + 1; j < nb.size(); ++j)
                if (g.adjacent(nb[i], nb[j])) base.erase(std::minmax(nb[i], nb[j]));
    }

    auto dist = bfs_distances(g, anchor);
    // trim every target to its d lowest-indexed second-neighborhood edges
    std::vector<std::vector<int>> kept(targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        int vi = targets[i];
        std::vector<int> n2;
        for (int w : g.neighbors(vi))
            if (dist[w] == 2 && base.count(std::minmax(vi, w))) n2.push_back(w);
        if (static_cast<int>(n2.size()) < d)
            fail(Err::ModeHypothesisViolated, "target lacks d second-neighborhood edges");
        for (std::size_t j = d; j < n2.size(); ++j) base.erase(std::minmax(vi, n2[j]));
        n2.resize(d);
        kept[i] = std::move(n2);
    }

    std::vector<Graph> family;
    std::set<std::vector<int>> degree_multisets;
    std::vector<int> cur;
    std::function<bool(const std::vector<int>&)> emit = [&](const std::vector<int>& profile) {
        if (static_cast<int>(family.size()) >= max_count) return false;
        // assign deletion counts: the first profile[0] targets delete 0
        // edges, the next profile[1] delete 1, ...
        std::set<std::pair<int, int>> es = base;
        std::size_t ti = 0;
        for (int j = 0; j < d; ++j)
            for (int rep = 0; rep < profile[j]; ++rep, ++ti)
                for (int del = 0; del < j; ++del)
                    es.erase(std::minmax(targets[ti], kept[ti][del]));
        Graph out =
            Graph::from_edges(g.order(), std::vector<std::pair<int, int>>(es.begin(), es.end()));
        check(is_connected(out), "family member disconnected");
        std::vector<int> degs(out.order());
        for (int v = 0; v < out.order(); ++v) degs[v] = out.degree(v);
        std::sort(degs.begin(), degs.end());
        check(degree_multisets.insert(degs).second, "degree multiset collision in family");
        family.push_back(std::move(out));
        return true;
    };
    compositions(a, d, cur, emit);
    return family;
}

// ------------------------------------------------------------ triangle trim

std::vector<std::array<int, 3>> triangle_list(const Graph& g) {
    std::vector<std::array<int, 3>> ts;
    const int n = g.order();
    for (int u = 0; u < n; ++u)
        for (int v : g.neighbors(u)) {
            if (v <= u) continue;
            for (int w : g.neighbors(u))
                if (w > v && g.adjacent(v, w)) ts.push_back({u, v, w});
        }
    std::sort(ts.begin(), ts.end());
    return ts;
}

Graph triangle_trim(const Graph& g, int t_prime, const std::vector<int>& choice) {
    if (cycle_census(g).c4 != 0) fail(Err::NotC4Free, "host has a C4");
    auto tris = triangle_list(g);
    const int t = static_cast<int>(tris.size());
    if (t_prime < 0 || t_prime > t) fail(Err::BadVectorLength, "t' outside 0..t");
    if (static_cast<int>(choice.size()) != t - t_prime)
        fail(Err::BadVectorLength, "need t - t' = " + std::to_string(t - t_prime) + " choices");
    std::set<std::pair<int, int>> es;
    for (auto e : g.edges()) es.insert(e);
    for (int i = 0; i < t - t_prime; ++i) {
        auto [x, y, z] = tris[i];
        std::pair<int, int> e;
        switch (choice[i]) {
            case 0: e = {x, y}; break;
            case 1: e = {y, z}; break;
            case 2: e = {x, z}; break;
            default: fail(Err::BadVectorLength, "choice entries must be 0, 1 or 2");
        }
        check(es.erase(e) == 1, "triangle edge already removed"); // edge-disjointness
    }
    Graph out =
        Graph::from_edges(g.order(), std::vector<std::pair<int, int>>(es.begin(), es.end()));
    check(cycle_census(out).c3 == t_prime, "trim left wrong triangle count");
    int delta = metrics(g).min_degree;
    check(metrics(out).min_degree >= (delta + 1) / 2, "trim broke the half-degree bound");
    return out;
}

// ------------------------------------------------------------ lex product

Graph lex_product(const Graph& g, const Graph& h) {
    const int nh = h.order();
    std::vector<std::pair<int, int>> es;
    for (auto [u, x] : g.edges())
        for (int v = 0; v < nh; ++v)
            for (int y = 0; y < nh; ++y) es.emplace_back(u * nh + v, x * nh + y);
    for (int u = 0; u < g.order(); ++u)
        for (auto [v, y] : h.edges()) es.emplace_back(u * nh + v, u * nh + y);
    return Graph::from_edges(g.order() * nh, es);
}

std::vector<std::string> lex_labels(const Graph& g, const Graph& h) {
    std::vector<std::string> labels;
    for (int u = 0; u < g.order(); ++u)
        for (int v = 0; v < h.order(); ++v)
            labels.push_back("(" + std::to_string(u) + "," + std::to_string(v) + ")");
    return labels;
}

// ------------------------------------------------------------ double cover

Graph double_cover(const Graph& g) {
    const int n = g.order();
    std::vector<std::pair<int, int>> es;
    for (auto [u, v] : g.edges()) {
        es.emplace_back(u, v + n);
        es.emplace_back(v, u + n);
    }
    return Graph::from_edges(2 * n, es);
}

std::vector<std::string> double_cover_labels(const Graph& g) {
    std::vector<std::string> labels;
    for (int a = 0; a < 2; ++a)
        for (int v = 0; v < g.order(); ++v)
            labels.push_back(std::to_string(v) + "@" + std::to_string(a));
    return labels;
}

// -------------------------------------------------------------------- BF

namespace {

std::vector<std::pair<std::vector<int>, std::vector<int>>> split_lines(
    const ProjectivePlane& pl, std::uint64_t seed) {
    std::vector<std::pair<std::vector<int>, std::vector<int>>> halves;
    for (std::size_t li = 0; li < pl.lines.size(); ++li) {
        std::vector<int> order = pl.lines[li]; // sorted ascending
        std::mt19937_64 rng(seed * 0x9E3779B97F4A7C15ull + li + 1);
        std::shuffle(order.begin(), order.end(), rng);
        std::vector<int> b1, b2;
        for (std::size_t i = 0; i < order.size(); ++i)
            (i % 2 == 0 ? b1 : b2).push_back(order[i]);
        check(b1.size() == b2.size(), "line halves must balance"); // q odd
        halves.emplace_back(std::move(b1), std::move(b2));
    }
    return halves;
}

} // namespace

Graph bf_graph(int q, int m, std::uint64_t split_seed) {
    if (m < 3) fail(Err::CycleTooShort, "m must be at least 3");
    if (q % 2 == 0) fail(Err::EvenOrder, "q must be odd so lines split in half");
    ProjectivePlane pl = projective_plane(q); // NotAPrimePower
    const int N = pl.num_points();
    auto halves = split_lines(pl, split_seed);

    // block vertex (u_j, B) = j*N + B; point vertex (e_j, x) = m*N + j*N + x;
    // cycle edge e_j runs u_j -> u_{j+1}
    std::vector<std::pair<int, int>> es;
    auto bid = [&](int j, int B) { return j * N + B; };
    auto pid = [&](int j, int x) { return m * N + j * N + x; };
    for (int j = 0; j < m; ++j)
        for (int B = 0; B < N; ++B) {
            for (int x : halves[B].first) es.emplace_back(bid(j, B), pid(j, x));
            for (int x : halves[B].second) es.emplace_back(bid((j + 1) % m, B), pid(j, x));
        }
    Graph g = Graph::from_edges(2 * N * m, es);

    // Structural postconditions of the construction.
    check(g.order() == 2 * N * m, "bf order");
    check(g.edge_count() == N * (q + 1) * m, "bf edge count");
    for (int v = 0; v < g.order(); ++v)
        check(g.degree(v) == q + 1, "bf regularity");
    if (!is_connected(g))
        fail(Err::DisconnectedSplit, "split seed " + std::to_string(split_seed) +
                                         " disconnects BF(" + std::to_string(q) + "," +
                                         std::to_string(m) + "); retry with a new seed");
    if (cycle_census(g).c4 != 0)
        fail(Err::SplitPropertyViolated, "BF graph has a C4"); // never expected
    Metrics mt = metrics(g);
    if (!mt.diameter || *mt.diameter != 2 * m)
        fail(Err::SplitPropertyViolated,
             "split seed " + std::to_string(split_seed) + " gives BF(" + std::to_string(q) + "," +
                 std::to_string(m) + ") diameter " +
                 (mt.diameter ? std::to_string(*mt.diameter) : "inf") + ", want " +
                 std::to_string(2 * m) + "; retry with a new seed");
    return g;
}

std::vector<std::string> bf_labels(int q, int m) {
    const int N = q * q + q + 1;
    std::vector<std::string> labels;
    for (int j = 0; j < m; ++j)
        for (int B = 0; B < N; ++B)
            labels.push_back("u" + std::to_string(j) + ":B" + std::to_string(B));
    for (int j = 0; j < m; ++j)
        for (int x = 0; x < N; ++x)
            labels.push_back("e" + std::to_string(j) + ":x" + std::to_string(x));
    return labels;
}

std::uint64_t bf_find_seed(int q, int m, std::uint64_t split_seed, int attempts) {
    std::string last;
    for (int i = 0; i < attempts; ++i) {
        std::uint64_t s = split_seed + static_cast<std::uint64_t>(i);
        try {
            bf_graph(q, m, s);
            return s;
        } catch (const Error& e) {
            if (e.kind() != Err::DisconnectedSplit && e.kind() != Err::SplitPropertyViolated)
                throw;
            last = e.what();
        }
    }
    fail(Err::SplitPropertyViolated,
         "no good split in " + std::to_string(attempts) + " seeds; last: " + last);
}

} // namespace copbench
