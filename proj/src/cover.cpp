#include "copbench/cover.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "copbench/errors.hpp"
#include "copbench/isomorphism.hpp"
#include "copbench/metrics.hpp"
#include "copbench/simplex.hpp"

namespace copbench {

FractionalSolution blocking_lp(const Hypergraph& h) {
    const int n = h.n;
    const int ne = static_cast<int>(h.edges.size());
    // Solve the fractional-matching dual (max 1.y, y_e summing to <= 1 at
    // every vertex); the primal weights fall out as the slack reduced
    // costs and strong duality is checked exactly.
    std::vector<std::vector<Rational>> A(n, std::vector<Rational>(ne, Rational(0)));
    for (int e = 0; e < ne; ++e)
        for (int v : h.edges[e]) A[v][e] = 1;
    std::vector<Rational> b(n, Rational(1)), c(ne, Rational(1));
    SimplexResult res = simplex_max(A, b, c);
    check(res.status == SimplexResult::Status::Optimal, "matching LP cannot be unbounded");

    // dual of the dual = primal blocking weights
    FractionalSolution sol;
    sol.weights.assign(res.dual.begin(), res.dual.end());
    sol.objective = 0;
    for (const auto& w : sol.weights) {
        check(w >= 0, "negative blocking weight");
        sol.objective += w;
    }
    check(sol.objective == res.objective, "strong duality must hold exactly");
    // primal feasibility: every edge is fractionally blocked
    for (const auto& e : h.edges) {
        Rational s = 0;
        for (int v : e) s += sol.weights[v];
        check(s >= 1, "LP solution misses an edge");
    }
    // dual feasibility: y is a fractional matching of the same value
    Rational ysum = 0;
    for (int e = 0; e < ne; ++e) {
        check(res.x[e] >= 0, "negative matching weight");
        ysum += res.x[e];
    }
    check(ysum == sol.objective, "dual certificate value mismatch");
    std::vector<Rational> load(n, Rational(0));
    for (int e = 0; e < ne; ++e)
        for (int v : h.edges[e]) load[v] += res.x[e];
    for (int v = 0; v < n; ++v) check(load[v] <= 1, "dual certificate infeasible");
    return sol;
}

namespace {

std::vector<int> greedy_blocking(const Hypergraph& h) {
    const int n = h.n;
    std::vector<char> covered(h.edges.size(), 0);
    std::size_t uncovered = h.edges.size();
    std::vector<int> chosen;
    while (uncovered > 0) {
        int best = -1, best_gain = 0;
        for (int v = 0; v < n; ++v) {
            int gain = 0;
            for (std::size_t e = 0; e < h.edges.size(); ++e)
                if (!covered[e] &&
                    std::binary_search(h.edges[e].begin(), h.edges[e].end(), v))
                    ++gain;
            if (gain > best_gain) { // strict: lowest index wins ties
                best_gain = gain;
                best = v;
            }
        }
        check(best >= 0, "uncoverable edge"); // cannot happen: edges nonempty
        chosen.push_back(best);
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            if (!covered[e] && std::binary_search(h.edges[e].begin(), h.edges[e].end(), best)) {
                covered[e] = 1;
                --uncovered;
            }
    }
    return chosen;
}

} // namespace

BlockingExact blocking_exact(const Hypergraph& h, int limit) {
    if (h.n > limit && static_cast<int>(h.edges.size()) > limit)
        fail(Err::BudgetExceeded, "instance beyond the exact-solve limit");
    if (h.edges.empty()) return {0, {}};

    std::vector<int> greedy = greedy_blocking(h);
    Rational tau_star = blocking_lp(h).objective;
    BigInt lb_big = numerator(tau_star) / denominator(tau_star);
    if (lb_big * denominator(tau_star) != numerator(tau_star)) lb_big += 1;
    int lb = static_cast<int>(lb_big);

    const long long node_budget = 50'000'000;
    long long nodes = 0;
    std::vector<int> cover_count(h.edges.size(), 0);
    std::vector<int> current, witness;

    std::function<bool(int)> dfs = [&](int depth_left) -> bool {
        if (++nodes > node_budget) fail(Err::BudgetExceeded, "branch and bound node budget");
        int open = -1;
        for (std::size_t e = 0; e < h.edges.size(); ++e)
            if (cover_count[e] == 0) {
                open = static_cast<int>(e);
                break;
            }
        if (open < 0) {
            witness = current;
            return true;
        }
        if (depth_left == 0) return false;
        for (int v : h.edges[open]) {
            current.push_back(v);
            for (std::size_t e = 0; e < h.edges.size(); ++e)
                if (std::binary_search(h.edges[e].begin(), h.edges[e].end(), v))
                    cover_count[e]++;
            bool found = dfs(depth_left - 1);
            for (std::size_t e = 0; e < h.edges.size(); ++e)
                if (std::binary_search(h.edges[e].begin(), h.edges[e].end(), v))
                    cover_count[e]--;
            current.pop_back();
            if (found) return true;
        }
        return false;
    };

    for (int s = lb; s < static_cast<int>(greedy.size()); ++s) {
        if (dfs(s)) {
            std::sort(witness.begin(), witness.end());
            return {s, witness};
        }
    }
    std::sort(greedy.begin(), greedy.end());
    return {static_cast<int>(greedy.size()), greedy};
}

GreedyReport blocking_greedy(const Hypergraph& h) {
    GreedyReport rep;
    rep.max_degree = h.max_degree();
    rep.certificate.kind = CertKind::HyperUpper;
    if (h.edges.empty()) {
        rep.tau_star = 0;
        rep.within_guarantee = true;
        rep.certificate.bound = 0;
        rep.certificate.params = {{"size", 0}, {"d", 0}};
        rep.certificate.witness = {{"chosen", nlohmann::json::array()}};
        return rep;
    }
    rep.chosen = greedy_blocking(h);
    rep.tau_star = blocking_lp(h).objective;
    Rational ratio = Rational(static_cast<long long>(rep.chosen.size())) / rep.tau_star;
    rep.within_guarantee = le_one_plus_log2(ratio, BigInt(rep.max_degree));
    rep.guarantee_value =
        (1.0 + std::log2(static_cast<double>(rep.max_degree))) * to_double(rep.tau_star);
    rep.certificate.bound = Rational(static_cast<long long>(rep.chosen.size()));
    rep.certificate.params = {{"size", static_cast<long long>(rep.chosen.size())},
                              {"d", rep.max_degree}};
    rep.certificate.witness = {{"chosen", rep.chosen},
                               {"tau_star_num", numerator(rep.tau_star).str()},
                               {"tau_star_den", denominator(rep.tau_star).str()},
                               {"within_lovasz", rep.within_guarantee}};
    return rep;
}

DominationReport domination_bound(const Graph& g) {
    Hypergraph h = open_neighborhood_hypergraph(g); // IsolatedVertex
    const int n = g.order();
    int delta = g.degree(0), Delta = g.degree(0);
    for (int v = 1; v < n; ++v) {
        delta = std::min(delta, g.degree(v));
        Delta = std::max(Delta, g.degree(v));
    }
    DominationReport rep;
    rep.dominating_set = greedy_blocking(h);
    std::sort(rep.dominating_set.begin(), rep.dominating_set.end());
    // every vertex must see a member in its open neighborhood
    rep.total_dominating = true;
    for (int w = 0; w < n; ++w) {
        bool hit = false;
        for (int v : g.neighbors(w))
            if (std::binary_search(rep.dominating_set.begin(), rep.dominating_set.end(), v)) {
                hit = true;
                break;
            }
        if (!hit) rep.total_dominating = false;
    }
    check(rep.total_dominating, "greedy blocking must totally dominate");
    rep.lp_witness_objective = Rational(n, delta);
    // the uniform witness x_v = 1/delta is feasible: deg(w)/delta >= 1
    for (int w = 0; w < n; ++w) check(g.degree(w) >= delta, "degree below minimum");
    // |set| <= (n/delta)(1+log2 Delta), exactly
    Rational ratio = Rational(static_cast<long long>(rep.dominating_set.size())) /
                     rep.lp_witness_objective;
    rep.within_bound = le_one_plus_log2(ratio, BigInt(Delta));
    rep.bound_value = (static_cast<double>(n) / delta) * (1.0 + std::log2(Delta));
    return rep;
}

BucketReport bucket_fractional(const Graph& g, int omega) {
    if (omega < 2) fail(Err::FormatError, "omega must be >= 2");
    const int n = g.order();
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) fail(Err::IsolatedVertex, "vertex " + std::to_string(v));
    BucketReport rep;
    rep.omega = omega;
    std::vector<long long> s(n);
    for (int v = 0; v < n; ++v) {
        long long m = g.degree(g.neighbors(v)[0]);
        for (int u : g.neighbors(v)) m = std::min(m, static_cast<long long>(g.degree(u)));
        s[v] = m;
    }
    rep.solution.weights.resize(n);
    rep.solution.objective = 0;
    for (int v = 0; v < n; ++v) {
        rep.solution.weights[v] = Rational(1, s[v]);
        rep.solution.objective += rep.solution.weights[v];
    }
    // feasibility on every open-neighborhood edge, exactly
    rep.feasible = true;
    for (int w = 0; w < n; ++w) {
        Rational sum = 0;
        for (int v : g.neighbors(w)) sum += rep.solution.weights[v];
        if (sum < 1) rep.feasible = false;
    }
    check(rep.feasible, "bucket solution must be feasible");
    // degree buckets by powers of omega: V_0 holds deg <= omega
    auto bucket_of = [&](int deg) {
        int i = 0;
        long long hi = omega;
        while (deg > hi) {
            ++i;
            hi *= omega;
        }
        return i;
    };
    int maxb = 0;
    for (int v = 0; v < n; ++v) maxb = std::max(maxb, bucket_of(g.degree(v)));
    rep.bucket_counts.assign(maxb + 1, 0);
    for (int v = 0; v < n; ++v) rep.bucket_counts[bucket_of(g.degree(v))]++;
    return rep;
}

DlcSet dlc_enumerate(const Graph& g) {
    const int n = g.order();
    if (n == 0) fail(Err::Disconnected, "empty graph");
    std::vector<std::vector<int>> dist(n);
    for (int v = 0; v < n; ++v) {
        dist[v] = bfs_distances(g, v);
        for (int d : dist[v])
            if (d < 0) fail(Err::Disconnected, "DLCs need a connected graph");
    }
    int diam = 0;
    for (int v = 0; v < n; ++v)
        for (int u = 0; u < n; ++u) diam = std::max(diam, dist[v][u]);

    DlcSet out;
    out.diameter = diam;
    std::vector<long long> containment(n, 0);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (dist[s][t] != diam) continue;
            DLC dlc;
            int cur = s;
            dlc.path.push_back(s);
            while (cur != t) {
                for (int v : g.neighbors(cur)) // ascending: lex-least path
                    if (dist[v][t] == dist[cur][t] - 1) {
                        cur = v;
                        break;
                    }
                dlc.path.push_back(cur);
            }
            std::set<int> members(dlc.path.begin(), dlc.path.end());
            for (int v : dlc.path)
                for (int u : g.neighbors(v)) members.insert(u);
            dlc.members.assign(members.begin(), members.end());
            for (int v : dlc.members) containment[v]++;
            out.dlcs.push_back(std::move(dlc));
        }
    out.mu1 = *std::max_element(containment.begin(), containment.end());
    out.mu2 = out.dlcs.empty() ? 0
                               : static_cast<long long>(out.dlcs[0].members.size());
    for (const auto& d : out.dlcs)
        out.mu2 = std::min(out.mu2, static_cast<long long>(d.members.size()));
    return out;
}

DlcCoverResult dlc_cover_bound(const Graph& g, int orbit_limit) {
    const int n = g.order();
    int m = n > 0 ? g.degree(0) : 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != m) fail(Err::NotRegular, "DLC cover bound needs a regular graph");

    DlcCoverResult res;
    res.dlcs = dlc_enumerate(g); // Disconnected
    const int W = static_cast<int>(res.dlcs.dlcs.size());
    std::vector<std::vector<int>> edges(n);
    for (int w = 0; w < W; ++w)
        for (int v : res.dlcs.dlcs[w].members) edges[v].push_back(w);
    for (int v = 0; v < n; ++v)
        if (edges[v].empty())
            fail(Err::EmptyEdge, "vertex " + std::to_string(v) + " lies in no canonical DLC");
    res.membership = Hypergraph::make(W, edges);
    res.chosen = greedy_blocking(res.membership);

    // the chosen caterpillars must cover every vertex
    std::vector<char> covered(n, 0);
    for (int w : res.chosen)
        for (int v : res.dlcs.dlcs[w].members) covered[v] = 1;
    for (int v = 0; v < n; ++v) check(covered[v], "cover misses a vertex");

    long long tau = static_cast<long long>(res.chosen.size());
    long long d = static_cast<long long>(m) * res.dlcs.diameter;
    res.formula_bound =
        d >= 1 ? 3.0 * n * std::log2(static_cast<double>(d)) / static_cast<double>(d) : 0.0;
    if (n <= orbit_limit) res.vertex_transitive = is_vertex_transitive(g, orbit_limit);

    res.certificate.kind = CertKind::DlcUpper;
    res.certificate.params = {{"tau", tau}, {"degree", m}, {"diameter", res.dlcs.diameter}};
    res.certificate.bound = Rational(5 * tau);
    res.certificate.witness = {{"num_dlcs", W},
                               {"mu1", res.dlcs.mu1},
                               {"mu2", res.dlcs.mu2},
                               {"formula_bound", res.formula_bound},
                               {"covered", true}};
    if (res.vertex_transitive)
        res.certificate.witness["vertex_transitive"] = *res.vertex_transitive;
    else
        res.certificate.witness["vertex_transitive"] = nullptr;
    return res;
}

} // namespace copbench
