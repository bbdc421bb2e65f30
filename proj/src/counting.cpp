#include "copbench/counting.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>

#include "copbench/errors.hpp"

namespace copbench {

double binary_entropy(double x) {
    if (x <= 0.0 || x >= 1.0) return 0.0;
    return -x * std::log2(x) - (1.0 - x) * std::log2(1.0 - x);
}

CountReport profile_count(long long a, long long d) {
    if (a < 1 || d < 1) fail(Err::FormatError, "profile_count needs a, d >= 1");
    CountReport rep;
    rep.a = a;
    rep.d = d;
    rep.exact_count = binomial(a + d - 1, d - 1);
    rep.beta = static_cast<double>(d - 1) / static_cast<double>(a + d - 1);
    rep.entropy_estimate =
        std::exp2(static_cast<double>(a + d - 1) * binary_entropy(rep.beta));
    return rep;
}

Graph star_pack(int a, int d) {
    if (a < 1 || d < 1) fail(Err::FormatError, "star_pack needs a, d >= 1");
    std::vector<std::pair<int, int>> es;
    for (int i = 0; i < a; ++i)
        for (int j = 0; j < d; ++j) es.emplace_back(i, a + i * d + j);
    return Graph::from_edges(a + a * d, es);
}

bool verify_count_lower_bound(const Graph& j, const std::vector<int>& a_side,
                              long long limit) {
    const int n = j.order();
    if (a_side.empty()) fail(Err::HypothesisViolated, "empty A side");
    std::vector<char> in_a(n, 0);
    for (int v : a_side) {
        if (v < 0 || v >= n) fail(Err::FormatError, "A-side vertex out of range");
        if (in_a[v]) fail(Err::FormatError, "A-side vertex repeated");
        in_a[v] = 1;
    }
    // A independent and sharing no neighbors
    std::vector<int> owner(n, -1);
    for (int v : a_side) {
        for (int u : j.neighbors(v)) {
            if (in_a[u]) fail(Err::HypothesisViolated, "A side is not independent");
            if (owner[u] >= 0)
                fail(Err::HypothesisViolated, "A-side vertices share a neighbor");
            owner[u] = v;
        }
    }
    const long long a = static_cast<long long>(a_side.size());
    long long d = j.degree(a_side[0]);
    for (int v : a_side) d = std::min(d, static_cast<long long>(j.degree(v)));
    if (d < 1) fail(Err::HypothesisViolated, "A-side vertex with no neighbors");
    if (d > a) fail(Err::HypothesisViolated, "need d <= a");

    BigInt expected = binomial(a + d - 1, d - 1);
    if (expected > limit) fail(Err::BudgetExceeded, "profile count exceeds limit");

    // trim every A vertex to its d lowest-indexed neighbors
    std::set<std::pair<int, int>> base;
    for (auto e : j.edges()) base.insert(e);
    std::vector<std::vector<int>> kept(a_side.size());
    for (std::size_t i = 0; i < a_side.size(); ++i) {
        const auto& nb = j.neighbors(a_side[i]);
        kept[i].assign(nb.begin(), nb.begin() + d);
        for (std::size_t t = d; t < nb.size(); ++t)
            base.erase(std::minmax(a_side[i], nb[t]));
    }

    // one representative spanning subgraph per profile; distinct degree
    // multisets certify pairwise nonisomorphism
    std::set<std::vector<int>> seen;
    long long built = 0;
    std::vector<int> cur;
    std::function<bool(long long, int)> rec = [&](long long left, int parts) -> bool {
        if (parts == 1) {
            cur.push_back(static_cast<int>(left));
            std::set<std::pair<int, int>> es = base;
            std::size_t ai = 0;
            for (std::size_t jj = 0; jj < cur.size(); ++jj)
                for (int rep = 0; rep < cur[jj]; ++rep, ++ai)
                    for (int del = 0; del < static_cast<int>(jj); ++del)
                        es.erase(std::minmax(a_side[ai], kept[ai][del]));
            Graph sub = Graph::from_edges(
                n, std::vector<std::pair<int, int>>(es.begin(), es.end()));
            std::vector<int> degs(n);
            for (int v = 0; v < n; ++v) degs[v] = sub.degree(v);
            std::sort(degs.begin(), degs.end());
            bool fresh = seen.insert(degs).second;
            cur.pop_back();
            if (!fresh) return false;
            ++built;
            return true;
        }
        for (long long first = 0; first <= left; ++first) {
            cur.push_back(static_cast<int>(first));
            bool ok = rec(left - first, parts - 1);
            cur.pop_back();
            if (!ok) return false;
        }
        return true;
    };
    if (!rec(a, static_cast<int>(d))) return false; // a degree-multiset collision
    return BigInt(built) >= expected;
}

} // namespace copbench
