#pragma once

#include <vector>

#include "copbench/graph.hpp"
#include "copbench/rational.hpp"

namespace copbench {

double binary_entropy(double x); // H(0) = H(1) = 0

// Number of degree profiles C(a+d-1, d-1) with its entropy-form
// asymptotic estimate 2^((a+d-1) H((d-1)/(a+d-1))). The estimate is
// reported next to the exact count, never in place of it.
struct CountReport {
    long long a = 0;
    long long d = 0;
    BigInt exact_count;
    double beta = 0.0; // (d-1)/(a+d-1)
    double entropy_estimate = 0.0;
};

CountReport profile_count(long long a, long long d); // a,d >= 1

// Disjoint union of a stars with d leaves each; centers are 0..a-1.
Graph star_pack(int a, int d);

// Checks the profile-counting lower bound on a bipartite host: a_side
// vertices must be independent, share no common neighbors and have
// degree >= d := min degree over a_side, with d <= |a_side|
// (HypothesisViolated otherwise). Enumerates one representative spanning
// subgraph per profile, verifies their degree multisets are pairwise
// distinct and that the count reaches C(a+d-1, d-1). BudgetExceeded when
// the profile count exceeds limit.
bool verify_count_lower_bound(const Graph& j, const std::vector<int>& a_side,
                              long long limit = 1'000'000);

} // namespace copbench
