#pragma once

#include <optional>
#include <vector>

#include "copbench/certify.hpp"
#include "copbench/graph.hpp"
#include "copbench/hypergraph.hpp"
#include "copbench/rational.hpp"

namespace copbench {

// Nonnegative per-vertex weights with sum(x_v, v in e) >= 1 on every edge.
struct FractionalSolution {
    std::vector<Rational> weights;
    Rational objective;
};

// Optimal fractional blocking value via exact simplex on the dual
// (fractional matching) problem; the returned primal is feasible and the
// dual certificate of equal value is checked internally.
FractionalSolution blocking_lp(const Hypergraph& h);

struct BlockingExact {
    int tau = 0;
    std::vector<int> witness;
};

// Minimum blocking set by iterative-deepening branch and bound, starting
// at ceil(tau*) and branching on the first uncovered edge. limit guards
// the instance size; node budget overrun raises BudgetExceeded.
BlockingExact blocking_exact(const Hypergraph& h, int limit = 30);

struct GreedyReport {
    std::vector<int> chosen;
    int max_degree = 0;      // d
    Rational tau_star;       // from blocking_lp
    bool within_guarantee = false; // |chosen| <= (1+log2 d) tau*, exact
    double guarantee_value = 0.0;  // (1+log2 d) tau* as double, for display
    BoundCertificate certificate;  // kind HyperUpper: |chosen| >= tau
};

// Max-coverage greedy with lowest-index tie-break, plus the exact check
// against the (1 + log2 d) tau* guarantee.
GreedyReport blocking_greedy(const Hypergraph& h);

struct DominationReport {
    std::vector<int> dominating_set; // in fact total dominating
    bool total_dominating = false;
    Rational lp_witness_objective;   // n/delta from x_v = 1/delta
    bool within_bound = false;       // |set| <= (n/delta)(1+log2 Delta), exact
    double bound_value = 0.0;
};

// Greedy blocking of the open-neighborhood hypergraph. IsolatedVertex if
// the minimum degree is 0.
DominationReport domination_bound(const Graph& g);

struct BucketReport {
    FractionalSolution solution;          // x_v = 1/s(v), s(v) = min degree over N(v)
    std::vector<long long> bucket_counts; // |V_0|, |V_1|, ... by powers of omega
    int omega = 0;
    bool feasible = false; // per-edge feasibility, exact
};

// Thm-4.3-style fractional solution with the degree-bucket census.
// Requires min degree >= 1 and omega >= 2.
BucketReport bucket_fractional(const Graph& g, int omega);

// Diameter-length caterpillar: a lexicographically-least shortest path
// realizing the diameter plus all neighbors of its vertices.
struct DLC {
    std::vector<int> path;
    std::vector<int> members; // sorted
};

struct DlcSet {
    std::vector<DLC> dlcs; // one per ordered extremal pair, pair order
    int diameter = 0;
    long long mu1 = 0; // max #DLCs through one vertex
    long long mu2 = 0; // min DLC size
};

DlcSet dlc_enumerate(const Graph& g); // Disconnected

struct DlcCoverResult {
    BoundCertificate certificate; // kind DlcUpper, bound = 5*tau
    DlcSet dlcs;
    std::vector<int> chosen;    // indices into dlcs covering all vertices
    Hypergraph membership;      // one vertex per DLC, one edge h_v per graph vertex
    double formula_bound = 0.0; // 3n log2(d)/d with d = m*diam
    std::optional<bool> vertex_transitive; // nullopt when beyond orbit limit
};

// Greedy blocking of the DLC-membership hypergraph; the certificate
// counts five guarding cops per chosen caterpillar. Errors: Disconnected,
// NotRegular, EmptyEdge.
DlcCoverResult dlc_cover_bound(const Graph& g, int orbit_limit = 64);

} // namespace copbench
