#pragma once

#include <vector>

#include "copbench/rational.hpp"

namespace copbench {

// Dense exact-rational simplex for  max c^T x  s.t.  A x <= b, x >= 0,
// with b >= 0 (slack basis is feasible, single phase). Bland's rule, so
// the pivot sequence is deterministic and never cycles.
struct SimplexResult {
    enum class Status { Optimal, Unbounded };
    Status status = Status::Optimal;
    Rational objective;
    std::vector<Rational> x;    // primal solution, size = #vars
    std::vector<Rational> dual; // dual values (one per constraint row)
};

SimplexResult simplex_max(const std::vector<std::vector<Rational>>& A,
                          const std::vector<Rational>& b,
                          const std::vector<Rational>& c);

} // namespace copbench
