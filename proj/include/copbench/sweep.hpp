#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "copbench/certify.hpp"
#include "copbench/rational.hpp"

namespace copbench {

std::vector<int> prime_powers_upto(int q_max);

struct SweepOptions {
    std::string out_dir;                  // empty = don't write member files
    std::uint64_t exact_budget = 0;       // 0 = skip exact cop numbers
    int kmax = 6;
    std::uint64_t seed = 1;               // split seed base (bf rows)
    int seed_retries = 64;                // bf rows scan seed..seed+retries-1
    double eps = 0.5;                     // strip rows
};

struct SweepRow {
    std::string params;
    bool failed = false;
    std::string error;
    long long order = 0;
    long long edge_count = 0;
    int min_degree = 0;
    int max_degree = 0;
    std::optional<int> girth;
    std::optional<int> diameter;
    Rational bound;
    double ratio = 0.0;
    std::optional<int> exact_c;
};

struct SweepOutcome {
    std::vector<SweepRow> rows;
    bool any_failed = false;
    FamilyAudit audit; // over the non-failed rows
};

// Incidence graphs of PG(2,q) for prime powers q <= q_max, girth-5
// certificates.
SweepOutcome sweep_incidence(int q_max, const SweepOptions& opt);

// BF(q,m) for each m, retrying split seeds per row until the structural
// assertions hold; rows record the seed used.
SweepOutcome sweep_bf(int q, const std::vector<int>& ms, const SweepOptions& opt);

// One-factor stripping of incidence graphs: rows (q, i) for
// 1 <= i <= floor(eps*(q+1)), K_{2,2} certificates.
SweepOutcome sweep_strip(const std::vector<int>& qs, const SweepOptions& opt);

void write_sweep_csv(const SweepOutcome& s, std::ostream& out);

} // namespace copbench
