#include <doctest.h>

#include <sstream>

#include "copbench/certify.hpp"
#include "copbench/sweep.hpp"

using namespace copbench;

TEST_CASE("prime power index sets") {
    CHECK(prime_powers_upto(16) == std::vector<int>{2, 3, 4, 5, 7, 8, 9, 11, 13, 16});
    CHECK(prime_powers_upto(1).empty());
}

TEST_CASE("incidence sweep") {
    SweepOptions opt;
    SweepOutcome out = sweep_incidence(5, opt);
    REQUIRE(out.rows.size() == 4);
    CHECK_FALSE(out.any_failed);
    for (const auto& r : out.rows) {
        CHECK(r.girth == 6);
        CHECK(r.min_degree == r.max_degree);
        CHECK(r.bound == Rational(r.min_degree)); // q+1 for the (q+1)-regular graph
    }
    CHECK(out.audit.constant_at_least(Rational(7, 10)));
}

TEST_CASE("strip sweep bound arithmetic") {
    SweepOptions opt;
    SweepOutcome out = sweep_strip({3, 5}, opt);
    CHECK_FALSE(out.any_failed);
    // rows are (q=3, i=1..2), (q=5, i=1..3) with bound (q+1-i)/2
    REQUIRE(out.rows.size() == 5);
    int idx = 0;
    for (int q : {3, 5})
        for (int i = 1; i <= (q + 1) / 2; ++i, ++idx)
            CHECK(out.rows[idx].bound == Rational(q + 1 - i, 2));
}

TEST_CASE("bf sweep retries split seeds and reports failures honestly") {
    SweepOptions opt;
    opt.seed_retries = 128;
    SweepOutcome good = sweep_bf(3, {3, 4}, opt);
    CHECK_FALSE(good.any_failed);
    for (const auto& r : good.rows) {
        CHECK(r.girth == 6);
        CHECK(r.min_degree == 4);
        CHECK(r.bound == Rational(4));
    }
    CHECK(good.rows[0].diameter == 6);
    CHECK(good.rows[1].diameter == 8);

    // no m = 5 split reaches diameter 10 within a bounded seed scan; the
    // row fails and the sweep continues
    SweepOptions small;
    small.seed_retries = 6;
    SweepOutcome mixed = sweep_bf(3, {3, 5}, small);
    REQUIRE(mixed.rows.size() == 2);
    CHECK_FALSE(mixed.rows[0].failed);
    CHECK(mixed.rows[1].failed);
    CHECK(mixed.any_failed);
}

TEST_CASE("sweep CSV output is deterministic") {
    SweepOptions opt;
    SweepOutcome a = sweep_incidence(4, opt);
    SweepOutcome b = sweep_incidence(4, opt);
    std::ostringstream sa, sb;
    write_sweep_csv(a, sa);
    write_sweep_csv(b, sb);
    CHECK(sa.str() == sb.str());
    CHECK(sa.str().find("params,order,edges") == 0);
    CHECK(sa.str().find("FAILED") == std::string::npos);
}
