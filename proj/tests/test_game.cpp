#include <doctest.h>

#include <algorithm>

#include "copbench/constructions.hpp"
#include "copbench/errors.hpp"
#include "copbench/game.hpp"
#include "copbench/generators.hpp"
#include "copbench/metrics.hpp"
#include "copbench/strategies.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace copbench;

TEST_CASE("multiset ranking is a bijection") {
    for (int n = 1; n <= 8; ++n)
        for (int k = 1; k <= 4; ++k) {
            MultisetIndex idx(n, k);
            std::vector<int> ms(k);
            for (std::uint64_t id = 0; id < idx.count(); ++id) {
                idx.unrank(id, ms.data());
                CHECK(std::is_sorted(ms.begin(), ms.end()));
                CHECK(idx.rank(ms.data()) == id);
            }
        }
}

TEST_CASE("one cop wins on every tree up to 12 vertices") {
    for (const auto& t : oracles::all_trees(12)) CHECK(k_cops_win(t, 1));
}

TEST_CASE("cycles need exactly two cops") {
    for (int n = 4; n <= 12; ++n) {
        CHECK_FALSE(k_cops_win(cycle_graph(n), 1));
        CHECK(k_cops_win(cycle_graph(n), 2));
        CHECK(cop_number(cycle_graph(n), 3) == 2);
    }
    CHECK(cop_number(cycle_graph(3), 2) == 1); // triangle is cop-win
}

TEST_CASE("named cop numbers") {
    CHECK(cop_number(cycle_graph(5), 3) == 2);
    CHECK(cop_number(petersen_graph(), 4) == 3);
    CHECK(cop_number(corpus::heawood(), 4) == 3);
    CHECK(cop_number(complete_graph(5), 2) == 1);
    CHECK(cop_number(complete_bipartite(3, 3), 4) == 2);
}

TEST_CASE("winning is monotone in the cop count") {
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        Graph g = random_connected_graph(6 + static_cast<int>(seed % 3), 35, seed * 29 + 11);
        bool prev = false;
        for (int k = 1; k <= 3; ++k) {
            bool win = k_cops_win(g, k);
            if (prev) CHECK(win);
            prev = win;
        }
    }
}

TEST_CASE("solver errors") {
    CHECK_THROWS_AS(k_cops_win(Graph::from_edges(4, {{0, 1}, {2, 3}}), 1), Error);
    CHECK_THROWS_AS(k_cops_win(cycle_graph(8), 2, 10), Error); // budget
    CHECK_THROWS_AS(cop_number(cycle_graph(6), 1), Error);     // ExceedsKmax
}

TEST_CASE("simulation basics") {
    Graph path = path_graph(6);
    auto cops = greedy_cops(1);
    auto robber = stationary_robber();
    Trace tr = simulate(path, *cops, *robber, 50);
    CHECK(tr.outcome == Outcome::Captured);

    // solver cops capture an optimal robber when they should win
    Graph c4 = cycle_graph(4);
    auto solver2 = std::make_shared<CopWinSolver>(c4, 2);
    REQUIRE(solver2->cops_win());
    auto sc = solver_cops(solver2);
    auto sr = solver_robber(solver2);
    Trace t2 = simulate(c4, *sc, *sr, 50);
    CHECK(t2.outcome == Outcome::Captured);

    // and an optimal robber escapes a losing cop count
    auto solver1 = std::make_shared<CopWinSolver>(c4, 1);
    REQUIRE_FALSE(solver1->cops_win());
    auto sc1 = solver_cops(solver1);
    auto sr1 = solver_robber(solver1);
    Trace t3 = simulate(c4, *sc1, *sr1, 200);
    CHECK(t3.outcome == Outcome::Survived);
}

namespace {

// cop controller pinned to a fixed opening, greedy afterwards
class PinnedGreedyCops : public CopController {
public:
    PinnedGreedyCops(std::vector<int> opening) : opening_(std::move(opening)) {}
    std::string name() const override { return "pinned-greedy"; }
    std::vector<int> place(const Graph&) override { return opening_; }
    std::vector<int> step(const Graph& g, const std::vector<Position>& history) override {
        auto inner = greedy_cops(static_cast<int>(opening_.size()));
        return inner->step(g, history);
    }

private:
    std::vector<int> opening_;
};

} // namespace

TEST_CASE("low-degree evader survives below the certified bound") {
    Graph hw = corpus::heawood();
    // bound (D-k)/t = 3/2, so one cop is below it; try every opening
    for (int start = 0; start < hw.order(); ++start) {
        PinnedGreedyCops cops({start});
        auto robber = evasion_lowdeg(hw, 2, 3);
        Trace tr = simulate(hw, cops, *robber, 300);
        CHECK(tr.outcome == Outcome::Survived);
        for (const auto& pos : tr.rounds) CHECK(hw.degree(pos.robber) >= 3);
    }
}

TEST_CASE("girth-5 evader survives two cops on Petersen") {
    Graph pet = petersen_graph();
    auto solver = std::make_shared<CopWinSolver>(pet, 2);
    REQUIRE_FALSE(solver->cops_win()); // c(Petersen) = 3
    auto cops = solver_cops(solver);
    auto robber = evasion_girth5(pet);
    Trace tr = simulate(pet, *cops, *robber, 1000);
    CHECK(tr.outcome == Outcome::Survived);
}

TEST_CASE("evader never visits the low-degree part") {
    auto es = petersen_graph().edges();
    es.emplace_back(0, 10); // pendant vertex of degree 1
    Graph pp = Graph::from_edges(11, es);
    PinnedGreedyCops cops({10});
    auto robber = evasion_lowdeg(pp, 2, 3);
    Trace tr = simulate(pp, cops, *robber, 300);
    CHECK(tr.outcome == Outcome::Survived);
    for (const auto& pos : tr.rounds) CHECK(pp.degree(pos.robber) >= 3);
}

TEST_CASE("evader hypothesis failures") {
    CHECK_THROWS_AS(evasion_lowdeg(complete_bipartite(2, 3), 2, 3), Error); // K_{2,3}
    CHECK_THROWS_AS(evasion_girth5(complete_graph(4)), Error);              // girth 3

    // two cops on C5 exceed the bound (D-k)/t = 1 and can threaten every
    // vertex at placement; the evader reports the hypothesis failure
    Graph c5 = cycle_graph(5);
    PinnedGreedyCops cornering({1, 4}); // both neighbors of 0
    auto evader = evasion_lowdeg(c5, 2, 2);
    try {
        simulate(c5, cornering, *evader, 10);
        FAIL("expected HypothesisViolated");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::HypothesisViolated);
    }
}

namespace {

class TeleportingRobber : public RobberController {
public:
    std::string name() const override { return "teleporter"; }
    int place(const Graph&, const std::vector<int>&) override { return 3; }
    int step(const Graph& g, const std::vector<Position>& history) override {
        return (history.back().robber + 2) % g.order(); // not a neighbor on a cycle
    }
};

} // namespace

TEST_CASE("illegal strategy moves are rejected") {
    Graph c6 = cycle_graph(6);
    auto cops = stationary_cops(1);
    TeleportingRobber bad;
    try {
        simulate(c6, *cops, bad, 10);
        FAIL("expected IllegalMove");
    } catch (const Error& e) {
        CHECK(e.kind() == Err::IllegalMove);
    }
}

TEST_CASE("double cover sandwich machinery") {
    // K3: c = 1; B(K3) = C6 with c = 2 <= 2
    Graph k3 = complete_graph(3);
    CHECK(cop_number(k3, 2) == 1);
    Graph b = double_cover(k3);
    CHECK(cop_number(b, 3) == 2);

    // doubled cops realize the upper half: 2 cops capture on the cover
    auto base_solver = std::make_shared<CopWinSolver>(k3, 1);
    REQUIRE(base_solver->cops_win());
    std::shared_ptr<CopController> inner(solver_cops(base_solver));
    auto doubled = double_cops(k3, inner);
    auto cover_solver = std::make_shared<CopWinSolver>(b, 2);
    auto evader = solver_robber(cover_solver);
    Trace tr = simulate(b, *doubled, *evader, 200);
    CHECK(tr.outcome == Outcome::Captured);

    // lifted robber realizes the lower half: surviving strategy lifts
    Graph c5 = cycle_graph(5);
    auto c5_solver = std::make_shared<CopWinSolver>(c5, 1);
    REQUIRE_FALSE(c5_solver->cops_win());
    std::shared_ptr<RobberController> rinner(solver_robber(c5_solver));
    auto lifted = lift_robber(c5, rinner);
    Graph c10 = double_cover(c5);
    auto chase_solver = std::make_shared<CopWinSolver>(c10, 1);
    auto chasers = solver_cops(chase_solver);
    Trace tr2 = simulate(c10, *chasers, *lifted, 500);
    CHECK(tr2.outcome == Outcome::Survived);

    // Petersen: c = 3, lifted robber survives 2 cops on the cover
    Graph pet = petersen_graph();
    auto pet2 = std::make_shared<CopWinSolver>(pet, 2);
    REQUIRE_FALSE(pet2->cops_win());
    std::shared_ptr<RobberController> pr(solver_robber(pet2));
    auto plift = lift_robber(pet, pr);
    Graph pcover = double_cover(pet);
    auto pchase = std::make_shared<CopWinSolver>(pcover, 2);
    auto pcops = solver_cops(pchase);
    Trace tr3 = simulate(pcover, *pcops, *plift, 500);
    CHECK(tr3.outcome == Outcome::Survived);

    CHECK_THROWS_AS(lift_robber(cycle_graph(4), rinner), Error);  // bipartite base
    CHECK_THROWS_AS(double_cops(cycle_graph(6), inner), Error);
}

TEST_CASE("lexicographic products keep the cop number") {
    Graph h2 = complete_graph(2);
    Graph empty2 = Graph::from_edges(2, {});
    for (int n : {4, 5, 6}) {
        Graph g = cycle_graph(n);
        int c = cop_number(g, 3);
        REQUIRE(c == 2);
        CHECK(cop_number(lex_product(g, h2), 3) == c);
        CHECK(cop_number(lex_product(g, empty2), 3) == c);
    }
}
