#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "copbench/graph.hpp"

namespace copbench {

// Combinatorial ranking of sorted k-multisets over {0..n-1}.
class MultisetIndex {
public:
    MultisetIndex(int n, int k);

    std::uint64_t count() const { return table_[k_ * (n_ + 1) + n_]; }
    std::uint64_t rank(const int* ms) const; // ms sorted, length k
    void unrank(std::uint64_t id, int* out) const;

    int n() const { return n_; }
    int k() const { return k_; }

private:
    int n_, k_;
    std::vector<std::uint64_t> table_; // table_[j*(n+1)+m] = #multisets size j over m symbols
};

struct SolveOptions {
    std::uint64_t budget = 500'000'000; // transition budget; refuse beyond
    bool strategy_table = true;         // keep per-state winning cop moves
};

// Exact game solver: cops place, robber places seeing them, cops move
// first each round, every piece may pass, cops are an unordered multiset.
// Computes the cop-winning region by backward induction (predecessor
// attractor) over all (cop multiset, robber, side-to-move) states.
class CopWinSolver {
public:
    CopWinSolver(Graph g, int k, SolveOptions opt = {}); // Disconnected, BudgetExceeded

    bool cops_win() const { return cops_win_; }
    int k() const { return k_; }
    const Graph& graph() const { return g_; }

    std::uint64_t state_count() const { return states_; }
    std::uint64_t transitions() const { return transitions_; }

    // State queries; cops is any multiset of k vertices (order irrelevant).
    bool cop_turn_win(const std::vector<int>& cops, int robber) const;
    bool robber_turn_win(const std::vector<int>& cops, int robber) const;

    // Optimal play extraction. winning_opening requires cops_win();
    // winning_cop_move requires a cop-turn-winning state and follows the
    // attractor ranks, so repeated use captures in finitely many rounds.
    std::vector<int> winning_opening() const;
    std::vector<int> winning_cop_move(const std::vector<int>& cops, int robber) const;

    // Robber-side extraction for losing-for-cops states: a placement or
    // move keeping the state outside the cop-winning region, -1 if none.
    int safe_robber_placement(const std::vector<int>& cops) const;
    int safe_robber_move(const std::vector<int>& cops, int robber) const;

private:
    Graph g_; // owned: the solver outlives any caller-provided graph
    int k_;
    int n_;
    MultisetIndex idx_;
    std::uint64_t states_ = 0;
    std::uint64_t transitions_ = 0;
    bool cops_win_ = false;
    std::uint64_t opening_ = 0;
    std::vector<std::uint8_t> win_cop_;    // indexed by cop_id*n + robber
    std::vector<std::uint8_t> win_robber_;
    std::vector<std::uint32_t> cop_move_;  // winning successor cop id, if kept

    std::uint64_t sid(std::uint64_t cop_id, int robber) const {
        return cop_id * static_cast<std::uint64_t>(n_) + robber;
    }
    void solve(const SolveOptions& opt);
};

bool k_cops_win(const Graph& g, int k, std::uint64_t budget = SolveOptions{}.budget);

// Least k <= kmax with k_cops_win; ExceedsKmax when even kmax cops lose.
int cop_number(const Graph& g, int kmax, std::uint64_t budget = SolveOptions{}.budget);

} // namespace copbench
