#include "copbench/game.hpp"

#include <algorithm>
#include <deque>

#include "copbench/errors.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

MultisetIndex::MultisetIndex(int n, int k) : n_(n), k_(k) {
    table_.assign(static_cast<std::size_t>(k + 1) * (n + 1), 0);
    for (int m = 0; m <= n; ++m) table_[m] = 1; // size 0
    constexpr std::uint64_t kCap = std::uint64_t(1) << 62; // saturate, never overflow
    for (int j = 1; j <= k; ++j)
        for (int m = 1; m <= n; ++m) {
            std::uint64_t a = table_[j * (n_ + 1) + m - 1];
            std::uint64_t b = table_[(j - 1) * (n_ + 1) + m];
            table_[j * (n_ + 1) + m] = (a > kCap - b) ? kCap : a + b;
        }
}

std::uint64_t MultisetIndex::rank(const int* ms) const {
    std::uint64_t r = 0;
    int mn = 0, kk = k_;
    for (int i = 0; i < k_; ++i) {
        int x = ms[i];
        r += table_[kk * (n_ + 1) + (n_ - mn)] - table_[kk * (n_ + 1) + (n_ - x)];
        mn = x;
        --kk;
    }
    return r;
}

void MultisetIndex::unrank(std::uint64_t id, int* out) const {
    int kk = k_, base = 0, m = n_;
    int pos = 0;
    while (kk > 0) {
        std::uint64_t with_base = table_[(kk - 1) * (n_ + 1) + m];
        if (id < with_base) {
            out[pos++] = base;
            --kk;
        } else {
            id -= with_base;
            ++base;
            --m;
        }
    }
}

CopWinSolver::CopWinSolver(Graph g, int k, SolveOptions opt)
    : g_(std::move(g)), k_(k), n_(g_.order()), idx_(g_.order(), k) {
    if (k < 1) fail(Err::FormatError, "need at least one cop");
    if (n_ < 1) fail(Err::FormatError, "empty graph");
    if (!is_connected(g_)) fail(Err::Disconnected, "solver needs a connected graph");
    constexpr std::uint64_t kStateCap = 20'000'000; // memory guard
    std::uint64_t msets = idx_.count();
    if (msets > kStateCap / (2 * static_cast<std::uint64_t>(n_)))
        fail(Err::BudgetExceeded, "state space too large for in-memory solve");
    states_ = msets * static_cast<std::uint64_t>(n_) * 2;
    if (states_ > opt.budget)
        fail(Err::BudgetExceeded, "state count " + std::to_string(states_) + " over budget " +
                                      std::to_string(opt.budget));
    solve(opt);
}

void CopWinSolver::solve(const SolveOptions& opt) {
    const std::uint64_t C = idx_.count();
    const std::uint64_t S = C * static_cast<std::uint64_t>(n_);
    win_cop_.assign(S, 0);
    win_robber_.assign(S, 0);
    std::vector<std::uint16_t> remaining(S);
    for (std::uint64_t c = 0; c < C; ++c)
        for (int r = 0; r < n_; ++r)
            remaining[sid(c, r)] = static_cast<std::uint16_t>(g_.degree(r) + 1);
    if (opt.strategy_table) cop_move_.assign(S, UINT32_MAX);

    // queue entries: state id * 2 + turn (0 = cops move next, 1 = robber)
    std::deque<std::uint64_t> queue;
    std::vector<int> ms(k_);
    for (std::uint64_t c = 0; c < C; ++c) {
        idx_.unrank(c, ms.data());
        for (int i = 0; i < k_; ++i) {
            if (i > 0 && ms[i] == ms[i - 1]) continue;
            std::uint64_t s = sid(c, ms[i]);
            win_cop_[s] = 1;
            win_robber_[s] = 1;
            if (opt.strategy_table) cop_move_[s] = static_cast<std::uint32_t>(c);
            queue.push_back(s * 2 + 0);
            queue.push_back(s * 2 + 1);
        }
    }

    std::vector<const std::vector<int>*> opts(k_);
    std::vector<int> pos(k_), cur(k_), sorted(k_);
    while (!queue.empty()) {
        std::uint64_t entry = queue.front();
        queue.pop_front();
        int turn = static_cast<int>(entry & 1);
        std::uint64_t s = entry >> 1;
        std::uint64_t c = s / n_;
        int r = static_cast<int>(s % n_);
        if (turn == 1) {
            // (c, r, robber-to-move) is a cop win; every cop multiset that
            // can move onto c wins with that move.
            idx_.unrank(c, ms.data());
            for (int i = 0; i < k_; ++i) {
                opts[i] = &g_.neighbors(ms[i]);
                pos[i] = -1; // -1 encodes "stay"
                cur[i] = ms[i];
            }
            for (;;) {
                transitions_++;
                if (transitions_ > opt.budget)
                    fail(Err::BudgetExceeded, "transition budget exhausted");
                for (int i = 0; i < k_; ++i) sorted[i] = cur[i];
                std::sort(sorted.begin(), sorted.end());
                std::uint64_t c0 = idx_.rank(sorted.data());
                std::uint64_t s0 = sid(c0, r);
                if (!win_cop_[s0]) {
                    win_cop_[s0] = 1;
                    if (!cop_move_.empty()) cop_move_[s0] = static_cast<std::uint32_t>(c);
                    queue.push_back(s0 * 2 + 0);
                }
                // odometer
                int i = 0;
                for (; i < k_; ++i) {
                    if (pos[i] + 1 < static_cast<int>(opts[i]->size())) {
                        ++pos[i];
                        cur[i] = (*opts[i])[pos[i]];
                        break;
                    }
                    pos[i] = -1;
                    cur[i] = ms[i];
                }
                if (i == k_) break;
            }
        } else {
            // (c, r, cops-to-move) is a cop win; robber states one robber
            // move away lose that escape option.
            auto relax = [&](int r0) {
                transitions_++;
                std::uint64_t s0 = sid(c, r0);
                if (!win_robber_[s0] && --remaining[s0] == 0) {
                    win_robber_[s0] = 1;
                    queue.push_back(s0 * 2 + 1);
                }
            };
            relax(r);
            for (int r0 : g_.neighbors(r)) relax(r0);
        }
    }

    // cops win iff some opening multiset beats every robber reply
    cops_win_ = false;
    for (std::uint64_t c = 0; c < C && !cops_win_; ++c) {
        bool all = true;
        for (int r = 0; r < n_ && all; ++r) all = win_cop_[sid(c, r)];
        if (all) {
            cops_win_ = true;
            opening_ = c;
        }
    }
}

namespace {

std::uint64_t rank_of(const MultisetIndex& idx, std::vector<int> cops) {
    check(static_cast<int>(cops.size()) == idx.k(), "cop count mismatch with the solved game");
    std::sort(cops.begin(), cops.end());
    return idx.rank(cops.data());
}

} // namespace

bool CopWinSolver::cop_turn_win(const std::vector<int>& cops, int robber) const {
    return win_cop_[sid(rank_of(idx_, cops), robber)] != 0;
}

bool CopWinSolver::robber_turn_win(const std::vector<int>& cops, int robber) const {
    return win_robber_[sid(rank_of(idx_, cops), robber)] != 0;
}

std::vector<int> CopWinSolver::winning_opening() const {
    check(cops_win_, "cops do not win this game");
    std::vector<int> ms(k_);
    idx_.unrank(opening_, ms.data());
    return ms;
}

std::vector<int> CopWinSolver::winning_cop_move(const std::vector<int>& cops, int robber) const {
    check(!cop_move_.empty(), "strategy table not kept");
    std::uint64_t c = rank_of(idx_, cops);
    std::uint64_t s = sid(c, robber);
    check(win_cop_[s] != 0, "not a cop-winning state");
    std::vector<int> ms(k_);
    idx_.unrank(cop_move_[s], ms.data());
    return ms;
}

int CopWinSolver::safe_robber_placement(const std::vector<int>& cops) const {
    std::uint64_t c = rank_of(idx_, cops);
    for (int r = 0; r < n_; ++r)
        if (!win_cop_[sid(c, r)]) return r;
    return -1;
}

int CopWinSolver::safe_robber_move(const std::vector<int>& cops, int robber) const {
    std::uint64_t c = rank_of(idx_, cops);
    if (!win_cop_[sid(c, robber)]) return robber; // passing stays safe
    for (int r : g_.neighbors(robber))
        if (!win_cop_[sid(c, r)]) return r;
    return -1;
}

bool k_cops_win(const Graph& g, int k, std::uint64_t budget) {
    SolveOptions opt;
    opt.budget = budget;
    opt.strategy_table = false;
    return CopWinSolver(g, k, opt).cops_win();
}

int cop_number(const Graph& g, int kmax, std::uint64_t budget) {
    for (int k = 1; k <= kmax; ++k)
        if (k_cops_win(g, k, budget)) return k;
    fail(Err::ExceedsKmax, "cop number exceeds kmax = " + std::to_string(kmax));
}

} // namespace copbench
