#include "copbench/strategies.hpp"

#include <algorithm>
#include <deque>
#include <functional>

#include "copbench/errors.hpp"
#include "copbench/metrics.hpp"

namespace copbench {

nlohmann::json trace_json(const Trace& t) {
    nlohmann::json rounds = nlohmann::json::array();
    for (const auto& p : t.rounds) rounds.push_back({{"cops", p.cops}, {"robber", p.robber}});
    nlohmann::json j;
    j["rounds"] = rounds;
    j["outcome"] = t.outcome == Outcome::Captured ? "CAPTURED" : "SURVIVED";
    if (t.outcome == Outcome::Captured) j["capture_round"] = t.capture_round;
    return j;
}

namespace {

void validate_vertex(const Graph& g, int v, const std::string& who) {
    if (v < 0 || v >= g.order()) fail(Err::IllegalMove, who + " vertex out of range");
}

void validate_move(const Graph& g, int from, int to, const std::string& who) {
    validate_vertex(g, to, who);
    if (to != from && !g.adjacent(from, to))
        fail(Err::IllegalMove, who + " moved " + std::to_string(from) + "->" +
                                   std::to_string(to) + " along a non-edge");
}

bool on_cop(const std::vector<int>& cops, int r) {
    return std::find(cops.begin(), cops.end(), r) != cops.end();
}

} // namespace

Trace simulate(const Graph& g, CopController& cops, RobberController& robber, int horizon) {
    Trace tr;
    std::vector<int> cpos = cops.place(g);
    for (int c : cpos) validate_vertex(g, c, "cop");
    int rpos = robber.place(g, cpos);
    validate_vertex(g, rpos, "robber");
    tr.rounds.push_back({cpos, rpos});
    if (on_cop(cpos, rpos)) {
        tr.outcome = Outcome::Captured;
        tr.capture_round = 0;
        return tr;
    }
    for (int round = 1; round <= horizon; ++round) {
        std::vector<int> cnext = cops.step(g, tr.rounds);
        if (cnext.size() != cpos.size()) fail(Err::IllegalMove, "cop count changed");
        for (std::size_t i = 0; i < cpos.size(); ++i) validate_move(g, cpos[i], cnext[i], "cop");
        cpos = std::move(cnext);
        tr.rounds.push_back({cpos, rpos});
        if (on_cop(cpos, rpos)) {
            tr.outcome = Outcome::Captured;
            tr.capture_round = round;
            return tr;
        }
        int rnext = robber.step(g, tr.rounds);
        validate_move(g, rpos, rnext, "robber");
        rpos = rnext;
        tr.rounds.back().robber = rpos;
        if (on_cop(cpos, rpos)) {
            tr.outcome = Outcome::Captured;
            tr.capture_round = round;
            return tr;
        }
    }
    tr.outcome = Outcome::Survived;
    return tr;
}

// ------------------------------------------------------------- robbers

namespace {

// Robber that lives on the degree->= D part and only stands where no cop
// sits or threatens; K_{2,t}-freeness guarantees such vertices exist
// while the cop count is below the certified bound.
class EvadingRobber : public RobberController {
public:
    EvadingRobber(const Graph& g, int D, std::string name) : d_(D), name_(std::move(name)) {
        safe_part_.resize(g.order());
        for (int v = 0; v < g.order(); ++v) safe_part_[v] = g.degree(v) >= D;
    }

    std::string name() const override { return name_; }

    int place(const Graph& g, const std::vector<int>& cops) override {
        for (int v = 0; v < g.order(); ++v)
            if (safe_part_[v] && !threatened(g, cops, v)) return v;
        fail(Err::HypothesisViolated, "no unthreatened start vertex of degree >= " +
                                          std::to_string(d_));
    }

    int step(const Graph& g, const std::vector<Position>& history) override {
        const auto& pos = history.back();
        int cur = pos.robber;
        if (!threatened(g, pos.cops, cur)) return cur; // pass while safe
        for (int v : g.neighbors(cur))
            if (safe_part_[v] && !threatened(g, pos.cops, v)) return v;
        fail(Err::HypothesisViolated,
             "no safe escape: cop count reaches the certified bound");
    }

private:
    bool threatened(const Graph& g, const std::vector<int>& cops, int v) const {
        for (int c : cops)
            if (c == v || g.adjacent(c, v)) return true;
        return false;
    }

    int d_;
    std::vector<char> safe_part_;
    std::string name_;
};

int threshold_defect(const Graph& g, int D) { // k = #vertices of degree < D
    int k = 0;
    for (int v = 0; v < g.order(); ++v)
        if (g.degree(v) < D) ++k;
    return k;
}

} // namespace

std::unique_ptr<RobberController> evasion_lowdeg(const Graph& g, int t, int D) {
    if (!is_k2t_free(g, t))
        fail(Err::HypothesisViolated, "host is not K_{2," + std::to_string(t) + "}-free");
    if (D <= threshold_defect(g, D))
        fail(Err::HypothesisViolated, "threshold D must exceed the low-degree count");
    return std::make_unique<EvadingRobber>(g, D, "evade-lowdeg(t=" + std::to_string(t) +
                                                     ",D=" + std::to_string(D) + ")");
}

std::unique_ptr<RobberController> evasion_girth5(const Graph& g, std::optional<int> D) {
    Metrics m = metrics(g);
    if (m.girth.has_value() && *m.girth < 5) fail(Err::GirthTooSmall, "girth below 5");
    int d = D.value_or(m.min_degree);
    return std::make_unique<EvadingRobber>(g, d, "evade-girth5(D=" + std::to_string(d) + ")");
}

namespace {

int farthest_vertex(const Graph& g, const std::vector<int>& cops) {
    // multi-source BFS from all cops
    std::vector<int> dist(g.order(), -1);
    std::deque<int> q;
    for (int c : cops)
        if (dist[c] < 0) {
            dist[c] = 0;
            q.push_back(c);
        }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                q.push_back(v);
            }
    }
    int best = 0;
    for (int v = 1; v < g.order(); ++v)
        if (dist[v] > dist[best]) best = v;
    return best;
}

class StationaryRobber : public RobberController {
public:
    std::string name() const override { return "stationary"; }
    int place(const Graph& g, const std::vector<int>& cops) override {
        return farthest_vertex(g, cops);
    }
    int step(const Graph&, const std::vector<Position>& history) override {
        return history.back().robber;
    }
};

class SolverRobber : public RobberController {
public:
    explicit SolverRobber(std::shared_ptr<const CopWinSolver> s) : solver_(std::move(s)) {}
    std::string name() const override { return "solver-robber"; }
    int place(const Graph& g, const std::vector<int>& cops) override {
        int r = solver_->safe_robber_placement(cops);
        return r >= 0 ? r : farthest_vertex(g, cops);
    }
    int step(const Graph&, const std::vector<Position>& history) override {
        const auto& pos = history.back();
        int r = solver_->safe_robber_move(pos.cops, pos.robber);
        return r >= 0 ? r : pos.robber; // trapped: pass
    }

private:
    std::shared_ptr<const CopWinSolver> solver_;
};

} // namespace

std::unique_ptr<RobberController> stationary_robber() {
    return std::make_unique<StationaryRobber>();
}

std::unique_ptr<RobberController> solver_robber(std::shared_ptr<const CopWinSolver> solver) {
    return std::make_unique<SolverRobber>(std::move(solver));
}

// --------------------------------------------------------------- cops

namespace {

int graph_center(const Graph& g) {
    int best = 0, best_ecc = -1;
    for (int v = 0; v < g.order(); ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) ecc = std::max(ecc, d); // -1 stays below any ecc
        if (best_ecc < 0 || ecc < best_ecc) {
            best_ecc = ecc;
            best = v;
        }
    }
    return best;
}

std::vector<int> greedy_step(const Graph& g, const std::vector<int>& cops, int robber) {
    auto dist = bfs_distances(g, robber);
    std::vector<int> out;
    out.reserve(cops.size());
    for (int c : cops) {
        if (dist[c] <= 0) {
            out.push_back(c);
            continue;
        }
        int chosen = c;
        for (int v : g.neighbors(c))
            if (dist[v] >= 0 && dist[v] == dist[c] - 1) {
                chosen = v;
                break; // neighbors ascending: lowest-index shortest step
            }
        out.push_back(chosen);
    }
    return out;
}

class StationaryCops : public CopController {
public:
    explicit StationaryCops(int k) : k_(k) {}
    std::string name() const override { return "stationary"; }
    std::vector<int> place(const Graph& g) override {
        std::vector<int> p(k_);
        for (int i = 0; i < k_; ++i) p[i] = i % g.order();
        return p;
    }
    std::vector<int> step(const Graph&, const std::vector<Position>& history) override {
        return history.back().cops;
    }

private:
    int k_;
};

class GreedyCops : public CopController {
public:
    explicit GreedyCops(int k) : k_(k) {}
    std::string name() const override { return "greedy"; }
    std::vector<int> place(const Graph& g) override {
        return std::vector<int>(k_, graph_center(g));
    }
    std::vector<int> step(const Graph& g, const std::vector<Position>& history) override {
        const auto& pos = history.back();
        return greedy_step(g, pos.cops, pos.robber);
    }

private:
    int k_;
};

// Per-index assignment of cops to a target multiset they can reach in one
// move; exists whenever the solver emitted the transition.
std::vector<int> assign_moves(const Graph& g, const std::vector<int>& cops,
                              std::vector<int> target) {
    const int k = static_cast<int>(cops.size());
    std::vector<int> match_of(k, -1); // target slot -> cop index
    std::vector<char> used;
    std::function<bool(int)> augment = [&](int ci) {
        for (int j = 0; j < k; ++j) {
            if (used[j]) continue;
            int tv = target[j];
            if (tv != cops[ci] && !g.adjacent(cops[ci], tv)) continue;
            used[j] = 1;
            if (match_of[j] < 0 || augment(match_of[j])) {
                match_of[j] = ci;
                return true;
            }
        }
        return false;
    };
    for (int ci = 0; ci < k; ++ci) {
        used.assign(k, 0);
        check(augment(ci), "cop move assignment must exist");
    }
    std::vector<int> out(k);
    for (int j = 0; j < k; ++j) out[match_of[j]] = target[j];
    return out;
}

class SolverCops : public CopController {
public:
    explicit SolverCops(std::shared_ptr<const CopWinSolver> s) : solver_(std::move(s)) {}
    std::string name() const override { return "solver-cops"; }
    std::vector<int> place(const Graph& g) override {
        if (solver_->cops_win()) return solver_->winning_opening();
        return std::vector<int>(solver_->k(), graph_center(g));
    }
    std::vector<int> step(const Graph& g, const std::vector<Position>& history) override {
        const auto& pos = history.back();
        if (solver_->cop_turn_win(pos.cops, pos.robber)) {
            auto target = solver_->winning_cop_move(pos.cops, pos.robber);
            return assign_moves(g, pos.cops, std::move(target));
        }
        return greedy_step(g, pos.cops, pos.robber);
    }

private:
    std::shared_ptr<const CopWinSolver> solver_;
};

} // namespace

std::unique_ptr<CopController> stationary_cops(int k) {
    return std::make_unique<StationaryCops>(k);
}

std::unique_ptr<CopController> greedy_cops(int k) { return std::make_unique<GreedyCops>(k); }

std::unique_ptr<CopController> solver_cops(std::shared_ptr<const CopWinSolver> solver) {
    return std::make_unique<SolverCops>(std::move(solver));
}

// ------------------------------------------------- double-cover lifting

namespace {

void require_nonbipartite_connected(const Graph& base) {
    if (!is_connected(base) || bipartition(base).has_value())
        fail(Err::NotNonBipartite,
             "cover lifting needs a connected non-bipartite base graph");
}

class LiftedRobber : public RobberController {
public:
    LiftedRobber(const Graph& base, std::shared_ptr<RobberController> inner)
        : base_(base), inner_(std::move(inner)) {
        require_nonbipartite_connected(base_);
    }

    std::string name() const override { return "lift(" + inner_->name() + ")"; }

    int place(const Graph& g, const std::vector<int>& cops) override {
        check(g.order() == 2 * base_.order(), "cover/base size mismatch");
        int r = inner_->place(base_, project(cops));
        proj_.clear();
        proj_.push_back({project(cops), r});
        return r; // sheet 0
    }

    int step(const Graph&, const std::vector<Position>& history) override {
        const auto& pos = history.back();
        const int n = base_.order();
        int cur = pos.robber;
        int sheet = cur / n;
        int cur_base = cur % n;
        proj_.push_back({project(pos.cops), cur_base});
        int mv = inner_->step(base_, proj_);
        proj_.back().robber = mv;
        if (mv == cur_base) return cur;     // pass lifts to pass
        return mv + (1 - sheet) * n;        // cross to the other sheet
    }

private:
    std::vector<int> project(const std::vector<int>& cover) const {
        std::vector<int> out;
        out.reserve(cover.size());
        for (int c : cover) out.push_back(c % base_.order());
        return out;
    }

    Graph base_;
    std::shared_ptr<RobberController> inner_;
    std::vector<Position> proj_; // the projected game as the inner robber sees it
};

// Every real base move crosses sheets on the cover, so each mirrored
// pair swaps sheets whenever its inner cop moves and the pair keeps
// occupying both copies of the inner cop's vertex.
class DoubledCops : public CopController {
public:
    DoubledCops(const Graph& base, std::shared_ptr<CopController> inner)
        : base_(base), inner_(std::move(inner)) {
        require_nonbipartite_connected(base_);
    }

    std::string name() const override { return "double(" + inner_->name() + ")"; }

    std::vector<int> place(const Graph& g) override {
        check(g.order() == 2 * base_.order(), "cover/base size mismatch");
        inner_rounds_.clear();
        inner_rounds_.push_back(inner_->place(base_));
        sheets_.assign(inner_rounds_.back().size(), 0);
        return cover_positions();
    }

    std::vector<int> step(const Graph&, const std::vector<Position>& history) override {
        const int n = base_.order();
        // rebuild the projected game: inner cop rounds + projected robber
        std::vector<Position> proj;
        for (std::size_t j = 0; j < inner_rounds_.size(); ++j)
            proj.push_back({inner_rounds_[j], history[j].robber % n});
        std::vector<int> mv = inner_->step(base_, proj);
        const auto& prev = inner_rounds_.back();
        check(mv.size() == prev.size(), "inner cop count changed");
        for (std::size_t i = 0; i < mv.size(); ++i)
            if (mv[i] != prev[i]) sheets_[i] ^= 1; // real moves cross sheets
        inner_rounds_.push_back(mv);
        return cover_positions();
    }

private:
    std::vector<int> cover_positions() const {
        const auto& cur = inner_rounds_.back();
        std::vector<int> out;
        out.reserve(2 * cur.size());
        for (std::size_t i = 0; i < cur.size(); ++i)
            out.push_back(cur[i] + sheets_[i] * base_.order());
        for (std::size_t i = 0; i < cur.size(); ++i)
            out.push_back(cur[i] + (1 - sheets_[i]) * base_.order());
        return out;
    }

    Graph base_;
    std::shared_ptr<CopController> inner_;
    std::vector<std::vector<int>> inner_rounds_; // inner cop positions per round
    std::vector<int> sheets_;                    // sheet of the first pair member
};

} // namespace

std::unique_ptr<RobberController> lift_robber(const Graph& base,
                                              std::shared_ptr<RobberController> inner) {
    return std::make_unique<LiftedRobber>(base, std::move(inner));
}

std::unique_ptr<CopController> double_cops(const Graph& base,
                                           std::shared_ptr<CopController> inner) {
    return std::make_unique<DoubledCops>(base, std::move(inner));
}

} // namespace copbench
