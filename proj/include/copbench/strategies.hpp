#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "copbench/game.hpp"
#include "copbench/graph.hpp"

namespace copbench {

struct Position {
    std::vector<int> cops;
    int robber = -1;
};

enum class Outcome { Captured, Survived };

struct Trace {
    std::vector<Position> rounds; // rounds[0] = initial placements
    Outcome outcome = Outcome::Survived;
    int capture_round = -1;
};

nlohmann::json trace_json(const Trace& t);

// Deterministic decision rules. step() sees the full position history
// (history.back() is the current position); cop moves are reported
// per-index, each to a neighbor of the previous vertex or a pass.
class CopController {
public:
    virtual ~CopController() = default;
    virtual std::string name() const = 0;
    virtual std::vector<int> place(const Graph& g) = 0;
    virtual std::vector<int> step(const Graph& g, const std::vector<Position>& history) = 0;
};

class RobberController {
public:
    virtual ~RobberController() = default;
    virtual std::string name() const = 0;
    virtual int place(const Graph& g, const std::vector<int>& cops) = 0;
    virtual int step(const Graph& g, const std::vector<Position>& history) = 0;
};

// Plays the round order of the solver (cops place, robber places, cops
// move first) for at most horizon rounds. IllegalMove if a controller
// emits a non-neighbor move.
Trace simulate(const Graph& g, CopController& cops, RobberController& robber, int horizon);

// -------- robber strategies --------

// Evader for K_{2,t}-free hosts: lives on the vertices of degree >= D and
// only ever stands where no cop sits or threatens. HypothesisViolated
// eagerly if the host is not K_{2,t}-free or D is not a valid threshold,
// lazily if no safe vertex exists (cop count at or above the bound).
std::unique_ptr<RobberController> evasion_lowdeg(const Graph& g, int t, int D);

// Same evader under a girth >= 5 hypothesis; D defaults to the minimum
// degree. GirthTooSmall if the girth is below 5.
std::unique_ptr<RobberController> evasion_girth5(const Graph& g, std::optional<int> D = {});

std::unique_ptr<RobberController> stationary_robber();

// Optimal evading robber backed by a solved game; plays safe moves while
// they exist, lowest-index otherwise.
std::unique_ptr<RobberController> solver_robber(std::shared_ptr<const CopWinSolver> solver);

// -------- cop strategies --------

std::unique_ptr<CopController> stationary_cops(int k);

// Each cop steps along a shortest path toward the robber (lowest-index
// tie-break); places all cops on a lowest-index center vertex.
std::unique_ptr<CopController> greedy_cops(int k);

// Optimal cops from a solved winning game (falls back to greedy play in
// states outside the winning region).
std::unique_ptr<CopController> solver_cops(std::shared_ptr<const CopWinSolver> solver);

// -------- double-cover lifting --------
// Both require the base graph to be connected and non-bipartite
// (NotNonBipartite), so its double cover is connected. The cover uses
// the double_cover vertex convention (v,a) = v + a*n.

// Robber on B(G): projects cop positions to G, consults the inner
// strategy there, and realizes its moves sheet-alternatingly.
std::unique_ptr<RobberController> lift_robber(const Graph& base,
                                              std::shared_ptr<RobberController> inner);

// 2k cops on B(G): mirrors an inner k-cop strategy on both sheets,
// feeding it the projected robber position.
std::unique_ptr<CopController> double_cops(const Graph& base,
                                           std::shared_ptr<CopController> inner);

} // namespace copbench
