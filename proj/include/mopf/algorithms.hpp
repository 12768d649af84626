#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mopf/core.hpp"
#include "mopf/grids.hpp"
#include "mopf/problems.hpp"
#include "mopf/scalarize.hpp"
#include "mopf/solvers.hpp"

namespace mopf {

/// Which front-construction algorithm to run:
///   1: 2 objectives, CHIM grid, weighted-constraint
///   2: 2 objectives, CHIM grid, goal attainment
///   3: 3 objectives, CHIM grid, weighted-constraint
///   4: 3 objectives, CHIM grid, goal attainment
///   5: 3 objectives, sequential boundary grid, weighted-constraint
///   6: 3 objectives, sequential boundary grid, goal attainment
///   7: 4 objectives, sequential boundary grid, weighted-constraint
struct AlgorithmSpec {
  int id = 1;
  int grid_n = 10;
  std::optional<int> pair_n;     // boundary-stage override (algorithms 5-7)
  std::optional<int> triplet_n;  // triplet-stage override (algorithms 5-7)
  std::optional<int> quad_n;     // quadruple-stage override (algorithm 7)
  SolverConfig solver;
  std::optional<std::vector<double>> utopia;  // CHIM algorithms; else problem default
};

struct RunReport {
  std::string problem;
  int algorithm_id = 0;
  int grid_n = 0;
  long subproblems_attempted = 0;  // scalarized node subproblems (minima excluded)
  long minima_solves = 0;
  long lp_solves = 0;
  std::size_t front_size = 0;
  double wall_seconds = 0.0;
};

struct RunResult {
  FrontArchive front;
  RunReport report;
};

using SubproblemObserver = std::function<void(const Subproblem&, const SolveOutcome&)>;

RunResult run_chim_wc(const ProblemDef& p, const AlgorithmSpec& spec,
                      const SubproblemObserver& observer = {});
RunResult run_chim_ps(const ProblemDef& p, const AlgorithmSpec& spec,
                      const SubproblemObserver& observer = {});
RunResult run_sbg_3obj(const ProblemDef& p, const AlgorithmSpec& spec,
                       const SubproblemObserver& observer = {});
RunResult run_sbg_wc_4obj(const ProblemDef& p, const AlgorithmSpec& spec,
                          const SubproblemObserver& observer = {});

/// Dispatches on spec.id after validating it against the problem's
/// objective count.
RunResult run_algorithm(const ProblemDef& p, const AlgorithmSpec& spec,
                        const SubproblemObserver& observer = {});

struct OracleResult {
  FrontArchive front;
  long feasible_count = 0;
};

/// Exact weak front of a pure-integer problem by full enumeration
/// (box <= 1e7 points).
OracleResult brute_force_weak_front(const ProblemDef& p);

}  // namespace mopf
