#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mopf/scalarize.hpp"

namespace mopf {

struct SolverConfig {
  int multistart_count = 32;
  double penalty_rho0 = 10.0;
  double penalty_growth = 10.0;
  int penalty_rounds = 3;
  double local_tol = 1e-6;
  std::uint64_t rng_seed = 0;
};

enum class SolveStatus { Optimal, Infeasible, BudgetExhausted };

struct SolveOutcome {
  SolveStatus status = SolveStatus::Infeasible;
  std::optional<DecisionPoint> point;
  std::optional<double> value;
  ObjectiveVector image;          // objective values at `point`
  bool anchor_violation = false;  // goal-attainment anchor not strictly below the image
};

/// Exact global solve by enumerating the integer box (all variables must be
/// integer, box size <= 1e7 points). Ties broken by lexicographically
/// largest decision vector.
SolveOutcome solve_integer_enum(const Subproblem& sp);

/// Integer-slice enumeration times multistart penalized local search over
/// the continuous box. Deterministic for a fixed rng_seed. Returns
/// BudgetExhausted when no start reaches feasibility.
SolveOutcome solve_mixed_multistart(const Subproblem& sp, const SolverConfig& cfg);

/// Dispatch: enumeration for pure-integer problems, multistart otherwise.
SolveOutcome solve_subproblem(const Subproblem& sp, const SolverConfig& cfg);

/// Finds lambda >= 0 with sum(lambda) = 1 and sum(lambda_i p_i) = target
/// (within 1e-9) via a phase-1 simplex, or nullopt when target is outside
/// the convex hull.
std::optional<std::vector<double>> lp_feasible_combination(
    const std::vector<std::vector<double>>& points, std::span<const double> target);

}  // namespace mopf
