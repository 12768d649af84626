#pragma once

#include <span>
#include <vector>

#include "mopf/core.hpp"
#include "mopf/problems.hpp"

namespace mopf {

/// Nonnegative weights summing to 1. `active` lists the indices with a
/// strictly positive weight; boundary sweeps legitimately carry zeros.
struct WeightVector {
  std::vector<double> w;
  std::vector<int> active;

  static WeightVector make(std::vector<double> w);
};

/// Componentwise shift sigma_i = max(0, 1 - min_i) making every shifted
/// objective at least 1 over the feasible set.
std::vector<double> positivity_offset(const ProblemDef& p,
                                      std::span<const double> minima_images);

/// A scalar subproblem over the base problem's feasible set.
///
/// WeightedConstraint: minimize f_k subject to
///   w_i (f_i + sigma_i - u_i) <= w_k (f_k + sigma_k - u_k)  for active i != k.
/// GoalAttainment: minimize max over active i of w_i (f_i - u_i).
/// The residuals/objective are closed-form in the objective image, so they
/// are evaluated from it directly.
struct Subproblem {
  enum class Kind { WeightedConstraint, GoalAttainment };

  Kind kind = Kind::WeightedConstraint;
  const ProblemDef* problem = nullptr;
  std::vector<double> weights;   // length = number of objectives
  std::vector<int> active;       // indices with weights > 0
  int k = 0;                     // WeightedConstraint: objective minimized
  std::vector<double> offset;    // sigma; zeros for GoalAttainment
  std::vector<double> anchor;    // u; zeros when untranslated

  double scalar_value(const ObjectiveVector& f) const;
  /// Appends nothing for GoalAttainment; one value per active i != k otherwise.
  void residuals(const ObjectiveVector& f, std::vector<double>& out) const;
  std::size_t num_residuals() const;
};

/// Plain minimization of one objective (used for the individual minima).
Subproblem minimize_single(const ProblemDef& p, int objective);

Subproblem build_wc_subproblem(const ProblemDef& p, const WeightVector& w, int k,
                               std::span<const double> sigma,
                               std::span<const double> translation = {});

Subproblem build_ps_subproblem(const ProblemDef& p, const WeightVector& w,
                               std::span<const double> anchor);
Subproblem build_ps_subproblem(const ProblemDef& p, const WeightVector& w,
                               const UtopiaVector& u);

struct WcCandidate {
  int k = 0;
  DecisionPoint x;
  ObjectiveVector f;
};

/// Keeps the candidates passing the pairwise retention test: x_k stays iff
/// f_r(x_r) >= f_r(x_k) for every other candidate r. Coinciding solutions
/// collapse to a single entry. `eps` loosens the comparisons for
/// floating-point images.
std::vector<WcCandidate> resolve_wc_solutions(const std::vector<WcCandidate>& candidates,
                                              double eps = 0.0);

}  // namespace mopf
