#pragma once

#include <span>
#include <vector>

#include "mopf/problems.hpp"
#include "mopf/scalarize.hpp"
#include "mopf/solvers.hpp"

namespace mopf {

struct MinimaResult {
  std::vector<DecisionPoint> points;    // one global minimizer per objective
  std::vector<ObjectiveVector> images;  // full image at each minimizer
  std::vector<double> diagonal;         // diagonal[i] = images[i][i]
};

/// Solves min f_i over the feasible set for every objective.
/// Throws std::runtime_error when some minimization is infeasible.
MinimaResult individual_minima(const ProblemDef& p, const SolverConfig& cfg);

struct ChimGrid {
  int partitions = 0;
  std::vector<WeightVector> weights;
};

/// Two-objective grid: endpoint weights a, b from the utopia-anchored
/// quotient phi_1 = (f2-u2)/((f1-u1)+(f2-u2)), nodes a + j(b-a)/N for
/// j = 0..N.
ChimGrid chim_weights_pair(const ObjectiveVector& image1, const ObjectiveVector& image2,
                           const UtopiaVector& u, int N);

/// Three-objective grid: vertex weights a, b, c from the pairwise-product
/// quotient, filled in by the nested interpolation
///   w_hat = a + i1 (c-a)/N,  w_tld = b + i1 (c-b)/N,
///   node  = w_hat + i2 (w_tld - w_hat)/(N - i1),
/// i1 = 0..N-1, i2 = 0..N-i1. The vertex c itself is not emitted; callers
/// cover it with the third individual minimum.
ChimGrid chim_weights_triple(const ObjectiveVector& image1, const ObjectiveVector& image2,
                             const ObjectiveVector& image3, const UtopiaVector& u, int N);

struct DirectionWeights {
  std::vector<double> v;  // per subset coordinate
  std::vector<double> w;  // v normalized to sum 1 (uniform fallback)
};

/// Ray direction over an objective subset:
/// v_j = max over i in subset of f_j(minimizer_i) - f_j(minimizer_j).
/// `images` holds the full minimizer images indexed like `subset`.
DirectionWeights direction_vector(const std::vector<ObjectiveVector>& images,
                                  const std::vector<int>& subset);

struct SbgRaySet {
  std::vector<double> direction;    // subset-space ray direction
  std::vector<double> ray_weights;  // normalized direction
  std::vector<std::vector<double>> base_points;  // on the reference hyperplane
  double anchor = 0.0;              // ray_weights . z over the hyperplane
  int lp_solves = 0;
  bool degenerate = false;
};

/// Base points for the interior sweep: project the boundary images along
/// the ray direction onto the hyperplane w.z = min w.z, lay a uniform
/// barycentric grid (denominator N) over the projections' bounding simplex,
/// and keep the interior nodes certified inside the projected convex hull.
SbgRaySet sbg_base_points(const std::vector<std::vector<double>>& boundary,
                          std::span<const double> ray_weights, int N);

}  // namespace mopf
