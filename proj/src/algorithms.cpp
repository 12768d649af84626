#include "mopf/algorithms.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <stdexcept>

namespace mopf {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct RunState {
  const ProblemDef& p;
  const AlgorithmSpec& spec;
  const SubproblemObserver& observer;
  RunReport report;
  std::vector<FrontEntry> entries;
  Clock::time_point t0 = Clock::now();

  RunState(const ProblemDef& p, const AlgorithmSpec& spec, const SubproblemObserver& obs)
      : p(p), spec(spec), observer(obs) {
    report.problem = p.name();
    report.algorithm_id = spec.id;
    report.grid_n = spec.grid_n;
  }

  SolveOutcome solve(const Subproblem& sp, bool count_as_node) {
    SolveOutcome out = solve_subproblem(sp, spec.solver);
    if (count_as_node) ++report.subproblems_attempted;
    if (observer) observer(sp, out);
    return out;
  }

  double retention_eps() const { return p.pure_integer() ? 0.0 : 1e-9; }

  void add_retained(const std::vector<WcCandidate>& retained) {
    for (const auto& c : retained) entries.push_back({c.x, c.f});
  }

  /// Solves (P_w^k) for every active k at one node and keeps the
  /// candidates passing the pairwise retention test.
  void wc_node(const WeightVector& w, std::span<const double> sigma,
               std::span<const double> translation) {
    std::vector<WcCandidate> candidates;
    for (int k : w.active) {
      Subproblem sp = build_wc_subproblem(p, w, k, sigma, translation);
      SolveOutcome res = solve(sp, true);
      if (res.status == SolveStatus::Optimal && res.point)
        candidates.push_back({k, *res.point, res.image});
    }
    if (!candidates.empty()) add_retained(resolve_wc_solutions(candidates, retention_eps()));
  }

  void ps_node(const WeightVector& w, std::span<const double> anchor) {
    Subproblem sp = build_ps_subproblem(p, w, anchor);
    SolveOutcome res = solve(sp, true);
    if (res.status == SolveStatus::Optimal && res.point)
      entries.push_back({*res.point, res.image});
  }

  RunResult finish() {
    RunResult out;
    out.front = filter_weak_front(std::move(entries), p.dominance_eps());
    report.front_size = out.front.size();
    report.wall_seconds = seconds_since(t0);
    out.report = report;
    return out;
  }
};

UtopiaVector resolve_utopia(const ProblemDef& p, const AlgorithmSpec& spec,
                            const MinimaResult& minima) {
  if (spec.utopia) return make_utopia(*spec.utopia, minima.diagonal);
  return default_utopia(p, minima.diagonal);
}

MinimaResult solve_minima(RunState& st) {
  MinimaResult minima;
  const std::size_t ell = st.p.num_objectives();
  minima.diagonal.resize(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    SolveOutcome res = st.solve(minimize_single(st.p, static_cast<int>(i)), false);
    ++st.report.minima_solves;
    if (res.status != SolveStatus::Optimal || !res.point)
      throw std::runtime_error("individual minimum of objective " + std::to_string(i + 1) +
                               " not found (infeasible problem?)");
    minima.points.push_back(*res.point);
    minima.images.push_back(res.image);
    minima.diagonal[i] = res.image[i];
  }
  return minima;
}

/// Embeds subset-space weights into a full-length weight vector.
WeightVector embed_weights(std::size_t ell, const std::vector<int>& subset,
                           std::span<const double> w_sub) {
  std::vector<double> w(ell, 0.0);
  double sum = 0.0;
  for (std::size_t j = 0; j + 1 < subset.size(); ++j) {
    w[subset[j]] = w_sub[j];
    sum += w_sub[j];
  }
  w[subset.back()] = 1.0 - sum;  // exact complement keeps the sum at 1
  return WeightVector::make(std::move(w));
}

std::vector<double> embed_anchor(std::size_t ell, const std::vector<int>& subset,
                                 std::span<const double> u_sub) {
  std::vector<double> u(ell, 0.0);
  for (std::size_t j = 0; j < subset.size(); ++j) u[subset[j]] = u_sub[j];
  return u;
}

std::vector<double> restrict_to(const ObjectiveVector& image,
                                const std::vector<int>& subset) {
  std::vector<double> out(subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) out[j] = image[subset[j]];
  return out;
}

/// Scalarization weights tracing the ray {u + t v}: the equal-value locus
/// of w_i (f_i - u_i) is a line with direction (1/w_i), so the weights are
/// the normalized reciprocals of the direction components.
std::vector<double> ray_scalarization_weights(const DirectionWeights& dir) {
  std::vector<double> w(dir.v.size());
  bool all_positive = true;
  for (double v : dir.v)
    if (!(v > 0)) all_positive = false;
  if (!all_positive) {
    std::fill(w.begin(), w.end(), 1.0 / w.size());
    return w;
  }
  double sum = 0.0;
  for (std::size_t j = 0; j < w.size(); ++j) {
    w[j] = 1.0 / dir.v[j];
    sum += w[j];
  }
  for (double& x : w) x /= sum;
  return w;
}

/// Boundary sweep over one objective pair: base points walk the segment
/// between the two minimizer images while the ray direction stays fixed.
/// The translated subproblems carry no extra offset; positivity is a
/// statement about the untranslated objectives only.
void pair_sweep(RunState& st, const MinimaResult& minima, int i, int k, int N,
                bool goal_attainment, std::vector<ObjectiveVector>* boundary_out) {
  const std::size_t ell = st.p.num_objectives();
  const std::vector<int> subset{i, k};
  DirectionWeights dir =
      direction_vector({minima.images[i], minima.images[k]}, subset);
  WeightVector w = embed_weights(ell, subset, ray_scalarization_weights(dir));
  const std::vector<double> sigma(ell, 0.0);

  for (int j = 1; j < N; ++j) {
    double ci = static_cast<double>(N - j) / N;
    double ck = 1.0 - ci;
    std::vector<double> u_sub(2);
    u_sub[0] = ci * minima.images[i][i] + ck * minima.images[k][i];
    u_sub[1] = ci * minima.images[i][k] + ck * minima.images[k][k];
    std::vector<double> u = embed_anchor(ell, subset, u_sub);

    std::size_t before = st.entries.size();
    if (goal_attainment)
      st.ps_node(w, u);
    else
      st.wc_node(w, sigma, u);
    if (boundary_out)
      for (std::size_t e = before; e < st.entries.size(); ++e)
        boundary_out->push_back(st.entries[e].f);
  }
}

void ray_sweep(RunState& st, const std::vector<int>& subset, const DirectionWeights& dir,
               const std::vector<std::vector<double>>& base_points, bool goal_attainment,
               std::vector<ObjectiveVector>* boundary_out) {
  const std::size_t ell = st.p.num_objectives();
  WeightVector w = embed_weights(ell, subset, ray_scalarization_weights(dir));
  const std::vector<double> sigma(ell, 0.0);
  for (const auto& base : base_points) {
    std::vector<double> u = embed_anchor(ell, subset, base);
    std::size_t before = st.entries.size();
    if (goal_attainment)
      st.ps_node(w, u);
    else
      st.wc_node(w, sigma, u);
    if (boundary_out)
      for (std::size_t e = before; e < st.entries.size(); ++e)
        boundary_out->push_back(st.entries[e].f);
  }
}

}  // namespace

RunResult run_chim_wc(const ProblemDef& p, const AlgorithmSpec& spec,
                      const SubproblemObserver& observer) {
  const std::size_t ell = p.num_objectives();
  if (ell != 2 && ell != 3)
    throw std::invalid_argument("CHIM weighted-constraint run needs 2 or 3 objectives");
  if (spec.grid_n < 1) throw std::invalid_argument("grid size must be >= 1");

  RunState st(p, spec, observer);
  MinimaResult minima = solve_minima(st);
  UtopiaVector u = resolve_utopia(p, spec, minima);
  // The utopia translation already makes every f_i - u_i positive, and the
  // vertex weights are calibrated to rays anchored exactly at u; an extra
  // shift would move the anchor and lose the boundary solutions.
  const std::vector<double> sigma(ell, 0.0);

  if (ell == 2) {
    ChimGrid grid = chim_weights_pair(minima.images[0], minima.images[1], u, spec.grid_n);
    // the skipped endpoint weight is covered by the appended minimizer image
    for (int j = 0; j < spec.grid_n; ++j) st.wc_node(grid.weights[j], sigma, u.values);
  } else {
    ChimGrid grid = chim_weights_triple(minima.images[0], minima.images[1],
                                        minima.images[2], u, spec.grid_n);
    for (const auto& w : grid.weights) st.wc_node(w, sigma, u.values);
  }
  st.entries.push_back({minima.points.back(), minima.images.back()});
  return st.finish();
}

RunResult run_chim_ps(const ProblemDef& p, const AlgorithmSpec& spec,
                      const SubproblemObserver& observer) {
  const std::size_t ell = p.num_objectives();
  if (ell != 2 && ell != 3)
    throw std::invalid_argument("CHIM goal-attainment run needs 2 or 3 objectives");
  if (spec.grid_n < 1) throw std::invalid_argument("grid size must be >= 1");

  RunState st(p, spec, observer);
  MinimaResult minima = solve_minima(st);
  UtopiaVector u = resolve_utopia(p, spec, minima);

  if (ell == 2) {
    ChimGrid grid = chim_weights_pair(minima.images[0], minima.images[1], u, spec.grid_n);
    for (int j = 0; j < spec.grid_n; ++j) st.ps_node(grid.weights[j], u.values);
  } else {
    ChimGrid grid = chim_weights_triple(minima.images[0], minima.images[1],
                                        minima.images[2], u, spec.grid_n);
    for (const auto& w : grid.weights) st.ps_node(w, u.values);
  }
  return st.finish();
}

RunResult run_sbg_3obj(const ProblemDef& p, const AlgorithmSpec& spec,
                       const SubproblemObserver& observer) {
  const std::size_t ell = p.num_objectives();
  if (ell != 3)
    throw std::invalid_argument("sequential-boundary 3-objective run needs 3 objectives");
  const bool goal_attainment = spec.id == 6;
  const int pair_n = spec.pair_n.value_or(spec.grid_n);
  const int triplet_n = spec.triplet_n.value_or(spec.grid_n);
  if (pair_n < 1 || triplet_n < 1) throw std::invalid_argument("grid size must be >= 1");

  RunState st(p, spec, observer);
  MinimaResult minima = solve_minima(st);

  std::vector<ObjectiveVector> boundary = minima.images;
  for (std::size_t i = 0; i < minima.points.size(); ++i)
    st.entries.push_back({minima.points[i], minima.images[i]});

  const int pairs[3][2] = {{0, 1}, {1, 2}, {0, 2}};
  for (const auto& pr : pairs)
    pair_sweep(st, minima, pr[0], pr[1], pair_n, goal_attainment, &boundary);

  const std::vector<int> subset{0, 1, 2};
  DirectionWeights dir = direction_vector(minima.images, subset);
  std::vector<std::vector<double>> boundary3(boundary.begin(), boundary.end());
  SbgRaySet rays = sbg_base_points(boundary3, dir.w, triplet_n);
  st.report.lp_solves += rays.lp_solves;
  if (!rays.degenerate)
    ray_sweep(st, subset, dir, rays.base_points, goal_attainment, nullptr);

  return st.finish();
}

RunResult run_sbg_wc_4obj(const ProblemDef& p, const AlgorithmSpec& spec,
                          const SubproblemObserver& observer) {
  const std::size_t ell = p.num_objectives();
  if (ell != 4)
    throw std::invalid_argument("sequential-boundary 4-objective run needs 4 objectives");
  const int pair_n = spec.pair_n.value_or(spec.grid_n);
  const int triplet_n = spec.triplet_n.value_or(spec.grid_n);
  const int quad_n = spec.quad_n.value_or(spec.grid_n);
  if (pair_n < 1 || triplet_n < 1 || quad_n < 1)
    throw std::invalid_argument("grid size must be >= 1");

  RunState st(p, spec, observer);
  MinimaResult minima = solve_minima(st);

  for (std::size_t i = 0; i < minima.points.size(); ++i)
    st.entries.push_back({minima.points[i], minima.images[i]});

  // pair boundary fronts; bookkeeping feeds the triplet base points
  const int pairs[6][2] = {{0, 1}, {1, 2}, {2, 3}, {0, 2}, {0, 3}, {1, 3}};
  std::vector<std::vector<ObjectiveVector>> pair_points(6);
  for (int q = 0; q < 6; ++q)
    pair_sweep(st, minima, pairs[q][0], pairs[q][1], pair_n, false, &pair_points[q]);

  // triplet interior sweeps
  const std::vector<std::vector<int>> triplets = {
      {0, 1, 2}, {1, 2, 3}, {0, 2, 3}, {0, 1, 3}};
  for (const auto& T : triplets) {
    std::vector<std::vector<double>> boundary;
    for (int t : T) boundary.push_back(restrict_to(minima.images[t], T));
    for (int q = 0; q < 6; ++q) {
      bool inside = std::find(T.begin(), T.end(), pairs[q][0]) != T.end() &&
                    std::find(T.begin(), T.end(), pairs[q][1]) != T.end();
      if (!inside) continue;
      for (const auto& img : pair_points[q]) boundary.push_back(restrict_to(img, T));
    }
    std::vector<ObjectiveVector> images;
    for (int t : T) images.push_back(minima.images[t]);
    DirectionWeights dir = direction_vector(images, T);
    SbgRaySet rays = sbg_base_points(boundary, dir.w, triplet_n);
    st.report.lp_solves += rays.lp_solves;
    if (!rays.degenerate)
      ray_sweep(st, T, dir, rays.base_points, false, nullptr);
  }

  // quadruple sweep over base points built from everything found so far
  const std::vector<int> all{0, 1, 2, 3};
  std::vector<std::vector<double>> boundary4;
  for (const auto& e : st.entries) boundary4.push_back(e.f);
  DirectionWeights dir4 = direction_vector(minima.images, all);
  SbgRaySet rays4 = sbg_base_points(boundary4, dir4.w, quad_n);
  st.report.lp_solves += rays4.lp_solves;
  if (!rays4.degenerate)
    ray_sweep(st, all, dir4, rays4.base_points, false, nullptr);

  return st.finish();
}

RunResult run_algorithm(const ProblemDef& p, const AlgorithmSpec& spec,
                        const SubproblemObserver& observer) {
  switch (spec.id) {
    case 1:
    case 2:
      if (p.num_objectives() != 2)
        throw std::invalid_argument("algorithms 1-2 need a 2-objective problem");
      break;
    case 3:
    case 4:
    case 5:
    case 6:
      if (p.num_objectives() != 3)
        throw std::invalid_argument("algorithms 3-6 need a 3-objective problem");
      break;
    case 7:
      if (p.num_objectives() != 4)
        throw std::invalid_argument("algorithm 7 needs a 4-objective problem");
      break;
    default:
      throw std::invalid_argument("unknown algorithm id " + std::to_string(spec.id) +
                                  " (expected 1..7)");
  }
  switch (spec.id) {
    case 1:
    case 3: return run_chim_wc(p, spec, observer);
    case 2:
    case 4: return run_chim_ps(p, spec, observer);
    case 5:
    case 6: return run_sbg_3obj(p, spec, observer);
    default: return run_sbg_wc_4obj(p, spec, observer);
  }
}

OracleResult brute_force_weak_front(const ProblemDef& p) {
  if (!p.pure_integer())
    throw std::invalid_argument("brute force oracle needs a pure-integer problem");
  const auto& idx = p.integer_index();
  if (idx.empty()) throw std::invalid_argument("problem has no variables");

  double box = 1.0;
  std::vector<long long> lo(idx.size()), hi(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    lo[i] = static_cast<long long>(p.variables()[idx[i]].lower);
    hi[i] = static_cast<long long>(p.variables()[idx[i]].upper);
    box *= static_cast<double>(hi[i] - lo[i] + 1);
  }
  if (box > 1e7) throw std::invalid_argument("integer box exceeds 1e7 points");

  OracleResult out;
  std::vector<FrontEntry> feasible;
  std::vector<double> full;
  ObjectiveVector f;
  std::vector<double> g;
  std::vector<long long> x = lo;
  for (;;) {
    p.assemble(x, {}, full);
    p.constraint_values(full, g);
    bool ok = true;
    for (double v : g)
      if (!(v <= 0.0)) {
        ok = false;
        break;
      }
    if (ok) {
      p.objective_values(full, f);
      feasible.push_back({DecisionPoint{x, {}}, f});
    }
    std::size_t d = idx.size();
    bool done = false;
    while (d > 0) {
      --d;
      if (++x[d] <= hi[d]) break;
      x[d] = lo[d];
      if (d == 0) done = true;
    }
    if (done) break;
  }
  out.feasible_count = static_cast<long>(feasible.size());
  if (!feasible.empty()) out.front = filter_weak_front(std::move(feasible), 0.0);
  return out;
}

}  // namespace mopf
