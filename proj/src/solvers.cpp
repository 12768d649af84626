#include "mopf/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <stdexcept>

namespace mopf {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kScalarizationTol = 1e-9;  // guard for exact-tie residuals

double extra_tol(const ProblemDef& p) {
  return std::max(p.feasibility_eps(), kScalarizationTol);
}

/// Evaluation state shared by both solvers.
struct Eval {
  const Subproblem& sp;
  const ProblemDef& p;
  std::vector<double> full, g, res;
  ObjectiveVector f;

  explicit Eval(const Subproblem& sp) : sp(sp), p(*sp.problem) {}

  void at(std::span<const long long> ints, std::span<const double> conts) {
    p.assemble(ints, conts, full);
    p.objective_values(full, f);
  }

  bool base_feasible() {
    p.constraint_values(full, g);
    const double eps = p.feasibility_eps();
    for (double v : g)
      if (!(v <= eps)) return false;
    return true;
  }

  bool extras_feasible() {
    sp.residuals(f, res);
    const double tol = extra_tol(p);
    for (double v : res)
      if (!(v <= tol)) return false;
    return true;
  }

  double objective() const { return sp.scalar_value(f); }
};

bool anchor_violated(const Subproblem& sp, const ObjectiveVector& f) {
  if (sp.kind != Subproblem::Kind::GoalAttainment) return false;
  for (int i : sp.active)
    if (f[i] <= sp.anchor[i]) return true;
  return false;
}

/// Tie order among equal-value minimizers: prefer the one whose image is
/// lexicographically largest (worst in the remaining objectives), then the
/// lexicographically largest decision vector. Sweeps rely on this to
/// surface the weakly-dominated front members a level set hides.
bool tie_improves(const ObjectiveVector& f_new, const DecisionPoint& x_new,
                  const ObjectiveVector& f_old, const DecisionPoint& x_old) {
  if (f_new != f_old)
    return std::lexicographical_compare(f_old.begin(), f_old.end(), f_new.begin(),
                                        f_new.end());
  return lex_less(x_old, x_new);
}

}  // namespace

SolveOutcome solve_integer_enum(const Subproblem& sp) {
  const ProblemDef& p = *sp.problem;
  if (!p.pure_integer())
    throw std::invalid_argument("solve_integer_enum: problem has continuous variables");
  const auto& idx = p.integer_index();
  if (idx.empty()) throw std::invalid_argument("solve_integer_enum: empty variable box");

  double box = 1.0;
  std::vector<long long> lo(idx.size()), hi(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    const auto& v = p.variables()[idx[i]];
    lo[i] = static_cast<long long>(v.lower);
    hi[i] = static_cast<long long>(v.upper);
    box *= static_cast<double>(hi[i] - lo[i] + 1);
  }
  if (box > 1e7) throw std::invalid_argument("solve_integer_enum: box exceeds 1e7 points");

  Eval ev(sp);
  std::vector<long long> x = lo;
  std::vector<double> no_cont;
  SolveOutcome out;
  double best = kInf;
  DecisionPoint best_point;
  ObjectiveVector best_image;
  bool found = false;

  for (;;) {
    ev.at(x, no_cont);
    if (ev.base_feasible() && ev.extras_feasible()) {
      double val = ev.objective();
      DecisionPoint cand{x, {}};
      if (!found || val < best ||
          (val == best && tie_improves(ev.f, cand, best_image, best_point))) {
        found = true;
        best = val;
        best_point = std::move(cand);
        best_image = ev.f;
      }
    }
    // odometer, last variable fastest
    std::size_t d = idx.size();
    while (d > 0) {
      --d;
      if (++x[d] <= hi[d]) break;
      x[d] = lo[d];
      if (d == 0) {
        if (!found) return out;  // Infeasible
        out.status = SolveStatus::Optimal;
        out.point = std::move(best_point);
        out.value = best;
        out.image = std::move(best_image);
        out.anchor_violation = anchor_violated(sp, out.image);
        return out;
      }
    }
  }
}

namespace {

/// Derivative-free simplex-reflection (Nelder-Mead) search over a box;
/// evaluation clamps into the box, so iterates may be projected.
class SimplexSearch {
 public:
  SimplexSearch(std::span<const double> lo, std::span<const double> hi)
      : lo_(lo.begin(), lo.end()), hi_(hi.begin(), hi.end()), n_(lo.size()) {}

  template <typename F>
  std::vector<double> minimize(F&& fn, std::vector<double> start, double tol,
                               int max_iter) const {
    const std::size_t n = n_;
    clamp(start);
    if (n == 0) return start;

    std::vector<std::vector<double>> pts(n + 1, start);
    std::vector<double> vals(n + 1);
    for (std::size_t i = 0; i < n; ++i) {
      double step = 0.1 * (hi_[i] - lo_[i]);
      if (step == 0) step = 1e-3;
      auto& q = pts[i + 1];
      q[i] = (q[i] + step <= hi_[i]) ? q[i] + step : q[i] - step;
    }
    for (std::size_t i = 0; i <= n; ++i) vals[i] = fn(pts[i]);

    std::vector<double> centroid(n), cand(n);
    for (int iter = 0; iter < max_iter; ++iter) {
      // order: best first
      std::vector<std::size_t> ord(n + 1);
      for (std::size_t i = 0; i <= n; ++i) ord[i] = i;
      std::sort(ord.begin(), ord.end(),
                [&](std::size_t a, std::size_t b) { return vals[a] < vals[b]; });
      const std::size_t best = ord[0], worst = ord[n], second_worst = ord[n - 1];

      double spread = 0;
      for (std::size_t i = 0; i < n; ++i) {
        double lo = pts[best][i], hi = lo;
        for (std::size_t k = 0; k <= n; ++k) {
          lo = std::min(lo, pts[k][i]);
          hi = std::max(hi, pts[k][i]);
        }
        spread = std::max(spread, hi - lo);
      }
      if (spread < tol && std::fabs(vals[worst] - vals[best]) < tol) break;

      std::fill(centroid.begin(), centroid.end(), 0.0);
      for (std::size_t k = 0; k <= n; ++k) {
        if (k == worst) continue;
        for (std::size_t i = 0; i < n; ++i) centroid[i] += pts[k][i];
      }
      for (auto& c : centroid) c /= static_cast<double>(n);

      auto blend = [&](double t) {
        for (std::size_t i = 0; i < n; ++i)
          cand[i] = centroid[i] + t * (centroid[i] - pts[worst][i]);
        clamp(cand);
        return fn(cand);
      };

      double fr = blend(1.0);  // reflect
      if (fr < vals[ord[0]]) {
        std::vector<double> refl = cand;
        double fe = blend(2.0);  // expand
        if (fe < fr) {
          pts[worst] = cand;
          vals[worst] = fe;
        } else {
          pts[worst] = refl;
          vals[worst] = fr;
        }
      } else if (fr < vals[second_worst]) {
        pts[worst] = cand;
        vals[worst] = fr;
      } else {
        double fc = blend(fr < vals[worst] ? 0.5 : -0.5);  // contract
        if (fc < std::min(fr, vals[worst])) {
          pts[worst] = cand;
          vals[worst] = fc;
        } else {
          for (std::size_t k = 0; k <= n; ++k) {  // shrink toward best
            if (k == best) continue;
            for (std::size_t i = 0; i < n; ++i)
              pts[k][i] = pts[best][i] + 0.5 * (pts[k][i] - pts[best][i]);
            clamp(pts[k]);
            vals[k] = fn(pts[k]);
          }
        }
      }
    }

    std::size_t best = 0;
    for (std::size_t i = 1; i <= n; ++i)
      if (vals[i] < vals[best]) best = i;
    clamp(pts[best]);  // evaluation clamps, so the clamp has the same value
    return pts[best];
  }

  void clamp(std::vector<double>& x) const {
    for (std::size_t i = 0; i < n_; ++i) x[i] = std::clamp(x[i], lo_[i], hi_[i]);
  }

 private:
  std::vector<double> lo_, hi_;
  std::size_t n_;
};

/// Latin-hypercube starts over the continuous box, deterministic per seed.
std::vector<std::vector<double>> stratified_starts(std::span<const double> lo,
                                                   std::span<const double> hi, int count,
                                                   std::uint64_t seed) {
  const std::size_t n = lo.size();
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<std::vector<double>> starts(count, std::vector<double>(n));
  for (std::size_t d = 0; d < n; ++d) {
    std::vector<int> strata(count);
    for (int s = 0; s < count; ++s) strata[s] = s;
    std::shuffle(strata.begin(), strata.end(), rng);
    for (int s = 0; s < count; ++s) {
      double t = (strata[s] + unit(rng)) / count;
      starts[s][d] = lo[d] + t * (hi[d] - lo[d]);
    }
  }
  return starts;
}

}  // namespace

SolveOutcome solve_mixed_multistart(const Subproblem& sp, const SolverConfig& cfg) {
  const ProblemDef& p = *sp.problem;
  const auto& iidx = p.integer_index();
  const auto& cidx = p.continuous_index();

  double combos = 1.0;
  std::vector<long long> lo(iidx.size()), hi(iidx.size());
  for (std::size_t i = 0; i < iidx.size(); ++i) {
    const auto& v = p.variables()[iidx[i]];
    lo[i] = static_cast<long long>(v.lower);
    hi[i] = static_cast<long long>(v.upper);
    combos *= static_cast<double>(hi[i] - lo[i] + 1);
  }
  if (combos > 1e4)
    throw std::invalid_argument("solve_mixed_multistart: integer grid exceeds 1e4");

  std::vector<double> clo(cidx.size()), chi(cidx.size());
  for (std::size_t i = 0; i < cidx.size(); ++i) {
    clo[i] = p.variables()[cidx[i]].lower;
    chi[i] = p.variables()[cidx[i]].upper;
  }

  Eval ev(sp);
  SolveOutcome out;
  out.status = SolveStatus::BudgetExhausted;
  double best = kInf;
  bool found = false;

  auto consider = [&](std::span<const long long> ints, std::span<const double> conts) {
    ev.at(ints, conts);
    if (!ev.base_feasible() || !ev.extras_feasible()) return;
    double val = ev.objective();
    if (!std::isfinite(val)) return;
    DecisionPoint cand{{ints.begin(), ints.end()}, {conts.begin(), conts.end()}};
    if (!found || val < best ||
        (val == best && out.point && tie_improves(ev.f, cand, out.image, *out.point))) {
      found = true;
      best = val;
      out.point = std::move(cand);
      out.value = val;
      out.image = ev.f;
    }
  };

  const auto starts =
      stratified_starts(clo, chi, std::max(1, cfg.multistart_count), cfg.rng_seed);
  SimplexSearch search(clo, chi);
  const int max_iter = 140 * static_cast<int>(cidx.size()) + 60;

  std::vector<long long> ints = lo;
  for (;;) {
    if (cidx.empty()) {
      consider(ints, {});
    } else {
      auto penalized = [&](double rho) {
        return [&, rho](const std::vector<double>& xc) {
          ev.at(ints, xc);
          double val = sp.scalar_value(ev.f);
          ev.p.constraint_values(ev.full, ev.g);
          sp.residuals(ev.f, ev.res);
          double pen = 0;
          for (double g : ev.g) pen += std::max(0.0, g) * std::max(0.0, g);
          for (double r : ev.res) pen += std::max(0.0, r) * std::max(0.0, r);
          double total = val + rho * pen;
          return std::isfinite(total) ? total : kInf;
        };
      };
      for (const auto& start : starts) {
        std::vector<double> x = start;
        double rho = cfg.penalty_rho0;
        for (int round = 0; round < cfg.penalty_rounds; ++round) {
          x = search.minimize(penalized(rho), std::move(x), cfg.local_tol, max_iter);
          rho *= cfg.penalty_growth;
        }
        consider(ints, x);
      }
    }
    // next integer assignment
    std::size_t d = iidx.size();
    bool done = iidx.empty();
    while (d > 0) {
      --d;
      if (++ints[d] <= hi[d]) break;
      ints[d] = lo[d];
      if (d == 0) done = true;
    }
    if (done) break;
  }

  if (found) {
    out.status = SolveStatus::Optimal;
    out.anchor_violation = anchor_violated(sp, out.image);
  }
  return out;
}

SolveOutcome solve_subproblem(const Subproblem& sp, const SolverConfig& cfg) {
  if (sp.problem->pure_integer()) return solve_integer_enum(sp);
  return solve_mixed_multistart(sp, cfg);
}

std::optional<std::vector<double>> lp_feasible_combination(
    const std::vector<std::vector<double>>& points, std::span<const double> target) {
  if (points.empty()) throw std::invalid_argument("lp_feasible_combination: no points");
  const std::size_t d = target.size();
  for (const auto& pt : points)
    if (pt.size() != d)
      throw std::invalid_argument("lp_feasible_combination: dimension mismatch");
  const std::size_t n = points.size();
  const std::size_t rows = d + 1;

  // Phase-1 tableau: columns are lambda then one artificial per row.
  std::vector<std::vector<double>> a(rows, std::vector<double>(n + rows + 1, 0.0));
  for (std::size_t r = 0; r < rows; ++r) {
    double rhs = (r < d) ? target[r] : 1.0;
    for (std::size_t j = 0; j < n; ++j) a[r][j] = (r < d) ? points[j][r] : 1.0;
    a[r][n + rows] = rhs;
    if (rhs < 0)
      for (auto& v : a[r]) v = -v;
    a[r][n + r] = 1.0;
  }

  std::vector<double> cost(n + rows + 1, 0.0);  // minimize sum of artificials
  std::vector<std::size_t> basis(rows);
  for (std::size_t r = 0; r < rows; ++r) {
    basis[r] = n + r;
    for (std::size_t j = 0; j <= n + rows; ++j) cost[j] -= a[r][j];
  }

  const double eps = 1e-11;
  const std::size_t max_pivots = 50 * (n + rows) + 200;
  for (std::size_t pivots = 0; pivots < max_pivots; ++pivots) {
    // Bland's rule: smallest-index entering column with negative reduced cost
    std::size_t enter = n + rows;
    for (std::size_t j = 0; j < n + rows; ++j)
      if (cost[j] < -1e-9) {
        enter = j;
        break;
      }
    if (enter == n + rows) break;

    std::size_t leave = rows;
    double best_ratio = kInf;
    for (std::size_t r = 0; r < rows; ++r) {
      if (a[r][enter] <= eps) continue;
      double ratio = a[r][n + rows] / a[r][enter];
      if (ratio < best_ratio - 1e-12 ||
          (ratio < best_ratio + 1e-12 && (leave == rows || basis[r] < basis[leave]))) {
        best_ratio = ratio;
        leave = r;
      }
    }
    if (leave == rows) break;  // unbounded cannot happen in phase 1

    double piv = a[leave][enter];
    for (auto& v : a[leave]) v /= piv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == leave || std::fabs(a[r][enter]) <= 0.0) continue;
      double m = a[r][enter];
      for (std::size_t j = 0; j <= n + rows; ++j) a[r][j] -= m * a[leave][j];
    }
    double mc = cost[enter];
    if (mc != 0.0)
      for (std::size_t j = 0; j <= n + rows; ++j) cost[j] -= mc * a[leave][j];
    basis[leave] = enter;
  }

  std::vector<double> lambda(n, 0.0);
  for (std::size_t r = 0; r < rows; ++r)
    if (basis[r] < n) lambda[basis[r]] = a[r][n + rows];

  // Certificate check decides; the objective value is only a hint.
  double sum = 0.0;
  for (double& l : lambda) {
    if (l < 0) {
      if (l < -1e-9) return std::nullopt;
      l = 0;
    }
    sum += l;
  }
  if (std::fabs(sum - 1.0) > 1e-9) return std::nullopt;
  for (std::size_t r = 0; r < d; ++r) {
    double acc = 0.0;
    for (std::size_t j = 0; j < n; ++j) acc += lambda[j] * points[j][r];
    if (std::fabs(acc - target[r]) > 1e-9) return std::nullopt;
  }
  return lambda;
}

}  // namespace mopf
