#include "mopf/scalarize.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mopf {

WeightVector WeightVector::make(std::vector<double> w) {
  WeightVector out;
  double sum = 0.0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w[i] < 0) throw std::invalid_argument("weights must be nonnegative");
    sum += w[i];
    if (w[i] > 0) out.active.push_back(static_cast<int>(i));
  }
  if (std::fabs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("weights must sum to 1");
  out.w = std::move(w);
  return out;
}

std::vector<double> positivity_offset(const ProblemDef& p,
                                      std::span<const double> minima_images) {
  if (minima_images.size() != p.num_objectives())
    throw std::invalid_argument("positivity_offset: wrong image length");
  std::vector<double> sigma(minima_images.size());
  for (std::size_t i = 0; i < minima_images.size(); ++i) {
    if (!std::isfinite(minima_images[i]))
      throw std::invalid_argument("positivity_offset: non-finite minimum image");
    sigma[i] = std::max(0.0, 1.0 - minima_images[i]);
  }
  return sigma;
}

double Subproblem::scalar_value(const ObjectiveVector& f) const {
  if (kind == Kind::WeightedConstraint) return f[k];
  double worst = -std::numeric_limits<double>::infinity();
  for (int i : active) worst = std::max(worst, weights[i] * (f[i] - anchor[i]));
  return worst;
}

void Subproblem::residuals(const ObjectiveVector& f, std::vector<double>& out) const {
  out.clear();
  if (kind != Kind::WeightedConstraint) return;
  const double hk = weights[k] * (f[k] + offset[k] - anchor[k]);
  for (int i : active) {
    if (i == k) continue;
    out.push_back(weights[i] * (f[i] + offset[i] - anchor[i]) - hk);
  }
}

std::size_t Subproblem::num_residuals() const {
  if (kind != Kind::WeightedConstraint) return 0;
  return active.empty() ? 0 : active.size() - 1;
}

Subproblem minimize_single(const ProblemDef& p, int objective) {
  if (objective < 0 || objective >= static_cast<int>(p.num_objectives()))
    throw std::invalid_argument("objective index out of range");
  Subproblem sp;
  sp.kind = Subproblem::Kind::WeightedConstraint;
  sp.problem = &p;
  sp.weights.assign(p.num_objectives(), 0.0);
  sp.weights[objective] = 1.0;
  sp.active = {objective};
  sp.k = objective;
  sp.offset.assign(p.num_objectives(), 0.0);
  sp.anchor.assign(p.num_objectives(), 0.0);
  return sp;
}

Subproblem build_wc_subproblem(const ProblemDef& p, const WeightVector& w, int k,
                               std::span<const double> sigma,
                               std::span<const double> translation) {
  const std::size_t ell = p.num_objectives();
  if (w.w.size() != ell) throw std::invalid_argument("weight length mismatch");
  if (w.active.size() < 2)
    throw std::invalid_argument("scalarization needs at least two active weights");
  if (std::find(w.active.begin(), w.active.end(), k) == w.active.end())
    throw std::invalid_argument("objective k must carry a positive weight");
  if (sigma.size() != ell) throw std::invalid_argument("offset length mismatch");
  for (double s : sigma)
    if (!std::isfinite(s) || s < 0)
      throw std::invalid_argument("offset entries must be finite and nonnegative");
  if (!translation.empty() && translation.size() != ell)
    throw std::invalid_argument("translation length mismatch");

  Subproblem sp;
  sp.kind = Subproblem::Kind::WeightedConstraint;
  sp.problem = &p;
  sp.weights = w.w;
  sp.active = w.active;
  sp.k = k;
  sp.offset.assign(sigma.begin(), sigma.end());
  if (translation.empty())
    sp.anchor.assign(ell, 0.0);
  else
    sp.anchor.assign(translation.begin(), translation.end());
  return sp;
}

Subproblem build_ps_subproblem(const ProblemDef& p, const WeightVector& w,
                               std::span<const double> anchor) {
  const std::size_t ell = p.num_objectives();
  if (w.w.size() != ell) throw std::invalid_argument("weight length mismatch");
  if (w.active.size() < 2)
    throw std::invalid_argument("scalarization needs at least two active weights");
  if (anchor.size() != ell) throw std::invalid_argument("anchor length mismatch");

  Subproblem sp;
  sp.kind = Subproblem::Kind::GoalAttainment;
  sp.problem = &p;
  sp.weights = w.w;
  sp.active = w.active;
  sp.k = w.active.front();
  sp.offset.assign(ell, 0.0);
  sp.anchor.assign(anchor.begin(), anchor.end());
  return sp;
}

Subproblem build_ps_subproblem(const ProblemDef& p, const WeightVector& w,
                               const UtopiaVector& u) {
  return build_ps_subproblem(p, w, std::span<const double>(u.values));
}

std::vector<WcCandidate> resolve_wc_solutions(const std::vector<WcCandidate>& candidates,
                                              double eps) {
  if (candidates.empty())
    throw std::invalid_argument("resolve_wc_solutions: no candidates");
  std::vector<WcCandidate> retained;
  for (const auto& cand : candidates) {
    bool keep = true;
    for (const auto& other : candidates) {
      if (other.k == cand.k) continue;
      // the r-th subproblem's own objective value must not beat cand's
      if (!(other.f[other.k] >= cand.f[other.k] - eps)) {
        keep = false;
        break;
      }
    }
    if (!keep) continue;
    bool duplicate = false;
    for (const auto& r : retained)
      if (r.x == cand.x) {
        duplicate = true;
        break;
      }
    if (!duplicate) retained.push_back(cand);
  }
  return retained;
}

}  // namespace mopf
