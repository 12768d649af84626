#include "mopf/grids.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace mopf {

MinimaResult individual_minima(const ProblemDef& p, const SolverConfig& cfg) {
  MinimaResult out;
  const std::size_t ell = p.num_objectives();
  out.points.reserve(ell);
  out.images.reserve(ell);
  out.diagonal.resize(ell);
  for (std::size_t i = 0; i < ell; ++i) {
    SolveOutcome res = solve_subproblem(minimize_single(p, static_cast<int>(i)), cfg);
    if (res.status != SolveStatus::Optimal || !res.point)
      throw std::runtime_error("individual minimum of objective " + std::to_string(i + 1) +
                               " not found (infeasible problem?)");
    out.points.push_back(*res.point);
    out.images.push_back(res.image);
    out.diagonal[i] = res.image[i];
  }
  return out;
}

namespace {

void check_gap(const ObjectiveVector& image, const UtopiaVector& u) {
  for (std::size_t j = 0; j < image.size(); ++j)
    if (!(image[j] - u.values[j] > 0))
      throw std::invalid_argument("utopia is not strictly below an individual-minimum image");
}

}  // namespace

ChimGrid chim_weights_pair(const ObjectiveVector& image1, const ObjectiveVector& image2,
                           const UtopiaVector& u, int N) {
  if (N < 1) throw std::invalid_argument("partition count must be >= 1");
  if (image1.size() != 2 || image2.size() != 2 || u.values.size() != 2)
    throw std::invalid_argument("chim_weights_pair expects two objectives");
  check_gap(image1, u);
  check_gap(image2, u);

  auto phi1 = [&](const ObjectiveVector& img) {
    return (img[1] - u.values[1]) / ((img[0] - u.values[0]) + (img[1] - u.values[1]));
  };
  const double a = phi1(image1);
  const double b = phi1(image2);

  ChimGrid grid;
  grid.partitions = N;
  grid.weights.reserve(N + 1);
  for (int j = 0; j <= N; ++j) {
    double w1 = a + j * (b - a) / N;
    grid.weights.push_back(WeightVector::make({w1, 1.0 - w1}));
  }
  return grid;
}

ChimGrid chim_weights_triple(const ObjectiveVector& image1, const ObjectiveVector& image2,
                             const ObjectiveVector& image3, const UtopiaVector& u, int N) {
  if (N < 1) throw std::invalid_argument("partition count must be >= 1");
  if (image1.size() != 3 || image2.size() != 3 || image3.size() != 3 ||
      u.values.size() != 3)
    throw std::invalid_argument("chim_weights_triple expects three objectives");
  check_gap(image1, u);
  check_gap(image2, u);
  check_gap(image3, u);

  auto phi = [&](const ObjectiveVector& img, int k) {
    double g1 = img[0] - u.values[0];
    double g2 = img[1] - u.values[1];
    double g3 = img[2] - u.values[2];
    double denom = g1 * g2 + g2 * g3 + g1 * g3;
    double numer = (k == 0) ? g2 * g3 : (k == 1) ? g1 * g3 : g1 * g2;
    return numer / denom;
  };
  double a[2] = {phi(image1, 0), phi(image1, 1)};
  double b[2] = {phi(image2, 0), phi(image2, 1)};
  double c[2] = {phi(image3, 0), phi(image3, 1)};

  ChimGrid grid;
  grid.partitions = N;
  for (int i1 = 0; i1 < N; ++i1) {
    double what[2], wtld[2];
    for (int k = 0; k < 2; ++k) {
      what[k] = a[k] + i1 * (c[k] - a[k]) / N;
      wtld[k] = b[k] + i1 * (c[k] - b[k]) / N;
    }
    for (int i2 = 0; i2 <= N - i1; ++i2) {
      double w1 = what[0] + i2 * (wtld[0] - what[0]) / (N - i1);
      double w2 = what[1] + i2 * (wtld[1] - what[1]) / (N - i1);
      grid.weights.push_back(WeightVector::make({w1, w2, 1.0 - w1 - w2}));
    }
  }
  return grid;
}

DirectionWeights direction_vector(const std::vector<ObjectiveVector>& images,
                                  const std::vector<int>& subset) {
  if (subset.size() < 2)
    throw std::invalid_argument("direction_vector needs at least two objectives");
  if (images.size() != subset.size())
    throw std::invalid_argument("one image per subset index expected");

  DirectionWeights out;
  out.v.resize(subset.size());
  for (std::size_t j = 0; j < subset.size(); ++j) {
    const int obj = subset[j];
    double worst = images[0][obj];
    for (const auto& img : images) worst = std::max(worst, img[obj]);
    out.v[j] = worst - images[j][obj];
  }
  double sum = 0.0;
  int positive = 0;
  for (double v : out.v) {
    sum += v;
    if (v > 0) ++positive;
  }
  out.w.resize(subset.size());
  if (sum <= 0 || positive < 2) {
    std::fill(out.w.begin(), out.w.end(), 1.0 / subset.size());
  } else {
    for (std::size_t j = 0; j < subset.size(); ++j) out.w[j] = out.v[j] / sum;
  }
  return out;
}

namespace {

/// Barycentric coordinates of q with respect to frame points (d of them in
/// d-space, all on a common hyperplane). Solves the (d x d) system
/// [frame^T; 1] beta = [q; 1] by Gaussian elimination; returns false when
/// the frame is affinely degenerate.
bool barycentric(const std::vector<std::vector<double>>& frame, std::span<const double> q,
                 std::vector<double>& beta) {
  const std::size_t d = frame.size();
  std::vector<std::vector<double>> m(d, std::vector<double>(d + 1));
  // rows: d-1 coordinate equations relative to frame[0], plus sum = 1
  for (std::size_t r = 0; r + 1 < d; ++r) {
    for (std::size_t j = 0; j < d; ++j) m[r][j] = frame[j][r] - frame[d - 1][r];
    m[r][d] = q[r] - frame[d - 1][r];
  }
  for (std::size_t j = 0; j < d; ++j) m[d - 1][j] = 1.0;
  m[d - 1][d] = 1.0;

  for (std::size_t col = 0; col < d; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < d; ++r)
      if (std::fabs(m[r][col]) > std::fabs(m[piv][col])) piv = r;
    if (std::fabs(m[piv][col]) < 1e-10) return false;
    std::swap(m[col], m[piv]);
    for (std::size_t r = 0; r < d; ++r) {
      if (r == col) continue;
      double f = m[r][col] / m[col][col];
      for (std::size_t j = col; j <= d; ++j) m[r][j] -= f * m[col][j];
    }
  }
  beta.resize(d);
  for (std::size_t j = 0; j < d; ++j) beta[j] = m[j][d] / m[j][j];
  return true;
}

/// Greedy pick of d affinely independent points (indices into pts).
std::vector<std::size_t> independent_frame(const std::vector<std::vector<double>>& pts,
                                           std::size_t d) {
  std::vector<std::size_t> frame;
  std::vector<std::vector<double>> basis;  // orthogonalized offsets from frame[0]
  for (std::size_t i = 0; i < pts.size() && frame.size() < d; ++i) {
    if (frame.empty()) {
      frame.push_back(i);
      continue;
    }
    std::vector<double> off(pts[i].size());
    for (std::size_t j = 0; j < off.size(); ++j) off[j] = pts[i][j] - pts[frame[0]][j];
    for (const auto& b : basis) {
      double dot = 0;
      for (std::size_t j = 0; j < off.size(); ++j) dot += off[j] * b[j];
      for (std::size_t j = 0; j < off.size(); ++j) off[j] -= dot * b[j];
    }
    double norm = 0;
    for (double x : off) norm += x * x;
    norm = std::sqrt(norm);
    if (norm < 1e-9) continue;
    for (double& x : off) x /= norm;
    basis.push_back(std::move(off));
    frame.push_back(i);
  }
  return frame;
}

/// Enumerates nonnegative integer tuples of length d summing to total.
void compositions(int total, int d, std::vector<int>& cur,
                  std::vector<std::vector<int>>& out) {
  if (d == 1) {
    cur.push_back(total);
    out.push_back(cur);
    cur.pop_back();
    return;
  }
  for (int k = 0; k <= total; ++k) {
    cur.push_back(k);
    compositions(total - k, d - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

SbgRaySet sbg_base_points(const std::vector<std::vector<double>>& boundary,
                          std::span<const double> ray_weights, int N) {
  SbgRaySet out;
  out.ray_weights.assign(ray_weights.begin(), ray_weights.end());
  out.direction = out.ray_weights;
  const std::size_t d = ray_weights.size();
  if (N < 1) throw std::invalid_argument("partition count must be >= 1");
  if (boundary.size() < d) {
    out.degenerate = true;
    return out;
  }
  for (const auto& z : boundary)
    if (z.size() != d) throw std::invalid_argument("boundary image dimension mismatch");

  double wv = 0.0;
  for (double w : ray_weights) wv += w * w;
  if (wv <= 0) throw std::invalid_argument("ray weights must not vanish");

  // anchor the reference hyperplane weakly below the boundary
  double anchor = std::numeric_limits<double>::infinity();
  for (const auto& z : boundary) {
    double dot = 0;
    for (std::size_t j = 0; j < d; ++j) dot += ray_weights[j] * z[j];
    anchor = std::min(anchor, dot);
  }
  out.anchor = anchor;

  // project along the ray direction (= ray_weights up to scale)
  std::vector<std::vector<double>> proj(boundary.size(), std::vector<double>(d));
  for (std::size_t i = 0; i < boundary.size(); ++i) {
    double dot = 0;
    for (std::size_t j = 0; j < d; ++j) dot += ray_weights[j] * boundary[i][j];
    double t = (dot - anchor) / wv;
    for (std::size_t j = 0; j < d; ++j) proj[i][j] = boundary[i][j] - t * ray_weights[j];
  }

  const auto frame_idx = independent_frame(proj, d);
  if (frame_idx.size() < d) {
    out.degenerate = true;
    return out;
  }
  std::vector<std::vector<double>> frame;
  for (auto i : frame_idx) frame.push_back(proj[i]);

  // bounding simplex in barycentric coordinates over the frame
  std::vector<double> lo(d, std::numeric_limits<double>::infinity());
  std::vector<double> beta;
  for (const auto& q : proj) {
    if (!barycentric(frame, q, beta)) {
      out.degenerate = true;
      return out;
    }
    for (std::size_t j = 0; j < d; ++j) lo[j] = std::min(lo[j], beta[j]);
  }
  double span = 1.0;
  for (double l : lo) span -= l;
  if (!(span > 0)) span = 1.0;

  std::vector<std::vector<int>> nodes;
  std::vector<int> cur;
  compositions(N, static_cast<int>(d), cur, nodes);

  std::vector<double> node(d), cand(d);
  for (const auto& counts : nodes) {
    bool interior = true;
    for (int c : counts)
      if (c < 1) {
        interior = false;
        break;
      }
    if (!interior) continue;
    for (std::size_t j = 0; j < d; ++j) node[j] = lo[j] + span * counts[j] / N;
    // lift barycentric coordinates back to image space
    for (std::size_t r = 0; r < d; ++r) {
      double acc = 0;
      for (std::size_t j = 0; j < d; ++j) acc += node[j] * frame[j][r];
      cand[r] = acc;
    }
    ++out.lp_solves;
    if (lp_feasible_combination(proj, cand)) out.base_points.push_back(cand);
  }
  return out;
}

}  // namespace mopf
