// Acceptance suite: one pass/fail line per criterion, exit nonzero when any
// criterion fails. Budgets and tolerances are fixed here, not tunable.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "mopf/algorithms.hpp"
#include "mopf/grids.hpp"
#include "mopf/io.hpp"

using namespace mopf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void check(bool ok, const std::string& label, const std::string& detail = "") {
  if (ok) {
    std::printf("[PASS] %s\n", label.c_str());
  } else {
    ++failures;
    std::printf("[FAIL] %s%s%s\n", label.c_str(), detail.empty() ? "" : " -- ",
                detail.c_str());
  }
}

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::set<ObjectiveVector> images(const FrontArchive& a) {
  std::set<ObjectiveVector> out;
  for (const auto& e : a.entries) out.insert(e.f);
  return out;
}

bool subset_of(const std::set<ObjectiveVector>& small,
               const std::set<ObjectiveVector>& big) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

const std::set<ObjectiveVector> kFront9{{0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 1},
                                        {2, 2}, {3, 1}, {4, 0}, {4, 1}};
const std::set<ObjectiveVector> kFront19{
    {0, 2, 2}, {1, 1, 1}, {1, 1, 2}, {1, 1, 3}, {1, 2, 1}, {1, 2, 2}, {1, 2, 3},
    {1, 3, 1}, {1, 3, 2}, {2, 0, 2}, {2, 1, 1}, {2, 1, 2}, {2, 1, 3}, {2, 2, 0},
    {2, 2, 1}, {2, 3, 1}, {3, 1, 1}, {3, 1, 2}, {3, 2, 1}};

AlgorithmSpec spec_for(int id, int n) {
  AlgorithmSpec s;
  s.id = id;
  s.grid_n = n;
  return s;
}

std::vector<DecisionPoint> enumerate_feasible(const ProblemDef& p) {
  const auto& idx = p.integer_index();
  std::vector<long long> lo(idx.size()), hi(idx.size()), x(idx.size());
  for (std::size_t i = 0; i < idx.size(); ++i) {
    lo[i] = (long long)p.variables()[idx[i]].lower;
    hi[i] = (long long)p.variables()[idx[i]].upper;
    x[i] = lo[i];
  }
  std::vector<DecisionPoint> out;
  for (;;) {
    if (p.is_feasible({x, {}})) out.push_back({x, {}});
    std::size_t d = idx.size();
    bool done = false;
    while (d > 0) {
      --d;
      if (++x[d] <= hi[d]) break;
      x[d] = lo[d];
      if (d == 0) done = true;
    }
    if (done) return out;
  }
}

void criterion1() {
  struct Row {
    const char* name;
    long want_feasible;
    std::size_t want_front;
  };
  const Row rows[] = {{"tp1", 17, 9}, {"tp2", 70, 19}, {"tp3", 83, 60}};
  for (const auto& row : rows) {
    auto t0 = Clock::now();
    OracleResult o = brute_force_weak_front(builtin_problem(row.name));
    double dt = seconds_since(t0);
    check(o.feasible_count == row.want_feasible,
          std::string("criterion 1: ") + row.name + " feasible count = " +
              std::to_string(row.want_feasible),
          "got " + std::to_string(o.feasible_count) +
              (std::string(row.name) == "tp2"
                   ? " (the stated radius-2 ball holds 33 lattice points; its weak"
                     " front is the expected 19-point set, so the quoted 70 cannot"
                     " be reproduced by the stated constraint)"
                   : ""));
    check(o.front.size() == row.want_front,
          std::string("criterion 1: ") + row.name + " weak front size = " +
              std::to_string(row.want_front),
          "got " + std::to_string(o.front.size()));
    check(dt < 1.0, std::string("criterion 1: ") + row.name + " oracle under 1 s",
          std::to_string(dt) + " s");
  }
  check(images(brute_force_weak_front(builtin_problem("tp1")).front) == kFront9,
        "criterion 1: tp1 oracle front equals the listed nine points");
  check(images(brute_force_weak_front(builtin_problem("tp2")).front) == kFront19,
        "criterion 1: tp2 oracle front equals the listed nineteen points");
}

void criterion2() {
  auto t0 = Clock::now();
  RunResult r = run_algorithm(builtin_problem("tp1"), spec_for(1, 11));
  double dt = seconds_since(t0);
  check(images(r.front) == kFront9,
        "criterion 2: algorithm 1 on tp1 (N=11) finds the full nine-point front",
        "found " + std::to_string(r.front.size()));
  check(r.report.subproblems_attempted == 22,
        "criterion 2: algorithm 1 on tp1 (N=11) attempts 22 subproblems",
        "attempted " + std::to_string(r.report.subproblems_attempted));
  check(dt < 5.0, "criterion 2: run under 5 s", std::to_string(dt) + " s");
}

void criterion3() {
  ProblemDef p = builtin_problem("tp1");
  auto s13 = images(run_algorithm(p, spec_for(2, 13)).front);
  auto s130 = images(run_algorithm(p, spec_for(2, 130)).front);
  check(subset_of(s13, kFront9) && s13.size() >= 5 && s13.size() <= 9,
        "criterion 3: algorithm 2 on tp1 (N=13) yields 5..9 front points",
        "got " + std::to_string(s13.size()));
  check(subset_of(s130, kFront9) && s130.size() >= 5 && s130.size() <= 9,
        "criterion 3: algorithm 2 on tp1 (N=130) yields 5..9 front points",
        "got " + std::to_string(s130.size()));
  std::size_t extra = 0;
  for (const auto& f : s130)
    if (!s13.count(f)) ++extra;
  check(extra <= 1,
        "criterion 3: tenfold refinement adds at most one point beyond N=13",
        "added " + std::to_string(extra));
}

void criterion4() {
  auto t0 = Clock::now();
  RunResult r = run_algorithm(builtin_problem("tp2"), spec_for(3, 8));
  double dt = seconds_since(t0);
  check(images(r.front) == kFront19,
        "criterion 4: algorithm 3 on tp2 (44 grid nodes) finds all 19 points",
        "found " + std::to_string(r.front.size()));
  check(dt < 30.0, "criterion 4: run under 30 s", std::to_string(dt) + " s");
}

void criterion5() {
  RunResult r = run_algorithm(builtin_problem("tp2"), spec_for(4, 15));
  check(subset_of(images(r.front), kFront19),
        "criterion 5: algorithm 4 on tp2 stays inside the oracle front");
  check(r.front.size() <= 12,
        "criterion 5: algorithm 4 on tp2 yields at most 12 points",
        "got " + std::to_string(r.front.size()));
}

void criterion6() {
  ProblemDef p = builtin_problem("tp3");
  std::set<ObjectiveVector> oracle = images(brute_force_weak_front(p).front);
  AlgorithmSpec spec = spec_for(5, 8);
  spec.pair_n = 8;
  spec.triplet_n = 15;
  auto t0 = Clock::now();
  RunResult r = run_algorithm(p, spec);
  double dt = seconds_since(t0);
  check(images(r.front) == oracle,
        "criterion 6: algorithm 5 on tp3 finds all 60 points",
        "found " + std::to_string(r.front.size()));
  long budget =
      r.report.subproblems_attempted + r.report.lp_solves + r.report.minima_solves;
  check(budget >= 350 && budget <= 450,
        "criterion 6: staged budgets total about 400 subproblems",
        "total " + std::to_string(budget));
  check(dt < 60.0, "criterion 6: run under 60 s", std::to_string(dt) + " s");
}

void criterion7() {
  ProblemDef p = builtin_problem("tp3");
  std::set<ObjectiveVector> oracle = images(brute_force_weak_front(p).front);
  RunResult r = run_algorithm(p, spec_for(3, 20));
  check(r.report.subproblems_attempted == 690,
        "criterion 7: algorithm 3 on tp3 attempts 690 subproblems",
        "attempted " + std::to_string(r.report.subproblems_attempted));
  check(subset_of(images(r.front), oracle),
        "criterion 7: algorithm 3 on tp3 stays inside the oracle front");
  check(r.front.size() >= 55,
        "criterion 7: algorithm 3 on tp3 finds at least 55 of 60",
        "found " + std::to_string(r.front.size()));
}

void criterion8() {
  ProblemDef p = builtin_problem("tp3");
  std::set<ObjectiveVector> oracle = images(brute_force_weak_front(p).front);
  const struct {
    int pair_n, triplet_n;
    const char* tag;
  } runs[] = {{21, 20, "base budget"}, {121, 80, "tenfold budget"}};
  for (const auto& cfg : runs) {
    AlgorithmSpec spec = spec_for(6, cfg.pair_n);
    spec.pair_n = cfg.pair_n;
    spec.triplet_n = cfg.triplet_n;
    RunResult r = run_algorithm(p, spec);
    check(subset_of(images(r.front), oracle),
          std::string("criterion 8: algorithm 6 on tp3 (") + cfg.tag +
              ") stays inside the oracle front");
    check(r.front.size() >= 25 && r.front.size() <= 50,
          std::string("criterion 8: algorithm 6 on tp3 (") + cfg.tag +
              ") yields 25..50 points",
          "got " + std::to_string(r.front.size()));
  }
}

void criterion9() {
  ProblemDef p = builtin_problem("rocket");
  AlgorithmSpec spec = spec_for(7, 6);
  spec.pair_n = 6;
  spec.triplet_n = 6;
  spec.quad_n = 6;
  spec.solver.rng_seed = 0;
  spec.solver.multistart_count = 32;

  auto t0 = Clock::now();
  RunResult r = run_algorithm(p, spec);
  double dt = seconds_since(t0);

  bool all_feasible = true;
  bool slices_exact = true;
  std::set<long long> slices;
  for (const auto& e : r.front.entries) {
    if (!p.is_feasible(e.x)) all_feasible = false;
    long long n = e.x.integer_part.at(0);
    if (n < 0 || n > 3) slices_exact = false;
    slices.insert(n);
  }
  check(all_feasible && slices_exact,
        "criterion 9a: every output point is feasible with the flow angle on "
        "the 0.2-grid");
  bool non_dominated = true;
  for (const auto& a : r.front.entries)
    for (const auto& b : r.front.entries)
      if (&a != &b && strictly_dominates(a.f, b.f, 1e-7)) non_dominated = false;
  check(non_dominated,
        "criterion 9b: archive is mutually non-strictly-dominated (eps 1e-7)");
  check(slices.size() >= 2,
        "criterion 9c: at least two integer slices contribute points",
        std::to_string(slices.size()) + " slices");
  ObjectiveVector at_zero = p.objective_values({{0}, {0, 0, 0}});
  check(std::fabs(at_zero[0] - 0.692) <= 1e-12,
        "criterion 9d: face temperature at the origin evaluates to 0.692");
  RunResult again = run_algorithm(p, spec);
  bool identical = again.front.size() == r.front.size();
  if (identical)
    for (std::size_t i = 0; i < r.front.size(); ++i)
      if (!(again.front.entries[i].f == r.front.entries[i].f &&
            again.front.entries[i].x == r.front.entries[i].x))
        identical = false;
  check(identical, "criterion 9e: repeated seeded runs are identical");
  check(seconds_since(t0) < 600.0 && dt < 300.0,
        "criterion 9: rocket runs complete well under 10 minutes",
        std::to_string(dt) + " s per run");
}

void criterion10() {
  // weight-rescaling leaves weighted-constraint feasibility unchanged
  {
    ProblemDef tp2 = builtin_problem("tp2");
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> unit(0.05, 1.0);
    std::uniform_real_distribution<double> scale(0.1, 20.0);
    bool ok = true;
    std::vector<double> res_a, res_b;
    for (int trial = 0; trial < 25 && ok; ++trial) {
      double raw[3] = {unit(rng), unit(rng), unit(rng)};
      double sum = raw[0] + raw[1] + raw[2];
      Subproblem a;
      a.kind = Subproblem::Kind::WeightedConstraint;
      a.problem = &tp2;
      a.weights = {raw[0] / sum, raw[1] / sum, raw[2] / sum};
      a.active = {0, 1, 2};
      a.k = trial % 3;
      a.offset = {1, 1, 1};
      a.anchor = {0, 0, 0};
      Subproblem b = a;
      double c = scale(rng);
      for (double& w : b.weights) w *= c;
      for (long long x1 = 0; x1 <= 4 && ok; ++x1)
        for (long long x2 = 0; x2 <= 4 && ok; ++x2) {
          ObjectiveVector f{double(x1), double(x2), double((2 * x1 + x2) % 5)};
          a.residuals(f, res_a);
          b.residuals(f, res_b);
          for (std::size_t i = 0; i < res_a.size(); ++i)
            if ((res_a[i] <= 0) != (res_b[i] <= 0)) ok = false;
        }
    }
    check(ok, "criterion 10: weighted-constraint feasibility is invariant under "
              "positive weight rescaling");
  }

  // goal-attainment solves equal direct enumeration of the min-max value
  {
    std::mt19937 rng(17);
    std::uniform_real_distribution<double> unit(0.1, 1.0);
    bool ok = true;
    for (const char* name : {"tp1", "tp2", "tp3"}) {
      ProblemDef p = builtin_problem(name);
      auto feasible = enumerate_feasible(p);
      MinimaResult minima = individual_minima(p, SolverConfig{});
      UtopiaVector u = default_utopia(p, minima.diagonal);
      for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> w(p.num_objectives());
        double sum = 0;
        for (double& v : w) {
          v = unit(rng);
          sum += v;
        }
        for (double& v : w) v /= sum;
        Subproblem sp = build_ps_subproblem(p, WeightVector::make(w), u);
        SolveOutcome got = solve_integer_enum(sp);
        double want = 1e300;
        for (const auto& x : feasible)
          want = std::min(want, sp.scalar_value(p.objective_values(x)));
        if (!(got.status == SolveStatus::Optimal && *got.value == want)) ok = false;
      }
    }
    check(ok, "criterion 10: goal-attainment optima match enumeration exactly "
              "for 20 random weights on each problem");
  }

  // hull-membership certificates recombine to 1e-9
  {
    std::mt19937 rng(29);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    bool ok = true;
    for (int trial = 0; trial < 40 && ok; ++trial) {
      std::size_t d = 2 + trial % 3, n = d + 2;
      std::vector<std::vector<double>> pts(n, std::vector<double>(d));
      for (auto& p : pts)
        for (auto& v : p) v = coord(rng);
      std::vector<double> mix(n), target(d, 0.0);
      double sum = 0;
      for (auto& m : mix) sum += (m = unit(rng));
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t r = 0; r < d; ++r) target[r] += (mix[j] / sum) * pts[j][r];
      auto lam = lp_feasible_combination(pts, target);
      if (!lam) {
        ok = false;
        break;
      }
      std::vector<double> recomb(d, 0.0);
      double lsum = 0;
      for (std::size_t j = 0; j < n; ++j) {
        lsum += (*lam)[j];
        for (std::size_t r = 0; r < d; ++r) recomb[r] += (*lam)[j] * pts[j][r];
      }
      if (std::fabs(lsum - 1.0) > 1e-9) ok = false;
      for (std::size_t r = 0; r < d; ++r)
        if (std::fabs(recomb[r] - target[r]) > 1e-9) ok = false;
    }
    check(ok, "criterion 10: feasible-combination certificates verify to 1e-9");
  }

  // vertex weight arithmetic on the ball problem
  {
    UtopiaVector u =
        make_utopia(std::vector<double>{-10, -10, -10}, std::vector<double>{0, 0, 0});
    ChimGrid grid = chim_weights_triple({0, 2, 2}, {2, 0, 2}, {2, 2, 0}, u, 8);
    const auto& a = grid.weights.front().w;
    const auto& b = grid.weights[8].w;
    // vertex c is not a grid node; recompute it through an N=1 grid's layout
    bool ok = std::fabs(a[0] - 0.375) <= 1e-12 && std::fabs(a[1] - 0.3125) <= 1e-12 &&
              std::fabs(b[0] - 0.3125) <= 1e-12 && std::fabs(b[1] - 0.375) <= 1e-12;
    // interpolation endpoint of the first column reaches c at i1 -> N
    ChimGrid fine = chim_weights_triple({0, 2, 2}, {2, 0, 2}, {2, 2, 0}, u, 2);
    const auto& near_c = fine.weights.back().w;  // (i1=1, i2=1) midpoint toward c
    ok = ok && std::fabs(near_c[0] + near_c[1] + near_c[2] - 1.0) <= 1e-12;
    check(ok, "criterion 10: vertex weight arithmetic matches the quotient "
              "formula to 1e-12");
  }
}

}  // namespace

int main() {
  auto t0 = Clock::now();
  criterion1();
  criterion2();
  criterion3();
  criterion4();
  criterion5();
  criterion6();
  criterion7();
  criterion8();
  criterion9();
  criterion10();
  std::printf("%s: %d failing check(s), %.1f s total\n",
              failures == 0 ? "ACCEPTANCE PASSED" : "ACCEPTANCE FAILED", failures,
              seconds_since(t0));
  return failures == 0 ? 0 : 1;
}
