#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "mopf/algorithms.hpp"
#include "mopf/expr.hpp"
#include "mopf/io.hpp"
#include "mopf/problems.hpp"

namespace py = pybind11;

namespace {

py::list front_to_list(const mopf::ProblemDef& p, const mopf::FrontArchive& a) {
  py::list out;
  for (const auto& e : a.entries) {
    std::vector<double> xs(p.variables().size(), 0.0);
    for (std::size_t i = 0; i < e.x.integer_part.size(); ++i)
      xs[p.integer_index()[i]] = static_cast<double>(e.x.integer_part[i]);
    for (std::size_t i = 0; i < e.x.continuous_part.size(); ++i)
      xs[p.continuous_index()[i]] = e.x.continuous_part[i];
    out.append(py::make_tuple(py::cast(xs), py::cast(e.f)));
  }
  return out;
}

py::dict report_to_dict(const mopf::RunReport& r) {
  py::dict d;
  d["problem"] = r.problem;
  d["algorithm"] = r.algorithm_id;
  d["grid_n"] = r.grid_n;
  d["subproblems_attempted"] = r.subproblems_attempted;
  d["minima_solves"] = r.minima_solves;
  d["lp_solves"] = r.lp_solves;
  d["front_size"] = r.front_size;
  d["wall_seconds"] = r.wall_seconds;
  return d;
}

mopf::DecisionPoint point_from_values(const mopf::ProblemDef& p,
                                      const std::vector<double>& values) {
  if (values.size() != p.variables().size())
    throw std::invalid_argument("expected one value per declared variable");
  mopf::DecisionPoint x;
  for (int i : p.integer_index()) x.integer_part.push_back(llround(values[i]));
  for (int i : p.continuous_index()) x.continuous_part.push_back(values[i]);
  return x;
}

}  // namespace

PYBIND11_MODULE(mopf, m) {
  m.doc() = "Weak Pareto fronts of multi-objective integer and mixed-integer "
            "problems via scalarized subproblem sweeps";

  py::class_<mopf::ProblemDef>(m, "Problem")
      .def_property_readonly("name", &mopf::ProblemDef::name)
      .def_property_readonly("num_objectives", &mopf::ProblemDef::num_objectives)
      .def_property_readonly("num_constraints", &mopf::ProblemDef::num_constraints)
      .def_property_readonly("num_integer", &mopf::ProblemDef::num_integer)
      .def_property_readonly("num_continuous", &mopf::ProblemDef::num_continuous)
      .def("objective_values",
           [](const mopf::ProblemDef& p, const std::vector<double>& values) {
             return p.objective_values(point_from_values(p, values));
           })
      .def("is_feasible",
           [](const mopf::ProblemDef& p, const std::vector<double>& values) {
             return p.is_feasible(point_from_values(p, values));
           })
      .def("__repr__", [](const mopf::ProblemDef& p) {
        return "<Problem " + p.name() + ": " + std::to_string(p.num_objectives()) +
               " objectives>";
      });

  m.def("builtin", &mopf::builtin_problem, py::arg("name"),
        "Built-in problems: tp1, tp2, tp3, rocket");
  m.def("load_problem", &mopf::parse_problem, py::arg("json_text"),
        "Parse a JSON problem document");

  m.def(
      "brute_force_weak_front",
      [](const mopf::ProblemDef& p) {
        auto oracle = mopf::brute_force_weak_front(p);
        py::dict d;
        d["feasible_count"] = oracle.feasible_count;
        d["front"] = front_to_list(p, oracle.front);
        return d;
      },
      py::arg("problem"), "Exact weak front of a pure-integer problem");

  m.def(
      "run_algorithm",
      [](const mopf::ProblemDef& p, int algorithm, int grid_n, std::optional<int> pair_n,
         std::optional<int> triplet_n, std::optional<int> quad_n, std::uint64_t seed,
         int multistart, std::optional<std::vector<double>> utopia) {
        mopf::AlgorithmSpec spec;
        spec.id = algorithm;
        spec.grid_n = grid_n;
        spec.pair_n = pair_n;
        spec.triplet_n = triplet_n;
        spec.quad_n = quad_n;
        spec.solver.rng_seed = seed;
        spec.solver.multistart_count = multistart;
        spec.utopia = std::move(utopia);
        auto result = mopf::run_algorithm(p, spec);
        py::dict d;
        d["front"] = front_to_list(p, result.front);
        d["report"] = report_to_dict(result.report);
        return d;
      },
      py::arg("problem"), py::arg("algorithm"), py::arg("grid_n") = 10,
      py::arg("pair_n") = py::none(), py::arg("triplet_n") = py::none(),
      py::arg("quad_n") = py::none(), py::arg("seed") = 0, py::arg("multistart") = 32,
      py::arg("utopia") = py::none());

  m.def(
      "strictly_dominates",
      [](const std::vector<double>& a, const std::vector<double>& b, double eps) {
        return mopf::strictly_dominates(a, b, eps);
      },
      py::arg("a"), py::arg("b"), py::arg("eps") = 0.0);

  m.def(
      "filter_weak_front",
      [](const std::vector<std::vector<double>>& images, double eps) {
        std::vector<mopf::FrontEntry> entries;
        for (const auto& f : images) entries.push_back({mopf::DecisionPoint{}, f});
        auto filtered = mopf::filter_weak_front(std::move(entries), eps);
        std::vector<std::vector<double>> out;
        for (const auto& e : filtered.entries) out.push_back(e.f);
        return out;
      },
      py::arg("images"), py::arg("eps") = 0.0);

  m.def(
      "evaluate_expression",
      [](const std::string& text, const std::map<std::string, double>& assignment) {
        return mopf::Expression::parse(text).evaluate(assignment);
      },
      py::arg("text"), py::arg("assignment"));
}
