// Command-line front end: run one of the front-construction algorithms on a
// built-in or file-defined problem and export the result.

#include <cstdio>
#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "mopf/algorithms.hpp"
#include "mopf/io.hpp"
#include "mopf/problems.hpp"

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stoi(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

std::vector<double> parse_real_list(const std::string& text) {
  std::vector<double> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(std::stod(text.substr(pos, next - pos)));
    pos = next + 1;
  }
  return out;
}

bool ends_with(const std::string& s, const std::string& suffix) {
  return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weak Pareto front construction for multi-objective integer and "
               "mixed-integer problems"};

  std::string problem_arg;
  int algorithm = 0;
  std::string grid_arg = "10";
  std::string utopia_arg;
  std::uint64_t seed = 0;
  int multistart = 32;
  std::string out_path, plot_path, projection_arg, report_path;

  app.add_option("--problem", problem_arg,
                 "builtin:<tp1|tp2|tp3|rocket> or a path to a JSON problem document")
      ->required();
  app.add_option("--algorithm", algorithm, "algorithm id, 1..7")->required();
  app.add_option("--grid-n", grid_arg,
                 "partition count; a comma list sets the stage counts of the "
                 "boundary algorithms (pair[,triplet[,quad]])");
  app.add_option("--utopia", utopia_arg, "comma-separated utopia coordinates");
  app.add_option("--seed", seed, "random seed for the mixed-integer solver");
  app.add_option("--multistart", multistart, "local-search starts per integer slice");
  app.add_option("--out", out_path, "front output path (.json selects JSON, else CSV)");
  app.add_option("--plot", plot_path, "SVG scatter output path");
  app.add_option("--projection", projection_arg,
                 "objective indices to plot, e.g. 1,2 or 1,3,2");
  app.add_option("--report", report_path, "run report output path (JSON)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (algorithm < 1 || algorithm > 7)
      throw std::invalid_argument("unknown algorithm id " + std::to_string(algorithm) +
                                  " (expected 1..7)");

    mopf::ProblemDef problem = [&] {
      const std::string prefix = "builtin:";
      if (problem_arg.rfind(prefix, 0) == 0)
        return mopf::builtin_problem(problem_arg.substr(prefix.size()));
      return mopf::parse_problem_file(problem_arg);
    }();

    mopf::AlgorithmSpec spec;
    spec.id = algorithm;
    std::vector<int> grid = parse_int_list(grid_arg);
    if (grid.empty()) throw std::invalid_argument("invalid --grid-n");
    for (int n : grid)
      if (n < 1) throw std::invalid_argument("grid sizes must be >= 1");
    spec.grid_n = grid[0];
    if (grid.size() >= 2) {
      spec.pair_n = grid[0];
      spec.triplet_n = grid[1];
    }
    if (grid.size() >= 3) spec.quad_n = grid[2];
    if (!utopia_arg.empty()) spec.utopia = parse_real_list(utopia_arg);
    spec.solver.rng_seed = seed;
    spec.solver.multistart_count = multistart;

    mopf::RunResult result = mopf::run_algorithm(problem, spec);

    if (!out_path.empty()) {
      if (ends_with(out_path, ".json"))
        mopf::export_front_json(problem, result.front, out_path);
      else
        mopf::export_front_csv(problem, result.front, out_path);
    }
    if (!plot_path.empty()) {
      std::vector<int> projection;
      if (!projection_arg.empty())
        projection = parse_int_list(projection_arg);
      else if (problem.num_objectives() == 2)
        projection = {1, 2};
      else
        projection = {1, 2, 3};
      mopf::emit_plot_svg(result.front, projection, plot_path);
    }
    if (!report_path.empty()) mopf::write_report_json(result.report, report_path);

    std::printf("%s algorithm %d: %zu front points, %ld subproblems, %.2fs\n",
                result.report.problem.c_str(), result.report.algorithm_id,
                result.report.front_size, result.report.subproblems_attempted,
                result.report.wall_seconds);
    return 0;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
}
