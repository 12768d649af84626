#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mopf/core.hpp"
#include "mopf/expr.hpp"

namespace mopf {

struct VariableSpec {
  enum class Kind { Integer, Continuous };
  std::string name;
  Kind kind = Kind::Continuous;
  double lower = 0.0;
  double upper = 0.0;
};

/// Reference point strictly below every attainable objective value.
/// margin[i] is the gap to the i-th individual minimum.
struct UtopiaVector {
  std::vector<double> values;
  std::vector<double> margin;
};

/// Multi-objective problem: minimize all objectives subject to
/// constraint expressions <= 0 over a box of integer and continuous
/// variables. Derived variables are substitutions evaluated before the
/// objective/constraint expressions.
class ProblemDef {
 public:
  ProblemDef(std::string name, std::vector<VariableSpec> variables,
             std::vector<std::pair<std::string, Expression>> derived,
             std::vector<Expression> objectives, std::vector<Expression> constraints,
             std::optional<std::vector<double>> utopia_default = std::nullopt);

  const std::string& name() const { return name_; }
  const std::vector<VariableSpec>& variables() const { return variables_; }
  const std::vector<std::pair<std::string, Expression>>& derived() const { return derived_; }
  const std::vector<Expression>& objectives() const { return objectives_; }
  const std::vector<Expression>& constraints() const { return constraints_; }
  const std::optional<std::vector<double>>& utopia_default() const { return utopia_default_; }

  std::size_t num_objectives() const { return objectives_.size(); }
  std::size_t num_constraints() const { return constraints_.size(); }
  std::size_t num_integer() const { return integer_index_.size(); }
  std::size_t num_continuous() const { return continuous_index_.size(); }
  bool pure_integer() const { return continuous_index_.empty(); }

  /// Variable indices (into variables()) by kind, in declaration order.
  const std::vector<int>& integer_index() const { return integer_index_; }
  const std::vector<int>& continuous_index() const { return continuous_index_; }

  double feasibility_eps() const { return pure_integer() ? 0.0 : 1e-8; }
  double dominance_eps() const { return pure_integer() ? 0.0 : 1e-7; }

  /// Fills `full` with variable values followed by derived values; this is
  /// the slot layout every bound expression evaluates against.
  void assemble(std::span<const long long> ints, std::span<const double> conts,
                std::vector<double>& full) const;
  void assemble(const DecisionPoint& x, std::vector<double>& full) const;

  void objective_values(std::span<const double> full, ObjectiveVector& out) const;
  ObjectiveVector objective_values(const DecisionPoint& x) const;
  void constraint_values(std::span<const double> full, std::vector<double>& out) const;

  bool bounds_ok(const DecisionPoint& x) const;
  bool is_feasible(const DecisionPoint& x) const;

 private:
  std::string name_;
  std::vector<VariableSpec> variables_;
  std::vector<std::pair<std::string, Expression>> derived_;  // topologically ordered
  std::vector<Expression> objectives_;
  std::vector<Expression> constraints_;
  std::optional<std::vector<double>> utopia_default_;
  std::vector<int> integer_index_;
  std::vector<int> continuous_index_;
  mutable std::vector<double> full_scratch_;
};

/// The built-in problems: tp1, tp2, tp3, rocket.
ProblemDef builtin_problem(const std::string& name);

/// Parses the JSON problem document format (see README).
ProblemDef parse_problem(const std::string& json_text);
ProblemDef parse_problem_file(const std::string& path);

bool is_feasible(const ProblemDef& p, const DecisionPoint& x);

/// Explicit utopia values validated against the individual-minima images.
UtopiaVector make_utopia(std::span<const double> values,
                         std::span<const double> minima_images);

/// Defaulting rule: the problem's declared utopia if present, otherwise
/// the individual-minima image shifted down by 1 per coordinate.
UtopiaVector default_utopia(const ProblemDef& p, std::span<const double> minima_images);

}  // namespace mopf
