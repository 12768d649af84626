#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace mopf {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Arithmetic expression over named variables: literals, + - * /,
/// unary minus, ^ with a nonnegative integer exponent, parentheses.
/// Precedence: ^  >  unary -  >  * /  >  + -, the arithmetic operators
/// associating left. Nodes are stored flat in evaluation order, so eval()
/// is a single forward pass with no recursion.
class Expression {
 public:
  enum class Op : std::uint8_t { Constant, Variable, Add, Sub, Mul, Div, Neg, Pow };

  struct Node {
    Op op = Op::Constant;
    double value = 0.0;   // Constant
    int var = -1;         // Variable: slot filled in by bind()
    int name_id = -1;     // Variable: index into names_
    int lhs = -1;
    int rhs = -1;
    int exponent = 0;     // Pow
  };

  Expression() = default;

  static Expression parse(std::string_view text);

  /// Resolves variable names to value slots. Throws EvalError on a name
  /// missing from `slots`.
  void bind(const std::unordered_map<std::string, int>& slots);

  /// Fast path after bind(). Division by zero and overflow propagate as
  /// non-finite values; callers decide what to do with them.
  double eval(std::span<const double> values) const;

  /// Checked evaluation by variable name. Throws EvalError for a missing
  /// variable, division by zero, or a non-finite result.
  double evaluate(const std::map<std::string, double>& assignment) const;

  std::string to_string() const;
  bool same_structure(const Expression& other) const;

  const std::vector<std::string>& variable_names() const { return names_; }
  bool empty() const { return nodes_.empty(); }

 private:
  friend class ExprParser;
  std::vector<Node> nodes_;
  std::vector<std::string> names_;
  int root_ = -1;
  mutable std::vector<double> scratch_;
};

}  // namespace mopf
