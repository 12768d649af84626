#include "mopf/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <limits>

namespace mopf {

namespace {

struct Token {
  enum class Kind { Number, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, End };
  Kind kind;
  double number = 0.0;
  std::string text;
  std::size_t pos = 0;
};

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  Token next() {
    while (i_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[i_]))) ++i_;
    Token t;
    t.pos = i_;
    if (i_ >= src_.size()) {
      t.kind = Token::Kind::End;
      return t;
    }
    char c = src_[i_];
    switch (c) {
      case '+': ++i_; t.kind = Token::Kind::Plus; return t;
      case '-': ++i_; t.kind = Token::Kind::Minus; return t;
      case '*': ++i_; t.kind = Token::Kind::Star; return t;
      case '/': ++i_; t.kind = Token::Kind::Slash; return t;
      case '^': ++i_; t.kind = Token::Kind::Caret; return t;
      case '(': ++i_; t.kind = Token::Kind::LParen; return t;
      case ')': ++i_; t.kind = Token::Kind::RParen; return t;
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::size_t start = i_;
      while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      if (i_ < src_.size() && src_[i_] == '.') {
        ++i_;
        while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
      }
      if (i_ < src_.size() && (src_[i_] == 'e' || src_[i_] == 'E')) {
        std::size_t mark = i_;
        ++i_;
        if (i_ < src_.size() && (src_[i_] == '+' || src_[i_] == '-')) ++i_;
        if (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) {
          while (i_ < src_.size() && std::isdigit(static_cast<unsigned char>(src_[i_]))) ++i_;
        } else {
          i_ = mark;  // the 'e' starts an identifier, not an exponent
        }
      }
      t.kind = Token::Kind::Number;
      t.text = std::string(src_.substr(start, i_ - start));
      if (t.text == ".") throw ParseError("malformed number", start);
      t.number = std::strtod(t.text.c_str(), nullptr);
      return t;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i_;
      while (i_ < src_.size() &&
             (std::isalnum(static_cast<unsigned char>(src_[i_])) || src_[i_] == '_'))
        ++i_;
      t.kind = Token::Kind::Ident;
      t.text = std::string(src_.substr(start, i_ - start));
      return t;
    }
    throw ParseError(std::string("unknown token '") + c + "'", i_);
  }

 private:
  std::string_view src_;
  std::size_t i_ = 0;
};

}  // namespace

class ExprParser {
 public:
  explicit ExprParser(std::string_view src) : lexer_(src) { advance(); }

  Expression run() {
    if (cur_.kind == Token::Kind::End) throw ParseError("empty expression", 0);
    int root = parse_sum();
    if (cur_.kind != Token::Kind::End) throw ParseError("unexpected trailing input", cur_.pos);
    expr_.root_ = root;
    return std::move(expr_);
  }

 private:
  void advance() { cur_ = lexer_.next(); }

  int add_node(Expression::Node n) {
    expr_.nodes_.push_back(n);
    return static_cast<int>(expr_.nodes_.size()) - 1;
  }

  int name_id(const std::string& name) {
    for (std::size_t i = 0; i < expr_.names_.size(); ++i)
      if (expr_.names_[i] == name) return static_cast<int>(i);
    expr_.names_.push_back(name);
    return static_cast<int>(expr_.names_.size()) - 1;
  }

  int parse_sum() {
    int lhs = parse_term();
    while (cur_.kind == Token::Kind::Plus || cur_.kind == Token::Kind::Minus) {
      auto op = cur_.kind == Token::Kind::Plus ? Expression::Op::Add : Expression::Op::Sub;
      advance();
      int rhs = parse_term();
      Expression::Node n;
      n.op = op;
      n.lhs = lhs;
      n.rhs = rhs;
      lhs = add_node(n);
    }
    return lhs;
  }

  int parse_term() {
    int lhs = parse_unary();
    while (cur_.kind == Token::Kind::Star || cur_.kind == Token::Kind::Slash) {
      auto op = cur_.kind == Token::Kind::Star ? Expression::Op::Mul : Expression::Op::Div;
      advance();
      int rhs = parse_unary();
      Expression::Node n;
      n.op = op;
      n.lhs = lhs;
      n.rhs = rhs;
      lhs = add_node(n);
    }
    return lhs;
  }

  int parse_unary() {
    if (cur_.kind == Token::Kind::Minus) {
      advance();
      int child = parse_unary();
      Expression::Node n;
      n.op = Expression::Op::Neg;
      n.lhs = child;
      return add_node(n);
    }
    return parse_power();
  }

  int parse_power() {
    int base = parse_primary();
    if (cur_.kind == Token::Kind::Caret) {
      std::size_t pos = cur_.pos;
      advance();
      if (cur_.kind != Token::Kind::Number)
        throw ParseError("exponent must be a nonnegative integer literal", pos);
      double e = cur_.number;
      if (e < 0 || e != std::floor(e) || cur_.text.find_first_of(".eE") != std::string::npos)
        throw ParseError("exponent must be a nonnegative integer literal", cur_.pos);
      advance();
      Expression::Node n;
      n.op = Expression::Op::Pow;
      n.lhs = base;
      n.exponent = static_cast<int>(e);
      return add_node(n);
    }
    return base;
  }

  int parse_primary() {
    switch (cur_.kind) {
      case Token::Kind::Number: {
        Expression::Node n;
        n.op = Expression::Op::Constant;
        n.value = cur_.number;
        advance();
        return add_node(n);
      }
      case Token::Kind::Ident: {
        Expression::Node n;
        n.op = Expression::Op::Variable;
        n.name_id = name_id(cur_.text);
        advance();
        return add_node(n);
      }
      case Token::Kind::LParen: {
        advance();
        int inner = parse_sum();
        if (cur_.kind != Token::Kind::RParen) throw ParseError("expected ')'", cur_.pos);
        advance();
        return inner;
      }
      default:
        throw ParseError("expected a number, variable, or '('", cur_.pos);
    }
  }

  Lexer lexer_;
  Token cur_;
  Expression expr_;
};

Expression Expression::parse(std::string_view text) { return ExprParser(text).run(); }

void Expression::bind(const std::unordered_map<std::string, int>& slots) {
  for (auto& n : nodes_) {
    if (n.op != Op::Variable) continue;
    auto it = slots.find(names_[n.name_id]);
    if (it == slots.end())
      throw EvalError("undeclared variable '" + names_[n.name_id] + "'");
    n.var = it->second;
  }
}

double Expression::eval(std::span<const double> values) const {
  scratch_.resize(nodes_.size());
  double* v = scratch_.data();
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::Constant: v[i] = n.value; break;
      case Op::Variable: v[i] = values[n.var]; break;
      case Op::Add: v[i] = v[n.lhs] + v[n.rhs]; break;
      case Op::Sub: v[i] = v[n.lhs] - v[n.rhs]; break;
      case Op::Mul: v[i] = v[n.lhs] * v[n.rhs]; break;
      case Op::Div: v[i] = v[n.lhs] / v[n.rhs]; break;
      case Op::Neg: v[i] = -v[n.lhs]; break;
      case Op::Pow: {
        double r = 1.0, b = v[n.lhs];
        for (int e = 0; e < n.exponent; ++e) r *= b;
        v[i] = r;
        break;
      }
    }
  }
  return v[root_];
}

double Expression::evaluate(const std::map<std::string, double>& assignment) const {
  std::vector<double> values(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    auto it = assignment.find(names_[i]);
    if (it == assignment.end()) throw EvalError("missing variable '" + names_[i] + "'");
    values[i] = it->second;
  }
  // evaluate over name ids rather than bound slots
  std::vector<double> v(nodes_.size());
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& n = nodes_[i];
    switch (n.op) {
      case Op::Constant: v[i] = n.value; break;
      case Op::Variable: v[i] = values[n.name_id]; break;
      case Op::Add: v[i] = v[n.lhs] + v[n.rhs]; break;
      case Op::Sub: v[i] = v[n.lhs] - v[n.rhs]; break;
      case Op::Mul: v[i] = v[n.lhs] * v[n.rhs]; break;
      case Op::Div:
        if (v[n.rhs] == 0.0) throw EvalError("division by zero");
        v[i] = v[n.lhs] / v[n.rhs];
        break;
      case Op::Neg: v[i] = -v[n.lhs]; break;
      case Op::Pow: {
        double r = 1.0, b = v[n.lhs];
        for (int e = 0; e < n.exponent; ++e) r *= b;
        v[i] = r;
        break;
      }
    }
  }
  double result = v[root_];
  if (!std::isfinite(result)) throw EvalError("non-finite result");
  return result;
}

namespace {

int precedence(Expression::Op op) {
  switch (op) {
    case Expression::Op::Add:
    case Expression::Op::Sub: return 1;
    case Expression::Op::Mul:
    case Expression::Op::Div: return 2;
    case Expression::Op::Neg: return 3;
    case Expression::Op::Pow: return 4;
    default: return 5;
  }
}

void print_node(const std::vector<Expression::Node>& nodes,
                const std::vector<std::string>& names, int idx, std::string& out) {
  const Expression::Node& n = nodes[idx];
  auto child = [&](int c, bool needs_paren) {
    if (needs_paren) out += '(';
    print_node(nodes, names, c, out);
    if (needs_paren) out += ')';
  };
  switch (n.op) {
    case Expression::Op::Constant: {
      char buf[32];
      std::snprintf(buf, sizeof(buf), "%.17g", n.value);
      out += buf;
      break;
    }
    case Expression::Op::Variable:
      out += names[n.name_id];
      break;
    case Expression::Op::Add:
    case Expression::Op::Sub: {
      child(n.lhs, precedence(nodes[n.lhs].op) < 1);
      out += n.op == Expression::Op::Add ? " + " : " - ";
      child(n.rhs, precedence(nodes[n.rhs].op) <= 1);
      break;
    }
    case Expression::Op::Mul:
    case Expression::Op::Div: {
      child(n.lhs, precedence(nodes[n.lhs].op) < 2);
      out += n.op == Expression::Op::Mul ? "*" : "/";
      child(n.rhs, precedence(nodes[n.rhs].op) <= 2);
      break;
    }
    case Expression::Op::Neg:
      out += '-';
      child(n.lhs, precedence(nodes[n.lhs].op) < 3);
      break;
    case Expression::Op::Pow:
      child(n.lhs, precedence(nodes[n.lhs].op) < 5);
      out += '^';
      out += std::to_string(n.exponent);
      break;
  }
}

bool nodes_equal(const std::vector<Expression::Node>& a, const std::vector<std::string>& an,
                 int ia, const std::vector<Expression::Node>& b,
                 const std::vector<std::string>& bn, int ib) {
  const auto& na = a[ia];
  const auto& nb = b[ib];
  if (na.op != nb.op) return false;
  switch (na.op) {
    case Expression::Op::Constant: return na.value == nb.value;
    case Expression::Op::Variable: return an[na.name_id] == bn[nb.name_id];
    case Expression::Op::Neg: return nodes_equal(a, an, na.lhs, b, bn, nb.lhs);
    case Expression::Op::Pow:
      return na.exponent == nb.exponent && nodes_equal(a, an, na.lhs, b, bn, nb.lhs);
    default:
      return nodes_equal(a, an, na.lhs, b, bn, nb.lhs) &&
             nodes_equal(a, an, na.rhs, b, bn, nb.rhs);
  }
}

}  // namespace

std::string Expression::to_string() const {
  std::string out;
  if (root_ >= 0) print_node(nodes_, names_, root_, out);
  return out;
}

bool Expression::same_structure(const Expression& other) const {
  if (root_ < 0 || other.root_ < 0) return root_ == other.root_;
  return nodes_equal(nodes_, names_, root_, other.nodes_, other.names_, other.root_);
}

}  // namespace mopf
