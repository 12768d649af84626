#include "mopf/problems.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "json.hpp"

namespace mopf {

ProblemDef::ProblemDef(std::string name, std::vector<VariableSpec> variables,
                       std::vector<std::pair<std::string, Expression>> derived,
                       std::vector<Expression> objectives,
                       std::vector<Expression> constraints,
                       std::optional<std::vector<double>> utopia_default)
    : name_(std::move(name)),
      variables_(std::move(variables)),
      derived_(std::move(derived)),
      objectives_(std::move(objectives)),
      constraints_(std::move(constraints)),
      utopia_default_(std::move(utopia_default)) {
  if (objectives_.size() < 2)
    throw std::invalid_argument("problem needs at least two objectives");
  if (variables_.empty()) throw std::invalid_argument("problem has no variables");
  if (utopia_default_ && utopia_default_->size() != objectives_.size())
    throw std::invalid_argument("utopia length does not match objective count");

  std::set<std::string> seen;
  for (std::size_t i = 0; i < variables_.size(); ++i) {
    const auto& v = variables_[i];
    if (!seen.insert(v.name).second)
      throw std::invalid_argument("duplicate variable name '" + v.name + "'");
    if (!(v.lower <= v.upper))
      throw std::invalid_argument("variable '" + v.name + "': lower > upper");
    if (v.kind == VariableSpec::Kind::Integer) {
      if (v.lower != std::floor(v.lower) || v.upper != std::floor(v.upper))
        throw std::invalid_argument("variable '" + v.name + "': integer bounds not integral");
      integer_index_.push_back(static_cast<int>(i));
    } else {
      continuous_index_.push_back(static_cast<int>(i));
    }
  }
  for (const auto& [dname, dexpr] : derived_) {
    (void)dexpr;
    if (!seen.insert(dname).second)
      throw std::invalid_argument("duplicate name '" + dname + "'");
  }

  // Topologically order the derived definitions; reject cycles.
  std::unordered_map<std::string, int> derived_pos;
  for (std::size_t i = 0; i < derived_.size(); ++i)
    derived_pos[derived_[i].first] = static_cast<int>(i);
  std::vector<int> state(derived_.size(), 0);  // 0 new, 1 visiting, 2 done
  std::vector<std::pair<std::string, Expression>> ordered;
  ordered.reserve(derived_.size());
  auto visit = [&](auto&& self, int i) -> void {
    if (state[i] == 2) return;
    if (state[i] == 1)
      throw std::invalid_argument("cyclic derived definitions involving '" +
                                  derived_[i].first + "'");
    state[i] = 1;
    for (const auto& ref : derived_[i].second.variable_names()) {
      auto it = derived_pos.find(ref);
      if (it != derived_pos.end()) self(self, it->second);
    }
    state[i] = 2;
    ordered.push_back(derived_[i]);
  };
  for (std::size_t i = 0; i < derived_.size(); ++i) visit(visit, static_cast<int>(i));
  derived_ = std::move(ordered);

  // Slot layout: declared variables, then derived values.
  std::unordered_map<std::string, int> slots;
  for (std::size_t i = 0; i < variables_.size(); ++i)
    slots[variables_[i].name] = static_cast<int>(i);
  for (std::size_t i = 0; i < derived_.size(); ++i)
    slots[derived_[i].first] = static_cast<int>(variables_.size() + i);

  auto check_and_bind = [&](Expression& e, const char* where) {
    for (const auto& ref : e.variable_names())
      if (!slots.count(ref))
        throw std::invalid_argument(std::string(where) + " references undeclared variable '" +
                                    ref + "'");
    e.bind(slots);
  };
  for (std::size_t i = 0; i < derived_.size(); ++i) {
    // a derived value may only use variables and earlier derived values
    for (const auto& ref : derived_[i].second.variable_names()) {
      auto it = slots.find(ref);
      if (it == slots.end())
        throw std::invalid_argument("derived '" + derived_[i].first +
                                    "' references undeclared variable '" + ref + "'");
    }
    derived_[i].second.bind(slots);
  }
  for (auto& e : objectives_) check_and_bind(e, "objective");
  for (auto& e : constraints_) check_and_bind(e, "constraint");
}

void ProblemDef::assemble(std::span<const long long> ints, std::span<const double> conts,
                          std::vector<double>& full) const {
  if (ints.size() != integer_index_.size() || conts.size() != continuous_index_.size())
    throw std::invalid_argument("decision point layout mismatch for problem '" + name_ + "'");
  full.resize(variables_.size() + derived_.size());
  for (std::size_t i = 0; i < ints.size(); ++i)
    full[integer_index_[i]] = static_cast<double>(ints[i]);
  for (std::size_t i = 0; i < conts.size(); ++i) full[continuous_index_[i]] = conts[i];
  for (std::size_t i = 0; i < derived_.size(); ++i)
    full[variables_.size() + i] = derived_[i].second.eval(full);
}

void ProblemDef::assemble(const DecisionPoint& x, std::vector<double>& full) const {
  assemble(x.integer_part, x.continuous_part, full);
}

void ProblemDef::objective_values(std::span<const double> full, ObjectiveVector& out) const {
  out.resize(objectives_.size());
  for (std::size_t i = 0; i < objectives_.size(); ++i) out[i] = objectives_[i].eval(full);
}

ObjectiveVector ProblemDef::objective_values(const DecisionPoint& x) const {
  assemble(x, full_scratch_);
  ObjectiveVector out;
  objective_values(full_scratch_, out);
  return out;
}

void ProblemDef::constraint_values(std::span<const double> full,
                                   std::vector<double>& out) const {
  out.resize(constraints_.size());
  for (std::size_t i = 0; i < constraints_.size(); ++i) out[i] = constraints_[i].eval(full);
}

bool ProblemDef::bounds_ok(const DecisionPoint& x) const {
  if (x.integer_part.size() != integer_index_.size() ||
      x.continuous_part.size() != continuous_index_.size())
    throw std::invalid_argument("decision point layout mismatch for problem '" + name_ + "'");
  for (std::size_t i = 0; i < x.integer_part.size(); ++i) {
    const auto& v = variables_[integer_index_[i]];
    double val = static_cast<double>(x.integer_part[i]);
    if (val < v.lower || val > v.upper) return false;
  }
  for (std::size_t i = 0; i < x.continuous_part.size(); ++i) {
    const auto& v = variables_[continuous_index_[i]];
    if (x.continuous_part[i] < v.lower || x.continuous_part[i] > v.upper) return false;
  }
  return true;
}

bool ProblemDef::is_feasible(const DecisionPoint& x) const {
  if (!bounds_ok(x)) return false;
  assemble(x, full_scratch_);
  const double eps = feasibility_eps();
  for (const auto& g : constraints_) {
    double v = g.eval(full_scratch_);
    if (!(v <= eps)) return false;
  }
  return true;
}

bool is_feasible(const ProblemDef& p, const DecisionPoint& x) { return p.is_feasible(x); }

namespace {

VariableSpec int_var(std::string name, double lo, double hi) {
  return {std::move(name), VariableSpec::Kind::Integer, lo, hi};
}

VariableSpec cont_var(std::string name, double lo, double hi) {
  return {std::move(name), VariableSpec::Kind::Continuous, lo, hi};
}

Expression E(const char* text) { return Expression::parse(text); }

ProblemDef make_tp1() {
  return ProblemDef(
      "tp1", {int_var("x1", 0, 4), int_var("x2", 0, 4)}, {},
      {E("x1"), E("x2")}, {E("(x1-4)^2 + (x2-4)^2 - 16")},
      std::vector<double>{-10, -10});
}

ProblemDef make_tp2() {
  return ProblemDef(
      "tp2", {int_var("x1", 0, 4), int_var("x2", 0, 4), int_var("x3", 0, 4)}, {},
      {E("x1"), E("x2"), E("x3")},
      {E("(x1-2)^2 + (x2-2)^2 + (x3-2)^2 - 4")},
      std::vector<double>{-10, -10, -10});
}

ProblemDef make_tp3() {
  return ProblemDef(
      "tp3", {int_var("x1", 0, 6), int_var("x2", 0, 4), int_var("x3", 0, 6)}, {},
      {E("-x1"), E("-x2"), E("-x3")},
      {E("3*x1 + 2*x2 + 3*x3 - 18"), E("x1 + 2*x2 + x3 - 10"),
       E("9*x1 + 20*x2 + 7*x3 - 96"), E("7*x1 + 20*x2 + 9*x3 - 96")},
      std::vector<double>{-100, -100, -100});
}

// Response-surface polynomials of the mixed-integer injector design
// problem; the flow angle x1 is restricted to {0, 0.2, 0.4, 0.6} via the
// integer variable xt1.
const char* kRocketF1 =
    "0.692 + 0.477*x1 - 0.687*x4 - 0.08*x3 - 0.065*x2 - 0.167*x1^2"
    " - 0.0129*x1*x4 + 0.0796*x4^2 - 0.0634*x1*x3 - 0.0257*x3*x4"
    " + 0.0877*x3^2 - 0.0521*x1*x2 + 0.00156*x2*x4 + 0.00198*x2*x3"
    " + 0.0184*x2^2";
const char* kRocketF2 =
    "0.37 - 0.205*x1 + 0.0307*x4 + 0.108*x3 + 1.019*x2 - 0.135*x1^2"
    " + 0.0141*x1*x4 + 0.0998*x4^2 + 0.208*x1*x3 - 0.0301*x3*x4"
    " - 0.226*x3^2 + 0.353*x1*x2 - 0.0497*x2*x3 - 0.423*x2^2"
    " + 0.202*x1^2*x4 - 0.281*x1^2*x3 - 0.342*x1*x4^2 - 0.245*x3*x4^2"
    " + 0.281*x3^2*x4 - 0.184*x1*x2^2 + 0.281*x1*x3*x4";
const char* kRocketF3 =
    "0.153 - 0.322*x1 + 0.396*x4 + 0.424*x3 + 0.0226*x2 + 0.175*x1^2"
    " + 0.0185*x1*x4 - 0.0701*x4^2 - 0.251*x1*x3 + 0.179*x3*x4"
    " + 0.015*x3^2 + 0.0134*x1*x2 + 0.0296*x2*x4 + 0.0752*x2*x3"
    " + 0.0192*x2^2";
const char* kRocketF4 =
    "0.758 + 0.358*x1 - 0.807*x4 + 0.0925*x3 - 0.0468*x2 - 0.172*x1^2"
    " + 0.0106*x1*x4 + 0.0697*x4^2 - 0.146*x1*x3 - 0.0416*x3*x4"
    " + 0.102*x3^2 - 0.0694*x1*x2 - 0.00503*x2*x4 + 0.0151*x2*x3"
    " + 0.0173*x2^2";

ProblemDef make_rocket() {
  return ProblemDef(
      "rocket",
      {int_var("xt1", 0, 3), cont_var("x2", 0, 1), cont_var("x3", 0, 1),
       cont_var("x4", 0, 1)},
      {{"x1", E("0.2*xt1")}},
      {E(kRocketF1), E(kRocketF2), E(kRocketF3), E(kRocketF4)}, {});
}

}  // namespace

ProblemDef builtin_problem(const std::string& name) {
  if (name == "tp1") return make_tp1();
  if (name == "tp2") return make_tp2();
  if (name == "tp3") return make_tp3();
  if (name == "rocket") return make_rocket();
  throw std::invalid_argument("unknown builtin problem '" + name + "'");
}

ProblemDef parse_problem(const std::string& json_text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("problem document is not valid JSON: ") +
                                e.what());
  }
  if (!doc.is_object()) throw std::invalid_argument("problem document must be an object");
  if (!doc.contains("variables") || !doc["variables"].is_array())
    throw std::invalid_argument("problem document: missing \"variables\" array");
  if (!doc.contains("objectives") || !doc["objectives"].is_array())
    throw std::invalid_argument("problem document: missing \"objectives\" array");

  std::vector<VariableSpec> vars;
  for (const auto& v : doc["variables"]) {
    if (!v.is_object() || !v.contains("name") || !v.contains("kind") ||
        !v.contains("lower") || !v.contains("upper"))
      throw std::invalid_argument(
          "variable entries need \"name\", \"kind\", \"lower\", \"upper\"");
    std::string kind = v["kind"].get<std::string>();
    VariableSpec::Kind k;
    if (kind == "integer")
      k = VariableSpec::Kind::Integer;
    else if (kind == "continuous")
      k = VariableSpec::Kind::Continuous;
    else
      throw std::invalid_argument("variable kind must be \"integer\" or \"continuous\"");
    vars.push_back({v["name"].get<std::string>(), k, v["lower"].get<double>(),
                    v["upper"].get<double>()});
  }

  std::vector<std::pair<std::string, Expression>> derived;
  if (doc.contains("derived")) {
    if (!doc["derived"].is_array())
      throw std::invalid_argument("\"derived\" must be an array");
    for (const auto& d : doc["derived"]) {
      if (!d.is_object() || !d.contains("name") || !d.contains("expr"))
        throw std::invalid_argument("derived entries need \"name\" and \"expr\"");
      derived.emplace_back(d["name"].get<std::string>(),
                           Expression::parse(d["expr"].get<std::string>()));
    }
  }

  std::vector<Expression> objectives;
  for (const auto& o : doc["objectives"])
    objectives.push_back(Expression::parse(o.get<std::string>()));

  std::vector<Expression> constraints;
  if (doc.contains("constraints")) {
    if (!doc["constraints"].is_array())
      throw std::invalid_argument("\"constraints\" must be an array");
    for (const auto& c : doc["constraints"])
      constraints.push_back(Expression::parse(c.get<std::string>()));
  }

  std::optional<std::vector<double>> utopia;
  if (doc.contains("utopia")) {
    if (!doc["utopia"].is_array())
      throw std::invalid_argument("\"utopia\" must be an array of reals");
    utopia = doc["utopia"].get<std::vector<double>>();
  }

  std::string name = doc.contains("name") ? doc["name"].get<std::string>() : "problem";
  return ProblemDef(std::move(name), std::move(vars), std::move(derived),
                    std::move(objectives), std::move(constraints), std::move(utopia));
}

ProblemDef parse_problem_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_problem(ss.str());
}

UtopiaVector make_utopia(std::span<const double> values,
                         std::span<const double> minima_images) {
  if (values.size() != minima_images.size())
    throw std::invalid_argument("utopia length does not match objective count");
  UtopiaVector u;
  u.values.assign(values.begin(), values.end());
  u.margin.resize(values.size());
  for (std::size_t i = 0; i < values.size(); ++i) {
    u.margin[i] = minima_images[i] - values[i];
    if (!(u.margin[i] > 0))
      throw std::invalid_argument("utopia must lie strictly below the individual minima");
  }
  return u;
}

UtopiaVector default_utopia(const ProblemDef& p, std::span<const double> minima_images) {
  if (p.utopia_default())
    return make_utopia(*p.utopia_default(), minima_images);
  std::vector<double> vals(minima_images.begin(), minima_images.end());
  for (auto& v : vals) v -= 1.0;
  return make_utopia(vals, minima_images);
}

}  // namespace mopf
