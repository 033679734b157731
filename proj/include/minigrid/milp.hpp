#pragma once

#include <limits>
#include <string>
#include <unordered_map>
#include <vector>

#include "minigrid/common.hpp"

namespace minigrid {

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct MILPVariable {
  std::string name;
  double lower = 0.0;
  double upper = kInfinity;
  double objective = 0.0;
  bool is_integer = false;
};

struct LinearTerm {
  int var = -1;
  double coef = 0.0;
};

enum class RowSense { le, ge, eq };

struct MILPConstraint {
  std::string name;
  std::vector<LinearTerm> terms;
  RowSense sense = RowSense::eq;
  double rhs = 0.0;
};

/// Solver-neutral minimization MILP. Variables and constraints are referred
/// to by index internally and by semantic name at the interface.
class MILPInstance {
 public:
  int add_variable(const std::string& name, double lower = 0.0, double upper = kInfinity,
                   double objective = 0.0, bool is_integer = false);
  int add_constraint(const std::string& name, std::vector<LinearTerm> terms,
                     RowSense sense, double rhs);

  int variable(const std::string& name) const;  // throws on unknown name
  bool has_variable(const std::string& name) const;
  MILPVariable& var(int idx) { return variables_.at(idx); }
  const MILPVariable& var(int idx) const { return variables_.at(idx); }

  void add_objective_term(int var, double coef) { variables_.at(var).objective += coef; }
  void set_bounds(int var, double lower, double upper);
  void fix_variable(int var, double value) { set_bounds(var, value, value); }

  const std::vector<MILPVariable>& variables() const { return variables_; }
  const std::vector<MILPConstraint>& constraints() const { return constraints_; }

  int num_variables() const { return static_cast<int>(variables_.size()); }
  int num_integer_variables() const;
  int num_constraints() const { return static_cast<int>(constraints_.size()); }

 private:
  std::vector<MILPVariable> variables_;
  std::vector<MILPConstraint> constraints_;
  std::unordered_map<std::string, int> by_name_;
};

/// CPLEX LP text format (Minimize / Subject To / Bounds / Binary / General).
std::string write_lp(const MILPInstance& inst, const std::string& comment = "");

/// Free MPS text format.
std::string write_mps(const MILPInstance& inst, const std::string& model_name = "minigrid");

/// Reads the LP subset produced by write_lp. Used to verify that instances
/// serialize and reload without structural loss; not a general LP parser.
MILPInstance parse_lp(const std::string& text);

}  // namespace minigrid
