#pragma once

#include <complex>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace minigrid {

using Complex = std::complex<double>;

/// Network topology is unusable (disconnected graph, bad endpoints, ...).
struct TopologyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Linear algebra broke down (singular YLL, non-finite values, ...).
struct NumericError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A linearization anchor does not satisfy the exact power-flow equations.
struct AnchorError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Fixed-point power-flow iteration failed to converge. Carries the last
/// iterate so callers can classify the failure instead of aborting.
struct ConvergenceError : std::runtime_error {
  ConvergenceError(const std::string& msg, Eigen::VectorXcd iterate, double res)
      : std::runtime_error(msg), last_iterate(std::move(iterate)), residual(res) {}
  Eigen::VectorXcd last_iterate;
  double residual;
};

/// Optimization model could not be assembled (dimension mismatches, ...).
struct BuildError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Scenario/config file violates the schema. Message names the offending key.
struct SchemaError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// The solver subprocess failed or is not available.
struct SolverError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Model proven infeasible; `family` names the first constraint family whose
/// relaxation restores feasibility (voltage / topology / balance).
struct InfeasibleError : std::runtime_error {
  InfeasibleError(const std::string& msg, std::string fam)
      : std::runtime_error(msg), family(std::move(fam)) {}
  std::string family;
};

/// Formats a double with enough digits to round-trip, '.' decimal separator.
std::string format_full(double v);

/// Writes `content` to `path` atomically (temp file + rename).
void atomic_write_file(const std::string& path, const std::string& content);

}  // namespace minigrid
