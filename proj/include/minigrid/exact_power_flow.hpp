#pragma once

#include "minigrid/linear_power_flow.hpp"

namespace minigrid {

/// Converged nonlinear power-flow solution.
struct ExactPFSolution {
  Eigen::VectorXcd v;   // M complex voltages, pu
  Complex slack_power;  // net complex power injected at the slack, pu
  int iterations = 0;
  double residual = 0.0;  // max injection mismatch, pu
};

/// Solves the exact power-flow equations by iterating the fixed-point map
///   v <- w + YLL^-1 diag(1/conj(v)) conj(s),  started from v = v0 * 1,
/// until the voltage update and the injection mismatch both drop below
/// `tol`. Throws ConvergenceError (carrying the last iterate and residual)
/// when no solution is reached within `max_iter`, e.g. loading beyond the
/// maximum transferable power.
ExactPFSolution solve_power_flow(const AdmittanceMatrix& y, Complex v0,
                                 const Eigen::VectorXd& x, double tol = 1e-10,
                                 int max_iter = 200);

/// Exact anchor for the linearization: solves power flow at injection `x`.
LinearizationAnchor solved_anchor(const AdmittanceMatrix& y, Complex v0,
                                  const Eigen::VectorXd& x, double tol = 1e-10,
                                  int max_iter = 200);

/// Linear-vs-exact voltage-magnitude statistics over a profile.
struct ErrorStats {
  double mean_pct = 0.0;
  double max_pct = 0.0;
  Eigen::VectorXd per_node_mean_pct;
};

/// Runs the exact solver on every timestep of `profile` and reports the
/// percentage voltage-magnitude error of the linear model,
/// 100 * | |v|_lin - |v|_exact | / |v|_exact, aggregated over all
/// node-timesteps. Convergence failures propagate with the timestep index.
ErrorStats compare_models(const LinearPFModel& model, const AdmittanceMatrix& y,
                          Complex v0, const InjectionProfile& profile,
                          double tol = 1e-10, int max_iter = 200);

}  // namespace minigrid
