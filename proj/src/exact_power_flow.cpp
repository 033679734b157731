#include "minigrid/exact_power_flow.hpp"

#include <cmath>

namespace minigrid {

namespace {

double injection_mismatch(const AdmittanceMatrix& y, Complex v0,
                          const Eigen::VectorXcd& v, const Eigen::VectorXd& x) {
  const int m = static_cast<int>(v.size());
  const Eigen::VectorXcd current = y.yl0 * v0 + y.yll * v;
  double worst = 0.0;
  for (int n = 0; n < m; ++n) {
    const Complex s_model = v(n) * std::conj(current(n));
    worst = std::max(worst, std::abs(s_model - Complex(x(n), x(m + n))));
  }
  return worst;
}

}  // namespace

ExactPFSolution solve_power_flow(const AdmittanceMatrix& y, Complex v0,
                                 const Eigen::VectorXd& x, double tol, int max_iter) {
  if (!(tol > 0.0)) throw std::invalid_argument("tolerance must be > 0");
  if (max_iter < 1) throw std::invalid_argument("max_iter must be >= 1");
  const int m = y.non_slack_count();
  if (x.size() != 2 * m) throw std::invalid_argument("injection vector must have length 2M");

  ExactPFSolution sol;
  if (m == 0) {
    sol.v.resize(0);
    sol.slack_power = v0 * std::conj(y.y00 * v0);
    sol.residual = 0.0;
    sol.iterations = 0;
    return sol;
  }

  Eigen::VectorXcd s(m);
  for (int n = 0; n < m; ++n) s(n) = Complex(x(n), x(m + n));

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(y.yll);
  const Eigen::VectorXcd w = lu.solve(Eigen::VectorXcd(-y.yl0.transpose() * v0));

  Eigen::VectorXcd v = Eigen::VectorXcd::Constant(m, v0);
  double residual = injection_mismatch(y, v0, v, x);
  int it = 0;
  for (; it < max_iter; ++it) {
    if (residual <= tol) break;
    Eigen::VectorXcd rhs(m);
    for (int n = 0; n < m; ++n) rhs(n) = std::conj(s(n)) / std::conj(v(n));
    Eigen::VectorXcd v_next = w + lu.solve(rhs);
    if (!v_next.allFinite() || (v_next.array().abs() < 1e-6).any()) {
      throw ConvergenceError("power flow diverged (voltage collapse)", v, residual);
    }
    const double dv = (v_next - v).cwiseAbs().maxCoeff();
    v = v_next;
    residual = injection_mismatch(y, v0, v, x);
    if (dv <= tol && residual <= tol) {
      ++it;
      break;
    }
  }
  if (residual > tol)
    throw ConvergenceError("power flow did not converge within " + std::to_string(max_iter) +
                               " iterations (residual " + format_full(residual) + " pu)",
                           v, residual);

  sol.v = v;
  sol.slack_power = v0 * std::conj(y.y00 * v0 + y.y0l * v);
  sol.iterations = it;
  sol.residual = residual;
  return sol;
}

LinearizationAnchor solved_anchor(const AdmittanceMatrix& y, Complex v0,
                                  const Eigen::VectorXd& x, double tol, int max_iter) {
  LinearizationAnchor a;
  a.v_hat = solve_power_flow(y, v0, x, tol, max_iter).v;
  a.x_hat = x;
  return a;
}

ErrorStats compare_models(const LinearPFModel& model, const AdmittanceMatrix& y,
                          Complex v0, const InjectionProfile& profile, double tol,
                          int max_iter) {
  const int m = y.non_slack_count();
  const int h_count = profile.horizon();
  if (h_count == 0) throw std::invalid_argument("profile must have at least one timestep");
  if (profile.p.rows() != m || profile.q.rows() != m)
    throw std::invalid_argument("profile row count must equal the non-slack node count");

  ErrorStats stats;
  stats.per_node_mean_pct = Eigen::VectorXd::Zero(m);
  double sum = 0.0;
  for (int h = 0; h < h_count; ++h) {
    const Eigen::VectorXd x = profile.column(h);
    ExactPFSolution exact;
    try {
      exact = solve_power_flow(y, v0, x, tol, max_iter);
    } catch (const ConvergenceError& e) {
      throw ConvergenceError("exact solver failed at timestep " + std::to_string(h) + ": " +
                                 e.what(),
                             e.last_iterate, e.residual);
    }
    const Eigen::VectorXd v_lin = eval_voltage(model, x);
    for (int n = 0; n < m; ++n) {
      const double v_exact = std::abs(exact.v(n));
      const double pct = 100.0 * std::abs(v_lin(n) - v_exact) / v_exact;
      sum += pct;
      stats.max_pct = std::max(stats.max_pct, pct);
      stats.per_node_mean_pct(n) += pct;
    }
  }
  stats.mean_pct = sum / (static_cast<double>(m) * h_count);
  stats.per_node_mean_pct /= static_cast<double>(h_count);
  return stats;
}

}  // namespace minigrid
