#include "minigrid/linear_power_flow.hpp"

#include <cmath>

#include "minigrid/exact_power_flow.hpp"

namespace minigrid {

Eigen::VectorXd InjectionProfile::column(int h) const {
  const int m = static_cast<int>(p.rows());
  Eigen::VectorXd x(2 * m);
  x.head(m) = p.col(h);
  x.tail(m) = q.col(h);
  return x;
}

double reactive_from_real(double p, double power_factor) {
  if (!(power_factor > 0.0) || power_factor > 1.0)
    throw std::invalid_argument("power factor must be a fraction in (0,1]");
  return p * std::tan(std::acos(power_factor));
}

InjectionProfile injection_profile_from_real(const Eigen::MatrixXd& p, double power_factor) {
  if (!(power_factor > 0.0) || power_factor > 1.0)
    throw std::invalid_argument("power factor must be a fraction in (0,1]");
  InjectionProfile prof;
  prof.p = p;
  prof.q = p * std::tan(std::acos(power_factor));
  prof.power_factor = power_factor;
  return prof;
}

namespace {

// Max injection mismatch of (v, x) under the exact equations, pu.
double injection_residual(const AdmittanceMatrix& y, Complex v0,
                          const Eigen::VectorXcd& v, const Eigen::VectorXd& x) {
  const int m = static_cast<int>(v.size());
  const Eigen::VectorXcd current = y.yl0 * v0 + y.yll * v;
  double worst = 0.0;
  for (int n = 0; n < m; ++n) {
    const Complex s_model = v(n) * std::conj(current(n));
    const Complex s_target(x(n), x(m + n));
    worst = std::max(worst, std::abs(s_model - s_target));
  }
  return worst;
}

}  // namespace

LinearizationAnchor flat_anchor(const AdmittanceMatrix& y, Complex v0) {
  const int m = y.non_slack_count();
  LinearizationAnchor a;
  a.v_hat = Eigen::VectorXcd::Constant(m, v0);
  a.x_hat = Eigen::VectorXd::Zero(2 * m);
  return a;
}

LinearPFModel compute_linearization(const AdmittanceMatrix& y, Complex v0,
                                    const LinearizationAnchor& anchor, double anchor_tol) {
  const int m = y.non_slack_count();
  if (anchor.v_hat.size() != m || anchor.x_hat.size() != 2 * m)
    throw std::invalid_argument("anchor dimensions do not match the network");

  LinearPFModel model;
  model.anchor = anchor;
  if (m == 0) {
    // Degenerate single-bus network: no non-slack voltages, no flows.
    model.K.resize(0, 0);
    model.b.resize(0);
    model.F.resize(0);
    model.d = 0.0;
    return model;
  }

  for (int n = 0; n < m; ++n)
    if (std::abs(anchor.v_hat(n)) < 0.5)
      throw AnchorError("anchor voltage magnitude below 0.5 pu at node " + std::to_string(n + 1));

  const double res = injection_residual(y, v0, anchor.v_hat, anchor.x_hat);
  if (!(res <= anchor_tol))
    throw AnchorError("anchor does not satisfy exact power flow (residual " +
                      format_full(res) + " pu)");

  Eigen::PartialPivLU<Eigen::MatrixXcd> lu(y.yll);
  const Eigen::VectorXcd w = lu.solve(Eigen::VectorXcd(-y.yl0.transpose() * v0));
  if (!w.allFinite()) throw NumericError("YLL solve produced non-finite values");

  // G = YLL^-1 diag(1/conj(v̂))
  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(m, m);
  for (int n = 0; n < m; ++n) g(n, n) = 1.0 / std::conj(anchor.v_hat(n));
  g = lu.solve(g);

  // Projection direction conj(v̂)/|v̂| per node.
  Eigen::VectorXcd dir(m);
  for (int n = 0; n < m; ++n) dir(n) = std::conj(anchor.v_hat(n)) / std::abs(anchor.v_hat(n));

  const Eigen::MatrixXcd dg = dir.asDiagonal() * g;
  model.K.resize(m, 2 * m);
  model.K.leftCols(m) = dg.real();
  model.K.rightCols(m) = dg.imag();
  model.b = (dir.asDiagonal() * w).real();

  // Slack power P0(x) = Re(v0 conj(Y00 v0 + Y0L (w + G p - j G q))).
  const Eigen::RowVectorXcd r = v0 * (y.y0l * g).conjugate();
  model.F.resize(2 * m);
  model.F.head(m) = r.real().transpose();
  model.F.tail(m) = -r.imag().transpose();
  model.d = (v0 * std::conj(y.y00 * v0 + y.y0l * w)).real();
  return model;
}

Eigen::VectorXd eval_voltage(const LinearPFModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.K.cols())
    throw std::invalid_argument("injection vector must have length 2M");
  return model.K * x + model.b;
}

double eval_slack_power(const LinearPFModel& model, const Eigen::VectorXd& x) {
  if (x.size() != model.F.size())
    throw std::invalid_argument("injection vector must have length 2M");
  return model.F.dot(x) + model.d;
}

}  // namespace minigrid
