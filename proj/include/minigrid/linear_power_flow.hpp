#pragma once

#include "minigrid/network.hpp"

namespace minigrid {

/// A known exact power-flow operating point (v̂, x̂). x̂ stacks the real
/// injections of the M non-slack nodes followed by their reactive
/// injections, all per-unit, generator convention (load = negative).
struct LinearizationAnchor {
  Eigen::VectorXcd v_hat;  // M complex voltages, pu
  Eigen::VectorXd x_hat;   // 2M injections, pu
};

/// Net injection time series for the non-slack nodes.
struct InjectionProfile {
  Eigen::MatrixXd p;  // M x H, pu
  Eigen::MatrixXd q;  // M x H, pu
  double power_factor = 1.0;

  int horizon() const { return static_cast<int>(p.cols()); }

  /// Stacked [p; q] column for timestep h.
  Eigen::VectorXd column(int h) const;
};

/// Reactive injection implied by a real injection at a fixed power factor:
/// q = p * tan(acos(pf)). Sign follows p.
double reactive_from_real(double p, double power_factor);

/// Builds a profile with q derived column-wise from p via the power factor.
InjectionProfile injection_profile_from_real(const Eigen::MatrixXd& p, double power_factor);

/// Affine power-flow model around an anchor:
///   |v|(x) = K x + b        (voltage magnitudes at non-slack nodes)
///   P0(x)  = F . x + d      (net real power injected at the slack)
struct LinearPFModel {
  Eigen::MatrixXd K;  // M x 2M
  Eigen::VectorXd b;  // M
  Eigen::VectorXd F;  // 2M
  double d = 0.0;
  LinearizationAnchor anchor;

  int non_slack_count() const { return static_cast<int>(b.size()); }
};

/// The trivial anchor: flat no-load voltages (v̂ = v0 * 1, x̂ = 0). Exact for
/// shunt-free networks.
LinearizationAnchor flat_anchor(const AdmittanceMatrix& y, Complex v0);

/// One fixed-point step around the anchor. The complex voltage map
/// v(x) = w + G p - j G q with w = -YLL^-1 YL0 v0 and
/// G = YLL^-1 diag(1/conj(v̂)) is projected onto the anchor direction,
/// |v_n|(x) ~ Re(conj(v̂_n)/|v̂_n| * v_n(x)), giving K and b; the slack power
/// Re(v0 * conj(Y00 v0 + Y0L v(x))) gives F and d.
///
/// The anchor must satisfy the exact power-flow equations to `anchor_tol`
/// (max injection mismatch, pu); AnchorError otherwise. Anchor voltages with
/// magnitude below 0.5 pu are rejected (they destabilize the 1/conj(v̂) term).
LinearPFModel compute_linearization(const AdmittanceMatrix& y, Complex v0,
                                    const LinearizationAnchor& anchor,
                                    double anchor_tol = 1e-10);

/// K x + b.
Eigen::VectorXd eval_voltage(const LinearPFModel& model, const Eigen::VectorXd& x);

/// F . x + d.
double eval_slack_power(const LinearPFModel& model, const Eigen::VectorXd& x);

}  // namespace minigrid
