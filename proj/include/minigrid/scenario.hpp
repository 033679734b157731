#pragma once

#include <string>

#include "minigrid/costs.hpp"
#include "minigrid/network.hpp"

namespace minigrid {

/// Technology and cost parameters shared by every node.
struct TechnologyParams {
  PvCostCurve pv_cost_curve;
  double pv_om_per_kw_yr = 27.0;
  Eigen::VectorXd pv_production_factor;  // H entries in [0,1] (24 tiles to H)
  double battery_cost_per_kwh = 500.0;
  double battery_life_yr = 10.0;
  double battery_roundtrip_eff = 0.85;
  double battery_c_rate = 0.5;  // max charge/discharge kW per kWh of capacity
  bool grid_supply_enabled = false;   // dispatchable supply at the slack node
  double grid_energy_price = 0.0;     // USD/kWh
};

struct EconomicParams {
  double discount_rate = 0.08;  // per year
  int analysis_years = 20;
};

/// Everything a single design optimization needs.
struct DesignScenario {
  std::string name = "scenario";
  NetworkModel network;
  Eigen::MatrixXd loads_kw;  // (M+1) x H, slack row included, >= 0
  int horizon_hours = 720;
  double v_min = 0.9;  // pu
  double v_max = 1.1;  // pu
  double power_factor = 0.95;
  TechnologyParams tech;
  EconomicParams econ;
  double big_m_power_kw = 0.0;  // 0 = derive from loads
  double big_m_size_kw = 0.0;   // 0 = derive from loads and production factor
  int central_node = 0;

  double annualization_factor() const { return 8760.0 / horizon_hours; }
  int node_count() const { return network.node_count; }
};

/// Named 24-hour presets (both synthetic).
///
/// "village_100hh": evening-peaked load of a village of ~100 medium-income
/// households, two small shops and a school; kW.
/// "equatorial_24h": clear-sky equatorial PV production factor.
Eigen::VectorXd preset_profile(const std::string& name);

/// Repeats a 24-entry daily profile to `horizon` hours. Profiles already of
/// length `horizon` pass through; anything else is an error.
Eigen::VectorXd tile_daily_profile(const Eigen::VectorXd& profile, int horizon);

/// Fills derived fields: tiles 24 h profiles to the horizon and derives
/// big-M constants when unset (power: 10x peak total load; size: 10x peak
/// total load over the smallest positive production factor).
void finalize_scenario(DesignScenario& s);

/// Full validation used by the file-loading layer: network radial and
/// connected, dimensions consistent, parameter ranges, curve concavity.
/// Throws SchemaError / std::invalid_argument naming the violated field.
void validate_scenario(const DesignScenario& s);

/// Per-node mean loads over the horizon, kW ((M+1) vector).
Eigen::VectorXd mean_loads_kw(const DesignScenario& s);

/// The stock three-community case study: a star of three village nodes with
/// the central community at the hub, `cable` runs of `distance_km` to each
/// leaf, default technologies and economics, 30-day horizon.
DesignScenario case_study_scenario(double distance_km = 0.2, double cable_mm2 = 70.0,
                                   int horizon_hours = 720);

}  // namespace minigrid
