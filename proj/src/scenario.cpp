#include "minigrid/scenario.hpp"

#include <cmath>

namespace minigrid {

Eigen::VectorXd preset_profile(const std::string& name) {
  if (name == "village_100hh") {
    Eigen::VectorXd p(24);
    p << 4.2, 3.8, 3.6, 3.5, 3.8, 5.0, 7.5, 9.0, 9.5, 10.0, 10.5, 11.0,
        11.5, 11.0, 10.5, 10.0, 10.0, 12.0, 18.0, 24.0, 25.0, 20.0, 12.0, 7.0;
    return p;
  }
  if (name == "equatorial_24h") {
    Eigen::VectorXd p(24);
    p << 0.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.08, 0.30, 0.52, 0.68, 0.80, 0.86,
        0.88, 0.84, 0.75, 0.62, 0.45, 0.25, 0.07, 0.0, 0.0, 0.0, 0.0, 0.0;
    return p;
  }
  throw std::invalid_argument("unknown profile preset: " + name);
}

Eigen::VectorXd tile_daily_profile(const Eigen::VectorXd& profile, int horizon) {
  if (profile.size() == horizon) return profile;
  if (profile.size() != 24)
    throw SchemaError("profile must have 24 or horizon (" + std::to_string(horizon) +
                      ") entries, got " + std::to_string(profile.size()));
  if (horizon % 24 != 0)
    throw SchemaError("cannot tile a 24 h profile to a horizon of " + std::to_string(horizon) +
                      " hours (not a multiple of 24)");
  Eigen::VectorXd tiled(horizon);
  for (int h = 0; h < horizon; ++h) tiled(h) = profile(h % 24);
  return tiled;
}

void finalize_scenario(DesignScenario& s) {
  if (s.horizon_hours < 1) throw SchemaError("horizon_hours must be >= 1");
  if (s.tech.pv_production_factor.size() != s.horizon_hours)
    s.tech.pv_production_factor = tile_daily_profile(s.tech.pv_production_factor, s.horizon_hours);
  if (s.loads_kw.rows() == s.network.node_count && s.loads_kw.cols() == 24 &&
      s.horizon_hours != 24) {
    Eigen::MatrixXd tiled(s.loads_kw.rows(), s.horizon_hours);
    for (int n = 0; n < s.loads_kw.rows(); ++n)
      tiled.row(n) = tile_daily_profile(s.loads_kw.row(n).transpose(), s.horizon_hours).transpose();
    s.loads_kw = tiled;
  }

  const double peak_total = s.loads_kw.colwise().sum().maxCoeff();
  if (s.big_m_power_kw <= 0.0) s.big_m_power_kw = 10.0 * std::max(peak_total, 1.0);
  if (s.big_m_size_kw <= 0.0) {
    double min_daylight_pf = 1.0;
    for (int h = 0; h < s.tech.pv_production_factor.size(); ++h) {
      const double pf = s.tech.pv_production_factor(h);
      if (pf > 0.0) min_daylight_pf = std::min(min_daylight_pf, pf);
    }
    s.big_m_size_kw = 10.0 * std::max(peak_total, 1.0) / min_daylight_pf;
  }
}

void validate_scenario(const DesignScenario& s) {
  validate_network(s.network);
  if (!is_radial(s.network))
    throw SchemaError("network: must be radial (a tree rooted at the slack node)");
  if (s.central_node != 0)
    throw SchemaError("central_node: must be the slack node (0)");
  if (s.loads_kw.rows() != s.network.node_count)
    throw SchemaError("loads: need one row per node including the slack (" +
                      std::to_string(s.network.node_count) + "), got " +
                      std::to_string(s.loads_kw.rows()));
  if (s.loads_kw.cols() != s.horizon_hours)
    throw SchemaError("loads: column count " + std::to_string(s.loads_kw.cols()) +
                      " does not match horizon_hours " + std::to_string(s.horizon_hours));
  if ((s.loads_kw.array() < 0.0).any()) throw SchemaError("loads: must be >= 0 everywhere");
  if (!(s.v_min < 1.0 && 1.0 < s.v_max))
    throw SchemaError("voltage_limits: need v_min < 1 < v_max (pu)");
  if (!(s.power_factor > 0.0) || s.power_factor > 1.0)
    throw SchemaError("power_factor: fraction in (0,1]");
  const auto& t = s.tech;
  t.pv_cost_curve.validate();
  if (t.pv_om_per_kw_yr < 0.0) throw SchemaError("pv.om_usd_per_kw_yr: must be >= 0");
  if (t.pv_production_factor.size() != s.horizon_hours)
    throw SchemaError("pv.production_factor: need horizon_hours entries after tiling");
  if ((t.pv_production_factor.array() < 0.0).any() ||
      (t.pv_production_factor.array() > 1.0).any())
    throw SchemaError("pv.production_factor: entries must lie in [0,1]");
  if (t.battery_cost_per_kwh < 0.0) throw SchemaError("battery.usd_per_kwh: must be >= 0");
  if (!(t.battery_life_yr > 0.0)) throw SchemaError("battery.life_yr: must be > 0");
  if (!(t.battery_roundtrip_eff > 0.0) || t.battery_roundtrip_eff > 1.0)
    throw SchemaError("battery.roundtrip_eff: fraction in (0,1]");
  if (!(t.battery_c_rate > 0.0)) throw SchemaError("battery.c_rate_per_h: must be > 0");
  if (t.grid_supply_enabled && t.grid_energy_price < 0.0)
    throw SchemaError("grid.energy_usd_per_kwh: must be >= 0");
  if (s.econ.discount_rate < 0.0) throw SchemaError("economics.discount_rate: must be >= 0");
  if (s.econ.analysis_years < 1) throw SchemaError("economics.analysis_years: must be >= 1");
  if (s.big_m_power_kw > 0.0) {
    const double peak_total = s.loads_kw.colwise().sum().maxCoeff();
    if (s.big_m_power_kw < 10.0 * peak_total)
      throw SchemaError("big_m.power_kw: must be >= 10x peak total load");
  }
}

Eigen::VectorXd mean_loads_kw(const DesignScenario& s) {
  return s.loads_kw.rowwise().mean();
}

DesignScenario case_study_scenario(double distance_km, double cable_mm2, int horizon_hours) {
  DesignScenario s;
  s.name = "three-community-star";
  s.horizon_hours = horizon_hours;

  const CableSpec cable = CableCatalog::defaults().by_size(cable_mm2);
  s.network.node_count = 3;
  s.network.edges = {{0, 1, cable, distance_km}, {0, 2, cable, distance_km}};
  s.network.slack_voltage = {1.0, 0.0};
  s.network.s_base_kva = 100.0;
  s.network.v_base_v = 400.0;

  const Eigen::VectorXd day = preset_profile("village_100hh");
  s.loads_kw.resize(3, 24);
  for (int n = 0; n < 3; ++n) s.loads_kw.row(n) = day.transpose();

  s.tech.pv_cost_curve.fixed_usd = 5000.0;
  s.tech.pv_cost_curve.segments = {{50.0, 3000.0}, {200.0, 2200.0}, {500.0, 1800.0}};
  s.tech.pv_production_factor = preset_profile("equatorial_24h");

  finalize_scenario(s);
  return s;
}

}  // namespace minigrid
