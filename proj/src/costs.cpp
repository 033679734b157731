#include "minigrid/costs.hpp"

#include <cmath>
#include <iostream>

namespace minigrid {

void PvCostCurve::validate() const {
  if (fixed_usd < 0.0) throw std::invalid_argument("pv cost curve: fixed cost must be >= 0");
  if (segments.empty()) throw std::invalid_argument("pv cost curve needs at least one segment");
  double prev_break = 0.0;
  double prev_rate = std::numeric_limits<double>::infinity();
  for (const auto& seg : segments) {
    if (!(seg.to_kw > prev_break))
      throw std::invalid_argument("pv cost curve breakpoints must be strictly increasing");
    if (seg.usd_per_kw < 0.0)
      throw std::invalid_argument("pv cost curve rates must be >= 0");
    if (seg.usd_per_kw > prev_rate)
      throw std::invalid_argument("pv cost curve marginal cost must be non-increasing");
    prev_break = seg.to_kw;
    prev_rate = seg.usd_per_kw;
  }
}

double pv_capital_cost(double size_kw, const PvCostCurve& curve) {
  if (size_kw < 0.0) throw std::invalid_argument("pv size must be >= 0");
  curve.validate();
  if (size_kw == 0.0) return 0.0;

  double cost = curve.fixed_usd;
  double from = 0.0;
  double remaining = size_kw;
  for (const auto& seg : curve.segments) {
    const double width = seg.to_kw - from;
    const double take = std::min(remaining, width);
    cost += take * seg.usd_per_kw;
    remaining -= take;
    from = seg.to_kw;
    if (remaining <= 0.0) return cost;
  }
  // Beyond the last breakpoint: extrapolate at the final marginal rate.
  std::cerr << "minigrid: pv size " << format_full(size_kw)
            << " kW exceeds the cost curve's last breakpoint; extrapolating at "
            << format_full(curve.segments.back().usd_per_kw) << " $/kW\n";
  cost += remaining * curve.segments.back().usd_per_kw;
  return cost;
}

PvCostCurve scale_pv_curve(const PvCostCurve& curve, double factor) {
  if (!(factor > 0.0)) throw std::invalid_argument("pv cost scale factor must be > 0");
  PvCostCurve scaled = curve;
  scaled.fixed_usd *= factor;
  for (auto& seg : scaled.segments) seg.usd_per_kw *= factor;
  return scaled;
}

double present_worth_factor(double discount_rate, int years) {
  if (discount_rate < 0.0) throw std::invalid_argument("discount rate must be >= 0");
  if (years < 0) throw std::invalid_argument("years must be >= 0");
  if (discount_rate == 0.0) return static_cast<double>(years);
  return (1.0 - std::pow(1.0 + discount_rate, -years)) / discount_rate;
}

double lifecycle_cost(double capex_usd, double om_per_yr_usd,
                      const std::vector<Replacement>& replacements,
                      double discount_rate, int analysis_years) {
  if (analysis_years < 1) throw std::invalid_argument("analysis period must be >= 1 year");
  double lcc = capex_usd + om_per_yr_usd * present_worth_factor(discount_rate, analysis_years);
  for (const auto& r : replacements)
    lcc += r.cost_usd * std::pow(1.0 + discount_rate, -r.year);
  return lcc;
}

std::vector<int> replacement_years(double life_yr, int analysis_years) {
  std::vector<int> years;
  if (!(life_yr > 0.0)) return years;
  for (int k = 1; k * life_yr < analysis_years; ++k)
    years.push_back(static_cast<int>(std::lround(k * life_yr)));
  return years;
}

}  // namespace minigrid
