#pragma once

#include <vector>

#include "minigrid/common.hpp"

namespace minigrid {

/// One linear segment of a cumulative PV cost curve. `to_kw` is the upper
/// breakpoint of the segment; segments are contiguous starting at 0.
struct PvCostSegment {
  double to_kw = 0.0;
  double usd_per_kw = 0.0;
};

/// Concave piecewise-linear installed-cost curve: marginal cost is
/// non-increasing across segments (economies of scale), plus a fixed
/// development cost incurred once per built system.
struct PvCostCurve {
  double fixed_usd = 0.0;
  std::vector<PvCostSegment> segments;

  /// Validates breakpoints strictly increasing and slopes non-increasing.
  void validate() const;
};

/// Installed cost of `size_kw` of PV under the curve: fixed cost (when the
/// system exists, i.e. size > 0) plus piecewise-linear interpolation of the
/// cumulative cost. Sizes beyond the last breakpoint extrapolate at the last
/// marginal rate and emit a warning on stderr.
double pv_capital_cost(double size_kw, const PvCostCurve& curve);

/// Scales every cumulative cost (segment rates and fixed cost) by `factor`;
/// breakpoints are unchanged.
PvCostCurve scale_pv_curve(const PvCostCurve& curve, double factor);

/// Present-worth factor of a uniform annual cash flow over `years` at
/// `discount_rate`: (1 - (1+d)^-Y)/d, or Y when d = 0.
double present_worth_factor(double discount_rate, int years);

/// A scheduled replacement expense.
struct Replacement {
  int year = 0;
  double cost_usd = 0.0;
};

/// Lifecycle cost: capex + om_per_yr * PWF + sum of discounted replacements.
double lifecycle_cost(double capex_usd, double om_per_yr_usd,
                      const std::vector<Replacement>& replacements,
                      double discount_rate, int analysis_years);

/// Replacement years for an asset of life `life_yr` within the analysis
/// window: life, 2*life, ... strictly below `analysis_years`.
std::vector<int> replacement_years(double life_yr, int analysis_years);

}  // namespace minigrid
