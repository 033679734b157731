#pragma once

#include <vector>

#include "minigrid/common.hpp"

namespace minigrid {

/// One catalog cable. Admittance is the per-km series value of the whole
/// cable run; a run of length L has series admittance admittance_per_km / L.
struct CableSpec {
  double size_mm2 = 0.0;
  Complex admittance_per_km;  // siemens
  double cost_per_km = 0.0;   // USD
};

/// Immutable cable catalog keyed by conductor size.
class CableCatalog {
 public:
  CableCatalog() = default;
  explicit CableCatalog(std::vector<CableSpec> entries);

  /// Built-in nine-entry LV catalog (4–95 mm²). Note the catalog is used
  /// as-given: the 95 mm² conductance is below the 70 mm² one.
  static const CableCatalog& defaults();

  /// Loads `size_mm2,g_per_km,b_per_km,cost_per_km` CSV (header required).
  static CableCatalog from_csv(const std::string& path);

  const CableSpec& by_size(double size_mm2) const;
  bool has_size(double size_mm2) const;
  const std::vector<CableSpec>& entries() const { return entries_; }

 private:
  std::vector<CableSpec> entries_;
};

struct NetworkEdge {
  int from = 0;
  int to = 0;
  CableSpec cable;
  double length_km = 0.0;
};

/// Electrical network: node 0 is the slack (the central plant bus), nodes
/// 1..M are the non-slack set. All quantities per-unit on (v_base, s_base).
struct NetworkModel {
  int node_count = 0;  // M + 1
  std::vector<NetworkEdge> edges;
  Complex slack_voltage{1.0, 0.0};  // pu
  double s_base_kva = 100.0;
  double v_base_v = 400.0;

  int non_slack_count() const { return node_count - 1; }
};

/// Admittance matrix in per-unit with the slack row/column partitioned off.
struct AdmittanceMatrix {
  Eigen::MatrixXcd full;    // (M+1) x (M+1)
  Complex y00;              // 1 x 1
  Eigen::RowVectorXcd y0l;  // 1 x M
  Eigen::VectorXcd yl0;     // M x 1
  Eigen::MatrixXcd yll;     // M x M

  int non_slack_count() const { return static_cast<int>(yll.rows()); }
};

/// Series admittance of a cable run. Impedance grows linearly with length,
/// so admittance scales with 1/length.
Complex cable_series_admittance(const CableSpec& cable, double length_km);

/// Converts siemens to per-unit: y * Z_base with Z_base = v_base^2 / (s_base * 1000).
Complex to_per_unit(Complex y_siemens, double v_base_v, double s_base_kva);

/// Checks edge endpoints, lengths, connectivity. Throws on violation.
void validate_network(const NetworkModel& net);

/// True when the network is a tree (edge count == node count - 1 and connected).
bool is_radial(const NetworkModel& net);

/// Stamps every edge into the per-unit bus admittance matrix and partitions
/// it. Throws TopologyError on disconnected input, NumericError if YLL is
/// numerically singular.
AdmittanceMatrix build_admittance_matrix(const NetworkModel& net);

/// Edge indices on the unique path from `node` to the slack (radial networks).
std::vector<int> path_to_slack(const NetworkModel& net, int node);

/// USD cost of the cable run connecting `node` to the slack (sum over path edges).
double connection_cost_usd(const NetworkModel& net, int node);

}  // namespace minigrid
