#include "minigrid/network.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <queue>
#include <sstream>

namespace minigrid {

std::string format_full(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void atomic_write_file(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open for writing: " + tmp);
    out << content;
    out.flush();
    if (!out) throw std::runtime_error("write failed: " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0)
    throw std::runtime_error("rename failed: " + path);
}

CableCatalog::CableCatalog(std::vector<CableSpec> entries) : entries_(std::move(entries)) {
  for (const auto& c : entries_) {
    if (c.size_mm2 <= 0.0) throw std::invalid_argument("cable size_mm2 must be > 0");
    if (c.cost_per_km < 0.0) throw std::invalid_argument("cable cost_per_km must be >= 0");
    if (c.admittance_per_km.real() <= 0.0)
      throw std::invalid_argument("cable conductance (real part) must be > 0");
  }
  std::sort(entries_.begin(), entries_.end(),
            [](const CableSpec& a, const CableSpec& b) { return a.size_mm2 < b.size_mm2; });
  for (size_t i = 1; i < entries_.size(); ++i)
    if (entries_[i].size_mm2 == entries_[i - 1].size_mm2)
      throw std::invalid_argument("duplicate cable size in catalog: " +
                                  format_full(entries_[i].size_mm2));
}

const CableCatalog& CableCatalog::defaults() {
  static const CableCatalog catalog({
      {4.0, {0.107, -0.001}, 9810.0},
      {6.0, {0.161, -0.002}, 11030.0},
      {10.0, {0.267, -0.006}, 13090.0},
      {16.0, {0.424, -0.015}, 15790.0},
      {25.0, {0.667, -0.036}, 19530.0},
      {35.0, {0.924, -0.067}, 23320.0},
      {50.0, {1.244, -0.122}, 28510.0},
      {70.0, {1.785, -0.244}, 38190.0},
      {95.0, {1.432, -0.460}, 48480.0},
  });
  return catalog;
}

CableCatalog CableCatalog::from_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open cable catalog: " + path);
  std::string line;
  if (!std::getline(in, line)) throw SchemaError("cable catalog is empty: " + path);
  // Tolerate a UTF-8 BOM and whitespace in the header.
  if (line.size() >= 3 && line.compare(0, 3, "\xEF\xBB\xBF") == 0) line.erase(0, 3);
  std::string header = line;
  header.erase(std::remove_if(header.begin(), header.end(), ::isspace), header.end());
  if (header != "size_mm2,g_per_km,b_per_km,cost_per_km")
    throw SchemaError("cable catalog header must be "
                      "'size_mm2,g_per_km,b_per_km,cost_per_km', got '" + line + "'");
  std::vector<CableSpec> entries;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r\n") == std::string::npos) continue;
    std::istringstream ss(line);
    std::string field;
    double vals[4];
    for (int i = 0; i < 4; ++i) {
      if (!std::getline(ss, field, ','))
        throw SchemaError("cable catalog line " + std::to_string(lineno) + ": expected 4 fields");
      try {
        vals[i] = std::stod(field);
      } catch (const std::exception&) {
        throw SchemaError("cable catalog line " + std::to_string(lineno) +
                          ": bad number '" + field + "'");
      }
    }
    entries.push_back({vals[0], {vals[1], vals[2]}, vals[3]});
  }
  return CableCatalog(std::move(entries));
}

const CableSpec& CableCatalog::by_size(double size_mm2) const {
  for (const auto& c : entries_)
    if (c.size_mm2 == size_mm2) return c;
  throw std::invalid_argument("no catalog cable of size " + format_full(size_mm2) + " mm2");
}

bool CableCatalog::has_size(double size_mm2) const {
  return std::any_of(entries_.begin(), entries_.end(),
                     [&](const CableSpec& c) { return c.size_mm2 == size_mm2; });
}

Complex cable_series_admittance(const CableSpec& cable, double length_km) {
  if (!(length_km > 0.0)) throw std::invalid_argument("cable length must be > 0 km");
  return cable.admittance_per_km / length_km;
}

Complex to_per_unit(Complex y_siemens, double v_base_v, double s_base_kva) {
  if (!(v_base_v > 0.0)) throw std::invalid_argument("v_base must be > 0 V");
  if (!(s_base_kva > 0.0)) throw std::invalid_argument("s_base must be > 0 kVA");
  const double z_base = v_base_v * v_base_v / (s_base_kva * 1000.0);
  return y_siemens * z_base;
}

namespace {

// Reachability from the slack over the edge list.
std::vector<bool> reachable_from_slack(const NetworkModel& net) {
  std::vector<std::vector<int>> adj(net.node_count);
  for (const auto& e : net.edges) {
    adj[e.from].push_back(e.to);
    adj[e.to].push_back(e.from);
  }
  std::vector<bool> seen(net.node_count, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (int v : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        q.push(v);
      }
  }
  return seen;
}

}  // namespace

void validate_network(const NetworkModel& net) {
  if (net.node_count < 1) throw TopologyError("network needs at least the slack node");
  if (net.s_base_kva <= 0.0 || net.v_base_v <= 0.0)
    throw std::invalid_argument("per-unit bases must be positive");
  for (const auto& e : net.edges) {
    if (e.from < 0 || e.from >= net.node_count || e.to < 0 || e.to >= net.node_count)
      throw TopologyError("edge endpoint out of range");
    if (e.from == e.to) throw TopologyError("edge endpoints must be distinct");
    if (!(e.length_km > 0.0)) throw TopologyError("edge length must be > 0 km");
  }
  const auto seen = reachable_from_slack(net);
  for (int n = 0; n < net.node_count; ++n)
    if (!seen[n])
      throw TopologyError("network is disconnected: node " + std::to_string(n) +
                          " is not reachable from the slack");
}

bool is_radial(const NetworkModel& net) {
  if (static_cast<int>(net.edges.size()) != net.node_count - 1) return false;
  const auto seen = reachable_from_slack(net);
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

AdmittanceMatrix build_admittance_matrix(const NetworkModel& net) {
  validate_network(net);
  const int n = net.node_count;
  const int m = n - 1;

  // Canonical stamping order makes the result independent of the caller's
  // edge ordering (floating-point sums are evaluated identically).
  std::vector<NetworkEdge> edges = net.edges;
  std::sort(edges.begin(), edges.end(), [](const NetworkEdge& a, const NetworkEdge& b) {
    const int alo = std::min(a.from, a.to), ahi = std::max(a.from, a.to);
    const int blo = std::min(b.from, b.to), bhi = std::max(b.from, b.to);
    if (alo != blo) return alo < blo;
    if (ahi != bhi) return ahi < bhi;
    return a.length_km < b.length_km;
  });

  AdmittanceMatrix am;
  am.full = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& e : edges) {
    const Complex y = to_per_unit(cable_series_admittance(e.cable, e.length_km),
                                  net.v_base_v, net.s_base_kva);
    am.full(e.from, e.from) += y;
    am.full(e.to, e.to) += y;
    am.full(e.from, e.to) -= y;
    am.full(e.to, e.from) -= y;
  }

  am.y00 = am.full(0, 0);
  am.y0l = am.full.block(0, 1, 1, m);
  am.yl0 = am.full.block(1, 0, m, 1);
  am.yll = am.full.block(1, 1, m, m);

  if (m > 0) {
    Eigen::FullPivLU<Eigen::MatrixXcd> lu(am.yll);
    if (!lu.isInvertible())
      throw NumericError("YLL is singular; network cannot support power flow");
  }
  return am;
}

std::vector<int> path_to_slack(const NetworkModel& net, int node) {
  if (node < 0 || node >= net.node_count) throw std::invalid_argument("node out of range");
  // BFS parent pointers from the slack; works on any connected network and
  // gives the unique path on radial ones.
  std::vector<std::vector<std::pair<int, int>>> adj(net.node_count);  // (neighbor, edge idx)
  for (int i = 0; i < static_cast<int>(net.edges.size()); ++i) {
    adj[net.edges[i].from].push_back({net.edges[i].to, i});
    adj[net.edges[i].to].push_back({net.edges[i].from, i});
  }
  std::vector<int> parent_edge(net.node_count, -1);
  std::vector<int> parent(net.node_count, -1);
  std::vector<bool> seen(net.node_count, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  while (!q.empty()) {
    int u = q.front();
    q.pop();
    for (auto [v, ei] : adj[u])
      if (!seen[v]) {
        seen[v] = true;
        parent[v] = u;
        parent_edge[v] = ei;
        q.push(v);
      }
  }
  if (!seen[node]) throw TopologyError("node not connected to slack");
  std::vector<int> path;
  for (int cur = node; cur != 0; cur = parent[cur]) path.push_back(parent_edge[cur]);
  return path;
}

double connection_cost_usd(const NetworkModel& net, int node) {
  double cost = 0.0;
  for (int ei : path_to_slack(net, node))
    cost += net.edges[ei].cable.cost_per_km * net.edges[ei].length_km;
  return cost;
}

}  // namespace minigrid
