#pragma once

#include <map>
#include <memory>

#include "minigrid/milp.hpp"

namespace minigrid {

enum class SolveStatus {
  optimal,        // proven optimal within the MIP gap
  time_limit,     // best incumbent at the time limit
  infeasible,
  unbounded,
  error,
};

std::string to_string(SolveStatus s);

struct SolverResult {
  SolveStatus status = SolveStatus::error;
  double objective = std::numeric_limits<double>::quiet_NaN();
  double mip_gap = std::numeric_limits<double>::quiet_NaN();  // achieved
  std::map<std::string, double> values;

  bool has_solution() const {
    return status == SolveStatus::optimal || status == SolveStatus::time_limit;
  }
  double value(const std::string& name) const;
  double value_or(const std::string& name, double fallback) const;
};

/// Contract for MILP backends: load an instance, set limits, solve, read
/// variable values by name. Adapters must be independent across instances so
/// separate sweep workers can solve concurrently.
class SolverAdapter {
 public:
  virtual ~SolverAdapter() = default;
  virtual void load(const MILPInstance& inst) = 0;
  virtual void set_mip_gap(double gap) = 0;
  virtual void set_time_limit(double seconds) = 0;
  virtual SolverResult solve() = 0;
  virtual double value(const std::string& name) const = 0;
};

struct SolverConfig {
  std::string command;       // empty: resolve via env/PATH/bundled driver
  double mip_gap = 1e-4;
  double time_limit_s = 600.0;
  std::string work_dir;      // empty: fresh temp directory
  bool keep_files = false;
  bool use_mps = false;      // exchange MPS instead of LP
};

/// Resolves the solver command line to use: `requested` if given, then the
/// MINIGRID_SOLVER environment variable, then a `highs` binary on PATH, then
/// the bundled HiGHS driver script. Throws SolverError when nothing works.
std::string resolve_solver_command(const std::string& requested = "");

/// Backend that writes the instance to an LP (or MPS) file and runs an
/// external solver speaking the HiGHS command-line convention:
///   <command> --options_file <opts> --solution_file <sol> <model>
/// The solution file is parsed in HiGHS raw style; an optional
/// `<sol>.info.json` sidecar supplies the achieved gap.
class HighsProcessSolver : public SolverAdapter {
 public:
  explicit HighsProcessSolver(SolverConfig config);
  ~HighsProcessSolver() override;

  void load(const MILPInstance& inst) override;
  void set_mip_gap(double gap) override { config_.mip_gap = gap; }
  void set_time_limit(double seconds) override { config_.time_limit_s = seconds; }
  SolverResult solve() override;
  double value(const std::string& name) const override;

  const std::string& work_dir() const { return dir_; }

 private:
  SolverConfig config_;
  std::string dir_;
  bool owns_dir_ = false;
  bool loaded_ = false;
  SolverResult last_;
};

std::unique_ptr<SolverAdapter> make_solver(const SolverConfig& config);

/// Parses a HiGHS raw-style solution file (exposed for tests).
SolverResult parse_highs_solution(const std::string& text);

}  // namespace minigrid
