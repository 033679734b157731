#include "minigrid/solver.hpp"

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

namespace fs = std::filesystem;

namespace minigrid {

std::string to_string(SolveStatus s) {
  switch (s) {
    case SolveStatus::optimal: return "optimal";
    case SolveStatus::time_limit: return "time_limit";
    case SolveStatus::infeasible: return "infeasible";
    case SolveStatus::unbounded: return "unbounded";
    case SolveStatus::error: return "error";
  }
  return "error";
}

double SolverResult::value(const std::string& name) const {
  auto it = values.find(name);
  if (it == values.end()) throw SolverError("no value for variable '" + name + "' in solution");
  return it->second;
}

double SolverResult::value_or(const std::string& name, double fallback) const {
  auto it = values.find(name);
  return it == values.end() ? fallback : it->second;
}

namespace {

bool file_exists(const std::string& p) {
  std::error_code ec;
  return fs::exists(p, ec);
}

bool executable_on_path(const std::string& name) {
  const char* path = std::getenv("PATH");
  if (!path) return false;
  std::istringstream ss(path);
  std::string dir;
  while (std::getline(ss, dir, ':')) {
    if (dir.empty()) continue;
    std::error_code ec;
    fs::path candidate = fs::path(dir) / name;
    if (fs::exists(candidate, ec) && !fs::is_directory(candidate, ec)) return true;
  }
  return false;
}

std::string quoted(const std::string& s) { return "'" + s + "'"; }

std::string make_unique_dir(const std::string& base_hint) {
  static std::atomic<unsigned> counter{0};
  std::mt19937_64 rng(std::random_device{}());
  const fs::path base = base_hint.empty() ? fs::temp_directory_path() : fs::path(base_hint);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::ostringstream name;
    name << "minigrid-" << std::hex << (rng() & 0xffffff) << "-" << counter++;
    fs::path dir = base / name.str();
    std::error_code ec;
    if (fs::create_directories(dir, ec) && !ec) return dir.string();
  }
  throw SolverError("could not create a scratch directory under " + base.string());
}

}  // namespace

std::string resolve_solver_command(const std::string& requested) {
  std::string cmd = requested;
  if (cmd.empty()) {
    if (const char* env = std::getenv("MINIGRID_SOLVER")) cmd = env;
  }
  if (cmd.empty() && executable_on_path("highs")) cmd = "highs";
#ifdef MINIGRID_BUNDLED_SOLVER
  if (cmd.empty() && file_exists(MINIGRID_BUNDLED_SOLVER)) cmd = MINIGRID_BUNDLED_SOLVER;
#endif
  if (cmd.empty())
    throw SolverError(
        "no MILP solver available: pass --solver, set MINIGRID_SOLVER, or put "
        "'highs' on PATH");
  // Driver scripts run through the Python interpreter.
  if (cmd.size() > 3 && cmd.compare(cmd.size() - 3, 3, ".py") == 0)
    cmd = "python3 " + quoted(cmd);
  return cmd;
}

HighsProcessSolver::HighsProcessSolver(SolverConfig config) : config_(std::move(config)) {
  config_.command = resolve_solver_command(config_.command);
  if (config_.work_dir.empty()) {
    dir_ = make_unique_dir("");
    owns_dir_ = true;
  } else {
    fs::create_directories(config_.work_dir);
    dir_ = config_.work_dir;
  }
}

HighsProcessSolver::~HighsProcessSolver() {
  if (owns_dir_ && !config_.keep_files) {
    std::error_code ec;
    fs::remove_all(dir_, ec);
  }
}

void HighsProcessSolver::load(const MILPInstance& inst) {
  const std::string model_path =
      (fs::path(dir_) / (config_.use_mps ? "model.mps" : "model.lp")).string();
  atomic_write_file(model_path, config_.use_mps ? write_mps(inst) : write_lp(inst));
  loaded_ = true;
}

SolverResult HighsProcessSolver::solve() {
  if (!loaded_) throw SolverError("solve() called before load()");
  const fs::path dir(dir_);
  const std::string model = (dir / (config_.use_mps ? "model.mps" : "model.lp")).string();
  const std::string opts = (dir / "highs.opt").string();
  const std::string sol = (dir / "model.sol").string();
  const std::string log = (dir / "solver.log").string();

  {
    std::ostringstream o;
    o << "mip_rel_gap = " << format_full(config_.mip_gap) << "\n"
      << "time_limit = " << format_full(config_.time_limit_s) << "\n"
      << "threads = 1\n"
      << "random_seed = 0\n";
    atomic_write_file(opts, o.str());
  }
  std::error_code ec;
  fs::remove(sol, ec);
  fs::remove(sol + ".info.json", ec);

  const std::string cmdline = config_.command + " --options_file " + quoted(opts) +
                              " --solution_file " + quoted(sol) + " " + quoted(model) + " > " +
                              quoted(log) + " 2>&1";
  const int rc = std::system(cmdline.c_str());
  if (!file_exists(sol)) {
    std::string detail;
    std::ifstream lg(log);
    std::string line;
    while (std::getline(lg, line) && detail.size() < 2000) detail += line + "\n";
    throw SolverError("solver produced no solution file (exit " + std::to_string(rc) + "): " +
                      detail);
  }

  std::ifstream in(sol);
  std::stringstream buf;
  buf << in.rdbuf();
  last_ = parse_highs_solution(buf.str());

  const std::string info_path = sol + ".info.json";
  if (file_exists(info_path)) {
    try {
      std::ifstream info_in(info_path);
      nlohmann::json info = nlohmann::json::parse(info_in);
      if (info.contains("mip_gap") && info["mip_gap"].is_number())
        last_.mip_gap = info["mip_gap"].get<double>();
      if (std::isnan(last_.objective) && info.contains("objective") &&
          info["objective"].is_number())
        last_.objective = info["objective"].get<double>();
    } catch (const std::exception&) {
      // sidecar is best-effort; the solution file is authoritative
    }
  }
  return last_;
}

double HighsProcessSolver::value(const std::string& name) const { return last_.value(name); }

std::unique_ptr<SolverAdapter> make_solver(const SolverConfig& config) {
  return std::make_unique<HighsProcessSolver>(config);
}

SolverResult parse_highs_solution(const std::string& text) {
  SolverResult res;
  std::istringstream in(text);
  std::string line;
  std::string status_text;
  bool primal_feasible = false;

  while (std::getline(in, line)) {
    if (line.rfind("Model status", 0) == 0) {
      // Either "Model status" followed by the value line, or "Model status: X".
      const auto colon = line.find(':');
      if (colon != std::string::npos) {
        status_text = line.substr(colon + 1);
      } else {
        while (std::getline(in, line) && line.empty()) {
        }
        status_text = line;
      }
      while (!status_text.empty() && status_text.front() == ' ') status_text.erase(0, 1);
    } else if (line == "Feasible") {
      primal_feasible = true;
    } else if (line.rfind("Objective", 0) == 0) {
      std::istringstream ls(line);
      std::string word;
      ls >> word >> res.objective;
    } else if (line.rfind("# Columns", 0) == 0) {
      int count = 0;
      {
        std::istringstream ls(line);
        std::string hash, word;
        ls >> hash >> word >> count;
      }
      for (int i = 0; i < count && std::getline(in, line); ++i) {
        std::istringstream ls(line);
        std::string name;
        double value;
        if (ls >> name >> value) res.values[name] = value;
      }
      break;  // rows / duals / basis are not needed
    }
  }

  if (status_text == "Optimal") {
    res.status = SolveStatus::optimal;
  } else if (status_text == "Infeasible") {
    res.status = SolveStatus::infeasible;
  } else if (status_text == "Unbounded") {
    res.status = SolveStatus::unbounded;
  } else if (status_text == "Time limit reached" || status_text == "Iteration limit reached" ||
             status_text == "Solution limit reached") {
    res.status = primal_feasible ? SolveStatus::time_limit : SolveStatus::error;
  } else {
    res.status = primal_feasible ? SolveStatus::time_limit : SolveStatus::error;
  }
  return res;
}

}  // namespace minigrid
