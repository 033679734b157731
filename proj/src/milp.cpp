#include "minigrid/milp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <sstream>

namespace minigrid {

namespace {

// HiGHS and most LP readers treat magnitudes >= 1e30 as infinite.
constexpr double kInfThreshold = 1e30;

bool is_neg_inf(double v) { return v <= -kInfThreshold || std::isinf(v); }
bool is_pos_inf(double v) { return v >= kInfThreshold || std::isinf(v); }

}  // namespace

int MILPInstance::add_variable(const std::string& name, double lower, double upper,
                               double objective, bool is_integer) {
  if (name.empty()) throw BuildError("variable name must not be empty");
  if (by_name_.count(name)) throw BuildError("duplicate variable name: " + name);
  if (lower > upper) throw BuildError("variable " + name + ": lower bound exceeds upper");
  const int idx = static_cast<int>(variables_.size());
  variables_.push_back({name, lower, upper, objective, is_integer});
  by_name_.emplace(name, idx);
  return idx;
}

int MILPInstance::add_constraint(const std::string& name, std::vector<LinearTerm> terms,
                                 RowSense sense, double rhs) {
  for (const auto& t : terms)
    if (t.var < 0 || t.var >= num_variables())
      throw BuildError("constraint " + name + " references undeclared variable index " +
                       std::to_string(t.var));
  const int idx = static_cast<int>(constraints_.size());
  constraints_.push_back({name, std::move(terms), sense, rhs});
  return idx;
}

int MILPInstance::variable(const std::string& name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) throw BuildError("unknown variable name: " + name);
  return it->second;
}

bool MILPInstance::has_variable(const std::string& name) const {
  return by_name_.count(name) > 0;
}

void MILPInstance::set_bounds(int var, double lower, double upper) {
  if (lower > upper)
    throw BuildError("variable " + variables_.at(var).name + ": lower bound exceeds upper");
  variables_.at(var).lower = lower;
  variables_.at(var).upper = upper;
}

int MILPInstance::num_integer_variables() const {
  return static_cast<int>(
      std::count_if(variables_.begin(), variables_.end(),
                    [](const MILPVariable& v) { return v.is_integer; }));
}

// ---------------------------------------------------------------------------
// LP writer
// ---------------------------------------------------------------------------

namespace {

void append_terms(std::string& out, const MILPInstance& inst,
                  const std::vector<LinearTerm>& terms) {
  int on_line = 0;
  bool first = true;
  for (const auto& t : terms) {
    if (t.coef == 0.0) continue;
    if (on_line == 8) {  // wrap long rows
      out += "\n  ";
      on_line = 0;
    }
    const double mag = std::abs(t.coef);
    if (first) {
      if (t.coef < 0.0) out += "- ";
      first = false;
    } else {
      out += (t.coef < 0.0) ? " - " : " + ";
    }
    out += format_full(mag);
    out += ' ';
    out += inst.var(t.var).name;
    ++on_line;
  }
  if (first) out += "0 " + inst.var(terms.empty() ? 0 : terms.front().var).name;
}

}  // namespace

std::string write_lp(const MILPInstance& inst, const std::string& comment) {
  std::string out;
  out.reserve(128 * (inst.num_variables() + inst.num_constraints()));
  if (!comment.empty()) out += "\\ " + comment + "\n";

  out += "Minimize\n obj:";
  {
    std::vector<LinearTerm> obj;
    for (int i = 0; i < inst.num_variables(); ++i)
      if (inst.var(i).objective != 0.0) obj.push_back({i, inst.var(i).objective});
    if (obj.empty()) {
      out += " 0 " + inst.var(0).name;
    } else {
      out += ' ';
      append_terms(out, inst, obj);
    }
  }
  out += "\nSubject To\n";
  for (const auto& c : inst.constraints()) {
    out += ' ' + c.name + ": ";
    append_terms(out, inst, c.terms);
    switch (c.sense) {
      case RowSense::le: out += " <= "; break;
      case RowSense::ge: out += " >= "; break;
      case RowSense::eq: out += " = "; break;
    }
    out += format_full(c.rhs);
    out += '\n';
  }

  out += "Bounds\n";
  for (const auto& v : inst.variables()) {
    if (v.is_integer && v.lower == 0.0 && v.upper == 1.0) continue;  // plain binary
    if (is_neg_inf(v.lower) && is_pos_inf(v.upper)) {
      out += ' ' + v.name + " free\n";
    } else if (v.lower == v.upper) {
      out += ' ' + v.name + " = " + format_full(v.lower) + '\n';
    } else if (is_neg_inf(v.lower)) {
      out += " -1e30 <= " + v.name + " <= " + format_full(v.upper) + '\n';
    } else if (is_pos_inf(v.upper)) {
      if (v.lower != 0.0) out += ' ' + v.name + " >= " + format_full(v.lower) + '\n';
      // default [0, inf): nothing to emit
    } else {
      out += ' ' + format_full(v.lower) + " <= " + v.name + " <= " + format_full(v.upper) + '\n';
    }
  }

  bool any_binary = false, any_general = false;
  for (const auto& v : inst.variables()) {
    if (!v.is_integer) continue;
    if (v.lower >= 0.0 && v.upper <= 1.0) any_binary = true;
    else any_general = true;
  }
  if (any_binary) {
    out += "Binary\n";
    for (const auto& v : inst.variables())
      if (v.is_integer && v.lower >= 0.0 && v.upper <= 1.0) out += ' ' + v.name + '\n';
  }
  if (any_general) {
    out += "General\n";
    for (const auto& v : inst.variables())
      if (v.is_integer && !(v.lower >= 0.0 && v.upper <= 1.0)) out += ' ' + v.name + '\n';
  }
  out += "End\n";
  return out;
}

// ---------------------------------------------------------------------------
// MPS writer (free format)
// ---------------------------------------------------------------------------

std::string write_mps(const MILPInstance& inst, const std::string& model_name) {
  std::string out = "NAME " + model_name + "\nROWS\n N obj\n";
  for (const auto& c : inst.constraints()) {
    switch (c.sense) {
      case RowSense::le: out += " L "; break;
      case RowSense::ge: out += " G "; break;
      case RowSense::eq: out += " E "; break;
    }
    out += c.name + '\n';
  }

  // Column-major view of the rows.
  std::vector<std::vector<std::pair<std::string, double>>> columns(inst.num_variables());
  for (const auto& c : inst.constraints())
    for (const auto& t : c.terms)
      if (t.coef != 0.0) columns[t.var].push_back({c.name, t.coef});

  out += "COLUMNS\n";
  bool in_integer_block = false;
  int marker = 0;
  for (int i = 0; i < inst.num_variables(); ++i) {
    const auto& v = inst.var(i);
    if (v.is_integer != in_integer_block) {
      out += "    MARKER" + std::to_string(marker++) + " 'MARKER' " +
             (v.is_integer ? "'INTORG'" : "'INTEND'") + "\n";
      in_integer_block = v.is_integer;
    }
    if (v.objective != 0.0)
      out += "    " + v.name + " obj " + format_full(v.objective) + '\n';
    for (const auto& [row, coef] : columns[i])
      out += "    " + v.name + ' ' + row + ' ' + format_full(coef) + '\n';
    if (v.objective == 0.0 && columns[i].empty())
      out += "    " + v.name + " obj 0\n";  // keep unused columns present
  }
  if (in_integer_block) out += "    MARKER" + std::to_string(marker++) + " 'MARKER' 'INTEND'\n";

  out += "RHS\n";
  for (const auto& c : inst.constraints())
    if (c.rhs != 0.0) out += "    rhs " + c.name + ' ' + format_full(c.rhs) + '\n';

  out += "BOUNDS\n";
  for (const auto& v : inst.variables()) {
    if (v.is_integer && v.lower == 0.0 && v.upper == 1.0) {
      out += " BV bnd " + v.name + '\n';
    } else if (is_neg_inf(v.lower) && is_pos_inf(v.upper)) {
      out += " FR bnd " + v.name + '\n';
    } else if (v.lower == v.upper) {
      out += " FX bnd " + v.name + ' ' + format_full(v.lower) + '\n';
    } else {
      if (is_neg_inf(v.lower)) out += " MI bnd " + v.name + '\n';
      else if (v.lower != 0.0) out += " LO bnd " + v.name + ' ' + format_full(v.lower) + '\n';
      if (!is_pos_inf(v.upper)) out += " UP bnd " + v.name + ' ' + format_full(v.upper) + '\n';
    }
  }
  out += "ENDATA\n";
  return out;
}

// ---------------------------------------------------------------------------
// LP reader for the subset emitted above
// ---------------------------------------------------------------------------

namespace {

struct LpTokenizer {
  std::vector<std::string> tokens;
  size_t pos = 0;

  explicit LpTokenizer(const std::string& text) {
    std::string cur;
    bool in_comment = false;
    auto flush = [&] {
      if (!cur.empty()) {
        tokens.push_back(cur);
        cur.clear();
      }
    };
    for (char ch : text) {
      if (in_comment) {
        if (ch == '\n') in_comment = false;
        continue;
      }
      if (ch == '\\') {
        in_comment = true;
        continue;
      }
      if (std::isspace(static_cast<unsigned char>(ch))) {
        flush();
      } else if (ch == ':' || ch == '+' || ch == '-') {
        flush();
        tokens.push_back(std::string(1, ch));
      } else if (ch == '<' || ch == '>' || ch == '=') {
        if (cur == "<" || cur == ">") {
          cur += ch;
          flush();
        } else {
          flush();
          cur = std::string(1, ch);
          if (ch == '=') flush();
        }
      } else {
        cur += ch;
      }
    }
    flush();
    // Merge "<" "=" produced by "< =" style splits.
    std::vector<std::string> merged;
    for (auto& t : tokens) {
      if ((t == "=") && !merged.empty() && (merged.back() == "<" || merged.back() == ">"))
        merged.back() += "=";
      else
        merged.push_back(t);
    }
    tokens = std::move(merged);
  }

  bool done() const { return pos >= tokens.size(); }
  const std::string& peek() const { return tokens.at(pos); }
  std::string next() { return tokens.at(pos++); }
};

bool is_number(const std::string& t) {
  if (t.empty()) return false;
  char* end = nullptr;
  std::strtod(t.c_str(), &end);
  return end == t.c_str() + t.size();
}

bool keyword_is(const std::string& t, const char* kw) {
  if (t.size() != std::strlen(kw)) return false;
  for (size_t i = 0; i < t.size(); ++i)
    if (std::tolower(static_cast<unsigned char>(t[i])) != kw[i]) return false;
  return true;
}

bool is_section_start(const std::string& t) {
  return keyword_is(t, "minimize") || keyword_is(t, "maximize") || keyword_is(t, "subject") ||
         keyword_is(t, "bounds") || keyword_is(t, "binary") || keyword_is(t, "binaries") ||
         keyword_is(t, "general") || keyword_is(t, "generals") || keyword_is(t, "end");
}

}  // namespace

MILPInstance parse_lp(const std::string& text) {
  LpTokenizer tz(text);
  if (tz.done()) throw BuildError("empty LP text");

  struct PendingRow {
    std::string name;
    std::vector<std::pair<std::string, double>> terms;
    RowSense sense;
    double rhs;
  };
  std::vector<std::pair<std::string, double>> objective;
  std::vector<PendingRow> rows;
  struct BoundRec {
    double lower = 0.0;
    double upper = kInfinity;
    bool has_lower = false, has_upper = false, free = false;
  };
  std::unordered_map<std::string, BoundRec> bounds;
  std::vector<std::string> integers;
  std::vector<std::string> var_order;
  std::unordered_map<std::string, int> seen;

  auto note_var = [&](const std::string& name) {
    if (!seen.count(name)) {
      seen.emplace(name, static_cast<int>(var_order.size()));
      var_order.push_back(name);
    }
  };

  // Reads "coef var" terms until a sense token or section keyword.
  auto parse_terms = [&](std::vector<std::pair<std::string, double>>& out) {
    double sign = 1.0;
    bool have_sign = false;
    while (!tz.done()) {
      const std::string& t = tz.peek();
      if (t == "<=" || t == ">=" || t == "=" || (!have_sign && is_section_start(t))) return;
      if (t == "+") {
        tz.next();
        have_sign = true;
        continue;
      }
      if (t == "-") {
        tz.next();
        sign = -sign;
        have_sign = true;
        continue;
      }
      double coef = 1.0;
      if (is_number(t)) coef = std::stod(tz.next());
      if (tz.done() || is_number(tz.peek())) {
        // bare constant in an expression is outside our subset
        throw BuildError("LP parse: expected variable name");
      }
      std::string name = tz.next();
      note_var(name);
      out.push_back({name, sign * coef});
      sign = 1.0;
      have_sign = false;
    }
  };

  // Objective
  if (!keyword_is(tz.peek(), "minimize")) throw BuildError("LP parse: expected Minimize");
  tz.next();
  {
    // optional "obj:" label
    if (!tz.done() && tz.tokens.size() > tz.pos + 1 && tz.tokens[tz.pos + 1] == ":") {
      tz.next();
      tz.next();
    }
    parse_terms(objective);
  }

  // Subject To
  if (tz.done() || !keyword_is(tz.peek(), "subject")) throw BuildError("LP parse: expected Subject To");
  tz.next();
  if (!tz.done() && keyword_is(tz.peek(), "to")) tz.next();
  while (!tz.done() && !is_section_start(tz.peek())) {
    PendingRow row;
    row.name = tz.next();
    if (tz.done() || tz.peek() != ":") throw BuildError("LP parse: expected ':' after row name");
    tz.next();
    parse_terms(row.terms);
    if (tz.done()) throw BuildError("LP parse: row without sense");
    const std::string sense = tz.next();
    if (sense == "<=") row.sense = RowSense::le;
    else if (sense == ">=") row.sense = RowSense::ge;
    else if (sense == "=") row.sense = RowSense::eq;
    else throw BuildError("LP parse: bad sense token '" + sense + "'");
    double sgn = 1.0;
    if (!tz.done() && tz.peek() == "-") {
      tz.next();
      sgn = -1.0;
    }
    if (tz.done() || !is_number(tz.peek())) throw BuildError("LP parse: bad rhs");
    row.rhs = sgn * std::stod(tz.next());
    rows.push_back(std::move(row));
  }

  // Bounds
  if (!tz.done() && keyword_is(tz.peek(), "bounds")) {
    tz.next();
    while (!tz.done() && !is_section_start(tz.peek())) {
      double sgn = 1.0;
      if (tz.peek() == "-") {
        tz.next();
        sgn = -1.0;
      }
      if (is_number(tz.peek())) {
        // "lo <= x <= up"
        const double lo = sgn * std::stod(tz.next());
        if (tz.next() != "<=") throw BuildError("LP parse: bad bound line");
        const std::string name = tz.next();
        note_var(name);
        auto& b = bounds[name];
        b.lower = lo;
        b.has_lower = true;
        if (!tz.done() && tz.peek() == "<=") {
          tz.next();
          double s2 = 1.0;
          if (tz.peek() == "-") {
            tz.next();
            s2 = -1.0;
          }
          b.upper = s2 * std::stod(tz.next());
          b.has_upper = true;
        }
      } else {
        const std::string name = tz.next();
        note_var(name);
        auto& b = bounds[name];
        if (keyword_is(tz.peek(), "free")) {
          tz.next();
          b.free = true;
          continue;
        }
        const std::string op = tz.next();
        double s2 = 1.0;
        if (!tz.done() && tz.peek() == "-") {
          tz.next();
          s2 = -1.0;
        }
        const double val = s2 * std::stod(tz.next());
        if (op == "<=") {
          b.upper = val;
          b.has_upper = true;
        } else if (op == ">=") {
          b.lower = val;
          b.has_lower = true;
        } else if (op == "=") {
          b.lower = b.upper = val;
          b.has_lower = b.has_upper = true;
        } else {
          throw BuildError("LP parse: bad bound operator '" + op + "'");
        }
      }
    }
  }

  while (!tz.done() && (keyword_is(tz.peek(), "binary") || keyword_is(tz.peek(), "binaries") ||
                        keyword_is(tz.peek(), "general") || keyword_is(tz.peek(), "generals"))) {
    const bool binary = keyword_is(tz.peek(), "binary") || keyword_is(tz.peek(), "binaries");
    tz.next();
    while (!tz.done() && !is_section_start(tz.peek())) {
      std::string name = tz.next();
      note_var(name);
      integers.push_back(name);
      if (binary) {
        auto& b = bounds[name];
        if (!b.has_lower) b.lower = 0.0;
        if (!b.has_upper) b.upper = 1.0;
        b.has_lower = b.has_upper = true;
      }
    }
  }
  if (tz.done() || !keyword_is(tz.peek(), "end")) throw BuildError("LP parse: expected End");

  MILPInstance inst;
  std::unordered_map<std::string, bool> is_int;
  for (const auto& n : integers) is_int[n] = true;
  for (const auto& name : var_order) {
    double lo = 0.0, up = kInfinity;
    auto it = bounds.find(name);
    if (it != bounds.end()) {
      if (it->second.free) {
        lo = -kInfinity;
        up = kInfinity;
      } else {
        if (it->second.has_lower) lo = it->second.lower;
        if (it->second.has_upper) up = it->second.upper;
        if (lo <= -kInfThreshold) lo = -kInfinity;
        if (up >= kInfThreshold) up = kInfinity;
      }
    }
    inst.add_variable(name, lo, up, 0.0, is_int.count(name) > 0);
  }
  for (const auto& [name, coef] : objective) inst.add_objective_term(inst.variable(name), coef);
  for (const auto& row : rows) {
    std::vector<LinearTerm> terms;
    terms.reserve(row.terms.size());
    for (const auto& [name, coef] : row.terms) terms.push_back({inst.variable(name), coef});
    inst.add_constraint(row.name, std::move(terms), row.sense, row.rhs);
  }
  return inst;
}

}  // namespace minigrid
