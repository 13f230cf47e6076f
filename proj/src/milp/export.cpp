// Copyright 2026 The owamilp Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "owa/milp/export.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <set>
#include <sstream>
#include <vector>

#include "owa/errors.hpp"

namespace owa::milp {
namespace {

std::string format_number(double v, std::size_t width) {
  if (v == 0.0) return "0";
  char buf[64];
  for (int prec = 15; prec >= 1; --prec) {
    std::snprintf(buf, sizeof buf, "%.*g", prec, v);
    std::string s(buf);
    if (s.size() <= width) return s;
  }
  throw Error("number does not fit an MPS field");
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.append(width - s.size(), ' ');
  return s;
}

// Builds one fixed-format data line from up to five fields.
std::string mps_line(const std::string& f1, const std::string& f2,
                     const std::string& f3 = "", const std::string& f4 = "",
                     const std::string& f5 = "", const std::string& f6 = "") {
  std::string line = " " + pad(f1, 2) + " " + pad(f2, 8);
  if (!f3.empty() || !f4.empty()) line += "  " + pad(f3, 8) + "  " + pad(f4, 12);
  if (!f5.empty()) line += "   " + pad(f5, 8) + "  " + pad(f6, 12);
  while (!line.empty() && line.back() == ' ') line.pop_back();
  return line + "\n";
}

bool fits_mps(const std::string& s) {
  if (s.empty() || s.size() > 8) return false;
  for (char ch : s) {
    if (std::isspace(static_cast<unsigned char>(ch))) return false;
  }
  return s.front() != '*' && s.front() != '$';
}

std::string numbered(char prefix, int k) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%c%07d", prefix, k + 1);
  return buf;
}

}  // namespace

std::string export_mps(const Model& model) {
  const auto& vars = model.variables();
  const auto& rows = model.constraints();
  bool rename = false;
  std::set<std::string> seen;
  for (const auto& v : vars) {
    if (!fits_mps(v.name) || !seen.insert(v.name).second) rename = true;
  }
  seen.clear();
  for (const auto& r : rows) {
    if (!fits_mps(r.name) || !seen.insert(r.name).second || r.name == "COST")
      rename = true;
  }
  std::vector<std::string> cname, rname;
  for (std::size_t j = 0; j < vars.size(); ++j)
    cname.push_back(rename ? numbered('C', int(j)) : vars[j].name);
  for (std::size_t r = 0; r < rows.size(); ++r)
    rname.push_back(rename ? numbered('R', int(r)) : rows[r].name);

  std::ostringstream out;
  const std::string title = model.name.empty() ? "OWAMODEL" : model.name;
  out << "NAME          " << (fits_mps(title) ? title : "OWAMODEL") << "\n";
  if (rename) {
    out << "* name map\n";
    for (std::size_t j = 0; j < vars.size(); ++j)
      out << "* " << cname[j] << " " << vars[j].name << "\n";
    for (std::size_t r = 0; r < rows.size(); ++r)
      out << "* " << rname[r] << " " << rows[r].name << "\n";
  }
  out << "ROWS\n" << mps_line("N", "COST");
  for (std::size_t r = 0; r < rows.size(); ++r) {
    const char* code = rows[r].sense == Sense::kLessEqual ? "L"
                       : rows[r].sense == Sense::kEqual   ? "E"
                                                          : "G";
    out << mps_line(code, rname[r]);
  }

  // Column-major view of the coefficients.
  std::vector<std::vector<std::pair<int, double>>> columns(vars.size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (const auto& t : rows[r].terms)
      columns[t.var].push_back({int(r), t.coef});
  }
  std::vector<double> cost(vars.size(), 0.0);
  for (const auto& t : model.objective()) cost[t.var] += t.coef;

  out << "COLUMNS\n";
  bool in_int = false;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const bool is_int = vars[j].kind == VarKind::kBinary;
    if (is_int != in_int) {
      out << "    " << pad("MARKER", 8) << "  " << pad("'MARKER'", 8)
          << "                 " << (is_int ? "'INTORG'" : "'INTEND'") << "\n";
      in_int = is_int;
    }
    std::vector<std::pair<std::string, double>> entries;
    if (cost[j] != 0.0 || columns[j].empty()) entries.push_back({"COST", cost[j]});
    for (const auto& [r, c] : columns[j]) entries.push_back({rname[r], c});
    for (std::size_t k = 0; k < entries.size(); k += 2) {
      if (k + 1 < entries.size()) {
        out << mps_line("", cname[j], entries[k].first,
                        format_number(entries[k].second, 12),
                        entries[k + 1].first,
                        format_number(entries[k + 1].second, 12));
      } else {
        out << mps_line("", cname[j], entries[k].first,
                        format_number(entries[k].second, 12));
      }
    }
  }
  if (in_int) {
    out << "    " << pad("MARKER", 8) << "  " << pad("'MARKER'", 8)
        << "                 'INTEND'\n";
  }

  out << "RHS\n";
  if (model.objective_constant() != 0.0)
    out << mps_line("", "RHS", "COST",
                    format_number(-model.objective_constant(), 12));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].rhs != 0.0)
      out << mps_line("", "RHS", rname[r], format_number(rows[r].rhs, 12));
  }

  out << "BOUNDS\n";
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (v.kind == VarKind::kBinary && v.lower == 0.0 && v.upper == 1.0) {
      out << mps_line("BV", "BND", cname[j]);
      continue;
    }
    if (v.lower == v.upper) {
      out << mps_line("FX", "BND", cname[j], format_number(v.lower, 12));
      continue;
    }
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out << mps_line("FR", "BND", cname[j]);
      continue;
    }
    if (std::isinf(v.lower))
      out << mps_line("MI", "BND", cname[j]);
    else if (v.lower != 0.0)
      out << mps_line("LO", "BND", cname[j], format_number(v.lower, 12));
    if (!std::isinf(v.upper))
      out << mps_line("UP", "BND", cname[j], format_number(v.upper, 12));
  }
  out << "ENDATA\n";
  return out.str();
}

std::string lp_safe_name(const std::string& name) {
  std::string out;
  for (std::size_t k = 0; k < name.size(); ++k) {
    const char ch = name[k];
    if (ch == '<' && k + 1 < name.size() && name[k + 1] == '=') {
      out += "leq";
      ++k;
    } else if (ch == '\'') {
      out += 'p';
    } else if (std::isalnum(static_cast<unsigned char>(ch)) || ch == '_' ||
               ch == '.') {
      out += ch;
    } else {
      out += '_';
    }
  }
  if (out.empty() || std::isdigit(static_cast<unsigned char>(out.front())) ||
      out.front() == '.' || out.front() == 'e' || out.front() == 'E')
    out.insert(out.begin(), '_');
  return out;
}

namespace {

class LpWriter {
 public:
  explicit LpWriter(std::ostringstream& out) : out_(out) {}

  void expression(const std::vector<Term>& terms,
                  const std::vector<std::string>& names) {
    int on_line = 0;
    bool first = true;
    for (const auto& t : terms) {
      if (on_line == 8) {
        out_ << "\n   ";
        on_line = 0;
      }
      const double c = t.coef;
      if (first) {
        out_ << (c < 0 ? " - " : " ");
      } else {
        out_ << (c < 0 ? " - " : " + ");
      }
      out_ << format_number(std::fabs(c), 24) << " " << names[t.var];
      first = false;
      ++on_line;
    }
    if (first) out_ << " 0 " << names.front();
  }

 private:
  std::ostringstream& out_;
};

std::vector<std::string> unique_safe(const std::vector<std::string>& raw,
                                     const char* fallback) {
  std::set<std::string> used;
  std::vector<std::string> out;
  for (std::size_t k = 0; k < raw.size(); ++k) {
    std::string s = raw[k].empty() ? std::string(fallback) + std::to_string(k + 1)
                                   : lp_safe_name(raw[k]);
    std::string candidate = s;
    for (int dup = 2; !used.insert(candidate).second; ++dup)
      candidate = s + "_" + std::to_string(dup);
    out.push_back(candidate);
  }
  return out;
}

}  // namespace

std::string export_lp(const Model& model) {
  const auto& vars = model.variables();
  const auto& rows = model.constraints();
  std::vector<std::string> raw_v, raw_r;
  for (const auto& v : vars) raw_v.push_back(v.name);
  for (const auto& r : rows) raw_r.push_back(r.name);
  const auto vname = unique_safe(raw_v, "v");
  const auto rname = unique_safe(raw_r, "r");

  std::ostringstream out;
  LpWriter writer(out);
  out << "\\ " << (model.name.empty() ? "owa model" : model.name) << "\n";
  out << "Minimize\n obj:";
  if (model.objective().empty() || vars.empty()) {
    out << (vars.empty() ? " 0" : " 0 " + vname.front());
  } else {
    writer.expression(model.objective(), vname);
  }
  if (model.objective_constant() != 0.0) {
    const double k = model.objective_constant();
    out << (k < 0 ? " - " : " + ") << format_number(std::fabs(k), 24);
  }
  out << "\nSubject To\n";
  for (std::size_t r = 0; r < rows.size(); ++r) {
    out << " " << rname[r] << ":";
    writer.expression(rows[r].terms, vname);
    out << " " << sense_symbol(rows[r].sense) << " "
        << format_number(rows[r].rhs, 24) << "\n";
  }
  out << "Bounds\n";
  for (std::size_t j = 0; j < vars.size(); ++j) {
    const auto& v = vars[j];
    if (std::isinf(v.lower) && std::isinf(v.upper)) {
      out << " " << vname[j] << " free\n";
    } else if (v.lower == v.upper) {
      out << " " << vname[j] << " = " << format_number(v.lower, 24) << "\n";
    } else {
      out << " " << (std::isinf(v.lower) ? "-inf" : format_number(v.lower, 24))
          << " <= " << vname[j] << " <= "
          << (std::isinf(v.upper) ? "+inf" : format_number(v.upper, 24))
          << "\n";
    }
  }
  bool any_binary = false;
  for (std::size_t j = 0; j < vars.size(); ++j) {
    if (vars[j].kind != VarKind::kBinary) continue;
    if (!any_binary) out << "Binary\n";
    any_binary = true;
    out << " " << vname[j] << "\n";
  }
  out << "End\n";
  return out.str();
}

}  // namespace owa::milp
