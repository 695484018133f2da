#pragma once

#include <sstream>
#include <string>

#include "canext/io/json_core.hpp"
#include "canext/io/normal_json.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/normal_fn.hpp"
#include "canext/order/poset.hpp"
#include "canext/report.hpp"

namespace canext::io {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

/// Hasse diagram: one node per element, one edge per covering pair, drawn upward.
inline std::string to_dot(const order::FinPoset& p, const std::string& name = "P") {
  std::ostringstream os;
  os << "digraph " << dot_quote(name) << " {\n  rankdir=BT;\n";
  for (const auto& l : p.labels()) os << "  " << dot_quote(l) << ";\n";
  for (auto [lo, hi] : p.covers()) os << "  " << dot_quote(p.label(lo)) << " -> " << dot_quote(p.label(hi)) << ";\n";
  os << "}\n";
  return os.str();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

/// element,f,f_upper,f_lower,f_sharp
inline std::string envelopes_csv(const normal::PosetFn& f) {
  const auto e = normal::envelopes(f);
  std::ostringstream os;
  os << "element,f,f_upper,f_lower,f_sharp\n";
  for (std::size_t i = 0; i < f.size(); ++i)
    os << csv_field(f.poset().label(i)) << ',' << to_string(f[i]) << ',' << to_string(e.upper[i]) << ','
       << to_string(e.lower[i]) << ',' << to_string(e.sharp[i]) << '\n';
  return os.str();
}

/// ideal,gamma: one row per point of X.
inline std::string gamma_csv(const normal::IdealSpace& x, const lalg::LVec& a) {
  const auto g = x.gamma(a);
  std::ostringstream os;
  os << "ideal,gamma\n";
  for (std::size_t i = 0; i < x.size(); ++i) os << csv_field(x.ideals()[i].label()) << ',' << to_string(g[i]) << '\n';
  return os.str();
}

/// Sorted keys (nlohmann objects are ordered maps), two-space indent, trailing newline.
inline std::string canonical_json(const Json& j) { return j.dump(2) + "\n"; }

inline Json empty_report_json() { return Report{}.to_json(); }

}  // namespace canext::io
