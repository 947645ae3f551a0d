#pragma once

// JSON and LaTeX renderings of words, polynomials and tableaux.

#include <nlohmann/json.hpp>

#include <limits>
#include <string>

#include "weakeg/core.hpp"
#include "weakeg/drop_lift.hpp"
#include "weakeg/polynomial.hpp"
#include "weakeg/tableau.hpp"

namespace weakeg {

using Json = nlohmann::ordered_json;

/// Integer coefficient as a JSON number when it fits in 64 bits, otherwise
/// as a decimal string.
inline Json coefficient_json(const Coefficient& c) {
  if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
    return static_cast<long long>(c);
  return c.str();
}

inline Json to_json(const ReducedWord& rho) {
  Json out = Json::array();
  for (Letter x : rho.letters()) out.push_back(x);
  return out;
}

inline Json to_json(const std::vector<int>& parts) { return Json(parts); }

inline Json to_json(const MaybeVirtual& a) { return a ? Json(a->parts) : Json(nullptr); }

/// Terms in descending lexicographic order of exponents.
inline Json to_json(const Polynomial& p) {
  Json out = Json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    out.push_back(Json{{"exponents", it->first}, {"coeff", coefficient_json(it->second)}});
  return out;
}

inline Json to_json(const Tableau& t) {
  Json rows = Json::object();
  for (const auto& [i, r] : t.rows()) rows[std::to_string(i)] = r;
  return Json{{"shape_kind", t.kind() == ShapeKind::young ? "young" : "key"}, {"rows", rows}};
}

/// Rows listed bottom to top; empty rows kept.
inline Json to_json(const IncreasingRows& t) { return Json(t.rows); }

/// ytableau array, top row first so the bottom row is drawn lowest. Key
/// tableaux carry each row index in a leading \none cell, empty rows
/// included down to row 1.
inline std::string to_latex(const Tableau& t) {
  std::string out = "\\begin{ytableau}\n";
  if (t.size() == 0) return out + "\\none\n\\end{ytableau}\n";
  const bool key = t.kind() == ShapeKind::key;
  const int bottom = key ? std::min(t.bottom_row(), 1) : 1;
  for (int i = t.top_row(); i >= bottom; --i) {
    std::string line = key ? "\\none[" + std::to_string(i) + "]" : "";
    for (int v : t.row(i)) line += (line.empty() ? "" : " & ") + std::to_string(v);
    if (line.empty()) line = "\\none";
    out += line + (i > bottom ? " \\\\\n" : "\n");
  }
  return out + "\\end{ytableau}\n";
}

inline std::string to_latex(const Polynomial& p) {
  if (p.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const Coefficient mag = c < 0 ? Coefficient(-c) : c;
    out += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
    first = false;
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      mono += "x_{" + std::to_string(i + 1) + "}";
      if (e[i] > 1) mono += "^{" + std::to_string(e[i]) + "}";
    }
    if (mono.empty()) out += mag.str();
    else out += (mag == 1 ? "" : mag.str()) + mono;
  }
  return out;
}

}  // namespace weakeg
