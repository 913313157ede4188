#pragma once

// JSON and CSV forms of scalars, points, groundstates and operators. Needs
// nlohmann/json (vendor/json.hpp) on the include path.
//
// A Scalar is written as four "p/d" strings, the coefficients of
// 1, zeta, zeta^2, zeta^3 with zeta = exp(2 pi i/12).

#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "loopqkz/exactfield.hpp"
#include "loopqkz/groundstate.hpp"
#include "loopqkz/sparse.hpp"
#include "loopqkz/transfer.hpp"

namespace loopqkz {

inline constexpr int schema_version = 1;

using json = nlohmann::ordered_json;

inline std::string rational_text(const Rational& r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

inline json to_json(const Scalar& x) {
  json a = json::array();
  for (const auto& c : x.coefficients()) a.push_back(rational_text(c));
  return a;
}

inline Scalar scalar_from_json(const json& j) {
  if (j.is_string()) return Scalar(parse_rational(j.get<std::string>()));
  if (j.is_number_integer()) return Scalar(j.get<long>());
  if (!j.is_array() || j.size() != 4) throw invalid_argument("scalar must be a rational or a 4-tuple");
  std::array<Rational, 4> c;
  for (std::size_t k = 0; k < 4; ++k) {
    if (j[k].is_number_integer())
      c[k] = Rational(j[k].get<long>());
    else
      c[k] = parse_rational(j[k].get<std::string>());
  }
  return Scalar(c);
}

// "p/d" is a rational; "a:b:c:d" a full 4-tuple of rationals.
inline Scalar parse_scalar(const std::string& text) {
  if (text.find(':') == std::string::npos) return Scalar(parse_rational(text));
  std::array<Rational, 4> c;
  std::stringstream ss(text);
  std::string part;
  std::size_t k = 0;
  while (std::getline(ss, part, ':')) {
    if (k >= 4) throw invalid_argument("scalar tuple has more than four entries: '" + text + "'");
    c[k++] = parse_rational(part);
  }
  if (k != 4) throw invalid_argument("scalar tuple needs four entries: '" + text + "'");
  return Scalar(c);
}

inline std::vector<Scalar> parse_scalar_list(const std::string& text) {
  std::vector<Scalar> out;
  if (text.empty()) return out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) out.push_back(parse_scalar(part));
  return out;
}

inline json to_json(const SpectralPoint& pt) {
  json z = json::array();
  for (const auto& x : pt.z) z.push_back(to_json(x));
  return json{{"L", pt.length()},       {"z", z},         {"zeta1", to_json(pt.zeta1)},
              {"zeta2", to_json(pt.zeta2)}, {"w", to_json(pt.w)}, {"s", to_json(pt.s)}};
}

inline json to_json(const GroundstateVector& gs) {
  json comps = json::object();
  const int n = gs.point.length();
  for (std::size_t a = 0; a < gs.components.size(); ++a)
    comps[LinkPattern(n, a).to_string()] = to_json(gs.components[a]);
  return json{{"schemaVersion", schema_version},
              {"point", to_json(gs.point)},
              {"components", comps},
              {"normalization",
               {{"mode", to_string(gs.normalization)}, {"convention", "A_0 = 1, A_L = (-1)^L A_{L-1}"}}}};
}

inline std::string to_csv(const GroundstateVector& gs) {
  std::string out = "pattern,c0,c1,c2,c3\n";
  const int n = gs.point.length();
  for (std::size_t a = 0; a < gs.components.size(); ++a) {
    out += n == 0 ? std::string("\"\"") : LinkPattern(n, a).to_string();
    for (const auto& c : gs.components[a].coefficients()) out += "," + rational_text(c);
    out += "\n";
  }
  return out;
}

// Entries as [row, col, scalar].
inline json to_json(const SparseOperator& op) {
  json entries = json::array();
  for (std::size_t c = 0; c < op.dim(); ++c)
    for (const auto& [r, x] : op.column(c)) entries.push_back(json::array({r, c, to_json(x)}));
  return json{{"schemaVersion", schema_version}, {"dimension", op.dim()}, {"entries", entries}};
}

}  // namespace loopqkz
