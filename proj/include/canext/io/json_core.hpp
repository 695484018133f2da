#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/error.hpp"
#include "canext/lalg/ideal.hpp"
#include "canext/lalg/vec.hpp"
#include "canext/order/poset.hpp"
#include "canext/rational.hpp"

namespace canext::io {

using Json = nlohmann::json;

inline Json require_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw ValidationError(std::string("missing field '") + key + "'");
  return j.at(key);
}

// Rationals travel as "p/q" strings in lowest terms; plain JSON integers are accepted on input.

inline Json rational_json(const Rational& q) { return canext::to_string(q); }

inline Rational parse_rational_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<long long>());
  throw ValidationError("rational must be a \"p/q\" string, got " + j.dump());
}

inline Json vec_json(const lalg::LVec& a) {
  Json coords = Json::array();
  for (const auto& x : a.coords()) coords.push_back(rational_json(x));
  return {{"dim", a.dim()}, {"coords", coords}};
}

inline lalg::LVec parse_vec(const Json& j) {
  const Json coords = require_field(j, "coords");
  if (!coords.is_array()) throw ValidationError("coords must be an array");
  std::vector<Rational> c;
  for (const auto& x : coords) c.push_back(parse_rational_json(x));
  lalg::LVec a(std::move(c));
  if (j.contains("dim") && j.at("dim").get<std::size_t>() != a.dim())
    throw ValidationError("dim does not match the number of coordinates");
  return a;
}

inline Json vecs_json(const std::vector<lalg::LVec>& vs) {
  Json out = Json::array();
  for (const auto& v : vs) out.push_back(vec_json(v));
  return out;
}

inline std::vector<lalg::LVec> parse_vecs(const Json& j) {
  if (!j.is_array()) throw ValidationError("expected an array of vectors");
  std::vector<lalg::LVec> out;
  for (const auto& v : j) out.push_back(parse_vec(v));
  return out;
}

/// Coordinate set as a sorted 1-based list.
inline Json coord_set_json(lalg::CoordMask m, std::size_t dim) {
  Json out = Json::array();
  for (std::size_t i = 0; i < dim; ++i)
    if (m >> i & 1) out.push_back(i + 1);
  return out;
}

inline lalg::CoordMask parse_coord_set(const Json& j, std::size_t dim) {
  if (!j.is_array()) throw ValidationError("coordinate set must be an array");
  lalg::CoordMask m = 0;
  for (const auto& x : j) {
    const auto i = x.get<long long>();
    if (i < 1 || static_cast<std::size_t>(i) > dim) throw ValidationError("coordinate " + x.dump() + " out of range");
    m |= lalg::CoordMask{1} << (i - 1);
  }
  return m;
}

inline Json ideal_json(const lalg::LIdeal& i) {
  return {{"dim", i.dim()}, {"zeroSet", coord_set_json(i.zero_set(), i.dim())}};
}

inline lalg::LIdeal parse_ideal(const Json& j) {
  const auto dim = require_field(j, "dim").get<std::size_t>();
  return lalg::LIdeal(dim, parse_coord_set(require_field(j, "zeroSet"), dim));
}

inline Json poset_json(const order::FinPoset& p) {
  Json le = Json::array();
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < p.size(); ++j)
      if (p.leq(i, j)) le.push_back({p.label(i), p.label(j)});
  return {{"elements", p.labels()}, {"le", le}};
}

inline order::FinPoset parse_poset(const Json& j) {
  const Json elements = require_field(j, "elements");
  const Json le = require_field(j, "le");
  if (!elements.is_array() || !le.is_array()) throw ValidationError("elements and le must be arrays");
  std::vector<std::string> labels;
  for (const auto& e : elements) labels.push_back(e.get<std::string>());
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& p : le) {
    if (!p.is_array() || p.size() != 2) throw ValidationError("each le entry must be a pair");
    pairs.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
  }
  return order::FinPoset::from_relation(std::move(labels), pairs);
}

inline Json boolalg_json(const ba::FinBoolAlg& b) { return {{"atoms", b.atoms()}}; }

inline ba::FinBoolAlg parse_boolalg(const Json& j) {
  const Json atoms = require_field(j, "atoms");
  if (!atoms.is_array()) throw ValidationError("atoms must be an array");
  return ba::FinBoolAlg(atoms.get<std::vector<std::string>>());
}

}  // namespace canext::io
