#pragma once

#include <memory>
#include <string>
#include <vector>

#include "canext/io/json_core.hpp"
#include "canext/normal/normal_fn.hpp"

namespace canext::io {

/// {"label": "p/q", ...}
inline Json values_json(const normal::PosetFn& f) {
  Json out = Json::object();
  for (std::size_t i = 0; i < f.size(); ++i) out[f.poset().label(i)] = rational_json(f[i]);
  return out;
}

inline Json values_json(const normal::NormalFn& f) { return values_json(f.fn()); }

/// Every element of the poset must be assigned, and nothing else.
inline normal::PosetFn parse_values(const Json& j, std::shared_ptr<const order::FinPoset> p) {
  if (!j.is_object()) throw ValidationError("values must be an object keyed by element label");
  std::vector<Rational> v(p->size());
  std::vector<bool> seen(p->size(), false);
  for (const auto& [label, value] : j.items()) {
    auto idx = p->index_of(label);
    if (!idx) throw ValidationError("value given for unknown element '" + label + "'");
    v[*idx] = parse_rational_json(value);
    seen[*idx] = true;
  }
  for (std::size_t i = 0; i < seen.size(); ++i)
    if (!seen[i]) throw ValidationError("no value for element '" + p->label(i) + "'");
  return normal::PosetFn(std::move(p), std::move(v));
}

inline Json fn_json(const normal::PosetFn& f) { return {{"poset", poset_json(f.poset())}, {"values", values_json(f)}}; }
inline Json fn_json(const normal::NormalFn& f) { return fn_json(f.fn()); }

inline normal::PosetFn parse_fn(const Json& j) {
  auto p = std::make_shared<const order::FinPoset>(parse_poset(require_field(j, "poset")));
  return parse_values(require_field(j, "values"), std::move(p));
}

inline normal::NormalFn parse_normal_fn(const Json& j) { return normal::NormalFn(parse_fn(j)); }

}  // namespace canext::io
