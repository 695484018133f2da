#pragma once

#include <cstddef>
#include <vector>

#include "canext/mutation.hpp"
#include "canext/order/poset.hpp"
#include "canext/order/set_algebra.hpp"

namespace canext::order {

// Alexandroff topology on a finite poset: the opens are the upsets.

/// int(S) = { x | ↑x ⊆ S }
inline ElementSet alexandroff_interior(const FinPoset& p, const ElementSet& s) {
  p.require_same_size(s);
  ElementSet out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x)
    if (p.up(x).is_subset_of(s)) out.set(x);
  return out;
}

/// cl(S) = ↓S
inline ElementSet alexandroff_closure(const FinPoset& p, const ElementSet& s) {
#if CANEXT_MUTANT == 2
  p.require_same_size(s);
  return s;
#else
  return p.down_closure(s);
#endif
}

inline ElementSet regularize_open(const FinPoset& p, const ElementSet& s) {
  return alexandroff_interior(p, alexandroff_closure(p, s));
}

inline bool is_regular_open(const FinPoset& p, const ElementSet& u) {
  return regularize_open(p, u) == u;
}

/// RO(P) as a boolean algebra: meet = ∩, join = int∘cl of ∪, complement =
/// int of the set complement. Enumerates upsets, so P is capped.
inline SetBooleanAlgebra regular_opens(const FinPoset& p, std::size_t cap = 16) {
  std::vector<ElementSet> ro;
  for (auto& u : all_upsets(p, cap))
    if (is_regular_open(p, u)) ro.push_back(std::move(u));
  return SetBooleanAlgebra(
      std::move(ro), [p](const ElementSet& s) { return regularize_open(p, s); },
      [p](const ElementSet& s) { return alexandroff_interior(p, ~s); }, p.size());
}

}  // namespace canext::order
