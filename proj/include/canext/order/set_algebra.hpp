#pragma once

#include <algorithm>
#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/order/poset.hpp"

namespace canext::order {

/// A finite boolean algebra whose elements are subsets of a fixed carrier,
/// with meet = intersection but join and complement supplied by a closure
/// operator (int∘cl for regular opens, ** for booleanizations).
class SetBooleanAlgebra {
 public:
  using UnaryOp = std::function<ElementSet(const ElementSet&)>;

  SetBooleanAlgebra(std::vector<ElementSet> elements, UnaryOp regularize, UnaryOp complement,
                    std::size_t carrier_size)
      : elements_(std::move(elements)),
        regularize_(std::move(regularize)),
        complement_(std::move(complement)),
        carrier_size_(carrier_size) {
    std::sort(elements_.begin(), elements_.end(), by_rank);
    elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
  }

  std::size_t size() const { return elements_.size(); }
  std::size_t carrier_size() const { return carrier_size_; }
  const std::vector<ElementSet>& elements() const { return elements_; }
  const ElementSet& at(std::size_t i) const { return elements_.at(i); }

  std::optional<std::size_t> index_of(const ElementSet& s) const {
    auto it = std::lower_bound(elements_.begin(), elements_.end(), s, by_rank);
    if (it != elements_.end() && *it == s) return static_cast<std::size_t>(it - elements_.begin());
    return std::nullopt;
  }
  bool contains(const ElementSet& s) const { return index_of(s).has_value(); }

  ElementSet bottom() const { return ElementSet(carrier_size_); }
  ElementSet top() const { return regularize_(ElementSet(carrier_size_).set()); }
  ElementSet meet(const ElementSet& a, const ElementSet& b) const { return a & b; }
  ElementSet join(const ElementSet& a, const ElementSet& b) const { return regularize_(a | b); }
  ElementSet complement(const ElementSet& a) const { return complement_(a); }
  bool leq(const ElementSet& a, const ElementSet& b) const { return a.is_subset_of(b); }

  /// Minimal nonzero elements.
  std::vector<ElementSet> atoms() const {
    std::vector<ElementSet> out;
    for (const auto& e : elements_) {
      if (e.none()) continue;
      bool minimal = std::none_of(elements_.begin(), elements_.end(), [&](const ElementSet& f) {
        return f.any() && f != e && f.is_subset_of(e);
      });
      if (minimal) out.push_back(e);
    }
    return out;
  }

  /// Brute-force check of the boolean-algebra laws over all pairs and triples
  /// (triples only when size <= triple_cap). Returns a description of the
  /// first violation, if any.
  std::optional<std::string> check_axioms(std::size_t triple_cap = 64) const {
    const ElementSet bot = bottom();
    const ElementSet tp = top();
    if (!contains(bot)) return "bottom missing";
    if (!contains(tp)) return "top missing";
    for (const auto& a : elements_) {
      const ElementSet na = complement(a);
      if (!contains(na)) return "not closed under complement";
      if (meet(a, na) != bot) return "a ∧ ¬a ≠ 0";
      if (join(a, na) != tp) return "a ∨ ¬a ≠ 1";
      if (complement(na) != a) return "¬¬a ≠ a";
      for (const auto& b : elements_) {
        const ElementSet m = meet(a, b);
        const ElementSet j = join(a, b);
        if (!contains(m) || !contains(j)) return "not closed under meet/join";
        if (meet(a, j) != a || join(a, m) != a) return "absorption fails";
        if (!leq(a, j) || !leq(m, a)) return "join/meet not bounds";
        if (complement(m) != join(complement(a), complement(b))) return "De Morgan fails";
      }
    }
    if (elements_.size() <= triple_cap)
      for (const auto& a : elements_)
        for (const auto& b : elements_)
          for (const auto& c : elements_)
            if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return "distributivity fails";
    return std::nullopt;
  }

 private:
  static bool by_rank(const ElementSet& a, const ElementSet& b) {
    if (a.count() != b.count()) return a.count() < b.count();
    return a < b;
  }

  std::vector<ElementSet> elements_;
  UnaryOp regularize_;
  UnaryOp complement_;
  std::size_t carrier_size_;
};

}  // namespace canext::order
