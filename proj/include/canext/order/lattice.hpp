#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/error.hpp"
#include "canext/order/poset.hpp"

namespace canext::order {

/// Finite lattice with precomputed meet/join tables. Distributivity is a
/// queryable property; constructions that need it call require_distributive().
/// A finite distributive lattice is a frame.
class FinLattice {
 public:
  explicit FinLattice(FinPoset order) : order_(std::move(order)) {
    const std::size_t n = order_.size();
    auto b = order_.bottom();
    auto t = order_.top();
    if (!b || !t) throw ValidationError("lattice needs both a bottom and a top");
    bottom_ = *b;
    top_ = *t;
    meet_.assign(n * n, 0);
    join_.assign(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        auto m = order_.meet(i, j);
        auto k = order_.join(i, j);
        if (!m || !k)
          throw ValidationError("'" + order_.label(i) + "' and '" + order_.label(j) + "' lack a meet or join");
        meet_[i * n + j] = *m;
        join_[i * n + j] = *k;
      }
  }

  const FinPoset& order() const { return order_; }
  std::size_t size() const { return order_.size(); }
  const std::string& label(std::size_t i) const { return order_.label(i); }
  bool leq(std::size_t a, std::size_t b) const { return order_.leq(a, b); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }

  std::size_t join_all(const ElementSet& s) const {
    std::size_t acc = bottom_;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) acc = join(acc, i);
    return acc;
  }
  std::size_t meet_all(const ElementSet& s) const {
    std::size_t acc = top_;
    for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i)) acc = meet(acc, i);
    return acc;
  }

  /// First triple violating a ∧ (b ∨ c) = (a ∧ b) ∨ (a ∧ c), if any.
  std::optional<std::array<std::size_t, 3>> distributivity_violation() const {
    for (std::size_t a = 0; a < size(); ++a)
      for (std::size_t b = 0; b < size(); ++b)
        for (std::size_t c = 0; c < size(); ++c)
          if (meet(a, join(b, c)) != join(meet(a, b), meet(a, c))) return std::array{a, b, c};
    return std::nullopt;
  }
  bool is_distributive() const { return !distributivity_violation().has_value(); }

  void require_distributive() const {
    if (auto v = distributivity_violation())
      throw ValidationError("lattice is not distributive at ('" + label((*v)[0]) + "', '" + label((*v)[1]) +
                            "', '" + label((*v)[2]) + "')");
  }

  /// Nonzero elements that are not the join of the elements strictly below.
  std::vector<std::size_t> join_irreducibles() const {
    std::vector<std::size_t> out;
    for (std::size_t p = 0; p < size(); ++p) {
      if (p == bottom_) continue;
      ElementSet below = order_.down(p);
      below.reset(p);
      if (join_all(below) != p) out.push_back(p);
    }
    return out;
  }

  /// For a join-irreducible p, the join of everything strictly below p.
  std::size_t lower_cover_join(std::size_t p) const {
    ElementSet below = order_.down(p);
    below.reset(p);
    return join_all(below);
  }

  /// a* = ⋁{ s | a ∧ s = 0 }; in a finite distributive lattice it is the
  /// largest element disjoint from a.
  std::size_t pseudocomplement(std::size_t a) const {
    std::size_t acc = bottom_;
    for (std::size_t s = 0; s < size(); ++s)
      if (meet(a, s) == bottom_) acc = join(acc, s);
    return acc;
  }

  /// a ≺ b iff a* ∨ b = 1.
  bool well_inside(std::size_t a, std::size_t b) const { return join(pseudocomplement(a), b) == top_; }

  /// Regularity: a = ⋁{ s | s ≺ a } for every a.
  std::optional<std::size_t> regularity_violation() const {
    for (std::size_t a = 0; a < size(); ++a) {
      std::size_t acc = bottom_;
      for (std::size_t s = 0; s < size(); ++s)
        if (well_inside(s, a)) acc = join(acc, s);
      if (acc != a) return a;
    }
    return std::nullopt;
  }

  /// Compactness is automatic for a finite frame: any cover of 1 is finite.
  static constexpr bool is_compact() { return true; }

 private:
  FinPoset order_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
};

}  // namespace canext::order
