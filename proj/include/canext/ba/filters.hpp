#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/order/poset.hpp"

namespace canext::ba {

/// Filters of a finite boolean algebra. Every filter is ↑b for exactly one b,
/// so a filter is stored as its generator mask.
class FilterPoset {
 public:
  explicit FilterPoset(FinBoolAlg b) : algebra_(std::move(b)) {
    const std::size_t n = algebra_.size();
    std::vector<std::string> labels;
    for (Mask g = 0; g < n; ++g) labels.push_back(label(g));
    // Reverse inclusion: ↑b ⊇ ↑c iff b ≤ c, so poset index = generator mask.
    filt_ = order::FinPoset::from_predicate(labels, [&](std::size_t b, std::size_t c) { return algebra_.leq(b, c); });
    std::vector<std::string> proper(labels.begin() + 1, labels.end());
    // Inclusion among proper filters: ↑b ⊆ ↑c iff c ≤ b. X index = mask - 1.
    x_ = order::FinPoset::from_predicate(std::move(proper), [&](std::size_t i, std::size_t j) {
      return algebra_.leq(j + 1, i + 1);
    });
  }

  const FinBoolAlg& algebra() const { return algebra_; }

  /// Filt(B) under reverse inclusion; a bounded meet-semilattice with
  /// bottom ↑0 = B and top ↑1 = {1}.
  const order::FinPoset& filt() const { return filt_; }

  /// X, the proper filters under inclusion.
  const order::FinPoset& proper() const { return x_; }

  static std::size_t x_index(Mask generator) { return static_cast<std::size_t>(generator) - 1; }
  static Mask x_generator(std::size_t index) { return static_cast<Mask>(index) + 1; }

  /// The elements of ↑b.
  std::vector<Mask> members(Mask b) const {
    std::vector<Mask> out;
    for (auto c : algebra_.elements())
      if (algebra_.leq(b, c)) out.push_back(c);
    return out;
  }

  /// Filter generated by ↑b ∪ ↑c.
  Mask meet(Mask b, Mask c) const { return algebra_.meet(b, c); }

  std::string label(Mask generator) const { return "^" + algebra_.label(generator); }

 private:
  FinBoolAlg algebra_;
  order::FinPoset filt_;
  order::FinPoset x_;
};

/// Whether a set of elements (bit k set for element mask k) is a filter.
inline bool is_filter(const FinBoolAlg& b, const std::vector<bool>& s) {
  if (!s.at(b.one())) return false;
  for (auto x : b.elements()) {
    if (!s[x]) continue;
    for (auto y : b.elements()) {
      if (b.leq(x, y) && !s[y]) return false;
      if (s[y] && !s[b.meet(x, y)]) return false;
    }
  }
  return true;
}

}  // namespace canext::ba
