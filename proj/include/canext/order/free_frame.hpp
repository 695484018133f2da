#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/error.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/poset.hpp"
#include "canext/order/set_algebra.hpp"

namespace canext::order {

/// The free frame on a bounded meet-semilattice M, realized as the downsets
/// of M∖{0}. Elements are never enumerated wholesale: callers hold individual
/// downsets (ElementSet over base()) and combine them.
class FreeFrame {
 public:
  using Element = ElementSet;

  explicit FreeFrame(FinPoset semilattice) : source_(std::move(semilattice)) {
    auto top = source_.top();
    if (!top) throw ValidationError("free frame: semilattice has no top");
    for (std::size_t i = 0; i < source_.size(); ++i)
      for (std::size_t j = i + 1; j < source_.size(); ++j)
        if (!source_.meet(i, j))
          throw ValidationError("free frame: '" + source_.label(i) + "' and '" + source_.label(j) +
                                "' have no meet");
    source_top_ = *top;
    init();
  }

  explicit FreeFrame(const FinLattice& lattice) : FreeFrame(lattice.order()) {}

  /// Dn(Q) for an arbitrary finite poset Q, viewed as the free frame on Q
  /// with a fresh bottom adjoined. Q itself need not be a semilattice.
  static FreeFrame of_base(const FinPoset& base) {
    std::string zero = "0";
    while (base.index_of(zero)) zero += "'";
    std::vector<std::string> labels{zero};
    for (const auto& l : base.labels()) labels.push_back(l);
    FinPoset source = FinPoset::from_predicate(std::move(labels), [&](std::size_t i, std::size_t j) {
      return i == 0 || (j != 0 && base.leq(i - 1, j - 1));
    });
    return FreeFrame(std::move(source), Unchecked{});
  }

  const FinPoset& source() const { return source_; }
  const FinPoset& base() const { return base_; }
  std::size_t source_bottom() const { return source_bottom_; }
  std::size_t source_top() const { return source_top_; }
  std::optional<std::size_t> base_index(std::size_t m) const { return to_base_.at(m); }
  std::size_t source_index(std::size_t b) const { return to_source_.at(b); }

  /// i(m) = ↓m ∖ {0}
  Element generator(std::size_t m) const {
    ElementSet out(base_.size());
    const ElementSet& below = source_.down(m);
    for (auto k = below.find_first(); k != ElementSet::npos; k = below.find_next(k))
      if (auto b = to_base_[k]) out.set(*b);
    return out;
  }

  bool is_element(const Element& a) const { return a.size() == base_.size() && base_.is_downset(a); }
  void require_element(const Element& a) const {
    if (!is_element(a)) throw ValidationError("free frame: not a downset of the base");
  }

  Element bottom() const { return ElementSet(base_.size()); }
  Element top() const { return ElementSet(base_.size()).set(); }
  Element meet(const Element& a, const Element& b) const { return a & b; }
  Element join(const Element& a, const Element& b) const { return a | b; }
  bool leq(const Element& a, const Element& b) const { return a.is_subset_of(b); }

  /// a* = { q | ↓q ∩ a = ∅ }
  Element pseudocomplement(const Element& a) const {
    ElementSet out(base_.size());
    for (std::size_t q = 0; q < base_.size(); ++q)
      if (!base_.down(q).intersects(a)) out.set(q);
    return out;
  }

  Element double_pseudocomplement(const Element& a) const { return pseudocomplement(pseudocomplement(a)); }

  /// The unique frame morphism φ with φ∘i = f, into a finite frame given as a
  /// FinLattice: φ(D) = ⋁{ f(m) | m ∈ D }. `f` maps source indices to
  /// target indices.
  std::size_t induced(const Element& d, const std::vector<std::size_t>& f, const FinLattice& target) const {
    std::size_t acc = target.bottom();
    for (auto b = d.find_first(); b != ElementSet::npos; b = d.find_next(b))
      acc = target.join(acc, f.at(to_source_[b]));
    return acc;
  }

  /// Same, into a frame of subsets with union as join (e.g. Up(X)).
  ElementSet induced_sets(const Element& d, const std::vector<ElementSet>& f, std::size_t carrier) const {
    ElementSet acc(carrier);
    for (auto b = d.find_first(); b != ElementSet::npos; b = d.find_next(b)) acc |= f.at(to_source_[b]);
    return acc;
  }

 private:
  struct Unchecked {};
  FreeFrame(FinPoset source, Unchecked) : source_(std::move(source)) { init(); }

  void init() {
    auto bottom = source_.bottom();
    if (!bottom) throw ValidationError("free frame: semilattice has no bottom");
    if (source_.size() == 1) throw ValidationError("free frame: semilattice has top = bottom");
    source_bottom_ = *bottom;
    ElementSet keep = source_.full_set();
    keep.reset(source_bottom_);
    auto [base, old] = source_.restrict_to(keep);
    base_ = std::move(base);
    to_source_ = std::move(old);
    to_base_.assign(source_.size(), std::nullopt);
    for (std::size_t b = 0; b < to_source_.size(); ++b) to_base_[to_source_[b]] = b;
  }

  FinPoset source_;
  FinPoset base_;
  std::size_t source_top_ = 0;
  std::size_t source_bottom_ = 0;
  std::vector<std::size_t> to_source_;
  std::vector<std::optional<std::size_t>> to_base_;
};

/// 𝔅(L) = { a** }, obtained by closing the images i(m)** under ∧, (∪)** and *
/// until nothing new appears.
inline SetBooleanAlgebra booleanize(const FreeFrame& frame) {
  std::vector<ElementSet> found;
  auto add = [&](ElementSet s) {
    for (const auto& f : found)
      if (f == s) return false;
    found.push_back(std::move(s));
    return true;
  };
  add(frame.bottom());
  add(frame.top());
  for (std::size_t m = 0; m < frame.source().size(); ++m)
    add(frame.double_pseudocomplement(frame.generator(m)));
  bool grew = true;
  while (grew) {
    grew = false;
    const std::size_t n = found.size();
    for (std::size_t i = 0; i < n; ++i) {
      grew |= add(frame.pseudocomplement(found[i]));
      for (std::size_t j = i + 1; j < n; ++j) {
        grew |= add(found[i] & found[j]);
        grew |= add(frame.double_pseudocomplement(found[i] | found[j]));
      }
    }
  }
  return SetBooleanAlgebra(
      std::move(found), [frame](const ElementSet& s) { return frame.double_pseudocomplement(s); },
      [frame](const ElementSet& s) { return frame.pseudocomplement(s); }, frame.base().size());
}

}  // namespace canext::order
