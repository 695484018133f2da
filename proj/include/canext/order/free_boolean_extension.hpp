#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/error.hpp"
#include "canext/order/lattice.hpp"

namespace canext::order {

/// Free boolean extension of a finite distributive lattice L, realized as the
/// powerset of the join-irreducibles J(L) with i(a) = { p ∈ J(L) | p ≤ a }.
class FreeBoolExt {
 public:
  using Mask = ba::Mask;

  explicit FreeBoolExt(FinLattice lattice)
      : lattice_(std::move(lattice)), algebra_(std::vector<std::string>{}) {
    lattice_.require_distributive();
    irreducibles_ = lattice_.join_irreducibles();
    std::vector<std::string> names;
    for (auto p : irreducibles_) names.push_back(lattice_.label(p));
    algebra_ = ba::FinBoolAlg(std::move(names));
    embedding_.resize(lattice_.size());
    for (std::size_t a = 0; a < lattice_.size(); ++a) {
      Mask m = 0;
      for (std::size_t k = 0; k < irreducibles_.size(); ++k)
        if (lattice_.leq(irreducibles_[k], a)) m |= Mask{1} << k;
      embedding_[a] = m;
    }
  }

  const FinLattice& lattice() const { return lattice_; }
  const ba::FinBoolAlg& algebra() const { return algebra_; }
  const std::vector<std::size_t>& join_irreducibles() const { return irreducibles_; }

  /// i : L → ℘(J(L))
  Mask embed(std::size_t a) const { return embedding_.at(a); }

  /// The unique boolean morphism τ with τ∘i = λ, for a bounded lattice
  /// morphism λ : L → C into a finite boolean algebra C. `Target` provides
  /// bottom(), meet, join and complement over its element type.
  template <class Target, class Element = decltype(std::declval<const Target&>().bottom())>
  class Extension {
   public:
    Extension(const FreeBoolExt& ext, const Target& target, std::vector<Element> lambda)
        : target_(target), lambda_(std::move(lambda)) {
      // τ({p}) = λ(p) ∧ ¬λ(p⁻), with p⁻ the join of everything strictly below p.
      for (auto p : ext.irreducibles_) {
        const std::size_t below = ext.lattice_.lower_cover_join(p);
        singletons_.push_back(target_.meet(lambda_.at(p), target_.complement(lambda_.at(below))));
      }
    }

    Element operator()(Mask s) const {
      Element acc = target_.bottom();
      for (std::size_t k = 0; k < singletons_.size(); ++k)
        if (s & (Mask{1} << k)) acc = target_.join(acc, singletons_[k]);
      return acc;
    }

    const std::vector<Element>& atom_images() const { return singletons_; }

   private:
    const Target& target_;
    std::vector<Element> lambda_;
    std::vector<Element> singletons_;
  };

  template <class Target, class Element>
  Extension<Target, Element> extend(const Target& target, std::vector<Element> lambda) const {
    if (lambda.size() != lattice_.size()) throw ValidationError("lattice morphism has wrong domain size");
    return Extension<Target, Element>(*this, target, std::move(lambda));
  }

 private:
  FinLattice lattice_;
  ba::FinBoolAlg algebra_;
  std::vector<std::size_t> irreducibles_;
  std::vector<Mask> embedding_;
};

}  // namespace canext::order
