#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/error.hpp"
#include "canext/lalg/vec.hpp"

namespace canext::lalg {

using ba::Mask;

/// 0/1 vector ↔ coordinate mask.
inline bool is_idempotent(const LVec& e) {
  for (const auto& x : e.coords())
    if (x != 0 && x != 1) return false;
  return true;
}

inline Mask idempotent_mask(const LVec& e) {
  if (!is_idempotent(e)) throw ValidationError(to_string(e) + " is not idempotent");
  return e.support();
}

/// Idempotent operations e ∨ f = e + f − ef, e ∧ f = ef, ¬e = 1 − e.
inline LVec idem_join(const LVec& e, const LVec& f) { return e + f - e * f; }
inline LVec idem_meet(const LVec& e, const LVec& f) { return e * f; }
inline LVec idem_not(const LVec& e) { return LVec::one(e.dim()) - e; }

/// Id(ℚⁿ), atoms named by coordinate "1".."n".
inline ba::FinBoolAlg idempotents(std::size_t dim) {
  if (dim == 0 || dim > kMaxDim) throw ValidationError("dimension out of range");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back(std::to_string(i + 1));
  return ba::FinBoolAlg(std::move(names));
}

/// ℝ[B] for finite B, carried by ℚ^{atoms(B)}: x_e is the indicator of the atoms below e.
class SpeckerAlg {
 public:
  explicit SpeckerAlg(ba::FinBoolAlg base) : base_(std::move(base)) {
    if (base_.atom_count() == 0) throw ValidationError("Specker algebra of the trivial boolean algebra is zero");
  }

  const ba::FinBoolAlg& base() const { return base_; }
  std::size_t dim() const { return base_.atom_count(); }

  LVec x(Mask e) const {
    if (!base_.contains(e)) throw ValidationError("element not in the base algebra");
    return LVec::indicator(dim(), e);
  }

  LVec one() const { return LVec::one(dim()); }
  LVec zero() const { return LVec::zero(dim()); }

  /// Relation violated by the generators, if any.
  std::optional<std::string> relation_violation() const {
    if (!(x(0) == zero())) return "x_0 = 0";
    if (!(x(base_.one()) == one())) return "x_1 = 1";
    for (auto e : base_.elements()) {
      if (!(x(base_.complement(e)) == idem_not(x(e)))) return "x_{not e} = 1 - x_e at e = " + base_.label(e);
      for (auto f : base_.elements()) {
        if (!(x(base_.meet(e, f)) == x(e) * x(f))) return "x_{e and f} = x_e x_f at " + base_.label(e) + ", " + base_.label(f);
        if (!(x(base_.join(e, f)) == idem_join(x(e), x(f))))
          return "x_{e or f} = x_e + x_f - x_e x_f at " + base_.label(e) + ", " + base_.label(f);
      }
    }
    return std::nullopt;
  }

 private:
  ba::FinBoolAlg base_;
};

inline SpeckerAlg specker_of(ba::FinBoolAlg b) { return SpeckerAlg(std::move(b)); }

/// σ : ℝ[B] → A extending a boolean morphism τ : B → Id(A). τ is given on
/// every element of B, in mask order.
class SpeckerMorphism {
 public:
  SpeckerMorphism(const SpeckerAlg& source, std::vector<LVec> tau) : source_(source), tau_(std::move(tau)) {
    const auto& b = source_.base();
    if (tau_.size() != b.size()) throw ValidationError("tau must give an image for every element of B");
    const std::size_t n = tau_.front().dim();
    for (const auto& t : tau_) {
      if (t.dim() != n) throw ValidationError("tau images have mixed dimensions");
      if (!is_idempotent(t)) throw ValidationError("tau(e) = " + to_string(t) + " is not idempotent");
    }
    if (!(tau_[b.zero()] == LVec::zero(n))) throw ValidationError("tau does not preserve 0");
    if (!(tau_[b.one()] == LVec::one(n))) throw ValidationError("tau does not preserve 1");
    for (auto e : b.elements()) {
      if (!(tau_[b.complement(e)] == idem_not(tau_[e])))
        throw ValidationError("tau does not preserve complement at " + b.label(e));
      for (auto f : b.elements()) {
        if (!(tau_[b.meet(e, f)] == idem_meet(tau_[e], tau_[f])))
          throw ValidationError("tau does not preserve meet at " + b.label(e) + ", " + b.label(f));
        if (!(tau_[b.join(e, f)] == idem_join(tau_[e], tau_[f])))
          throw ValidationError("tau does not preserve join at " + b.label(e) + ", " + b.label(f));
      }
    }
  }

  std::size_t target_dim() const { return tau_.front().dim(); }

  LVec operator()(const LVec& v) const {
    if (v.dim() != source_.dim()) throw ValidationError("element not in the Specker algebra");
    LVec acc = LVec::zero(target_dim());
    for (std::size_t k = 0; k < v.dim(); ++k) acc = acc + v[k] * tau_[source_.base().atom(k)];
    return acc;
  }

  const LVec& tau(Mask e) const { return tau_.at(e); }

 private:
  SpeckerAlg source_;
  std::vector<LVec> tau_;
};

struct OrthoTerm {
  Rational r;
  Mask b;
};

/// a = Σ r_i x_{b_i} with the b_i pairwise disjoint and the r_i distinct and
/// nonzero. Terms appear in order of first occurrence.
inline std::vector<OrthoTerm> ortho_decomp(const LVec& a) {
  std::vector<OrthoTerm> out;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (a[i] == 0) continue;
    auto it = std::find_if(out.begin(), out.end(), [&](const OrthoTerm& t) { return t.r == a[i]; });
    if (it == out.end())
      out.push_back({a[i], Mask{1} << i});
    else
      it->b |= Mask{1} << i;
  }
  return out;
}

inline LVec ortho_sum(std::size_t dim, const std::vector<OrthoTerm>& terms) {
  LVec acc = LVec::zero(dim);
  for (const auto& t : terms) acc = acc + t.r * LVec::indicator(dim, t.b);
  return acc;
}

/// Suprema and infima of finite nonempty sets in ℚⁿ, which is its own Dedekind
/// completion at this scale.
inline LVec sup_of(const std::vector<LVec>& s) {
  if (s.empty()) throw ValidationError("supremum of the empty set is not bounded");
  LVec acc = s.front();
  for (const auto& a : s) acc = join(acc, a);
  return acc;
}

inline LVec inf_of(const std::vector<LVec>& s) {
  if (s.empty()) throw ValidationError("infimum of the empty set is not bounded");
  LVec acc = s.front();
  for (const auto& a : s) acc = meet(acc, a);
  return acc;
}

/// D(A) = A for A = ℚⁿ; the embedding is the identity.
inline LVec dedekind_embed(const LVec& a) { return a; }

}  // namespace canext::lalg
