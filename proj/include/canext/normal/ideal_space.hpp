#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canext/bal/alpha.hpp"
#include "canext/bal/context.hpp"
#include "canext/bal/verify.hpp"
#include "canext/normal/normal_fn.hpp"
#include "canext/order/alexandroff.hpp"

namespace canext::normal {

using lalg::LIdeal;
using lalg::LVec;

/// X = proper archimedean ℓ-ideals of A = ℚⁿ ordered by inclusion, with the
/// maps φ : D → N(X), ψ : N(X) → B(Y_A) and γ : A → N(X).
class IdealSpace {
 public:
  explicit IdealSpace(const bal::CanExtContext& ctx) : ctx_(&ctx), ideals_(ctx.proper_ideals()) {
    std::vector<std::string> labels;
    for (const auto& i : ideals_) labels.push_back(i.label());
    poset_ = std::make_shared<const FinPoset>(FinPoset::from_predicate(
        std::move(labels), [&](std::size_t a, std::size_t b) { return ideals_[a].subset_of(ideals_[b]); }));

    // Y_A = maxima of X, in Yosida point order.
    for (const auto& m : ctx.yosida().points()) maxima_.push_back(index_of(m));
    for (std::size_t k = 0; k < maxima_.size(); ++k)
      if (!poset_->maximal().test(maxima_[k])) throw ValidationError("Yosida point is not maximal in X");
    if (poset_->maximal().count() != maxima_.size()) throw ValidationError("X has maxima outside Y_A");

    // RO(X) ≅ ℘(max X) on a finite Alexandroff space; σ extends τ(I) = U_I.
    ba::FinBoolAlg points(maxima_labels());
    std::vector<ba::Mask> lambda;
    for (std::size_t i = 0; i < ctx.arch().size(); ++i) lambda.push_back(on_maxima(u_set(ctx.arch().ideal(i))));
    const auto sigma = ctx.free_ext().extend(points, lambda);
    for (std::size_t k = 0; k < ctx.d_dim(); ++k) atom_opens_.push_back(regularize_maxima(sigma(ctx.specker().base().atom(k))));
  }

  const bal::CanExtContext& ctx() const { return *ctx_; }
  const FinPoset& poset() const { return *poset_; }
  const std::shared_ptr<const FinPoset>& poset_ptr() const { return poset_; }
  const std::vector<LIdeal>& ideals() const { return ideals_; }
  std::size_t size() const { return ideals_.size(); }
  const std::vector<std::size_t>& maxima() const { return maxima_; }

  std::size_t index_of(const LIdeal& i) const {
    if (i.dim() != ctx_->dim() || i.is_whole()) throw ValidationError(i.label() + " is not a point of X");
    for (std::size_t k = 0; k < ideals_.size(); ++k)
      if (ideals_[k] == i) return k;
    throw ValidationError(i.label() + " is not a point of X");
  }

  /// ↑I = { J ∈ X | I ⊆ J }; empty for I = A.
  ElementSet up_set(const LIdeal& i) const {
    ElementSet out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = i.subset_of(ideals_[k]);
    return out;
  }

  /// U_I = { J ∈ X | J ∨ I = A }.
  ElementSet u_set(const LIdeal& i) const {
    ElementSet out(size());
    for (std::size_t k = 0; k < size(); ++k) out[k] = ctx_->arch().join(ideals_[k], i).is_whole();
    return out;
  }

  NormalFn chi(const ElementSet& u) const { return NormalFn(PosetFn::indicator(poset_, u)); }

  /// φ(Σ r_k e_k) over the atoms e_k of B: (Σ r_k χ_{σ(e_k)})^#.
  NormalFn phi(const LVec& f) const {
    if (f.dim() != ctx_->d_dim()) throw ValidationError("element of D has the wrong dimension");
    std::vector<Rational> v(size(), Rational(0));
    for (std::size_t k = 0; k < f.dim(); ++k)
      for (std::size_t x = 0; x < size(); ++x)
        if (atom_opens_[k].test(x)) v[x] += f[k];
    return NormalFn::normalized(PosetFn(poset_, std::move(v)));
  }

  /// φ⁻¹(g) = −s + ⋁ (g(I) + s)·x_{¬I} with s making g + s ≥ 0.
  LVec phi_inverse(const NormalFn& g) const {
    require_here(g);
    Rational s = 0;
    for (const auto& v : g.values()) s = std::max(s, Rational(-v));
    LVec acc = ctx_->d_zero();
    for (std::size_t k = 0; k < size(); ++k) acc = lalg::join(acc, (g[k] + s) * ctx_->x_not(ideals_[k]));
    return acc - s;
  }

  /// ψ(f) = f restricted to Y_A.
  LVec psi(const PosetFn& f) const {
    require_here(f);
    if (!is_normal(f)) throw ValidationError("psi is defined on normal functions only");
    std::vector<Rational> out;
    for (auto m : maxima_) out.push_back(f[m]);
    return LVec(std::move(out));
  }
  LVec psi(const NormalFn& f) const { return psi(f.fn()); }

  /// h^u(I) = min{ h(M) | M ∈ Y_A, I ⊆ M }.
  NormalFn psi_inverse(const LVec& h) const {
    if (h.dim() != maxima_.size()) throw ValidationError("function on Y_A has the wrong dimension");
    std::vector<Rational> out(size());
    for (std::size_t x = 0; x < size(); ++x) {
      std::optional<Rational> m;
      for (std::size_t k = 0; k < maxima_.size(); ++k)
        if (poset_->leq(x, maxima_[k]) && (!m || h[k] < *m)) m = h[k];
      out[x] = *m;
    }
    return NormalFn(PosetFn(poset_, std::move(out)));
  }

  /// γ(a)(I_Z) = min{ a_i | i ∈ Z }.
  NormalFn gamma(const LVec& a) const {
    ctx_->require_element(a);
    std::vector<Rational> out;
    for (const auto& i : ideals_) out.push_back(min_on_zero_set(a, i));
    return NormalFn(PosetFn(poset_, std::move(out)));
  }

  /// γ(a)(I) = sup{ r | (a − r)⁻ ∈ I }, by bisection on membership.
  Rational gamma_oracle(const LVec& a, const LIdeal& i) const {
    const Rational s = bal::default_shift(a);
    return bal::sup_by_bisection(a + s, i) - s;
  }

  template <class F>
  void require_here(const F& f) const {
    if (!(f.poset_ptr() == poset_ || f.poset() == *poset_)) throw ValidationError("function is not on this ideal space");
  }

 private:
  static Rational min_on_zero_set(const LVec& a, const LIdeal& i) {
    std::optional<Rational> m;
    for (std::size_t k = 0; k < a.dim(); ++k)
      if ((i.zero_set() >> k & 1) && (!m || a[k] < *m)) m = a[k];
    return *m;
  }

  std::vector<std::string> maxima_labels() const {
    std::vector<std::string> out;
    for (auto m : maxima_) out.push_back(poset_->label(m));
    return out;
  }

  ba::Mask on_maxima(const ElementSet& u) const {
    ba::Mask m = 0;
    for (std::size_t k = 0; k < maxima_.size(); ++k)
      if (u.test(maxima_[k])) m |= ba::Mask{1} << k;
    return m;
  }

  /// The regular open int(cl(M)) = { x | every maximum above x lies in M }.
  ElementSet regularize_maxima(ba::Mask m) const {
    ElementSet out(size());
    for (std::size_t x = 0; x < size(); ++x) {
      bool all = true;
      for (std::size_t k = 0; k < maxima_.size() && all; ++k)
        if (poset_->leq(x, maxima_[k]) && !(m >> k & 1)) all = false;
      out[x] = all;
    }
    return out;
  }

  const bal::CanExtContext* ctx_;
  std::vector<LIdeal> ideals_;
  std::shared_ptr<const FinPoset> poset_;
  std::vector<std::size_t> maxima_;
  std::vector<ElementSet> atom_opens_;
};

namespace law {

inline Failure phi_generator(const IdealSpace& x, const LIdeal& i) {
  if (x.phi(x.ctx().x(i)) != x.chi(x.u_set(i))) return "phi(x_I) != chi(U_I) at " + i.label();
  return std::nullopt;
}

/// ↑I and U_I are regular open and complementary; Z_ℓ(I)ᶜ = U_I ∩ Y_A.
inline Failure u_sets(const IdealSpace& x, const LIdeal& i) {
  const auto& p = x.poset();
  const ElementSet up = x.up_set(i), u = x.u_set(i);
  if (!order::is_regular_open(p, up)) return "up-set of " + i.label() + " is not regular open";
  if (!order::is_regular_open(p, u)) return "U of " + i.label() + " is not regular open";
  if (order::alexandroff_interior(p, ~up) != u || order::alexandroff_interior(p, ~u) != up)
    return "up-set and U are not complementary in RO(X) at " + i.label();
  const auto locus = x.ctx().yosida().zero_locus(i);
  for (std::size_t k = 0; k < x.maxima().size(); ++k)
    if (u.test(x.maxima()[k]) == static_cast<bool>(locus >> k & 1)) return "zero locus complement differs from U on Y_A";
  return std::nullopt;
}

inline Failure u_meet(const IdealSpace& x, const LIdeal& i, const LIdeal& j) {
  if (x.u_set(x.ctx().arch().meet(i, j)) != (x.u_set(i) & x.u_set(j))) return "U of I meet J != U_I meet U_J";
  return std::nullopt;
}

inline Failure phi_hom(const IdealSpace& x, const LVec& f, const LVec& g, const Rational& r) {
  const NormalFn pf = x.phi(f), pg = x.phi(g);
  if (x.phi(f + g) != n_add(pf, pg)) return "phi does not preserve +";
  if (x.phi(f * g) != n_mul(pf, pg)) return "phi does not preserve *";
  if (x.phi(lalg::join(f, g)) != n_join(pf, pg)) return "phi does not preserve join";
  if (x.phi(lalg::meet(f, g)) != n_meet(pf, pg)) return "phi does not preserve meet";
  if (x.phi(r * f) != n_scale(r, pf)) return "phi does not preserve scalars";
  if (x.phi(x.ctx().d_one()) != NormalFn::constant(x.poset_ptr(), 1)) return "phi(1) != 1";
  return std::nullopt;
}

inline Failure phi_bijective(const IdealSpace& x, const LVec& f, const LVec& g, const NormalFn& h) {
  if (f != g && x.phi(f) == x.phi(g)) return "phi identifies distinct elements";
  if (x.phi_inverse(x.phi(f)) != f) return "phi_inverse(phi(f)) != f";
  if (x.phi(x.phi_inverse(h)) != h) return "phi(phi_inverse(h)) != h";
  return std::nullopt;
}

inline Failure psi_iso(const IdealSpace& x, const NormalFn& f, const NormalFn& g, const LVec& h) {
  if (x.psi(x.psi_inverse(h)) != h) return "psi(h^u) != h";
  if (x.psi_inverse(x.psi(f)) != f) return "(psi f)^u != f";
  if (x.psi(n_add(f, g)) != x.psi(f) + x.psi(g)) return "psi does not preserve +";
  if (x.psi(n_mul(f, g)) != x.psi(f) * x.psi(g)) return "psi does not preserve *";
  if (x.psi(n_join(f, g)) != lalg::join(x.psi(f), x.psi(g))) return "psi does not preserve join";
  if (x.psi(n_meet(f, g)) != lalg::meet(x.psi(f), x.psi(g))) return "psi does not preserve meet";
  return std::nullopt;
}

inline Failure gamma_closed_form(const IdealSpace& x, const LVec& a) {
  const NormalFn g = x.gamma(a);
  for (std::size_t k = 0; k < x.size(); ++k)
    if (g[k] != x.gamma_oracle(a, x.ideals()[k])) return "gamma closed form disagrees with the oracle at " + x.ideals()[k].label();
  if (x.phi(bal::alpha(x.ctx(), a)) != g) return "gamma != phi o alpha";
  return std::nullopt;
}

inline Failure diagram(const IdealSpace& x, const LVec& a) {
  const LVec z = x.ctx().zeta(a);
  if (x.psi(x.phi(bal::alpha(x.ctx(), a))) != z) return "psi o phi o alpha != zeta";
  if (x.psi(x.gamma(a)) != z) return "psi o gamma != zeta";
  return std::nullopt;
}

}  // namespace law

}  // namespace canext::normal
