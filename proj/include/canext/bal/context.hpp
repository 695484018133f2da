#pragma once

#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/error.hpp"
#include "canext/lalg/ideal.hpp"
#include "canext/lalg/specker.hpp"
#include "canext/lalg/vec.hpp"
#include "canext/order/free_boolean_extension.hpp"

namespace canext::bal {

using lalg::CoordMask;
using lalg::LIdeal;
using lalg::LVec;

/// Everything built from A = ℚⁿ: Arch(A), its free boolean extension B,
/// ℝ[B] (which is its own Dedekind completion D here), the Yosida space and
/// the isomorphism θ : D → B(Y_A) obtained from the universal properties.
/// Elements of D are vectors indexed by the join-irreducibles of Arch(A).
class CanExtContext {
 public:
  explicit CanExtContext(std::size_t dim)
      : dim_(dim),
        arch_(dim),
        ext_(arch_.lattice()),
        rb_(ext_.algebra()),
        yosida_(arch_),
        points_(ba::FinBoolAlg(point_names(yosida_))) {
    // λ(I) = Z_ℓ(I)ᶜ, a bounded lattice map into ℘(Y_A).
    std::vector<ba::Mask> lambda;
    for (std::size_t i = 0; i < arch_.size(); ++i)
      lambda.push_back(points_.complement(yosida_.zero_locus(arch_.ideal(i))));
    auto tau = ext_.extend(points_, lambda);
    std::vector<LVec> tau_vecs;
    for (auto b : rb_.base().elements()) tau_vecs.push_back(LVec::indicator(points_.atom_count(), tau(b)));
    theta_.emplace(rb_, std::move(tau_vecs));

    // θ sends each atom of B to a single point; record the permutation.
    for (std::size_t k = 0; k < rb_.dim(); ++k) {
      const LVec image = theta_->tau(rb_.base().atom(k));
      const CoordMask m = image.support();
      if (ba::popcount(m) != 1) throw ValidationError("theta does not send atoms to points");
      point_of_atom_.push_back(static_cast<std::size_t>(std::countr_zero(m)));
    }
  }

  std::size_t dim() const { return dim_; }
  const lalg::ArchFrame& arch() const { return arch_; }
  const order::FreeBoolExt& free_ext() const { return ext_; }
  const lalg::SpeckerAlg& specker() const { return rb_; }
  const lalg::Yosida& yosida() const { return yosida_; }

  /// Dimension of D, the number of atoms of B.
  std::size_t d_dim() const { return rb_.dim(); }

  ba::Mask in_b(const LIdeal& i) const { return ext_.embed(arch_.index_of(i)); }
  LVec x(const LIdeal& i) const { return rb_.x(in_b(i)); }
  LVec x_not(const LIdeal& i) const { return rb_.x(rb_.base().complement(in_b(i))); }

  LVec d_one() const { return rb_.one(); }
  LVec d_zero() const { return rb_.zero(); }
  LVec d_const(const Rational& r) const { return LVec::constant(d_dim(), r); }

  /// θ : D → B(Y_A), coordinates ordered as yosida().points().
  LVec theta(const LVec& f) const { return (*theta_)(f); }

  LVec theta_inverse(const LVec& g) const {
    if (g.dim() != d_dim()) throw ValidationError("element of B(Y_A) has the wrong dimension");
    std::vector<Rational> out(d_dim());
    for (std::size_t k = 0; k < d_dim(); ++k) out[k] = g[point_of_atom_[k]];
    return LVec(std::move(out));
  }

  LVec zeta(const LVec& a) const { return yosida_.zeta(a); }

  /// Proper ideals X = Arch(A) ∖ {A}.
  std::vector<LIdeal> proper_ideals() const {
    std::vector<LIdeal> out;
    for (auto i : arch_.proper()) out.push_back(arch_.ideal(i));
    return out;
  }

  std::vector<LIdeal> all_ideals() const {
    std::vector<LIdeal> out;
    for (std::size_t i = 0; i < arch_.size(); ++i) out.push_back(arch_.ideal(i));
    return out;
  }

  void require_element(const LVec& a) const {
    if (a.dim() != dim_) throw ValidationError("element of A has the wrong dimension");
  }

 private:
  static std::vector<std::string> point_names(const lalg::Yosida& y) {
    std::vector<std::string> out;
    for (const auto& m : y.points()) out.push_back(m.label());
    return out;
  }

  std::size_t dim_;
  lalg::ArchFrame arch_;
  order::FreeBoolExt ext_;
  lalg::SpeckerAlg rb_;
  lalg::Yosida yosida_;
  ba::FinBoolAlg points_;
  std::optional<lalg::SpeckerMorphism> theta_;
  std::vector<std::size_t> point_of_atom_;
};

}  // namespace canext::bal
