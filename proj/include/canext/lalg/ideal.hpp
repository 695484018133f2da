#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "canext/error.hpp"
#include "canext/lalg/vec.hpp"
#include "canext/mutation.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/poset.hpp"

namespace canext::lalg {

/// The ℓ-ideal I_Z = { a ∈ ℚⁿ | a_i = 0 for i ∈ Z } of A = ℚⁿ.
class LIdeal {
 public:
  LIdeal(std::size_t dim, CoordMask zero_set) : dim_(dim), zero_(zero_set) {
    if (dim == 0 || dim > kMaxDim) throw ValidationError("ideal dimension out of range");
    if (zero_set & ~full_mask(dim)) throw ValidationError("zero set mentions a coordinate beyond the dimension");
  }

  static LIdeal whole(std::size_t dim) { return LIdeal(dim, 0); }
  static LIdeal zero(std::size_t dim) { return LIdeal(dim, full_mask(dim)); }

  std::size_t dim() const { return dim_; }
  CoordMask zero_set() const { return zero_; }
  bool is_whole() const { return zero_ == 0; }
  bool is_zero() const { return zero_ == full_mask(dim_); }

  bool contains(const LVec& a) const {
    require_dim(a);
    return (a.support() & zero_) == 0;
  }

  /// I_Z ⊆ I_W iff W ⊆ Z.
  bool subset_of(const LIdeal& other) const { return (other.zero_ & ~zero_) == 0; }

  void require_dim(const LVec& a) const {
    if (a.dim() != dim_) throw ValidationError("element and ideal live in different dimensions");
  }

  std::string label() const { return "I" + coord_set_label(zero_, dim_); }

  friend bool operator==(const LIdeal& a, const LIdeal& b) { return a.dim_ == b.dim_ && a.zero_ == b.zero_; }

 private:
  std::size_t dim_;
  CoordMask zero_;
};

/// ⟨S⟩, the ℓ-ideal generated by S: the coordinates on which every generator vanishes.
inline LIdeal lideal_generated(std::size_t dim, const std::vector<LVec>& s) {
  CoordMask support = 0;
  for (const auto& a : s) {
    if (a.dim() != dim) throw ValidationError("generator has the wrong dimension");
    support |= a.support();
  }
  return LIdeal(dim, full_mask(dim) & ~support);
}

/// Domination test for x ∈ ⟨S⟩: |x| ≤ n·|a| for some n ≥ 1. For a single
/// generator this is read literally; for several generators a is taken to be
/// the sum of the |generators|, since an ℓ-ideal is closed under finite sums.
/// The witness n is returned when one exists.
inline std::optional<Integer> domination_witness(const LVec& x, const std::vector<LVec>& s) {
  LVec dominant = LVec::zero(x.dim());
  for (const auto& a : s) dominant = dominant + abs(a);
  const LVec ax = abs(x);
  Rational ratio = 0;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (ax[i] == 0) continue;
    if (dominant[i] == 0) return std::nullopt;
    ratio = std::max(ratio, Rational(ax[i] / dominant[i]));
  }
  Integer n = std::max(Integer(1), ceil_of(ratio));
  if (!leq(ax, Rational(n) * dominant)) return std::nullopt;
  return n;
}

inline bool dominated_by(const LVec& x, const std::vector<LVec>& s) { return domination_witness(x, s).has_value(); }

// ---------------------------------------------------------------------------
// Archimedean hulls

/// Smallest n from which the support of (n|x| − b)⁺ stops changing, given b
/// is a nonnegative vector. Past it, every further n gives the same support.
inline Integer stabilization_bound(const LVec& x, const LVec& b) {
  const LVec ax = abs(x);
  Rational worst = 0;
  for (std::size_t i = 0; i < x.dim(); ++i)
    if (ax[i] != 0) worst = std::max(worst, Rational(b[i] / ax[i]));
  return floor_of(worst) + 1;
}

/// x ∈ ar⟨I⟩ iff (n|x| − 1)⁺ ∈ I for every n ≥ 1.
inline bool hull_contains(const LIdeal& ideal, const LVec& x) {
  ideal.require_dim(x);
#if CANEXT_MUTANT == 3
  return true;
#else
  const LVec one = LVec::one(x.dim());
  const Integer last = stabilization_bound(x, one);
  for (Integer n = 1; n <= last; ++n)
    if (!ideal.contains(pos(Rational(n) * abs(x) - one))) return false;
  return true;
#endif
}

/// Reads a coordinate ideal off a membership predicate by probing the unit
/// vectors. Callers that rely on the result being a coordinate ideal check it.
template <class Member>
LIdeal ideal_from_membership(std::size_t dim, Member&& member) {
  CoordMask zero = 0;
  for (std::size_t i = 0; i < dim; ++i)
    if (!member(LVec::indicator(dim, CoordMask{1} << i))) zero |= CoordMask{1} << i;
  return LIdeal(dim, zero);
}

inline LIdeal arch_hull(const LIdeal& ideal) {
  return ideal_from_membership(ideal.dim(), [&](const LVec& x) { return hull_contains(ideal, x); });
}

inline LIdeal arch_hull(std::size_t dim, const std::vector<LVec>& s) { return arch_hull(lideal_generated(dim, s)); }

/// One step of the transfinite hull construction:
/// a ∈ k(I) iff (n|a| − b)⁺ ∈ I for some b ≥ 0 and all n ≥ 1.
/// The b's tried are 0, 1, |a| and ‖a‖·1; `tried` receives the b that worked.
inline bool k_contains(const LIdeal& ideal, const LVec& a, LVec* tried = nullptr) {
  ideal.require_dim(a);
  const std::size_t n = a.dim();
  const std::vector<LVec> candidates{LVec::zero(n), LVec::one(n), abs(a), LVec::constant(n, norm(a))};
  for (const auto& b : candidates) {
    const Integer last = stabilization_bound(a, b);
    bool all = true;
    for (Integer k = 1; k <= last && all; ++k) all = ideal.contains(pos(Rational(k) * abs(a) - b));
    if (all) {
      if (tried) *tried = b;
      return true;
    }
  }
  return false;
}

inline LIdeal k_step(const LIdeal& ideal) {
  return ideal_from_membership(ideal.dim(), [&](const LVec& x) { return k_contains(ideal, x); });
}

/// A/J is archimedean iff n·a ≤ 1 for all n forces a ≤ 0. In A/I_Z ≅ ℚ^|Z|,
/// n·a ≤ 1 for all n fails as soon as some coordinate in Z is positive,
/// so the test is decidable per element.
inline bool quotient_archimedean_at(const LIdeal& j, const LVec& a) {
  bool bounded = true;  // n·a ≤ 1 + J for every n
  bool below = true;    // a ≤ 0 + J
  for (std::size_t i = 0; i < a.dim(); ++i) {
    if (!(j.zero_set() >> i & 1)) continue;
    if (a[i] > 0) {
      bounded = false;
      below = false;
    }
  }
  return !bounded || below;
}

/// Brute-force least archimedean ℓ-ideal containing I: the intersection of
/// every coordinate ideal J ⊇ I passing the archimedean test on the probes.
inline LIdeal hull_by_intersection(const LIdeal& ideal, const std::vector<LVec>& probes) {
  const std::size_t n = ideal.dim();
  CoordMask zero = 0;  // intersection of ideals = union of zero sets
  for (CoordMask w = 0; w <= full_mask(n); ++w) {
    LIdeal j(n, w);
    if (!ideal.subset_of(j)) continue;
    bool archimedean = true;
    for (const auto& p : probes) archimedean &= quotient_archimedean_at(j, p);
    if (archimedean) zero |= w;
  }
  return LIdeal(n, zero);
}

// ---------------------------------------------------------------------------
// Quotients

/// A/I_Z ≅ ℚ^|Z| by keeping the coordinates in Z. Z = ∅ gives the zero
/// algebra, which is flagged and has no projection.
class Quotient {
 public:
  explicit Quotient(LIdeal ideal) : ideal_(ideal) {
    for (std::size_t i = 0; i < ideal.dim(); ++i)
      if (ideal.zero_set() >> i & 1) kept_.push_back(i);
  }

  const LIdeal& ideal() const { return ideal_; }
  bool is_zero_algebra() const { return kept_.empty(); }
  std::size_t dim() const { return kept_.size(); }

  LVec project(const LVec& a) const {
    ideal_.require_dim(a);
    if (is_zero_algebra()) throw ValidationError("quotient by the whole algebra is the zero algebra");
    std::vector<Rational> out;
    for (auto i : kept_) out.push_back(a[i]);
    return LVec(std::move(out));
  }

  /// a + I ≥ 0 + I in the quotient.
  bool nonnegative_class(const LVec& a) const { return is_zero_algebra() || nonnegative(project(a)); }

 private:
  LIdeal ideal_;
  std::vector<std::size_t> kept_;
};

// ---------------------------------------------------------------------------
// Arch(A)

/// Arch(ℚⁿ) as a finite lattice. Element index = zero-set mask, so index 0
/// is A and index 2ⁿ − 1 is {0}.
class ArchFrame {
 public:
  explicit ArchFrame(std::size_t dim) : dim_(dim), lattice_(build(dim)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return lattice_.size(); }
  const order::FinLattice& lattice() const { return lattice_; }

  LIdeal ideal(std::size_t index) const { return LIdeal(dim_, static_cast<CoordMask>(index)); }
  std::size_t index_of(const LIdeal& i) const {
    if (i.dim() != dim_) throw ValidationError("ideal belongs to another algebra");
    return static_cast<std::size_t>(i.zero_set());
  }

  std::size_t whole() const { return 0; }
  std::size_t zero() const { return static_cast<std::size_t>(full_mask(dim_)); }

  LIdeal meet(const LIdeal& a, const LIdeal& b) const { return ideal(lattice_.meet(index_of(a), index_of(b))); }
  LIdeal join(const LIdeal& a, const LIdeal& b) const { return ideal(lattice_.join(index_of(a), index_of(b))); }

  /// Proper ideals, i.e. X = Arch(A) ∖ {A}, in index order.
  std::vector<std::size_t> proper() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size(); ++i)
      if (i != whole()) out.push_back(i);
    return out;
  }

 private:
  static order::FinLattice build(std::size_t dim) {
    if (dim == 0 || dim > 8) throw ValidationError("Arch(A) is enumerated only for dimensions 1..8");
    const std::size_t count = std::size_t{1} << dim;
    std::vector<std::string> labels;
    for (std::size_t z = 0; z < count; ++z) labels.push_back(LIdeal(dim, z).label());
    return order::FinLattice(order::FinPoset::from_predicate(
        std::move(labels), [](std::size_t z, std::size_t w) { return (w & ~z) == 0; }));
  }

  std::size_t dim_;
  order::FinLattice lattice_;
};

/// The join in Arch(A) computed as ar⟨I + J⟩, with I + J generated by the
/// unit vectors each ideal contains.
inline LIdeal hull_of_sum(const LIdeal& a, const LIdeal& b) {
  std::vector<LVec> gens;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    LVec e = LVec::indicator(a.dim(), CoordMask{1} << i);
    if (a.contains(e) || b.contains(e)) gens.push_back(e);
  }
  return arch_hull(lideal_generated(a.dim(), gens));
}

// ---------------------------------------------------------------------------
// Yosida space

/// Y_A = maximal ℓ-ideals, taken as the coatoms of Arch(A); ζ_A evaluates at each.
class Yosida {
 public:
  explicit Yosida(const ArchFrame& arch) : dim_(arch.dim()) {
    const auto& l = arch.lattice();
    for (auto [lo, hi] : l.order().covers())
      if (hi == arch.whole()) points_.push_back(arch.ideal(lo));
    std::sort(points_.begin(), points_.end(), [](const LIdeal& a, const LIdeal& b) {
      return std::countr_zero(a.zero_set()) < std::countr_zero(b.zero_set());
    });
  }

  std::size_t size() const { return points_.size(); }
  const std::vector<LIdeal>& points() const { return points_; }

  /// Z_ℓ(I) = { M ∈ Y_A | I ⊆ M }, as a bit mask over points().
  CoordMask zero_locus(const LIdeal& ideal) const {
    CoordMask out = 0;
    for (std::size_t k = 0; k < points_.size(); ++k)
      if (ideal.subset_of(points_[k])) out |= CoordMask{1} << k;
    return out;
  }

  /// ζ_A(a)(M) = the r with a + M = r + M.
  LVec zeta(const LVec& a) const {
    std::vector<Rational> out;
    for (const auto& m : points_) {
      const int i = std::countr_zero(m.zero_set());
      const Rational r = a[static_cast<std::size_t>(i)];
      if (!m.contains(a - r)) throw ValidationError("residue is not a scalar at " + m.label());
      out.push_back(r);
    }
    return LVec(std::move(out));
  }

 private:
  std::size_t dim_;
  std::vector<LIdeal> points_;
};

}  // namespace canext::lalg
