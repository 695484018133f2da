#pragma once

#include <optional>
#include <vector>

#include "canext/bal/context.hpp"
#include "canext/mutation.hpp"

namespace canext::bal {

/// Default shift: the least nonnegative integer s with a + s ≥ 0.
inline Rational default_shift(const LVec& a) {
  Rational m = lalg::norm(lalg::neg(a));
  return Rational(ceil_of(m));
}

/// s_I = sup{ r | (b − r)⁻ ∈ I } for b ≥ 0 and I ≠ A: the least coordinate of b on the zero set.
inline Rational sup_in_ideal(const LVec& b, const LIdeal& i) {
  if (i.is_whole()) throw ValidationError("the supremum is unbounded for I = A");
  std::optional<Rational> best;
  for (std::size_t k = 0; k < b.dim(); ++k)
    if (i.zero_set() >> k & 1)
      if (!best || b[k] < *best) best = b[k];
  return *best;
}

/// One term s_I·x_{¬I} of the defining join, kept for reports.
struct AlphaTerm {
  LIdeal ideal;
  Rational r;
};

/// The terms of the join defining α(a) with shift s.
inline std::vector<AlphaTerm> alpha_terms(const CanExtContext& ctx, const LVec& a, const Rational& s) {
  ctx.require_element(a);
  const LVec b = a + s;
  if (!lalg::nonnegative(b)) throw ValidationError("shift s must make a + s nonnegative");
  std::vector<AlphaTerm> out;
  for (const auto& i : ctx.proper_ideals()) out.push_back({i, sup_in_ideal(b, i)});
  return out;
}

/// α(a) = −s + ⋁{ r·x_{¬I} | I ∈ Arch(A), (a + s − r)⁻ ∈ I }. For each I the
/// admissible r are exactly those up to s_I, and I = A contributes 0.
inline LVec alpha(const CanExtContext& ctx, const LVec& a, const Rational& s) {
  LVec acc = ctx.d_zero();
  for (const auto& t : alpha_terms(ctx, a, s)) acc = lalg::join(acc, t.r * ctx.x_not(t.ideal));
#if CANEXT_MUTANT == 1
  return acc;
#else
  return acc - s;
#endif
}

inline LVec alpha(const CanExtContext& ctx, const LVec& a) { return alpha(ctx, a, default_shift(a)); }

}  // namespace canext::bal
