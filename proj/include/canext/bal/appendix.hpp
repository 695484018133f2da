#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canext/bal/alpha.hpp"
#include "canext/bal/context.hpp"
#include "canext/bal/verify.hpp"
#include "canext/io/json_core.hpp"
#include "canext/lalg/ideal.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext::bal {

/// I + J for coordinate ideals: the zero sets intersect.
inline LIdeal ideal_sum(const LIdeal& i, const LIdeal& j) { return LIdeal(i.dim(), i.zero_set() & j.zero_set()); }

/// Ideal of A generated by a finite set, then hulled.
inline LIdeal hull_of(std::size_t dim, const std::vector<LVec>& s) { return lalg::arch_hull(dim, s); }

namespace law {

inline Failure scaled_meet(const LVec& e, const LVec& f, const Rational& r, const Rational& s) {
  if (meet(r * e, s * f) != std::min(r, s) * lalg::idem_meet(e, f)) return "re meet sf != min(r,s)(e meet f)";
  return std::nullopt;
}

inline Failure join_above_scalar(const LVec& a, const Rational& r, const Rational& s) {
  if (!(r < s)) return std::nullopt;
  if (leq(LVec::constant(a.dim(), s), join(a, r)) && !leq(LVec::constant(a.dim(), s), a)) return "a join r >= s but a not >= s";
  return std::nullopt;
}

/// I + J = A gives 0 ≤ a ∈ I, 0 ≤ b ∈ J with a + b = 1; here a = χ of J's zero set.
inline Failure sum_to_unit(const LIdeal& i, const LIdeal& j) {
  if (!ideal_sum(i, j).is_whole()) return std::nullopt;
  const std::size_t n = i.dim();
  const LVec a = LVec::indicator(n, j.zero_set());
  const LVec b = LVec::one(n) - a;
  if (!i.contains(a) || !j.contains(b)) return "witnesses fall outside the ideals";
  if (!lalg::nonnegative(a) || !lalg::nonnegative(b)) return "witnesses are not nonnegative";
  return std::nullopt;
}

inline Failure join_is_hull_of_sum(const CanExtContext& ctx, const LIdeal& i, const LIdeal& j) {
  const LIdeal lattice_join = ctx.arch().join(i, j);
  const LIdeal hull = lalg::hull_of_sum(i, j);
  if (lattice_join != hull) return "I join J = " + lattice_join.label() + " but ar<I + J> = " + hull.label();
  if (lalg::arch_hull(i).is_whole() && !i.is_whole()) return "ar<I> = A although I != A";
  return std::nullopt;
}

inline Failure x_as_join(const CanExtContext& ctx, const LIdeal& i) {
  LVec acc = ctx.d_zero();
  for (const auto& j : ctx.all_ideals())
    if (ctx.arch().join(j, i).is_whole()) acc = join(acc, ctx.x_not(j));
  if (acc != ctx.x(i)) return "x_I is not the join of x_not(J) over J with J join I = A";
  return std::nullopt;
}

inline LVec join_of_terms(const CanExtContext& ctx, const std::vector<Rational>& r, const Rational& shift) {
  LVec acc = ctx.d_zero();
  const auto ideals = ctx.all_ideals();
  for (std::size_t k = 0; k < ideals.size(); ++k) acc = join(acc, (r.at(k) + shift) * ctx.x_not(ideals[k]));
  return acc;
}

/// f = ⋁ r_I·x_{¬I} with r_I ≥ 0 gives f + t = ⋁ (t + r_I)·x_{¬I}.
inline Failure join_shift(const CanExtContext& ctx, const std::vector<Rational>& r, const Rational& t) {
  if (r.size() != ctx.arch().size()) return "one coefficient per ideal expected";
  for (const auto& x : r)
    if (x < 0) return std::nullopt;
  if (t < 0) return std::nullopt;
  const LVec f = join_of_terms(ctx, r, 0);
  if (f + t != join_of_terms(ctx, r, t)) return "f + t differs from the shifted join";
  return std::nullopt;
}

/// Every 0 ≤ f in D is ⋁ r_I·x_{¬I} with r_I ≥ 0.
inline Failure join_decomposition(const CanExtContext& ctx, const LVec& f) {
  if (!lalg::nonnegative(f)) return std::nullopt;
  LVec acc = ctx.d_zero();
  for (const auto& i : ctx.proper_ideals()) acc = join(acc, largest_multiple_below(ctx, i, f) * ctx.x_not(i));
  if (acc != f) return "f is not a join of nonnegative multiples of the x_not(I)";
  return std::nullopt;
}

/// a < b with b − a a positive scalar gives ar⟨b⁺, a⁻⟩ = A.
inline Failure unit_gap(const LVec& a, const Rational& t) {
  if (t <= 0) return std::nullopt;
  const LVec b = a + t;
  if (!hull_of(a.dim(), {pos(b), neg(a)}).is_whole()) return "ar<b+, a-> != A";
  return std::nullopt;
}

/// I ⊄ J in X gives K ∈ X with J ⊆ K and K + I = A, built from a ∈ I ∖ J as
/// K = J ∨ ar⟨(n|a| − 1)⁻⟩ for an n with (n|a| − 1)⁺ ∉ J.
inline Failure separating_ideal(const CanExtContext& ctx, const LIdeal& i, const LIdeal& j, const LVec& a) {
  if (i.is_whole() || j.is_whole() || i.subset_of(j)) return std::nullopt;
  if (!i.contains(a) || j.contains(a)) return std::nullopt;
  const LVec one = LVec::one(a.dim());
  std::optional<LVec> c;
  const Integer last = lalg::stabilization_bound(a, one);
  for (Integer n = 1; n <= last && !c; ++n) {
    const LVec v = Rational(n) * lalg::abs(a) - one;
    if (!j.contains(pos(v))) c = v;
  }
  if (!c) return "no n with (n|a| - 1)+ outside J";
  const LIdeal k = ctx.arch().join(j, hull_of(a.dim(), {neg(*c)}));
  if (k.is_whole()) return "K = A, not a proper ideal";
  if (!j.subset_of(k)) return "J is not contained in K";
  if (!ideal_sum(k, i).is_whole()) return "K + I != A";
  return std::nullopt;
}

inline Failure generated_membership(std::size_t dim, const std::vector<LVec>& s, const LVec& x) {
  const bool member = lalg::lideal_generated(dim, s).contains(x);
  if (member != lalg::dominated_by(x, s)) return "membership disagrees with the domination formula";
  if (s.size() == 1) {
    const auto w = lalg::domination_witness(x, s);
    if (w && !leq(lalg::abs(x), Rational(*w) * lalg::abs(s.front()))) return "domination witness fails";
  }
  return std::nullopt;
}

/// Hypothesis: every t·x_{¬I} ≤ f with I ∈ X is matched by some K ⊇ I in X
/// with t·x_{¬K} ≤ g. It suffices to test the largest such t for each I.
inline bool below_hypothesis(const CanExtContext& ctx, const LVec& f, const LVec& g) {
  const auto xs = ctx.proper_ideals();
  for (const auto& i : xs) {
    const Rational t = largest_multiple_below(ctx, i, f);
    bool found = false;
    for (const auto& k : xs)
      if (i.subset_of(k) && leq(t * ctx.x_not(k), g)) {
        found = true;
        break;
      }
    if (!found) return false;
  }
  return true;
}

inline Failure below_from_hypothesis(const CanExtContext& ctx, const LVec& f, const LVec& g) {
  if (!lalg::nonnegative(f) || !lalg::nonnegative(g)) return std::nullopt;
  if (below_hypothesis(ctx, f, g) && !leq(f, g)) return "hypothesis holds but f is not below g";
  return std::nullopt;
}

inline Failure sup_attained(const LVec& a, const LIdeal& i) {
  if (!lalg::nonnegative(a) || i.is_whole()) return std::nullopt;
  const Rational s = sup_by_bisection(a, i);
  if (!i.contains(neg(a - s))) return "(a - s_I)- is not in I";
  return std::nullopt;
}

inline Failure alpha_bound_iff(const CanExtContext& ctx, const LVec& a, const LIdeal& i, const Rational& r) {
  if (!lalg::nonnegative(a) || i.is_whole()) return std::nullopt;
  const bool below = leq(r * ctx.x_not(i), alpha(ctx, a));
  const bool member = i.contains(neg(a - r));
  if (below != member) return std::string("r x_not(I) <= alpha(a) is ") + (below ? "true" : "false") + " but (a - r)- in I is " +
                              (member ? "true" : "false");
  return std::nullopt;
}

inline Failure sup_via_alpha(const CanExtContext& ctx, const LVec& a, const LIdeal& i) {
  if (!lalg::nonnegative(a) || i.is_whole()) return std::nullopt;
  const Rational s = sup_in_ideal(a, i);
  if (largest_multiple_below(ctx, i, alpha(ctx, a)) != s) return "s_I differs from the largest r with r x_not(I) <= alpha(a)";
  if (ctx.arch().join(i, hull_of(a.dim(), {pos(a - s)})).is_whole()) return "I join ar<(a - s_I)+> = A";
  return std::nullopt;
}

}  // namespace law

struct AppendixOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
};

inline LIdeal random_ideal(Rng& rng, std::size_t n) {
  return LIdeal(n, static_cast<CoordMask>(rng.below(std::uint64_t{1} << n)));
}

inline LIdeal random_proper_ideal(Rng& rng, std::size_t n) {
  return LIdeal(n, 1 + static_cast<CoordMask>(rng.below(lalg::full_mask(n))));
}

inline LVec random_nonnegative(Rng& rng, std::size_t n) { return lalg::abs(random_lvec(rng, n)); }

inline Report appendix_suite(const CanExtContext& ctx, const AppendixOptions& opt = {}) {
  using io::ideal_json;
  using io::rational_json;
  using io::vec_json;
  const std::size_t n = ctx.dim();
  Rng rng(opt.seed ^ (0xc2b2ae3d27d4eb4fULL * (n + 1)));
  Report r;
  r.instance = {{"kind", "lalg"}, {"dim", n}, {"seed", opt.seed}, {"suite", "appendix"}};
  auto args = [&](Json extra) {
    extra["dim"] = n;
    return extra;
  };
  auto nonneg_rational = [&]() { return Rational(boost::multiprecision::abs(rng.rational(6, 4))); };
  auto run_sampled = [&](const std::string& name, auto&& body) {
    CheckRun run(name, Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) body(run);
    r.checks.push_back(run.finish());
  };

  run_sampled("scaled_idempotent_meet", [&](CheckRun& run) {
    const LVec e = LVec::indicator(n, rng.below(std::uint64_t{1} << n));
    const LVec f = LVec::indicator(n, rng.below(std::uint64_t{1} << n));
    const Rational a = nonneg_rational(), b = nonneg_rational();
    run.expect(law::scaled_meet(e, f, a, b), "app.scaled_meet",
               args({{"e", vec_json(e)}, {"f", vec_json(f)}, {"r", rational_json(a)}, {"s", rational_json(b)}}));
  });
  run_sampled("join_above_scalar", [&](CheckRun& run) {
    const Rational lo = rng.rational(6, 4);
    const Rational hi = lo + 1 + nonneg_rational();
    const LVec a = rng.chance(1, 2) ? random_nonnegative(rng, n) + hi : random_lvec(rng, n);
    run.expect(law::join_above_scalar(a, lo, hi), "app.join_above_scalar",
               args({{"a", vec_json(a)}, {"r", rational_json(lo)}, {"s", rational_json(hi)}}));
  });
  run_sampled("sum_to_unit_witnesses", [&](CheckRun& run) {
    const LIdeal i = random_ideal(rng, n);
    const LIdeal j(n, static_cast<CoordMask>(rng.below(std::uint64_t{1} << n)) & ~i.zero_set());
    run.expect(law::sum_to_unit(i, j), "app.sum_to_unit", args({{"I", ideal_json(i)}, {"J", ideal_json(j)}}));
  });
  run_sampled("join_is_hull_of_sum", [&](CheckRun& run) {
    const LIdeal i = random_ideal(rng, n), j = random_ideal(rng, n);
    run.expect(law::join_is_hull_of_sum(ctx, i, j), "app.join_hull", args({{"I", ideal_json(i)}, {"J", ideal_json(j)}}));
  });
  run_sampled("x_as_join", [&](CheckRun& run) {
    const LIdeal i = random_ideal(rng, n);
    run.expect(law::x_as_join(ctx, i), "app.x_join", args({{"I", ideal_json(i)}}));
  });
  run_sampled("join_decomposition", [&](CheckRun& run) {
    const LVec f = random_nonnegative(rng, ctx.d_dim());
    run.expect(law::join_decomposition(ctx, f), "app.join_decomposition", args({{"f", vec_json(f)}}));
  });
  run_sampled("join_shift", [&](CheckRun& run) {
    std::vector<Rational> coeffs;
    Json cj = Json::array();
    for (std::size_t k = 0; k < ctx.arch().size(); ++k) {
      coeffs.push_back(rng.chance(1, 2) ? Rational(0) : nonneg_rational());
      cj.push_back(rational_json(coeffs.back()));
    }
    const Rational t = nonneg_rational();
    run.expect(law::join_shift(ctx, coeffs, t), "app.join_shift", args({{"r", cj}, {"t", rational_json(t)}}));
  });
  run_sampled("unit_gap_hull", [&](CheckRun& run) {
    const LVec a = random_lvec(rng, n);
    const Rational t = Rational(1 + static_cast<long>(rng.below(8)), 1 + static_cast<long>(rng.below(4)));
    run.expect(law::unit_gap(a, t), "app.unit_gap", args({{"a", vec_json(a)}, {"t", rational_json(t)}}));
  });
  run_sampled("separating_ideal", [&](CheckRun& run) {
    if (n < 2) return;  // a single proper ideal, nothing to separate
    LIdeal i = random_proper_ideal(rng, n), j = random_proper_ideal(rng, n);
    while (i.subset_of(j)) {
      i = random_proper_ideal(rng, n);
      j = random_proper_ideal(rng, n);
    }
    // a ∈ I ∖ J: vanish on I's zero set, nonzero somewhere on J's zero set outside it
    LVec a = random_lvec(rng, n);
    const CoordMask free = j.zero_set() & ~i.zero_set();
    for (std::size_t k = 0; k < n; ++k) {
      if (i.zero_set() >> k & 1) a[k] = 0;
      if ((free >> k & 1) && a[k] == 0) a[k] = Rational(1 + static_cast<long>(rng.below(4)), 1 + static_cast<long>(rng.below(3)));
    }
    run.expect(law::separating_ideal(ctx, i, j, a), "app.separating",
               args({{"I", ideal_json(i)}, {"J", ideal_json(j)}, {"a", vec_json(a)}}));
  });
  run_sampled("generated_membership", [&](CheckRun& run) {
    std::vector<LVec> s;
    const auto count = 1 + rng.below(3);
    for (std::uint64_t k = 0; k < count; ++k) s.push_back(random_lvec(rng, n));
    LVec x = random_lvec(rng, n);
    run.expect(law::generated_membership(n, s, x), "app.generated",
               args({{"S", io::vecs_json(s)}, {"x", vec_json(x)}}));
  });
  run_sampled("below_from_hypothesis", [&](CheckRun& run) {
    const LVec f = random_nonnegative(rng, ctx.d_dim());
    const LVec g = rng.chance(1, 2) ? f + random_nonnegative(rng, ctx.d_dim()) : random_nonnegative(rng, ctx.d_dim());
    run.expect(law::below_from_hypothesis(ctx, f, g), "app.below", args({{"f", vec_json(f)}, {"g", vec_json(g)}}));
  });
  run_sampled("sup_attained", [&](CheckRun& run) {
    const LVec a = random_nonnegative(rng, n);
    const LIdeal i = random_proper_ideal(rng, n);
    run.expect(law::sup_attained(a, i), "app.sup_attained", args({{"a", vec_json(a)}, {"I", ideal_json(i)}}));
  });
  run_sampled("alpha_bound_iff", [&](CheckRun& run) {
    const LVec a = random_nonnegative(rng, n);
    const LIdeal i = random_proper_ideal(rng, n);
    const Rational s = sup_in_ideal(a, i);
    Rational t;
    switch (rng.below(4)) {
      case 0: t = s; break;
      case 1: t = s + Rational(1, 1 + static_cast<long>(rng.below(16))); break;
      case 2: t = 0; break;
      default: t = nonneg_rational(); break;
    }
    run.expect(law::alpha_bound_iff(ctx, a, i, t), "app.alpha_bound",
               args({{"a", vec_json(a)}, {"I", ideal_json(i)}, {"r", rational_json(t)}}));
  });
  run_sampled("sup_via_alpha", [&](CheckRun& run) {
    const LVec a = random_nonnegative(rng, n);
    const LIdeal i = random_proper_ideal(rng, n);
    run.expect(law::sup_via_alpha(ctx, a, i), "app.sup_alpha", args({{"a", vec_json(a)}, {"I", ideal_json(i)}}));
  });
  return r;
}

}  // namespace canext::bal
