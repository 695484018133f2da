#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canext/bal/alpha.hpp"
#include "canext/bal/context.hpp"
#include "canext/io/json_core.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext::bal {

using lalg::join;
using lalg::leq;
using lalg::meet;
using lalg::neg;
using lalg::pos;

/// Independent oracle for s_I: bisect on the membership test (b − r)⁻ ∈ I,
/// then snap to the simplest rational in the final bracket. Since s_I is a
/// coordinate of b, its denominator is at most the largest denominator D in
/// b, and a bracket narrower than 1/D² holds no other such rational.
inline Rational sup_by_bisection(const LVec& b, const LIdeal& i) {
  auto member = [&](const Rational& r) { return i.contains(neg(b - r)); };
  Rational lo = 0;
  Rational hi = lalg::norm(b) + 1;
  if (!member(lo) || member(hi)) throw ValidationError("bisection bracket is not valid");
  Integer d = 1;
  for (const auto& x : b.coords()) d = std::max(d, denominator_of(x));
  const Rational width = Rational(1) / Rational(d * d);
  while (hi - lo >= width) {
    Rational mid = (lo + hi) / 2;
    if (member(mid))
      lo = mid;
    else
      hi = mid;
  }
  Rational v = simplest_between(lo, hi);
  if (!member(v)) throw ValidationError("bisection snapped to a non-member");
  return v;
}

/// max{ r | r·x_{¬I} ≤ f } for I ≠ A: the least value of f on the support of x_{¬I}.
inline Rational largest_multiple_below(const CanExtContext& ctx, const LIdeal& i, const LVec& f) {
  const LVec e = ctx.x_not(i);
  std::optional<Rational> best;
  for (std::size_t k = 0; k < e.dim(); ++k)
    if (e[k] != 0 && (!best || f[k] < *best)) best = f[k];
  if (!best) throw ValidationError("x_not(A) = 0 has no largest multiple");
  return *best;
}

/// Join of the archimedean hulls ar⟨a⁺⟩ over a ∈ T, in Arch(A).
inline LIdeal hull_join_of_positive_parts(const CanExtContext& ctx, const std::vector<LVec>& t) {
  LIdeal acc = LIdeal::zero(ctx.dim());
  for (const auto& a : t) acc = ctx.arch().join(acc, lalg::arch_hull(ctx.dim(), {pos(a)}));
  return acc;
}

/// Greedy choice of T₀ ⊆ T whose hulls ar⟨a⁺⟩ join to A. Empty when none exists.
inline std::optional<std::vector<std::size_t>> covering_subfamily(const CanExtContext& ctx, const std::vector<LVec>& t) {
  std::vector<std::size_t> chosen;
  LIdeal acc = LIdeal::zero(ctx.dim());
  while (!acc.is_whole()) {
    std::optional<std::size_t> best;
    int best_gain = 0;
    for (std::size_t k = 0; k < t.size(); ++k) {
      LIdeal next = ctx.arch().join(acc, lalg::arch_hull(ctx.dim(), {pos(t[k])}));
      int gain = std::popcount(acc.zero_set()) - std::popcount(next.zero_set());
      if (gain > best_gain) {
        best_gain = gain;
        best = k;
      }
    }
    if (!best) return std::nullopt;
    chosen.push_back(*best);
    acc = ctx.arch().join(acc, lalg::arch_hull(ctx.dim(), {pos(t[*best])}));
  }
  return chosen;
}

namespace law {

using Failure = std::optional<std::string>;

inline Failure alpha_hom(const CanExtContext& ctx, const LVec& a, const LVec& b, const Rational& r) {
  const LVec fa = alpha(ctx, a), fb = alpha(ctx, b);
  if (alpha(ctx, a + b) != fa + fb) return "alpha(a + b) != alpha(a) + alpha(b)";
  if (alpha(ctx, a * b) != fa * fb) return "alpha(ab) != alpha(a) alpha(b)";
  if (alpha(ctx, meet(a, b)) != meet(fa, fb)) return "alpha(a meet b) != alpha(a) meet alpha(b)";
  if (alpha(ctx, join(a, b)) != join(fa, fb)) return "alpha(a join b) != alpha(a) join alpha(b)";
  if (alpha(ctx, r * a) != r * fa) return "alpha(ra) != r alpha(a)";
  return std::nullopt;
}

inline Failure alpha_unit(const CanExtContext& ctx) {
  if (alpha(ctx, LVec::one(ctx.dim())) != ctx.d_one()) return "alpha(1) != 1";
  if (alpha(ctx, LVec::zero(ctx.dim())) != ctx.d_zero()) return "alpha(0) != 0";
  return std::nullopt;
}

inline Failure alpha_injective(const CanExtContext& ctx, const LVec& a, const LVec& b) {
  if (a != b && alpha(ctx, a) == alpha(ctx, b)) return "alpha identifies distinct elements";
  return std::nullopt;
}

inline Failure alpha_shift(const CanExtContext& ctx, const LVec& a, const Rational& s1, const Rational& s2) {
  const LVec x = alpha(ctx, a, s1), y = alpha(ctx, a, s2);
  if (x != y) return "alpha depends on s: " + lalg::to_string(x) + " vs " + lalg::to_string(y);
  return std::nullopt;
}

inline Failure theta_zeta(const CanExtContext& ctx, const LVec& a) {
  const LVec lhs = ctx.theta(alpha(ctx, a));
  const LVec rhs = ctx.zeta(a);
  if (lhs != rhs) return "theta(alpha(a)) = " + lalg::to_string(lhs) + " but zeta(a) = " + lalg::to_string(rhs);
  return std::nullopt;
}

/// Closed form of s_I against the bisection oracle; the sup is attained and
/// bounded by ‖a‖ + s + 1.
inline Failure sup_closed_form(const CanExtContext& ctx, const LVec& a, const LIdeal& i) {
  const Rational s = default_shift(a);
  const LVec b = a + s;
  const Rational closed = sup_in_ideal(b, i);
  const Rational oracle = sup_by_bisection(b, i);
  if (closed != oracle) return "s_I = " + to_string(closed) + " but bisection gives " + to_string(oracle);
  if (!i.contains(neg(b - closed))) return "the supremum s_I is not attained";
  if (closed > lalg::norm(a) + s + 1) return "s_I exceeds the bound |a| + s + 1";
  return std::nullopt;
}

inline Failure nonnegative_form(const CanExtContext& ctx, const LVec& a) {
  if (!lalg::nonnegative(a)) return std::nullopt;
  LVec acc = ctx.d_zero();
  for (const auto& i : ctx.proper_ideals()) acc = join(acc, sup_in_ideal(a, i) * ctx.x_not(i));
  if (alpha(ctx, a) != acc) return "alpha(a) differs from the join with r >= 0 and no shift";
  return std::nullopt;
}

inline Failure monotone(const CanExtContext& ctx, const LVec& a, const LVec& b) {
  if (leq(a, b) && !leq(alpha(ctx, a), alpha(ctx, b))) return "a <= b but alpha(a) not <= alpha(b)";
  return std::nullopt;
}

inline Failure translate(const CanExtContext& ctx, const LVec& a, const Rational& t) {
  if (alpha(ctx, a + t) != alpha(ctx, a) + t) return "alpha(a + t) != alpha(a) + t";
  return std::nullopt;
}

/// Admissible witness for x_{¬I}: 0 ≤ a ≤ 1 and a = 1 on the zero set of I.
inline bool dense_admissible(const LIdeal& i, const LVec& a) {
  if (!lalg::nonnegative(a) || !leq(a, LVec::one(a.dim()))) return false;
  return i.contains(neg(a - Rational(1)));
}

inline Failure dense_below(const CanExtContext& ctx, const LIdeal& i, const LVec& a) {
  if (!dense_admissible(i, a)) return std::nullopt;
  if (!leq(ctx.x_not(i), alpha(ctx, a))) return "x_not(I) is not below alpha(a)";
  return std::nullopt;
}

inline Failure dense_meet(const CanExtContext& ctx, const LIdeal& i, const std::vector<LVec>& family) {
  std::optional<LVec> acc;
  for (const auto& a : family) {
    if (!dense_admissible(i, a)) return "family member is not admissible";
    const LVec v = alpha(ctx, a);
    acc = acc ? meet(*acc, v) : v;
  }
  if (!acc) return "empty family";
  if (*acc != ctx.x_not(i)) return "meet of alpha over the family is " + lalg::to_string(*acc) + ", not x_not(I)";
  return std::nullopt;
}

/// f = −n + ⋁ r_I·x_{¬I} with r_I the least value of f + n on the support of x_{¬I}.
inline Failure dense_join(const CanExtContext& ctx, const LVec& f) {
  const Rational n = Rational(ceil_of(lalg::norm(neg(f))));
  const LVec g = f + n;
  LVec acc = ctx.d_zero();
  for (const auto& i : ctx.proper_ideals()) acc = join(acc, largest_multiple_below(ctx, i, g) * ctx.x_not(i));
  if (acc - n != f) return "f is not the join of its multiples of the x_not(I)";
  return std::nullopt;
}

inline LVec alpha_join(const CanExtContext& ctx, const std::vector<LVec>& t) {
  LVec acc = alpha(ctx, t.front());
  for (const auto& a : t) acc = join(acc, alpha(ctx, a));
  return acc;
}

inline LVec alpha_meet(const CanExtContext& ctx, const std::vector<LVec>& t) {
  LVec acc = alpha(ctx, t.front());
  for (const auto& a : t) acc = meet(acc, alpha(ctx, a));
  return acc;
}

/// ε ≤ ⋁α[T] forces a finite T₀ ⊆ T with ⋁T₀ ≥ 0, found through the hulls of positive parts.
inline Failure compact_join(const CanExtContext& ctx, const std::vector<LVec>& t, const Rational& eps) {
  if (t.empty() || !leq(ctx.d_const(eps), alpha_join(ctx, t))) return std::nullopt;
  auto cover = covering_subfamily(ctx, t);
  if (!cover) return "hulls of positive parts do not join to A";
  LVec acc = t[cover->front()];
  for (auto k : *cover) acc = join(acc, t[k]);
  if (!lalg::nonnegative(acc)) return "join of the chosen subfamily is not >= 0";
  return std::nullopt;
}

/// ⋀α[S] + ε ≤ ⋁α[T] forces ⋀S₀ ≤ ⋁T₀ for finite parts; here S₀ = S and T₀ = T.
inline Failure compact_pair(const CanExtContext& ctx, const std::vector<LVec>& s, const std::vector<LVec>& t,
                            const Rational& eps) {
  if (s.empty() || t.empty()) return std::nullopt;
  if (!leq(alpha_meet(ctx, s) + eps, alpha_join(ctx, t))) return std::nullopt;
  LVec lo = s.front(), hi = t.front();
  for (const auto& a : s) lo = meet(lo, a);
  for (const auto& a : t) hi = join(hi, a);
  if (!leq(lo, hi)) return "meet of S is not below join of T";
  return std::nullopt;
}

}  // namespace law

struct BalVerifyOptions {
  std::size_t samples = 1000;
  std::size_t oracle_samples = 200;  // samples that also run the bisection oracle
  std::size_t family_size = 24;      // random members added to each density witness family
  std::uint64_t seed = 0;
  std::vector<Rational> eps_grid{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
};

inline Json bal_instance(const CanExtContext& ctx, std::uint64_t seed) {
  return {{"kind", "lalg"},
          {"dim", ctx.dim()},
          {"seed", seed},
          {"arch", ctx.arch().size()},
          {"B", ctx.specker().base().size()}};
}

/// Random admissible witness for x_{¬I}: 1 on the zero set, values in [0, 1] elsewhere.
inline LVec random_dense_witness(Rng& rng, const LIdeal& i) {
  std::vector<Rational> c;
  for (std::size_t k = 0; k < i.dim(); ++k)
    c.push_back((i.zero_set() >> k & 1) ? Rational(1) : Rational(static_cast<long>(rng.below(5)), 4));
  return LVec(std::move(c));
}

/// A finite family T for the compactness clause. A final member is appended
/// that makes ε ≤ ⋁α[T] hold: ε wherever the join so far is below ε, and a
/// large negative value elsewhere.
inline std::vector<LVec> random_compact_family(const CanExtContext& ctx, Rng& rng, const Rational& eps) {
  const std::size_t n = ctx.dim();
  std::vector<LVec> t;
  const auto count = 1 + rng.below(3);
  for (std::uint64_t k = 0; k < count; ++k) t.push_back(random_lvec(rng, n));
  if (rng.chance(3, 4)) {
    const LVec z = ctx.theta(law::alpha_join(ctx, t));
    std::vector<Rational> c;
    for (std::size_t k = 0; k < n; ++k) c.push_back(z[k] < eps ? eps : Rational(-7));
    t.push_back(LVec(std::move(c)));
  }
  return t;
}

inline Report verify_canext_bal(const CanExtContext& ctx, const BalVerifyOptions& opt = {}) {
  using io::vec_json;
  using io::vecs_json;
  const std::size_t n = ctx.dim();
  Report r;
  r.instance = bal_instance(ctx, opt.seed);
  Rng rng(opt.seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
  auto args = [&](Json extra) {
    extra["dim"] = n;
    return extra;
  };

  std::vector<LVec> as, bs;
  std::vector<Rational> rs;
  for (std::size_t k = 0; k < opt.samples; ++k) {
    as.push_back(random_lvec(rng, n));
    bs.push_back(random_lvec(rng, n));
    rs.push_back(rng.rational(6, 5));
  }

  {
    CheckRun run("monomorphism", Mode::Sampled);
    run.expect(law::alpha_unit(ctx), "bal.alpha_unit", args({}));
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      run.expect(law::alpha_hom(ctx, as[k], bs[k], rs[k]), "bal.alpha_hom",
                 args({{"a", vec_json(as[k])}, {"b", vec_json(bs[k])}, {"r", io::rational_json(rs[k])}}));
      run.expect(law::alpha_injective(ctx, as[k], bs[k]), "bal.alpha_injective",
                 args({{"a", vec_json(as[k])}, {"b", vec_json(bs[k])}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("s_independent", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples; ++k) {
      const Rational s1 = default_shift(as[k]);
      const Rational s2 = s1 + 1 + Rational(static_cast<long>(rng.below(7)), 3);
      if (!run.expect(law::alpha_shift(ctx, as[k], s1, s2), "bal.alpha_shift",
                      args({{"a", vec_json(as[k])}, {"s1", io::rational_json(s1)}, {"s2", io::rational_json(s2)}})))
        break;
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("theta_zeta", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples; ++k)
      if (!run.expect(law::theta_zeta(ctx, as[k]), "bal.theta_zeta", args({{"a", vec_json(as[k])}}))) break;
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("sup_closed_form", Mode::Sampled);
    const auto ideals = ctx.proper_ideals();
    for (std::size_t k = 0; k < std::min(opt.samples, opt.oracle_samples) && run.passing(); ++k)
      for (const auto& i : ideals)
        if (!run.expect(law::sup_closed_form(ctx, as[k], i), "bal.sup_closed_form",
                        args({{"a", vec_json(as[k])}, {"ideal", io::ideal_json(i)}})))
          break;
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("alpha_order", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const LVec a = as[k];
      const LVec p = lalg::abs(bs[k]);
      run.expect(law::nonnegative_form(ctx, lalg::abs(a)), "bal.nonnegative_form", args({{"a", vec_json(lalg::abs(a))}}));
      run.expect(law::monotone(ctx, a, a + p), "bal.monotone", args({{"a", vec_json(a)}, {"b", vec_json(a + p)}}));
      run.expect(law::translate(ctx, a, rs[k]), "bal.translate", args({{"a", vec_json(a)}, {"t", io::rational_json(rs[k])}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("dense", Mode::Sampled);
    for (const auto& i : ctx.all_ideals()) {
      if (i.is_whole()) continue;
      std::vector<LVec> family{LVec::indicator(n, i.zero_set())};
      for (std::size_t k = 0; k < opt.family_size; ++k) family.push_back(random_dense_witness(rng, i));
      for (const auto& a : family)
        if (!run.expect(law::dense_below(ctx, i, a), "bal.dense_below", args({{"ideal", io::ideal_json(i)}, {"a", vec_json(a)}})))
          break;
      run.expect(law::dense_meet(ctx, i, family), "bal.dense_meet", args({{"ideal", io::ideal_json(i)}, {"family", vecs_json(family)}}));
      if (!run.passing()) break;
    }
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const LVec f = random_lvec(rng, ctx.d_dim());
      run.expect(law::dense_join(ctx, f), "bal.dense_join", args({{"f", vec_json(f)}}));
    }
    run.note("witness families restricted to 0 <= a <= 1 with a = 1 on the zero set");
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("compact", Mode::Sampled);
    std::size_t hits = 0;
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const Rational eps = opt.eps_grid.at(k % opt.eps_grid.size());
      const auto t = random_compact_family(ctx, rng, eps);
      if (leq(ctx.d_const(eps), law::alpha_join(ctx, t))) ++hits;
      run.expect(law::compact_join(ctx, t, eps), "bal.compact_join",
                 args({{"T", vecs_json(t)}, {"eps", io::rational_json(eps)}}));
      std::vector<LVec> s{random_lvec(rng, n), random_lvec(rng, n)};
      run.expect(law::compact_pair(ctx, s, t, eps), "bal.compact_pair",
                 args({{"S", vecs_json(s)}, {"T", vecs_json(t)}, {"eps", io::rational_json(eps)}}));
    }
    run.witness({{"hypothesis_met", hits}});
    run.note("finite families only; absence of a counterexample is not a proof");
    r.checks.push_back(run.finish());
  }
  return r;
}

}  // namespace canext::bal
