#include <gtest/gtest.h>

#include <vector>

#include "canext/lalg/ideal.hpp"
#include "canext/lalg/specker.hpp"
#include "canext/lalg/vec.hpp"
#include "canext/random.hpp"

using namespace canext;
using namespace canext::lalg;

namespace {

LVec random_vec(Rng& rng, std::size_t n, std::int64_t num = 9, std::int64_t den = 4) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(rng.chance(1, 4) ? Rational(0) : rng.rational(num, den));
  return LVec(std::move(c));
}

Rational q(long p, long d = 1) { return Rational(p, d); }

constexpr int kSamples = 1000;

}  // namespace

TEST(LVec, RejectsBadDimensions) {
  EXPECT_THROW(LVec(std::vector<Rational>{}), ValidationError);
  EXPECT_THROW(LVec::zero(kMaxDim + 1), ValidationError);
  EXPECT_THROW(LVec({1, 2}) + LVec({1, 2, 3}), ValidationError);
}

TEST(LVec, DecomposeExamples) {
  auto d = decompose(LVec{-1, 3});
  EXPECT_EQ(d.positive, (LVec{0, 3}));
  EXPECT_EQ(d.negative, (LVec{1, 0}));
  EXPECT_EQ(d.absolute, (LVec{1, 3}));
  EXPECT_EQ(d.norm, 3);

  auto z = decompose(LVec::zero(3));
  EXPECT_TRUE(z.positive.is_zero() && z.negative.is_zero() && z.absolute.is_zero());
  EXPECT_EQ(z.norm, 0);

  auto p = decompose(LVec{2, 2});
  EXPECT_TRUE(p.negative.is_zero());
  EXPECT_EQ(p.norm, 2);
}

TEST(LVec, NormIsLeastBound) {
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    LVec a = random_vec(rng, 1 + rng.below(6));
    Rational r = norm(a);
    EXPECT_TRUE(leq(abs(a), LVec::constant(a.dim(), r)));
    if (r > 0) {
      Rational smaller = r - r / 1000;
      EXPECT_FALSE(leq(abs(a), LVec::constant(a.dim(), smaller)));
    }
  }
}

// Lattice-ordered ring identities, exact on seeded samples per dimension.
TEST(LVec, IdentitySuite) {
  for (std::size_t n = 1; n <= 6; ++n) {
    Rng rng(100 + n);
    for (int t = 0; t < kSamples; ++t) {
      LVec a = random_vec(rng, n), b = random_vec(rng, n), c = random_vec(rng, n);
      // translation distributes over finite joins
      EXPECT_EQ(a + join(b, c), join(a + b, a + c));
      EXPECT_EQ(-join(a, b), meet(-a, -b));
      EXPECT_EQ(a, pos(a) - neg(a));
      EXPECT_EQ(abs(a), pos(a) + neg(a));
      EXPECT_TRUE(leq(pos(a + b), pos(a) + pos(b)));
      EXPECT_TRUE(meet(pos(a), neg(a)).is_zero());
      EXPECT_TRUE((pos(a) * neg(a)).is_zero());
      // disjoint elements stay disjoint under nonnegative scaling
      LVec u = pos(a), v = neg(a);
      Rational r = abs_of(rng.rational(5, 3)), s = abs_of(rng.rational(5, 3));
      EXPECT_TRUE(meet(r * u, s * v).is_zero());
      // quotient maps preserve |.|
      CoordMask z = static_cast<CoordMask>(rng.below(std::uint64_t{1} << n));
      if (z != 0) {
        Quotient qt(LIdeal(n, z));
        EXPECT_EQ(qt.project(abs(a)), abs(qt.project(a)));
      }
    }
  }
}

TEST(LIdeal, MembershipAndOrder) {
  LIdeal i(3, 0b101);
  EXPECT_TRUE(i.contains(LVec{0, 7, 0}));
  EXPECT_FALSE(i.contains(LVec{1, 0, 0}));
  EXPECT_EQ(i.label(), "I{1,3}");
  EXPECT_TRUE(LIdeal(3, 0b111).subset_of(i));
  EXPECT_TRUE(i.subset_of(LIdeal(3, 0b001)));
  EXPECT_FALSE(LIdeal(3, 0b001).subset_of(i));
  EXPECT_THROW(LIdeal(2, 0b100), ValidationError);
  EXPECT_THROW(i.contains(LVec{0, 0}), ValidationError);
}

TEST(LIdeal, GeneratedExamples) {
  EXPECT_EQ(lideal_generated(3, {LVec{0, 1, 2}}).zero_set(), 0b001u);
  EXPECT_TRUE(lideal_generated(3, {}).is_zero());
  EXPECT_TRUE(lideal_generated(3, {LVec::one(3)}).is_whole());
}

TEST(LIdeal, GeneratedAgreesWithDomination) {
  Rng rng(21);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 300; ++t) {
      std::vector<LVec> s;
      const auto k = rng.below(3);
      for (std::uint64_t j = 0; j < k; ++j) s.push_back(random_vec(rng, n));
      LIdeal i = lideal_generated(n, s);
      LVec x = random_vec(rng, n);
      EXPECT_EQ(i.contains(x), dominated_by(x, s)) << to_string(x);
      if (s.size() == 1) {
        // single generator read literally
        auto w = domination_witness(x, s);
        if (w) EXPECT_TRUE(leq(abs(x), Rational(*w) * abs(s.front())));
      }
    }
}

// Any ideal element nonzero at i dominates a multiple of the i-th unit idempotent,
// so every ℓ-ideal of ℚⁿ is determined by which unit vectors it holds.
TEST(LIdeal, EveryIdealIsCoordinate) {
  Rng rng(23);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 300; ++t) {
      LVec a = random_vec(rng, n);
      for (std::size_t i = 0; i < n; ++i) {
        if (a[i] == 0) continue;
        LVec e = LVec::indicator(n, CoordMask{1} << i);
        EXPECT_TRUE(dominated_by(e, {a}));
      }
    }
}

TEST(ArchHull, Examples) {
  EXPECT_EQ(arch_hull(3, {LVec{0, 1, 2}}), LIdeal(3, 0b001));
  EXPECT_EQ(arch_hull(LIdeal::zero(3)), LIdeal::zero(3));
  EXPECT_EQ(arch_hull(LIdeal::whole(3)), LIdeal::whole(3));
}

TEST(ArchHull, FixedPointAndOracles) {
  Rng rng(31);
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<LVec> probes;
    for (int t = 0; t < 40; ++t) probes.push_back(random_vec(rng, n));
    for (CoordMask z = 0; z <= full_mask(n); ++z) {
      LIdeal i(n, z);
      EXPECT_EQ(arch_hull(i), i);
      EXPECT_EQ(k_step(i), i);
      EXPECT_EQ(k_step(k_step(i)), k_step(i));
      EXPECT_EQ(hull_by_intersection(i, probes), i);
      for (const auto& x : probes) EXPECT_EQ(hull_contains(i, x), i.contains(x));
    }
  }
}

TEST(Quotient, Examples) {
  Quotient qt(LIdeal(3, 0b101));
  EXPECT_EQ(qt.project(LVec{5, 7, 9}), (LVec{5, 9}));
  EXPECT_TRUE(qt.project(LVec{0, 4, 0}).is_zero());

  // a⁻ = (1,0,0) vanishes on {3}, so a + I{3} ≥ 0; it fails to vanish on {1}.
  LVec a{-1, 2, 0};
  Quotient q3(LIdeal(3, 0b100));
  EXPECT_TRUE(q3.ideal().contains(neg(a)));
  EXPECT_TRUE(q3.nonnegative_class(a));
  Quotient q1(LIdeal(3, 0b001));
  EXPECT_FALSE(q1.ideal().contains(neg(a)));
  EXPECT_FALSE(q1.nonnegative_class(a));

  Quotient whole(LIdeal::whole(2));
  EXPECT_TRUE(whole.is_zero_algebra());
  EXPECT_THROW(whole.project(LVec{1, 2}), ValidationError);
}

TEST(Quotient, OrderAndArchimedean) {
  Rng rng(41);
  for (std::size_t n = 1; n <= 5; ++n)
    for (int t = 0; t < 300; ++t) {
      CoordMask z = 1 + rng.below(full_mask(n));
      Quotient qt(LIdeal(n, z));
      LVec a = random_vec(rng, n), b = random_vec(rng, n);
      EXPECT_EQ(qt.nonnegative_class(a), qt.ideal().contains(neg(a)));
      EXPECT_EQ(qt.project(a + b), qt.project(a) + qt.project(b));
      EXPECT_EQ(qt.project(a * b), qt.project(a) * qt.project(b));
      EXPECT_EQ(qt.project(join(a, b)), join(qt.project(a), qt.project(b)));
      EXPECT_TRUE(quotient_archimedean_at(qt.ideal(), a));
    }
}

TEST(ArchFrame, Shapes) {
  EXPECT_EQ(ArchFrame(1).size(), 2u);
  ArchFrame two(2);
  EXPECT_EQ(two.size(), 4u);
  EXPECT_TRUE(two.lattice().is_distributive());
  EXPECT_FALSE(two.lattice().regularity_violation().has_value());
  EXPECT_EQ(two.join(LIdeal(2, 0b01), LIdeal(2, 0b10)), LIdeal::whole(2));
  EXPECT_EQ(two.lattice().order().top(), two.whole());
  EXPECT_EQ(two.lattice().order().bottom(), two.zero());
}

TEST(ArchFrame, JoinIsHullOfSum) {
  for (std::size_t n = 1; n <= 4; ++n) {
    ArchFrame f(n);
    for (std::size_t i = 0; i < f.size(); ++i)
      for (std::size_t j = 0; j < f.size(); ++j) {
        EXPECT_EQ(f.join(f.ideal(i), f.ideal(j)), hull_of_sum(f.ideal(i), f.ideal(j)));
        EXPECT_EQ(f.ideal(f.lattice().meet(i, j)).zero_set(), f.ideal(i).zero_set() | f.ideal(j).zero_set());
      }
    EXPECT_FALSE(f.lattice().regularity_violation().has_value());
    EXPECT_TRUE(f.lattice().is_compact());
  }
}

TEST(Yosida, PointsAndZeta) {
  ArchFrame f(2);
  Yosida y(f);
  ASSERT_EQ(y.size(), 2u);
  EXPECT_EQ(y.points()[0], LIdeal(2, 0b01));
  EXPECT_EQ(y.zeta(LVec{1, 2}), (LVec{1, 2}));
  EXPECT_EQ(y.zero_locus(LIdeal::whole(2)), 0u);
  EXPECT_EQ(y.zero_locus(LIdeal::zero(2)), 0b11u);

  Rng rng(51);
  ArchFrame f4(4);
  Yosida y4(f4);
  for (int t = 0; t < 200; ++t) {
    LVec a = random_vec(rng, 4), b = random_vec(rng, 4);
    EXPECT_EQ(y4.zeta(a * b), y4.zeta(a) * y4.zeta(b));
    EXPECT_EQ(y4.zeta(meet(a, b)), meet(y4.zeta(a), y4.zeta(b)));
    if (!(a == b)) EXPECT_FALSE(y4.zeta(a) == y4.zeta(b));
  }
  for (CoordMask z = 0; z < 16; ++z) EXPECT_EQ(y4.zero_locus(LIdeal(4, z)), z);
}

TEST(Idempotents, Examples) {
  EXPECT_EQ(idem_join(LVec{1, 0}, LVec{0, 1}), (LVec{1, 1}));
  EXPECT_EQ(idem_not(LVec{1, 0}), (LVec{0, 1}));
  EXPECT_EQ(idempotents(3).size(), 8u);
  // r·e ≤ s·f with r, s > 0 and nonzero e forces r ≤ s and e ≤ f.
  LVec e{1, 0, 1}, f{1, 1, 1};
  EXPECT_TRUE(leq(q(2) * e, q(3) * f));
  EXPECT_LE(q(2), q(3));
  EXPECT_TRUE(leq(e, f));
  EXPECT_THROW(idempotent_mask(LVec{2, 0}), ValidationError);
}

TEST(Idempotents, ImpliedOrderOnSamples) {
  Rng rng(61);
  for (int t = 0; t < 500; ++t) {
    const std::size_t n = 1 + rng.below(5);
    CoordMask em = 1 + rng.below(full_mask(n)), fm = 1 + rng.below(full_mask(n));
    Rational r = 1 + abs_of(rng.rational(4, 3)), s = 1 + abs_of(rng.rational(4, 3));
    LVec e = LVec::indicator(n, em), f = LVec::indicator(n, fm);
    if (leq(r * e, s * f)) {
      EXPECT_LE(r, s);
      EXPECT_TRUE(leq(e, f));
    }
  }
}

TEST(Specker, Examples) {
  SpeckerAlg rb = specker_of(ba::FinBoolAlg::with_atoms(2));
  const auto& b = rb.base();
  EXPECT_EQ(rb.x(b.atom(0)), (LVec{1, 0}));
  EXPECT_EQ(rb.x(b.complement(b.atom(0))), (LVec{0, 1}));
  EXPECT_EQ(rb.x(b.complement(b.atom(0))), rb.one() - rb.x(b.atom(0)));
  EXPECT_TRUE(rb.x(b.zero()).is_zero());
  EXPECT_EQ(rb.x(b.join(b.atom(0), b.atom(1))), (LVec{1, 1}));
  EXPECT_EQ(rb.x(b.join(b.atom(0), b.atom(1))),
            rb.x(b.atom(0)) + rb.x(b.atom(1)) - rb.x(b.atom(0)) * rb.x(b.atom(1)));
  for (std::size_t k = 0; k <= 4; ++k) {
    if (k == 0) continue;
    EXPECT_FALSE(specker_of(ba::FinBoolAlg::with_atoms(k)).relation_violation().has_value());
  }
}

TEST(Specker, IdempotentsRecoverBase) {
  for (std::size_t k = 1; k <= 4; ++k) {
    SpeckerAlg rb = specker_of(ba::FinBoolAlg::with_atoms(k));
    for (auto e : rb.base().elements()) EXPECT_EQ(idempotent_mask(rb.x(e)), e);
  }
}

TEST(SpeckerMorphism, Examples) {
  SpeckerAlg rb = specker_of(ba::FinBoolAlg::with_atoms(2));
  const auto& b = rb.base();

  std::vector<LVec> id;
  for (auto e : b.elements()) id.push_back(rb.x(e));
  SpeckerMorphism sigma(rb, id);
  Rng rng(71);
  for (int t = 0; t < 50; ++t) {
    LVec v = random_vec(rng, 2);
    EXPECT_EQ(sigma(v), v);
  }

  // collapse q to 0
  std::vector<LVec> collapse;
  for (auto e : b.elements()) collapse.push_back(LVec{(e & b.atom(0)) ? q(1) : q(0)});
  SpeckerMorphism drop(rb, collapse);
  EXPECT_EQ(drop(LVec{q(3, 2), 7}), (LVec{q(3, 2)}));

  LVec v = q(2) * rb.x(b.atom(0)) + q(5) * rb.x(b.atom(1));
  EXPECT_EQ(drop(v), q(2) * drop.tau(b.atom(0)) + q(5) * drop.tau(b.atom(1)));
}

TEST(SpeckerMorphism, RejectsNonMorphisms) {
  SpeckerAlg rb = specker_of(ba::FinBoolAlg::with_atoms(2));
  std::vector<LVec> bad(4, LVec{1});
  try {
    SpeckerMorphism s(rb, bad);
    FAIL() << "accepted a map that does not preserve 0";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("preserve 0"), std::string::npos);
  }
  std::vector<LVec> not_idem{LVec{0}, LVec{2}, LVec{0}, LVec{1}};
  EXPECT_THROW(SpeckerMorphism(rb, not_idem), ValidationError);
  // p ↦ 1, q ↦ 1 breaks meets
  std::vector<LVec> both{LVec{0}, LVec{1}, LVec{1}, LVec{1}};
  try {
    SpeckerMorphism s(rb, both);
    FAIL() << "accepted a map that does not preserve meets";
  } catch (const ValidationError& e) {
    EXPECT_NE(std::string(e.what()).find("complement"), std::string::npos);
  }
}

TEST(SpeckerMorphism, PreservesOperationsOnSamples) {
  // Id(ℚ²) → Id(ℚ³) sending atom 1 to {1,3} and atom 2 to {2}.
  SpeckerAlg rb = specker_of(idempotents(2));
  std::vector<LVec> tau{LVec{0, 0, 0}, LVec{1, 0, 1}, LVec{0, 1, 0}, LVec{1, 1, 1}};
  SpeckerMorphism sigma(rb, tau);
  SpeckerMorphism again(rb, tau);
  Rng rng(81);
  for (int t = 0; t < 300; ++t) {
    LVec a = random_vec(rng, 2), b = random_vec(rng, 2);
    Rational r = rng.rational(6, 5);
    EXPECT_EQ(sigma(a + b), sigma(a) + sigma(b));
    EXPECT_EQ(sigma(a * b), sigma(a) * sigma(b));
    EXPECT_EQ(sigma(join(a, b)), join(sigma(a), sigma(b)));
    EXPECT_EQ(sigma(meet(a, b)), meet(sigma(a), sigma(b)));
    EXPECT_EQ(sigma(r * a), r * sigma(a));
    EXPECT_EQ(sigma(a), again(a));
  }
  for (auto e : rb.base().elements()) EXPECT_EQ(sigma(rb.x(e)), tau[e]);
}

TEST(OrthoDecomp, Examples) {
  auto d = ortho_decomp(LVec{2, 2, 5});
  ASSERT_EQ(d.size(), 2u);
  EXPECT_EQ(d[0].r, 2);
  EXPECT_EQ(d[0].b, 0b011u);
  EXPECT_EQ(d[1].r, 5);
  EXPECT_EQ(d[1].b, 0b100u);
  EXPECT_TRUE(ortho_decomp(LVec::zero(3)).empty());
  auto one = ortho_decomp(LVec::one(3));
  ASSERT_EQ(one.size(), 1u);
  EXPECT_EQ(one[0].b, full_mask(3));
}

TEST(OrthoDecomp, Reconstructs) {
  Rng rng(91);
  for (int t = 0; t < kSamples; ++t) {
    const std::size_t n = 1 + rng.below(6);
    LVec a = random_vec(rng, n, 2, 1);
    auto d = ortho_decomp(a);
    EXPECT_EQ(ortho_sum(n, d), a);
    for (std::size_t i = 0; i < d.size(); ++i) {
      EXPECT_NE(d[i].r, 0);
      for (std::size_t j = i + 1; j < d.size(); ++j) {
        EXPECT_EQ(d[i].b & d[j].b, 0u);
        EXPECT_NE(d[i].r, d[j].r);
      }
    }
  }
}

TEST(Dedekind, Examples) {
  EXPECT_EQ(dedekind_embed(LVec{1, 2, 3}), (LVec{1, 2, 3}));
  EXPECT_EQ(sup_of({LVec{1, 0}, LVec{0, 1}}), (LVec{1, 1}));
  LVec a{q(-3, 2), 4};
  EXPECT_EQ(inf_of({a, LVec::zero(2)}), -neg(a));
  EXPECT_THROW(sup_of({}), ValidationError);
}

TEST(Dedekind, SupIsLeastUpperBound) {
  Rng rng(101);
  for (int t = 0; t < 300; ++t) {
    const std::size_t n = 1 + rng.below(4);
    std::vector<LVec> s;
    for (int k = 0; k < 3; ++k) s.push_back(random_vec(rng, n));
    LVec u = sup_of(s), l = inf_of(s);
    for (const auto& a : s) {
      EXPECT_TRUE(leq(a, u));
      EXPECT_TRUE(leq(l, a));
    }
    LVec other = random_vec(rng, n);
    bool upper = true;
    for (const auto& a : s) upper &= leq(a, other);
    if (upper) EXPECT_TRUE(leq(u, other));
  }
}

// Two ideals with disjoint zero sets sum to A, split by complementary idempotents.
TEST(DisjointZeroSets, ComplementaryWitnesses) {
  for (std::size_t n = 1; n <= 4; ++n)
    for (CoordMask z = 0; z <= full_mask(n); ++z)
      for (CoordMask w = 0; w <= full_mask(n); ++w) {
        if (z & w) continue;
        LVec a = LVec::indicator(n, full_mask(n) & ~z);
        LVec b = LVec::one(n) - a;
        EXPECT_TRUE(LIdeal(n, z).contains(a));
        EXPECT_TRUE(LIdeal(n, w).contains(b));
        EXPECT_TRUE(nonnegative(a) && nonnegative(b));
        EXPECT_EQ(a + b, LVec::one(n));
      }
}
