#include <gtest/gtest.h>

#include <cstdint>
#include <set>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/order/alexandroff.hpp"
#include "canext/order/free_boolean_extension.hpp"
#include "canext/order/free_frame.hpp"
#include "canext/order/lattice.hpp"
#include "canext/order/poset.hpp"
#include "canext/random.hpp"

using namespace canext;
using namespace canext::order;

namespace {

FinPoset two_chain() { return FinPoset::from_relation({"x", "y"}, {{"x", "x"}, {"x", "y"}, {"y", "y"}}); }

// b below t1 and t2
FinPoset vee() { return FinPoset::from_edges({"b", "t1", "t2"}, {{0, 1}, {0, 2}}); }

// Independent oracle: regular opens straight from the definitions, on bit masks.
std::set<std::uint64_t> regular_open_masks(const FinPoset& p) {
  const std::size_t n = p.size();
  auto upset = [&](std::uint64_t s) {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((s >> i & 1) && p.leq(i, j) && !(s >> j & 1)) return false;
    return true;
  };
  auto closure = [&](std::uint64_t s) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if ((s >> j & 1) && p.leq(i, j)) out |= std::uint64_t{1} << i;
    return out;
  };
  auto interior = [&](std::uint64_t s) {
    std::uint64_t out = 0;
    for (std::size_t i = 0; i < n; ++i) {
      bool inside = true;
      for (std::size_t j = 0; j < n; ++j)
        if (p.leq(i, j) && !(s >> j & 1)) inside = false;
      if (inside) out |= std::uint64_t{1} << i;
    }
    return out;
  };
  std::set<std::uint64_t> out;
  for (std::uint64_t s = 0; s < (std::uint64_t{1} << n); ++s)
    if (upset(s) && interior(closure(s)) == s) out.insert(s);
  return out;
}

std::uint64_t to_mask(const ElementSet& s) {
  std::uint64_t m = 0;
  for (auto i : members_of(s)) m |= std::uint64_t{1} << i;
  return m;
}

}  // namespace

TEST(FinPoset, RejectsBadRelations) {
  EXPECT_THROW(FinPoset::from_relation({}, {}), ValidationError);
  EXPECT_THROW(FinPoset::from_relation({"a", "a"}, {{"a", "a"}}), ValidationError);
  EXPECT_THROW(FinPoset::from_relation({"a", "b"}, {{"a", "a"}}), ValidationError);
  EXPECT_THROW(FinPoset::from_relation({"a", "b"}, {{"a", "a"}, {"b", "b"}, {"a", "b"}, {"b", "a"}}),
               ValidationError);
  EXPECT_THROW(FinPoset::from_relation({"a", "b", "c"},
                                       {{"a", "a"}, {"b", "b"}, {"c", "c"}, {"a", "b"}, {"b", "c"}}),
               ValidationError);
  EXPECT_THROW(FinPoset::from_relation({"a"}, {{"a", "z"}}), ValidationError);
}

TEST(FinPoset, OnePointPosetIsAllowed) {
  auto p = FinPoset::chain(1);
  EXPECT_EQ(p.size(), 1u);
  EXPECT_EQ(alexandroff_interior(p, p.full_set()), p.full_set());
  EXPECT_EQ(regular_opens(p).size(), 2u);
}

TEST(FinPoset, CoversOfVee) {
  auto v = vee();
  EXPECT_EQ(v.covers().size(), 2u);
  EXPECT_EQ(v.bottom(), std::optional<std::size_t>(0));
  EXPECT_FALSE(v.top().has_value());
}

TEST(Alexandroff, InteriorExamples) {
  auto c = two_chain();
  EXPECT_TRUE(alexandroff_interior(c, c.subset({0})).none());
  EXPECT_EQ(alexandroff_interior(c, c.full_set()), c.full_set());
  auto v = vee();
  EXPECT_EQ(alexandroff_interior(v, v.subset({1, 0})), v.subset({1}));
}

TEST(Alexandroff, ClosureExamples) {
  auto c = two_chain();
  EXPECT_EQ(alexandroff_closure(c, c.subset({1})), c.full_set());
  EXPECT_TRUE(alexandroff_closure(c, c.empty_set()).none());
  auto v = vee();
  EXPECT_EQ(alexandroff_closure(v, v.subset({1})), v.subset({0, 1}));
}

TEST(Alexandroff, OutOfRangeIsRejected) {
  auto v = vee();
  EXPECT_THROW(v.subset({3}), ValidationError);
  EXPECT_THROW(alexandroff_interior(v, ElementSet(5)), ValidationError);
}

TEST(Alexandroff, RegularOpenExamples) {
  EXPECT_EQ(regular_opens(two_chain()).size(), 2u);
  EXPECT_EQ(regular_opens(FinPoset::antichain(2)).size(), 4u);
  auto v = vee();
  auto ro = regular_opens(v);
  ASSERT_EQ(ro.size(), 4u);
  EXPECT_TRUE(ro.contains(v.empty_set()));
  EXPECT_TRUE(ro.contains(v.subset({1})));
  EXPECT_TRUE(ro.contains(v.subset({2})));
  EXPECT_TRUE(ro.contains(v.full_set()));
}

TEST(Alexandroff, InteriorClosureLawsOnRandomPosets) {
  Rng rng(11);
  for (int round = 0; round < 40; ++round) {
    auto p = random_poset(1 + rng.below(7), rng);
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << p.size()); ++m) {
      ElementSet s(p.size(), m);
      auto in = alexandroff_interior(p, s);
      auto cl = alexandroff_closure(p, s);
      ASSERT_TRUE(in.is_subset_of(s));
      ASSERT_TRUE(s.is_subset_of(cl));
      ASSERT_TRUE(p.is_upset(in));
      ASSERT_TRUE(p.is_downset(cl));
      ASSERT_EQ(alexandroff_interior(p, in), in);
      ASSERT_EQ(alexandroff_closure(p, cl), cl);
      for (std::uint64_t m2 = 0; m2 < (std::uint64_t{1} << p.size()); ++m2) {
        ElementSet t(p.size(), m2);
        if (!s.is_subset_of(t)) continue;
        ASSERT_TRUE(in.is_subset_of(alexandroff_interior(p, t)));
        ASSERT_TRUE(cl.is_subset_of(alexandroff_closure(p, t)));
      }
    }
  }
}

TEST(Alexandroff, RegularOpensMatchOracleAndFormBooleanAlgebra) {
  Rng rng(12);
  for (int round = 0; round < 60; ++round) {
    auto p = random_poset(1 + rng.below(8), rng);
    auto ro = regular_opens(p);
    std::set<std::uint64_t> got;
    for (const auto& u : ro.elements()) got.insert(to_mask(u));
    ASSERT_EQ(got, regular_open_masks(p));
    ASSERT_FALSE(ro.check_axioms().has_value()) << *ro.check_axioms();
    for (const auto& u : ro.elements()) {
      ASSERT_TRUE(ro.meet(u, ro.complement(u)).none());
      ASSERT_EQ(ro.join(u, ro.complement(u)), p.full_set());
    }
  }
}

TEST(FinLattice, DistributivityAndIrreducibles) {
  auto chain3 = FinLattice(FinPoset::chain(3));
  EXPECT_TRUE(chain3.is_distributive());
  EXPECT_EQ(chain3.join_irreducibles(), (std::vector<std::size_t>{1, 2}));
  // M3: 0 < a, b, c < 1
  auto m3 = FinLattice(FinPoset::from_edges({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_FALSE(m3.is_distributive());
  EXPECT_THROW(m3.require_distributive(), ValidationError);
  EXPECT_THROW(FinLattice{vee()}, ValidationError);
}

TEST(FinLattice, FiniteDistributiveLawCoversArbitraryJoins) {
  auto l = FinLattice(FinPoset::from_predicate({"0", "p", "q", "1"}, [](std::size_t i, std::size_t j) {
    return (i & j) == i;
  }));
  for (std::size_t a = 0; a < l.size(); ++a)
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << l.size()); ++m) {
      ElementSet s(l.size(), m);
      ElementSet meets(l.size());
      for (auto x : members_of(s)) meets.set(l.meet(a, x));
      EXPECT_EQ(l.meet(a, l.join_all(s)), l.join_all(meets));
    }
}

TEST(FreeFrame, TwoElementSemilattice) {
  FreeFrame f(FinPoset::chain(2));
  EXPECT_EQ(f.base().size(), 1u);
  EXPECT_EQ(all_downsets(f.base()).size(), 2u);
}

TEST(FreeFrame, OverFiltersOfFourElementAlgebra) {
  // Filt(℘{p,q}) under reverse inclusion is isomorphic to ℘{p,q} itself, ↑b ↦ b.
  auto m = FinPoset::from_predicate({"up0", "up_p", "up_q", "up1"},
                                    [](std::size_t i, std::size_t j) { return (i & j) == i; });
  FreeFrame f(m);
  EXPECT_EQ(f.base().size(), 3u);
  // Enumeration oracle: ∅, {p}, {q}, {p,q}, all.
  EXPECT_EQ(all_downsets(f.base()).size(), 5u);
  auto ip = f.generator(1);
  auto iq = f.generator(2);
  EXPECT_EQ(f.meet(ip, iq), f.generator(0));
  EXPECT_TRUE(f.meet(ip, iq).none());
  EXPECT_EQ(f.pseudocomplement(ip), iq);
  EXPECT_EQ(f.pseudocomplement(iq), ip);
  EXPECT_EQ(booleanize(f).size(), 4u);
}

TEST(FreeFrame, GeneratorMapPreservesBoundedMeets) {
  Rng rng(5);
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    const std::size_t n = std::size_t{1} << atoms;
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < n; ++i) labels.push_back("m" + std::to_string(i));
    auto m = FinPoset::from_predicate(labels, [](std::size_t i, std::size_t j) { return (i & j) == i; });
    FreeFrame f(m);
    EXPECT_EQ(f.generator(n - 1), f.top());
    EXPECT_EQ(f.generator(0), f.bottom());
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) EXPECT_EQ(f.generator(a & b), f.meet(f.generator(a), f.generator(b)));
  }
}

TEST(FreeFrame, InducedMorphismExtendsAndIsUnique) {
  // M = 3-chain 0 < m < 1; target frame = the 3-chain itself; f = identity.
  auto chain = FinPoset::chain(3);
  FreeFrame f(chain);
  FinLattice target(chain);
  std::vector<std::size_t> ident{0, 1, 2};
  for (std::size_t m = 0; m < 3; ++m) EXPECT_EQ(f.induced(f.generator(m), ident, target), m);
  // Every downset is a join of generators, so φ is pinned down by φ∘i.
  for (const auto& d : all_downsets(f.base())) {
    std::size_t acc = target.bottom();
    for (auto b : members_of(d)) acc = target.join(acc, f.induced(f.generator(f.source_index(b)), ident, target));
    EXPECT_EQ(f.induced(d, ident, target), acc);
  }
}

TEST(FreeFrame, PseudocomplementExamplesAndLaws) {
  auto h = FreeFrame::of_base(FinPoset::antichain(2));
  EXPECT_EQ(h.pseudocomplement(h.bottom()), h.top());
  ElementSet p(2);
  p.set(0);
  ElementSet q(2);
  q.set(1);
  EXPECT_EQ(h.pseudocomplement(p), q);
  Rng rng(3);
  for (int round = 0; round < 30; ++round) {
    auto h2 = FreeFrame::of_base(random_poset(1 + rng.below(6), rng));
    for (const auto& a : all_downsets(h2.base())) {
      auto s = h2.pseudocomplement(a);
      ASSERT_TRUE(h2.is_element(s));
      ASSERT_TRUE(h2.meet(a, s).none());
      ASSERT_TRUE(h2.leq(a, h2.double_pseudocomplement(a)));
      ASSERT_EQ(h2.pseudocomplement(h2.double_pseudocomplement(a)), s);
    }
  }
}

TEST(FreeFrame, BooleanizeExamples) {
  EXPECT_EQ(booleanize(FreeFrame::of_base(two_chain())).size(), 2u);
  for (std::size_t n = 1; n <= 4; ++n) {
    auto b = booleanize(FreeFrame::of_base(FinPoset::antichain(n)));
    EXPECT_EQ(b.size(), std::size_t{1} << n);
    EXPECT_FALSE(b.check_axioms().has_value());
  }
}

TEST(FreeFrame, BooleanizeFindsEveryRegularElement) {
  // Oracle: scan all downsets for fixed points of **.
  Rng rng(8);
  for (int round = 0; round < 30; ++round) {
    auto h = FreeFrame::of_base(random_poset(1 + rng.below(7), rng));
    std::size_t regular = 0;
    for (const auto& d : all_downsets(h.base()))
      if (h.double_pseudocomplement(d) == d) ++regular;
    auto b = booleanize(h);
    ASSERT_EQ(b.size(), regular);
    ASSERT_FALSE(b.check_axioms().has_value());
  }
}

TEST(FreeFrame, RejectsMissingBoundsAndMeets) {
  EXPECT_THROW(FreeFrame{vee()}, ValidationError);
  EXPECT_THROW(FreeFrame{FinPoset::chain(1)}, ValidationError);
  EXPECT_THROW(FreeFrame(FinPoset::from_edges({"a", "b", "t"}, {{0, 2}, {1, 2}})), ValidationError);
}

TEST(FreeBoolExt, ThreeChain) {
  FreeBoolExt ext{FinLattice(FinPoset::chain(3))};
  EXPECT_EQ(ext.join_irreducibles(), (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(ext.algebra().size(), 4u);
  EXPECT_EQ(ext.embed(1), ba::Mask{1});
  EXPECT_EQ(ext.embed(0), ba::Mask{0});
  EXPECT_EQ(ext.embed(2), ba::Mask{3});
}

TEST(FreeBoolExt, BooleanLatticeEmbedsIsomorphically) {
  auto l = FinLattice(FinPoset::from_predicate({"0", "p", "q", "1"}, [](std::size_t i, std::size_t j) {
    return (i & j) == i;
  }));
  FreeBoolExt ext(l);
  std::set<ba::Mask> images;
  for (std::size_t a = 0; a < l.size(); ++a) images.insert(ext.embed(a));
  EXPECT_EQ(images.size(), ext.algebra().size());
}

TEST(FreeBoolExt, RejectsNonDistributive) {
  auto m3 = FinLattice(FinPoset::from_edges({"0", "a", "b", "c", "1"}, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}));
  EXPECT_THROW(FreeBoolExt{m3}, ValidationError);
}

TEST(FreeBoolExt, EmbeddingIsBoundedLatticeMonoAndGenerates) {
  Rng rng(21);
  for (int round = 0; round < 20; ++round) {
    // Random distributive lattice: downsets of a random poset.
    auto q = random_poset(1 + rng.below(4), rng);
    auto downs = all_downsets(q);
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < downs.size(); ++i) labels.push_back("d" + std::to_string(i));
    FinLattice l(FinPoset::from_predicate(labels, [&](std::size_t i, std::size_t j) {
      return downs[i].is_subset_of(downs[j]);
    }));
    FreeBoolExt ext(l);
    EXPECT_EQ(ext.join_irreducibles().size(), q.size());
    std::set<ba::Mask> images;
    for (std::size_t a = 0; a < l.size(); ++a) {
      images.insert(ext.embed(a));
      for (std::size_t b = 0; b < l.size(); ++b) {
        EXPECT_EQ(ext.embed(l.meet(a, b)), ext.embed(a) & ext.embed(b));
        EXPECT_EQ(ext.embed(l.join(a, b)), ext.embed(a) | ext.embed(b));
      }
    }
    EXPECT_EQ(images.size(), l.size());
    EXPECT_EQ(ext.embed(l.bottom()), ext.algebra().zero());
    EXPECT_EQ(ext.embed(l.top()), ext.algebra().one());
    // Boolean closure of the image is everything.
    std::set<ba::Mask> closed = images;
    bool grew = true;
    while (grew) {
      grew = false;
      std::vector<ba::Mask> cur(closed.begin(), closed.end());
      for (auto a : cur) {
        grew |= closed.insert(ext.algebra().complement(a)).second;
        for (auto b : cur) grew |= closed.insert(a & b).second;
      }
    }
    EXPECT_EQ(closed.size(), ext.algebra().size());
  }
}

TEST(FreeBoolExt, UniversalPropertyAgainstEveryMorphismIntoSmallAlgebras) {
  // L = 3-chain; enumerate every bounded lattice morphism into ℘(2 atoms) and ℘(3 atoms).
  FinLattice l(FinPoset::chain(3));
  FreeBoolExt ext(l);
  for (std::size_t atoms = 1; atoms <= 3; ++atoms) {
    auto c = ba::FinBoolAlg::with_atoms(atoms);
    std::size_t morphisms = 0;
    for (ba::Mask mid = 0; mid < c.size(); ++mid) {
      std::vector<ba::Mask> lambda{c.zero(), mid, c.one()};
      auto tau = ext.extend(c, lambda);
      ++morphisms;
      for (std::size_t a = 0; a < l.size(); ++a) EXPECT_EQ(tau(ext.embed(a)), lambda[a]);
      for (ba::Mask s = 0; s < ext.algebra().size(); ++s) {
        EXPECT_EQ(tau(ext.algebra().complement(s)), c.complement(tau(s)));
        for (ba::Mask t = 0; t < ext.algebra().size(); ++t) EXPECT_EQ(tau(s & t), tau(s) & tau(t));
      }
      // Uniqueness: count boolean morphisms ℘(J) → C agreeing with λ on i[L].
      std::size_t agreeing = 0;
      for (ba::Mask x = 0; x < c.size(); ++x)
        for (ba::Mask y = 0; y < c.size(); ++y) {
          if ((x & y) != 0 || (x | y) != c.one()) continue;  // images of the two atoms partition 1
          std::vector<ba::Mask> img{0, x, x | y};
          auto tau2 = [&](ba::Mask s) { return ((s & 1) ? x : 0) | ((s & 2) ? y : 0); };
          bool ok = true;
          for (std::size_t a = 0; a < 3; ++a) ok &= tau2(ext.embed(a)) == lambda[a];
          agreeing += ok;
        }
      EXPECT_EQ(agreeing, 1u);
    }
    EXPECT_EQ(morphisms, c.size());
  }
}

TEST(FinLattice, RegularityOfBooleanLattices) {
  for (std::size_t atoms = 0; atoms <= 3; ++atoms) {
    std::vector<std::string> labels;
    for (std::size_t i = 0; i < (std::size_t{1} << atoms); ++i) labels.push_back(std::to_string(i));
    FinLattice l(FinPoset::from_predicate(labels, [](std::size_t i, std::size_t j) { return (i & j) == i; }));
    EXPECT_FALSE(l.regularity_violation().has_value());
  }
  // A 3-chain is not regular: the middle element has nothing well inside it but 0.
  EXPECT_TRUE(FinLattice(FinPoset::chain(3)).regularity_violation().has_value());
}
