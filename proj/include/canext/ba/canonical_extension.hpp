#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "canext/ba/boolean_algebra.hpp"
#include "canext/ba/filters.hpp"
#include "canext/error.hpp"
#include "canext/order/alexandroff.hpp"
#include "canext/order/free_frame.hpp"
#include "canext/order/set_algebra.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext::ba {

using order::ElementSet;

/// C = 𝔅(𝓛) with 𝓛 the free frame on Filt(B), and e(b) = i(↑b).
class CanonicalExtensionBA {
 public:
  explicit CanonicalExtensionBA(FinBoolAlg b)
      : filters_(std::move(b)), frame_(filters_.filt()), boolean_(order::booleanize(frame_)) {
    for (auto g : algebra().elements()) e_.push_back(frame_.generator(g));
  }

  const FinBoolAlg& algebra() const { return filters_.algebra(); }
  const FilterPoset& filters() const { return filters_; }
  const order::FreeFrame& frame() const { return frame_; }
  const order::SetBooleanAlgebra& extension() const { return boolean_; }

  /// e(b), a downset of the proper filters under reverse inclusion.
  const ElementSet& e(Mask b) const { return e_.at(b); }

  /// Frame-base index of the proper filter ↑g.
  std::size_t base_of(Mask g) const { return *frame_.base_index(g); }
  Mask generator_of_base(std::size_t base) const { return static_cast<Mask>(frame_.source_index(base)); }

  /// Element of C as the generator masks of its filters, for reports.
  std::vector<Mask> generators(const ElementSet& c) const {
    std::vector<Mask> out;
    for (auto k = c.find_first(); k != ElementSet::npos; k = c.find_next(k)) out.push_back(generator_of_base(k));
    std::sort(out.begin(), out.end());
    return out;
  }

  ElementSet from_generators(const std::vector<Mask>& gens) const {
    ElementSet out(frame_.base().size());
    for (auto g : gens) {
      if (g == 0 || !algebra().contains(g)) throw ValidationError("not a proper filter generator");
      out.set(base_of(g));
    }
    return out;
  }

  /// ⋀ e[S] in C; the empty meet is the top.
  ElementSet meet_of(const std::vector<Mask>& s) const {
    ElementSet acc = boolean_.top();
    for (auto b : s) acc &= e(b);
    return acc;
  }

  /// φ(D) = ⋃{ f(F) | F ∈ D } with f(F) = { G ∈ X | F ⊆ G }.
  ElementSet phi(const ElementSet& d) const {
    const auto& x = filters_.proper();
    std::vector<ElementSet> f;
    for (auto g : algebra().elements()) {
      ElementSet up(x.size());
      for (std::size_t k = 0; k < x.size(); ++k)
        if (algebra().leq(FilterPoset::x_generator(k), g)) up.set(k);
      f.push_back(std::move(up));
    }
    return frame_.induced_sets(d, f, x.size());
  }

  /// { G ∈ X | b ∈ G }
  ElementSet filters_containing(Mask b) const {
    const auto& x = filters_.proper();
    ElementSet out(x.size());
    for (std::size_t k = 0; k < x.size(); ++k)
      if (algebra().leq(FilterPoset::x_generator(k), b)) out.set(k);
    return out;
  }

 private:
  FilterPoset filters_;
  order::FreeFrame frame_;
  order::SetBooleanAlgebra boolean_;
  std::vector<ElementSet> e_;
};

inline CanonicalExtensionBA canonical_extension_ba(FinBoolAlg b) { return CanonicalExtensionBA(std::move(b)); }

// ---------------------------------------------------------------------------
// Laws. Each returns the failure text, or nothing when the law holds.

namespace law {

inline std::optional<std::string> e_meet(const CanonicalExtensionBA& c, Mask a, Mask b) {
  const auto& bx = c.algebra();
  if (c.e(bx.meet(a, b)) != c.extension().meet(c.e(a), c.e(b))) return "e(a and b) != e(a) and e(b)";
  return std::nullopt;
}

inline std::optional<std::string> e_join(const CanonicalExtensionBA& c, Mask a, Mask b) {
  const auto& bx = c.algebra();
  if (c.e(bx.join(a, b)) != c.extension().join(c.e(a), c.e(b))) return "e(a or b) != e(a) or e(b)";
  return std::nullopt;
}

inline std::optional<std::string> e_complement(const CanonicalExtensionBA& c, Mask a) {
  if (c.e(c.algebra().complement(a)) != c.extension().complement(c.e(a))) return "e(not a) != not e(a)";
  return std::nullopt;
}

inline std::optional<std::string> e_pseudocomplement(const CanonicalExtensionBA& c, Mask a) {
  if (c.frame().pseudocomplement(c.e(a)) != c.e(c.algebra().complement(a))) return "i(^a)* != i(^not a)";
  return std::nullopt;
}

inline std::optional<std::string> e_injective(const CanonicalExtensionBA& c, Mask a, Mask b) {
  if (a != b && c.e(a) == c.e(b)) return "e identifies distinct elements";
  return std::nullopt;
}

inline std::optional<std::string> e_regular(const CanonicalExtensionBA& c, Mask a) {
  if (!c.extension().contains(c.e(a))) return "e(a) is not a regular element";
  return std::nullopt;
}

/// Every element of C is e(b) for some b.
inline std::optional<std::string> e_surjective(const CanonicalExtensionBA& c, const ElementSet& x) {
  for (auto b : c.algebra().elements())
    if (c.e(b) == x) return std::nullopt;
  return "element outside the image of e";
}

/// i(F) = ⋀{ e(b) | b ∈ F } for the proper filter F = ↑g.
inline std::optional<std::string> dense_generator(const CanonicalExtensionBA& c, Mask g) {
  const ElementSet ig = c.frame().generator(g);
  if (ig != c.meet_of(c.filters().members(g))) return "i(F) differs from the meet of e[F]";
  return std::nullopt;
}

/// x = ⋁{ ⋀e[F] | F ∈ x } in C.
inline std::optional<std::string> dense_join(const CanonicalExtensionBA& c, const ElementSet& x) {
  ElementSet acc = c.extension().bottom();
  for (auto g : c.generators(x)) acc = c.extension().join(acc, c.meet_of(c.filters().members(g)));
  if (acc != x) return "element is not the join of the meets of e over its filters";
  return std::nullopt;
}

/// ⋀e[S] = 0 forces ⋀S = 0 for the finite subset S itself.
inline std::optional<std::string> compact(const CanonicalExtensionBA& c, const std::vector<Mask>& s) {
  if (c.meet_of(s).any()) return std::nullopt;
  Mask acc = c.algebra().one();
  for (auto b : s) acc = c.algebra().meet(acc, b);
  if (acc != 0) return "meet of e[S] is 0 but no finite part of S meets to 0";
  return std::nullopt;
}

inline std::optional<std::string> ro_membership(const CanonicalExtensionBA& c, Mask b) {
  if (c.phi(c.e(b)) != c.filters_containing(b)) return "phi(e(b)) != { G in X | b in G }";
  return std::nullopt;
}

/// φ restricted to C is a boolean isomorphism onto RO(X).
inline std::optional<std::string> ro_iso(const CanonicalExtensionBA& c) {
  const auto& x = c.filters().proper();
  const auto ro = order::regular_opens(x);
  const auto& cb = c.extension();
  if (ro.size() != cb.size()) return "|RO(X)| = " + std::to_string(ro.size()) + " but |C| = " + std::to_string(cb.size());
  std::vector<ElementSet> image;
  for (const auto& d : cb.elements()) {
    ElementSet p = c.phi(d);
    if (!ro.contains(p)) return "phi(d) is not a regular open";
    image.push_back(p);
  }
  for (std::size_t i = 0; i < image.size(); ++i) {
    if (ro.complement(image[i]) != c.phi(cb.complement(cb.at(i)))) return "phi does not preserve complement";
    for (std::size_t j = i + 1; j < image.size(); ++j) {
      if (image[i] == image[j]) return "phi is not injective";
      if (ro.meet(image[i], image[j]) != c.phi(cb.meet(cb.at(i), cb.at(j)))) return "phi does not preserve meet";
      if (ro.join(image[i], image[j]) != c.phi(cb.join(cb.at(i), cb.at(j)))) return "phi does not preserve join";
    }
  }
  return std::nullopt;
}

inline std::optional<std::string> ro_size(const CanonicalExtensionBA& c) {
  const auto ro = order::regular_opens(c.filters().proper());
  if (ro.size() != c.algebra().size())
    return "|RO(X)| = " + std::to_string(ro.size()) + " but |B| = " + std::to_string(c.algebra().size());
  return std::nullopt;
}

/// A set of proper filters is a downset of the free-frame base iff it is an
/// upset of X: the identity on filter sets is an order isomorphism Dn ≅ Up.
inline std::optional<std::string> upsets_iso(const CanonicalExtensionBA& c, const std::vector<Mask>& gens) {
  const auto& x = c.filters().proper();
  ElementSet in_base = c.from_generators(gens);
  ElementSet in_x(x.size());
  for (auto g : gens) in_x.set(FilterPoset::x_index(g));
  if (c.frame().base().is_downset(in_base) != x.is_upset(in_x)) return "downset of the base but not an upset of X, or back";
  return std::nullopt;
}

}  // namespace law

// ---------------------------------------------------------------------------

inline Json ba_instance(const FinBoolAlg& b) { return {{"kind", "boolalg"}, {"atoms", b.atoms()}}; }

inline std::vector<Mask> subset_members(std::uint64_t bits, std::size_t n) {
  std::vector<Mask> out;
  for (std::size_t k = 0; k < n; ++k)
    if (bits >> k & 1) out.push_back(static_cast<Mask>(k));
  return out;
}

struct BaVerifyOptions {
  std::size_t exhaustive_cap = 16;    // |B| up to which compactness is exhaustive
  std::size_t sampled_subsets = 1000;
  std::uint64_t seed = 0;
  std::size_t ro_cap = 16;            // |X| up to which RO(X) is enumerated
};

/// Checks e : B → C for embedding, density and compactness, and the
/// isomorphism onto the regular opens of the proper-filter space.
inline Report verify_canonical_ba(const CanonicalExtensionBA& c, const BaVerifyOptions& opt = {}) {
  const auto& b = c.algebra();
  const Json atoms = b.atoms();
  Report r;
  r.instance = ba_instance(b);
  auto args = [&](Json extra) {
    extra["atoms"] = atoms;
    return extra;
  };

  {
    CheckRun run("embedding", Mode::Exhaustive);
    for (auto x : b.elements()) {
      if (!run.expect(law::e_regular(c, x), "ba.e_regular", args({{"a", x}}))) break;
      if (!run.expect(law::e_complement(c, x), "ba.e_complement", args({{"a", x}}))) break;
      for (auto y : b.elements()) {
        if (!run.expect(law::e_meet(c, x, y), "ba.e_meet", args({{"a", x}, {"b", y}}))) break;
        if (!run.expect(law::e_join(c, x, y), "ba.e_join", args({{"a", x}, {"b", y}}))) break;
        if (!run.expect(law::e_injective(c, x, y), "ba.e_injective", args({{"a", x}, {"b", y}}))) break;
      }
      if (!run.passing()) break;
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("pseudocomplement", Mode::Exhaustive);
    for (auto x : b.elements())
      if (!run.expect(law::e_pseudocomplement(c, x), "ba.e_pseudocomplement", args({{"a", x}}))) break;
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("surjective", Mode::Exhaustive);
    run.expect(c.extension().size() == b.size(), "ba.size", args({}),
               "|C| = " + std::to_string(c.extension().size()) + ", |B| = " + std::to_string(b.size()));
    for (const auto& x : c.extension().elements())
      if (!run.expect(law::e_surjective(c, x), "ba.e_surjective", args({{"element", c.generators(x)}}))) break;
    run.witness({{"size", c.extension().size()}});
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("dense", Mode::Exhaustive);
    for (Mask g = 1; g < b.size(); ++g)
      if (!run.expect(law::dense_generator(c, g), "ba.dense_generator", args({{"g", g}}))) break;
    for (const auto& x : c.extension().elements())
      if (!run.expect(law::dense_join(c, x), "ba.dense_join", args({{"element", c.generators(x)}}))) break;
    r.checks.push_back(run.finish());
  }
  {
    const bool exhaustive = b.size() <= opt.exhaustive_cap;
    CheckRun run("compact", exhaustive ? Mode::Exhaustive : Mode::Sampled);
    Json example;
    auto one = [&](const std::vector<Mask>& s) {
      if (example.is_null() && s.size() >= 2 && c.meet_of(s).none()) example = {{"S", s}, {"S0", s}};
      return run.expect(law::compact(c, s), "ba.compact", args({{"S", s}}));
    };
    if (exhaustive) {
      const std::uint64_t total = std::uint64_t{1} << b.size();
      for (std::uint64_t bits = 0; bits < total; ++bits)
        if (!one(subset_members(bits, b.size()))) break;
    } else {
      Rng rng(opt.seed);
      for (std::size_t t = 0; t < opt.sampled_subsets; ++t) {
        std::vector<Mask> s;
        for (auto x : b.elements())
          if (rng.chance(1, 8)) s.push_back(x);
        if (!one(s)) break;
      }
      run.note("subsets sampled; a finite sample can witness but not prove compactness");
    }
    if (!example.is_null()) run.witness(example);
    r.checks.push_back(run.finish());
  }

  if (c.filters().proper().size() <= opt.ro_cap) {
    {
      CheckRun run("ro_iso", Mode::Exhaustive);
      for (auto x : b.elements())
        if (!run.expect(law::ro_membership(c, x), "ba.ro_membership", args({{"a", x}}))) break;
      run.expect(law::ro_iso(c), "ba.ro_iso", args({}));
      r.checks.push_back(run.finish());
    }
    {
      CheckRun run("ro_size", Mode::Exhaustive);
      run.expect(law::ro_size(c), "ba.ro_size", args({}));
      r.checks.push_back(run.finish());
    }
    {
      CheckRun run("upsets_iso", Mode::Exhaustive);
      const std::size_t n = c.filters().proper().size();
      const std::uint64_t total = std::uint64_t{1} << n;
      for (std::uint64_t bits = 0; bits < total; ++bits) {
        std::vector<Mask> gens;
        for (std::size_t k = 0; k < n; ++k)
          if (bits >> k & 1) gens.push_back(FilterPoset::x_generator(k));
        if (!run.expect(law::upsets_iso(c, gens), "ba.upsets_iso", args({{"filters", gens}}))) break;
      }
      r.checks.push_back(run.finish());
    }
  } else {
    CheckRun run("ro_iso", Mode::FiniteInstance);
    for (auto x : b.elements())
      if (!run.expect(law::ro_membership(c, x), "ba.ro_membership", args({{"a", x}}))) break;
    run.note("X above the enumeration cap; only phi(e(b)) = {G | b in G} checked");
    r.checks.push_back(run.finish());
  }
  return r;
}

}  // namespace canext::ba
