#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "canext/ba/canonical_extension.hpp"
#include "canext/bal/appendix.hpp"
#include "canext/bal/verify.hpp"
#include "canext/io/json_core.hpp"
#include "canext/io/normal_json.hpp"
#include "canext/lalg/verify.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/normal_fn.hpp"

namespace canext {

/// Maps a law id, as recorded in counterexamples, to a decoder that rebuilds
/// the instance from the args and evaluates the law again.
class LawRegistry {
 public:
  using Failure = std::optional<std::string>;
  using Law = std::function<Failure(const Json&)>;

  LawRegistry() { install(); }

  bool has(const std::string& id) const { return laws_.count(id) != 0; }

  std::vector<std::string> ids() const {
    std::vector<std::string> out;
    for (const auto& [k, v] : laws_) out.push_back(k);
    return out;
  }

  /// Re-evaluates one law. Unknown ids and malformed args throw ValidationError.
  Failure evaluate(const std::string& id, const Json& args) const {
    auto it = laws_.find(id);
    if (it == laws_.end()) throw ValidationError("unknown law '" + id + "'");
    try {
      return it->second(args);
    } catch (const Json::exception& e) {
      throw ValidationError(std::string("malformed args for ") + id + ": " + e.what());
    }
  }

 private:
  struct BalEntry {
    std::unique_ptr<bal::CanExtContext> ctx;
    std::unique_ptr<normal::IdealSpace> space;
  };

  const ba::CanonicalExtensionBA& ba_ctx(const Json& args) const {
    const ba::FinBoolAlg b = io::parse_boolalg(args);
    const std::string key = io::boolalg_json(b).dump();
    auto it = ba_cache_.find(key);
    if (it == ba_cache_.end()) it = ba_cache_.emplace(key, std::make_unique<ba::CanonicalExtensionBA>(b)).first;
    return *it->second;
  }

  BalEntry& bal_entry(const Json& args) const {
    const auto dim = io::require_field(args, "dim").get<std::size_t>();
    auto it = bal_cache_.find(dim);
    if (it == bal_cache_.end()) {
      BalEntry e;
      e.ctx = std::make_unique<bal::CanExtContext>(dim);
      it = bal_cache_.emplace(dim, std::move(e)).first;
    }
    return it->second;
  }
  const bal::CanExtContext& bal_ctx(const Json& args) const { return *bal_entry(args).ctx; }
  const normal::IdealSpace& space(const Json& args) const {
    BalEntry& e = bal_entry(args);
    if (!e.space) e.space = std::make_unique<normal::IdealSpace>(*e.ctx);
    return *e.space;
  }

  static lalg::LVec vec(const Json& args, const char* key) { return io::parse_vec(io::require_field(args, key)); }
  static std::vector<lalg::LVec> vecs(const Json& args, const char* key) { return io::parse_vecs(io::require_field(args, key)); }
  static Rational rat(const Json& args, const char* key) { return io::parse_rational_json(io::require_field(args, key)); }
  static lalg::LIdeal ideal(const Json& args, const char* key) { return io::parse_ideal(io::require_field(args, key)); }
  static ba::Mask mask(const Json& args, const char* key) { return io::require_field(args, key).get<ba::Mask>(); }
  static std::vector<ba::Mask> masks(const Json& args, const char* key) {
    return io::require_field(args, key).get<std::vector<ba::Mask>>();
  }

  std::shared_ptr<const order::FinPoset> poset(const Json& args) const {
    return std::make_shared<const order::FinPoset>(io::parse_poset(io::require_field(args, "poset")));
  }
  static normal::PosetFn fn_on(const std::shared_ptr<const order::FinPoset>& p, const Json& args, const char* key) {
    return io::parse_values(io::require_field(args, key), p);
  }
  normal::NormalFn normal_on_space(const Json& args, const char* key) const {
    return normal::NormalFn(io::parse_values(io::require_field(args, key), space(args).poset_ptr()));
  }

  void install() {
    // ba
    laws_["ba.e_regular"] = [this](const Json& a) { return ba::law::e_regular(ba_ctx(a), mask(a, "a")); };
    laws_["ba.e_complement"] = [this](const Json& a) { return ba::law::e_complement(ba_ctx(a), mask(a, "a")); };
    laws_["ba.e_pseudocomplement"] = [this](const Json& a) { return ba::law::e_pseudocomplement(ba_ctx(a), mask(a, "a")); };
    laws_["ba.e_meet"] = [this](const Json& a) { return ba::law::e_meet(ba_ctx(a), mask(a, "a"), mask(a, "b")); };
    laws_["ba.e_join"] = [this](const Json& a) { return ba::law::e_join(ba_ctx(a), mask(a, "a"), mask(a, "b")); };
    laws_["ba.e_injective"] = [this](const Json& a) { return ba::law::e_injective(ba_ctx(a), mask(a, "a"), mask(a, "b")); };
    laws_["ba.size"] = [this](const Json& a) -> Failure {
      const auto& c = ba_ctx(a);
      if (c.extension().size() != c.algebra().size())
        return "|C| = " + std::to_string(c.extension().size()) + ", |B| = " + std::to_string(c.algebra().size());
      return std::nullopt;
    };
    laws_["ba.e_surjective"] = [this](const Json& a) {
      const auto& c = ba_ctx(a);
      return ba::law::e_surjective(c, c.from_generators(masks(a, "element")));
    };
    laws_["ba.dense_generator"] = [this](const Json& a) { return ba::law::dense_generator(ba_ctx(a), mask(a, "g")); };
    laws_["ba.dense_join"] = [this](const Json& a) {
      const auto& c = ba_ctx(a);
      return ba::law::dense_join(c, c.from_generators(masks(a, "element")));
    };
    laws_["ba.compact"] = [this](const Json& a) { return ba::law::compact(ba_ctx(a), masks(a, "S")); };
    laws_["ba.ro_membership"] = [this](const Json& a) { return ba::law::ro_membership(ba_ctx(a), mask(a, "a")); };
    laws_["ba.ro_iso"] = [this](const Json& a) { return ba::law::ro_iso(ba_ctx(a)); };
    laws_["ba.ro_size"] = [this](const Json& a) { return ba::law::ro_size(ba_ctx(a)); };
    laws_["ba.upsets_iso"] = [this](const Json& a) { return ba::law::upsets_iso(ba_ctx(a), masks(a, "filters")); };

    // lalg
    laws_["lalg.hull_fixed"] = [](const Json& a) { return lalg::law::hull_fixed(ideal(a, "I"), vecs(a, "probes")); };
    laws_["lalg.hull_generated"] = [](const Json& a) {
      return lalg::law::hull_generated(io::require_field(a, "dim").get<std::size_t>(), vecs(a, "S"), vecs(a, "probes"));
    };

    // bal
    laws_["bal.alpha_unit"] = [this](const Json& a) { return bal::law::alpha_unit(bal_ctx(a)); };
    laws_["bal.alpha_hom"] = [this](const Json& a) { return bal::law::alpha_hom(bal_ctx(a), vec(a, "a"), vec(a, "b"), rat(a, "r")); };
    laws_["bal.alpha_injective"] = [this](const Json& a) { return bal::law::alpha_injective(bal_ctx(a), vec(a, "a"), vec(a, "b")); };
    laws_["bal.alpha_shift"] = [this](const Json& a) {
      return bal::law::alpha_shift(bal_ctx(a), vec(a, "a"), rat(a, "s1"), rat(a, "s2"));
    };
    laws_["bal.theta_zeta"] = [this](const Json& a) { return bal::law::theta_zeta(bal_ctx(a), vec(a, "a")); };
    laws_["bal.sup_closed_form"] = [this](const Json& a) {
      return bal::law::sup_closed_form(bal_ctx(a), vec(a, "a"), ideal(a, "ideal"));
    };
    laws_["bal.nonnegative_form"] = [this](const Json& a) { return bal::law::nonnegative_form(bal_ctx(a), vec(a, "a")); };
    laws_["bal.monotone"] = [this](const Json& a) { return bal::law::monotone(bal_ctx(a), vec(a, "a"), vec(a, "b")); };
    laws_["bal.translate"] = [this](const Json& a) { return bal::law::translate(bal_ctx(a), vec(a, "a"), rat(a, "t")); };
    laws_["bal.dense_below"] = [this](const Json& a) { return bal::law::dense_below(bal_ctx(a), ideal(a, "ideal"), vec(a, "a")); };
    laws_["bal.dense_meet"] = [this](const Json& a) {
      return bal::law::dense_meet(bal_ctx(a), ideal(a, "ideal"), vecs(a, "family"));
    };
    laws_["bal.dense_join"] = [this](const Json& a) { return bal::law::dense_join(bal_ctx(a), vec(a, "f")); };
    laws_["bal.compact_join"] = [this](const Json& a) { return bal::law::compact_join(bal_ctx(a), vecs(a, "T"), rat(a, "eps")); };
    laws_["bal.compact_pair"] = [this](const Json& a) {
      return bal::law::compact_pair(bal_ctx(a), vecs(a, "S"), vecs(a, "T"), rat(a, "eps"));
    };

    // appendix
    laws_["app.scaled_meet"] = [](const Json& a) { return bal::law::scaled_meet(vec(a, "e"), vec(a, "f"), rat(a, "r"), rat(a, "s")); };
    laws_["app.join_above_scalar"] = [](const Json& a) { return bal::law::join_above_scalar(vec(a, "a"), rat(a, "r"), rat(a, "s")); };
    laws_["app.sum_to_unit"] = [](const Json& a) { return bal::law::sum_to_unit(ideal(a, "I"), ideal(a, "J")); };
    laws_["app.join_hull"] = [this](const Json& a) { return bal::law::join_is_hull_of_sum(bal_ctx(a), ideal(a, "I"), ideal(a, "J")); };
    laws_["app.x_join"] = [this](const Json& a) { return bal::law::x_as_join(bal_ctx(a), ideal(a, "I")); };
    laws_["app.join_decomposition"] = [this](const Json& a) { return bal::law::join_decomposition(bal_ctx(a), vec(a, "f")); };
    laws_["app.join_shift"] = [this](const Json& a) {
      std::vector<Rational> r;
      for (const auto& x : io::require_field(a, "r")) r.push_back(io::parse_rational_json(x));
      return bal::law::join_shift(bal_ctx(a), r, rat(a, "t"));
    };
    laws_["app.unit_gap"] = [](const Json& a) { return bal::law::unit_gap(vec(a, "a"), rat(a, "t")); };
    laws_["app.separating"] = [this](const Json& a) {
      return bal::law::separating_ideal(bal_ctx(a), ideal(a, "I"), ideal(a, "J"), vec(a, "a"));
    };
    laws_["app.generated"] = [](const Json& a) {
      return bal::law::generated_membership(io::require_field(a, "dim").get<std::size_t>(), vecs(a, "S"), vec(a, "x"));
    };
    laws_["app.below"] = [this](const Json& a) { return bal::law::below_from_hypothesis(bal_ctx(a), vec(a, "f"), vec(a, "g")); };
    laws_["app.sup_attained"] = [](const Json& a) { return bal::law::sup_attained(vec(a, "a"), ideal(a, "I")); };
    laws_["app.alpha_bound"] = [this](const Json& a) {
      return bal::law::alpha_bound_iff(bal_ctx(a), vec(a, "a"), ideal(a, "I"), rat(a, "r"));
    };
    laws_["app.sup_alpha"] = [this](const Json& a) { return bal::law::sup_via_alpha(bal_ctx(a), vec(a, "a"), ideal(a, "I")); };

    // normal functions on a poset
    laws_["normal.envelopes"] = [this](const Json& a) { return normal::law::envelope_order(fn_on(poset(a), a, "f")); };
    laws_["normal.semicontinuity"] = [this](const Json& a) { return normal::law::semicontinuity(fn_on(poset(a), a, "f")); };
    laws_["normal.idempotents"] = [this](const Json& a) { return normal::law::idempotents_match(*poset(a)); };
    laws_["normal.identities"] = [this](const Json& a) {
      auto p = poset(a);
      auto nf = [&](const char* k) { return normal::NormalFn(fn_on(p, a, k)); };
      return normal::law::n_identities(nf("f"), nf("g"), nf("h"), rat(a, "r"), rat(a, "s"));
    };

    // normal functions on the ideal space
    laws_["normal.phi_generator"] = [this](const Json& a) { return normal::law::phi_generator(space(a), ideal(a, "I")); };
    laws_["normal.u_sets"] = [this](const Json& a) { return normal::law::u_sets(space(a), ideal(a, "I")); };
    laws_["normal.u_meet"] = [this](const Json& a) { return normal::law::u_meet(space(a), ideal(a, "I"), ideal(a, "J")); };
    laws_["normal.phi_hom"] = [this](const Json& a) { return normal::law::phi_hom(space(a), vec(a, "f"), vec(a, "g"), rat(a, "r")); };
    laws_["normal.phi_bijective"] = [this](const Json& a) {
      return normal::law::phi_bijective(space(a), vec(a, "f"), vec(a, "g"), normal_on_space(a, "h"));
    };
    laws_["normal.psi_iso"] = [this](const Json& a) {
      return normal::law::psi_iso(space(a), normal_on_space(a, "f"), normal_on_space(a, "g"), vec(a, "h"));
    };
    laws_["normal.gamma"] = [this](const Json& a) { return normal::law::gamma_closed_form(space(a), vec(a, "a")); };
    laws_["normal.diagram"] = [this](const Json& a) { return normal::law::diagram(space(a), vec(a, "a")); };
  }

  std::map<std::string, Law> laws_;
  mutable std::map<std::string, std::unique_ptr<ba::CanonicalExtensionBA>> ba_cache_;
  mutable std::map<std::size_t, BalEntry> bal_cache_;
};

}  // namespace canext
