#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "canext/io/json_core.hpp"
#include "canext/io/normal_json.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/normal_fn.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext::normal {

struct NormalPosetOptions {
  std::size_t samples = 200;
  std::uint64_t seed = 0;
  std::size_t exhaustive_cap = 8;  // the semicontinuity law visits 3^|X| functions
};

inline const std::vector<Rational>& three_values() {
  static const std::vector<Rational> v{Rational(0), Rational(1, 2), Rational(1)};
  return v;
}

/// Normalization, envelopes, semicontinuity, idempotents and the ℓ-algebra
/// identities on one finite poset.
inline Report verify_normal_poset(const FinPoset& x, const NormalPosetOptions& opt = {}) {
  auto p = std::make_shared<const FinPoset>(x);
  const Json pj = io::poset_json(x);
  Rng rng(opt.seed ^ (0x94d049bb133111ebULL * (x.size() + 1)));
  Report r;
  r.instance = {{"kind", "poset"}, {"poset", pj}, {"seed", opt.seed}};
  auto args = [&](Json extra) {
    extra["poset"] = pj;
    return extra;
  };

  {
    CheckRun run("envelopes", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const PosetFn f = random_fn(rng, p);
      run.expect(law::envelope_order(f), "normal.envelopes", args({{"f", io::values_json(f)}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    const bool exhaustive = x.size() <= opt.exhaustive_cap;
    CheckRun run("semicontinuity", exhaustive ? Mode::Exhaustive : Mode::Sampled);
    if (exhaustive) {
      for_each_valued(p, three_values(), [&](const PosetFn& f) {
        return run.expect(law::semicontinuity(f), "normal.semicontinuity", args({{"f", io::values_json(f)}}));
      });
    } else {
      for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
        std::vector<Rational> v(x.size());
        for (auto& y : v) y = three_values()[rng.below(3)];
        const PosetFn f(p, std::move(v));
        run.expect(law::semicontinuity(f), "normal.semicontinuity", args({{"f", io::values_json(f)}}));
      }
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("idempotents", Mode::Exhaustive);
    if (x.size() <= kIdempotentCap) {
      run.expect(law::idempotents_match(x), "normal.idempotents", args({}));
      run.witness({{"idempotents", normal_idempotents(x).size()}});
    } else {
      run.note("|X| above the enumeration cap; bijection with RO(X) not asserted");
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("n_identities", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const NormalFn f = random_normal(rng, p), g = random_normal(rng, p), h = random_normal(rng, p);
      const Rational a = boost::multiprecision::abs(rng.rational(4, 3)), b = boost::multiprecision::abs(rng.rational(4, 3));
      run.expect(law::n_identities(f, g, h, a, b), "normal.identities",
                 args({{"f", io::values_json(f)},
                       {"g", io::values_json(g)},
                       {"h", io::values_json(h)},
                       {"r", io::rational_json(a)},
                       {"s", io::rational_json(b)}}));
    }
    r.checks.push_back(run.finish());
  }
  return r;
}

/// The posets the normal-function suite runs over: the V, chains, antichains
/// and seeded random DAG closures of every size up to max_size.
inline std::vector<FinPoset> generated_posets(std::size_t max_size, std::uint64_t seed, std::size_t per_size = 3) {
  std::vector<FinPoset> out;
  out.push_back(FinPoset::from_edges({"b", "l", "r"}, {{0, 1}, {0, 2}}));
  for (std::size_t n = 1; n <= max_size; ++n) {
    out.push_back(FinPoset::chain(n));
    out.push_back(FinPoset::antichain(n));
    Rng rng(seed ^ (0x2545f4914f6cdd1dULL * n));
    for (std::size_t k = 0; k < per_size; ++k) out.push_back(random_poset(n, rng, 1 + k, 3));
  }
  return out;
}

struct NormalSpaceOptions {
  std::size_t samples = 500;
  std::uint64_t seed = 0;
};

inline Json normal_space_instance(const IdealSpace& x, std::uint64_t seed) {
  return {{"kind", "normal"}, {"dim", x.ctx().dim()}, {"points", x.size()}, {"maxima", x.maxima().size()}, {"seed", seed}};
}

/// φ, ψ and γ on X = proper ideals of ℚⁿ, and the commuting diagram.
inline Report verify_normal_space(const IdealSpace& x, const NormalSpaceOptions& opt = {}) {
  const auto& ctx = x.ctx();
  const std::size_t n = ctx.dim();
  Rng rng(opt.seed ^ (0xbf58476d1ce4e5b9ULL * (n + 1)));
  Report r;
  r.instance = normal_space_instance(x, opt.seed);
  auto args = [&](Json extra) {
    extra["dim"] = n;
    return extra;
  };
  auto random_d = [&]() { return random_lvec(rng, ctx.d_dim()); };
  auto random_n = [&]() { return NormalFn::normalized(random_fn(rng, x.poset_ptr())); };

  {
    CheckRun run("phi_generators", Mode::Exhaustive);
    for (const auto& i : ctx.all_ideals())
      run.expect(law::phi_generator(x, i), "normal.phi_generator", args({{"I", io::ideal_json(i)}}));
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("regular_open_pairs", Mode::Exhaustive);
    const auto all = ctx.all_ideals();
    for (const auto& i : all) {
      if (!run.expect(law::u_sets(x, i), "normal.u_sets", args({{"I", io::ideal_json(i)}}))) break;
      for (const auto& j : all)
        if (!run.expect(law::u_meet(x, i, j), "normal.u_meet", args({{"I", io::ideal_json(i)}, {"J", io::ideal_json(j)}}))) break;
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("phi_iso", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const LVec f = random_d(), g = random_d();
      const Rational t = rng.rational(5, 3);
      if (!run.expect(law::phi_hom(x, f, g, t), "normal.phi_hom",
                      args({{"f", io::vec_json(f)}, {"g", io::vec_json(g)}, {"r", io::rational_json(t)}})))
        break;
      const NormalFn h = random_n();
      run.expect(law::phi_bijective(x, f, g, h), "normal.phi_bijective",
                 args({{"f", io::vec_json(f)}, {"g", io::vec_json(g)}, {"h", io::values_json(h)}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("psi_iso", Mode::FiniteInstance);
    run.note("finite instance of an AC-dependent theorem");
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const NormalFn f = random_n(), g = random_n();
      const LVec h = random_lvec(rng, x.maxima().size());
      run.expect(law::psi_iso(x, f, g, h), "normal.psi_iso",
                 args({{"f", io::values_json(f)}, {"g", io::values_json(g)}, {"h", io::vec_json(h)}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("gamma", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const LVec a = random_lvec(rng, n);
      run.expect(law::gamma_closed_form(x, a), "normal.gamma", args({{"a", io::vec_json(a)}}));
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("diagram", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      const LVec a = random_lvec(rng, n);
      run.expect(law::diagram(x, a), "normal.diagram", args({{"a", io::vec_json(a)}}));
    }
    r.checks.push_back(run.finish());
  }
  return r;
}

}  // namespace canext::normal
