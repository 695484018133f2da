#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "canext/io/json_core.hpp"
#include "canext/lalg/ideal.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext::lalg {

namespace law {

using Failure = std::optional<std::string>;

/// On a coordinate ideal the hull formula, one k step and the intersection
/// oracle all return the ideal itself, and the hull test matches membership.
inline Failure hull_fixed(const LIdeal& i, const std::vector<LVec>& probes) {
  if (arch_hull(i) != i) return "ar<I> = " + arch_hull(i).label() + " for I = " + i.label();
  const LIdeal k = k_step(i);
  if (k != i) return "k(I) = " + k.label() + " for I = " + i.label();
  if (k_step(k) != k) return "k does not stabilize after one step";
  if (hull_by_intersection(i, probes) != i) return "intersection oracle disagrees at " + i.label();
  for (const auto& x : probes)
    if (hull_contains(i, x) != i.contains(x)) return "hull test disagrees with membership at " + to_string(x);
  return std::nullopt;
}

/// For the ℓ-ideal generated by S: hull formula, k step and oracle agree.
inline Failure hull_generated(std::size_t dim, const std::vector<LVec>& s, const std::vector<LVec>& probes) {
  const LIdeal g = lideal_generated(dim, s);
  const LIdeal h = arch_hull(dim, s);
  if (h != k_step(g)) return "ar<S> = " + h.label() + " but k(<S>) = " + k_step(g).label();
  if (h != hull_by_intersection(g, probes)) return "ar<S> disagrees with the intersection oracle";
  if (!g.subset_of(h)) return "<S> is not contained in ar<S>";
  return std::nullopt;
}

}  // namespace law

struct HullOptions {
  std::size_t samples = 200;
  std::size_t probes = 12;
  std::uint64_t seed = 0;
};

inline std::vector<LVec> hull_probes(Rng& rng, std::size_t n, std::size_t count) {
  std::vector<LVec> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(LVec::indicator(n, CoordMask{1} << i));
  out.push_back(LVec::one(n));
  while (out.size() < n + 1 + count) out.push_back(random_lvec(rng, n));
  return out;
}

inline Report verify_hull(std::size_t dim, const HullOptions& opt = {}) {
  Rng rng(opt.seed ^ (0xd6e8feb86659fd93ULL * (dim + 1)));
  Report r;
  r.instance = {{"kind", "lalg"}, {"dim", dim}, {"seed", opt.seed}, {"suite", "hull"}};
  auto args = [&](Json extra) {
    extra["dim"] = dim;
    return extra;
  };
  {
    CheckRun run("hull_coordinate_ideals", Mode::Exhaustive);
    const auto probes = hull_probes(rng, dim, opt.probes);
    const Json pj = io::vecs_json(probes);
    for (CoordMask z = 0; z <= full_mask(dim); ++z) {
      const LIdeal i(dim, z);
      if (!run.expect(law::hull_fixed(i, probes), "lalg.hull_fixed", args({{"I", io::ideal_json(i)}, {"probes", pj}}))) break;
    }
    r.checks.push_back(run.finish());
  }
  {
    CheckRun run("hull_generated", Mode::Sampled);
    for (std::size_t k = 0; k < opt.samples && run.passing(); ++k) {
      std::vector<LVec> s;
      const auto count = rng.below(3);
      for (std::uint64_t t = 0; t < count; ++t) s.push_back(random_lvec(rng, dim));
      const auto probes = hull_probes(rng, dim, 4);
      run.expect(law::hull_generated(dim, s, probes), "lalg.hull_generated",
                 args({{"S", io::vecs_json(s)}, {"probes", io::vecs_json(probes)}}));
    }
    r.checks.push_back(run.finish());
  }
  return r;
}

}  // namespace canext::lalg
