#pragma once

#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "canext/ba/canonical_extension.hpp"
#include "canext/bal/appendix.hpp"
#include "canext/bal/context.hpp"
#include "canext/bal/verify.hpp"
#include "canext/io/json_core.hpp"
#include "canext/lalg/verify.hpp"
#include "canext/laws.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/verify.hpp"
#include "canext/random.hpp"
#include "canext/report.hpp"

namespace canext {

struct SuiteConfig {
  std::size_t max_atoms = 4;
  std::size_t max_dim = 5;
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  std::vector<Rational> eps_grid{Rational(1, 2), Rational(1, 4), Rational(1, 8)};
  std::string output;

  void validate() const {
    if (max_atoms == 0 || max_dim == 0 || samples == 0) throw ValidationError("maxAtoms, maxDim and samples must be positive");
    if (max_atoms > 6) throw ValidationError("maxAtoms above 6 is not supported");
    if (max_dim > 6) throw ValidationError("maxDim above 6 is not supported");
    if (eps_grid.empty()) throw ValidationError("epsGrid must not be empty");
    for (const auto& e : eps_grid)
      if (e <= 0) throw ValidationError("epsGrid entries must be positive");
  }

  /// The output path is left out: it names where the report goes, not what it says.
  Json to_json() const {
    Json grid = Json::array();
    for (const auto& e : eps_grid) grid.push_back(io::rational_json(e));
    return {{"maxAtoms", max_atoms}, {"maxDim", max_dim}, {"samples", samples}, {"seed", seed}, {"epsGrid", grid}};
  }
};

inline std::uint64_t parse_seed_text(const std::string& s) {
  std::uint64_t v = 0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || end != s.data() + s.size()) throw ValidationError("seed must be a nonnegative integer, got '" + s + "'");
  return v;
}

inline std::uint64_t parse_seed(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::uint64_t>();
  if (j.is_number_integer() && j.get<std::int64_t>() >= 0) return static_cast<std::uint64_t>(j.get<std::int64_t>());
  if (j.is_string()) return parse_seed_text(j.get<std::string>());
  throw ValidationError("seed must be a nonnegative integer");
}

inline SuiteConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ValidationError("config must be a JSON object");
  SuiteConfig c;
  for (const auto& [key, value] : j.items()) {
    if (key == "maxAtoms") c.max_atoms = value.get<std::size_t>();
    else if (key == "maxDim") c.max_dim = value.get<std::size_t>();
    else if (key == "samples") c.samples = value.get<std::size_t>();
    else if (key == "seed") c.seed = parse_seed(value);
    else if (key == "epsGrid") {
      c.eps_grid.clear();
      for (const auto& e : value) c.eps_grid.push_back(io::parse_rational_json(e));
    } else if (key == "outputPath" || key == "output") c.output = value.get<std::string>();
    else throw ValidationError("unknown config key '" + key + "'");
  }
  c.validate();
  return c;
}

/// CANEXT_SEED, when set, replaces the configured seed.
inline void apply_env_seed(SuiteConfig& c) {
  if (const char* s = std::getenv("CANEXT_SEED"); s && *s) c.seed = parse_seed_text(s);
}

struct SuiteReport {
  Json config;
  std::vector<Report> reports;

  bool pass() const {
    for (const auto& r : reports)
      if (!r.pass()) return false;
    return true;
  }

  std::size_t failed_checks() const {
    std::size_t n = 0;
    for (const auto& r : reports)
      for (const auto& c : r.checks) n += c.pass ? 0 : 1;
    return n;
  }

  Json to_json(bool with_time = false) const {
    Json rs = Json::array();
    for (const auto& r : reports) rs.push_back(r.to_json(with_time));
    return {{"config", config}, {"reports", rs}, {"pass", pass()}};
  }
};

/// Runs every suite the config covers, in a fixed order.
inline SuiteReport run_suite(const SuiteConfig& c, const std::function<void(const Report&)>& progress = {}) {
  c.validate();
  SuiteReport out;
  out.config = c.to_json();
  auto add = [&](Report r) {
    if (progress) progress(r);
    out.reports.push_back(std::move(r));
  };

  for (std::size_t n = 1; n <= c.max_atoms; ++n) {
    auto ext = ba::canonical_extension_ba(ba::FinBoolAlg::with_atoms(n));
    add(ba::verify_canonical_ba(ext, {.sampled_subsets = c.samples, .seed = c.seed}));
  }
  for (std::size_t n = 1; n <= c.max_dim; ++n) add(lalg::verify_hull(n, {.samples = c.samples / 5 + 1, .seed = c.seed}));
  for (std::size_t n = 1; n <= c.max_dim; ++n) {
    bal::CanExtContext ctx(n);
    add(bal::verify_canext_bal(ctx, {.samples = c.samples, .oracle_samples = c.samples / 5 + 1, .seed = c.seed, .eps_grid = c.eps_grid}));
    add(bal::appendix_suite(ctx, {.samples = c.samples, .seed = c.seed}));
    normal::IdealSpace space(ctx);
    add(normal::verify_normal_space(space, {.samples = c.samples / 2 + 1, .seed = c.seed}));
  }
  for (const auto& x : normal::generated_posets(8, c.seed))
    add(normal::verify_normal_poset(x, {.samples = c.samples / 10 + 1, .seed = c.seed}));
  return out;
}

// ---------------------------------------------------------------------------
// Replay

struct ReplayResult {
  std::string law;
  std::string recorded;
  std::optional<std::string> failure;

  bool reproduced() const { return failure.has_value(); }
  bool same_failure() const { return failure && *failure == recorded; }

  Json to_json() const {
    Json j = {{"law", law}, {"reproduced", reproduced()}, {"recorded", recorded}};
    if (failure) j["message"] = *failure;
    return j;
  }
};

/// Collects counterexamples from a suite report, a single report, a check or
/// a bare {"law", "args"} object.
inline std::vector<Json> collect_counterexamples(const Json& j) {
  std::vector<Json> out;
  std::function<void(const Json&)> walk = [&](const Json& v) {
    if (v.is_object()) {
      if (v.contains("law") && v.contains("args")) {
        out.push_back(v);
        return;
      }
      for (const auto& [k, x] : v.items()) walk(x);
    } else if (v.is_array()) {
      for (const auto& x : v) walk(x);
    }
  };
  walk(j);
  return out;
}

inline std::vector<ReplayResult> replay(const Json& j, const LawRegistry& registry = LawRegistry()) {
  std::vector<ReplayResult> out;
  for (const auto& cx : collect_counterexamples(j)) {
    ReplayResult r;
    r.law = cx.at("law").get<std::string>();
    r.recorded = cx.value("message", "");
    r.failure = registry.evaluate(r.law, cx.at("args"));
    out.push_back(std::move(r));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Instances

inline Json generate_instance(const std::string& kind, const Json& params, std::uint64_t seed) {
  auto positive = [&](const char* key, std::size_t fallback) {
    const std::size_t v = params.contains(key) ? params.at(key).get<std::size_t>() : fallback;
    if (v == 0) throw ValidationError(std::string(key) + " must be positive");
    return v;
  };
  Rng rng(seed);
  if (kind == "poset") {
    const std::size_t n = positive("n", 5);
    if (n > 16) throw ValidationError("posets are capped at 16 elements");
    return {{"kind", "poset"}, {"seed", seed}, {"poset", io::poset_json(random_poset(n, rng))}};
  }
  if (kind == "boolalg") {
    const std::size_t atoms = positive("atoms", 3);
    if (atoms > 20) throw ValidationError("boolean algebras are capped at 20 atoms");
    return {{"kind", "boolalg"}, {"seed", seed}, {"atoms", ba::FinBoolAlg::with_atoms(atoms).atoms()}};
  }
  if (kind == "lalg") {
    const std::size_t dim = positive("dim", 2);
    const std::size_t count = positive("count", 4);
    if (dim > lalg::kMaxDim) throw ValidationError("dimension above the supported maximum");
    std::vector<lalg::LVec> vs;
    for (std::size_t k = 0; k < count; ++k) vs.push_back(random_lvec(rng, dim));
    return {{"kind", "lalg"}, {"seed", seed}, {"dim", dim}, {"vectors", io::vecs_json(vs)}};
  }
  throw ValidationError("unknown instance kind '" + kind + "' (expected poset, boolalg or lalg)");
}

/// Validates an instance document and returns it in canonical form.
inline Json load_instance(const Json& j) {
  const std::string kind = io::require_field(j, "kind").get<std::string>();
  Json out = {{"kind", kind}};
  if (j.contains("seed")) out["seed"] = j.at("seed");
  if (kind == "poset") {
    out["poset"] = io::poset_json(io::parse_poset(io::require_field(j, "poset")));
  } else if (kind == "boolalg") {
    out["atoms"] = io::parse_boolalg(j).atoms();
  } else if (kind == "lalg") {
    const auto dim = io::require_field(j, "dim").get<std::size_t>();
    const auto vs = io::parse_vecs(io::require_field(j, "vectors"));
    for (const auto& v : vs)
      if (v.dim() != dim) throw ValidationError("vector dimension differs from dim");
    out["dim"] = dim;
    out["vectors"] = io::vecs_json(vs);
  } else {
    throw ValidationError("unknown instance kind '" + kind + "'");
  }
  return out;
}

}  // namespace canext
