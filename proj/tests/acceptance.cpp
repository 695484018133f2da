// Acceptance criteria, one PASS/FAIL line each. Exit status is nonzero when
// any criterion fails or runs over its time limit.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "canext/ba/canonical_extension.hpp"
#include "canext/bal/appendix.hpp"
#include "canext/bal/verify.hpp"
#include "canext/lalg/verify.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/verify.hpp"
#include "canext/report.hpp"

#ifndef CANEXT_MUTANT_DIR
#error "CANEXT_MUTANT_DIR must name the directory holding the mutant CLIs"
#endif

using namespace canext;

namespace {

constexpr std::uint64_t kSeed = 20240601;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(const Report& r) {
    if (r.pass()) return;
    pass = false;
    for (const auto& c : r.checks)
      if (!c.pass) {
        detail = r.instance.dump() + " " + c.to_json().dump();
        return;
      }
  }
  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> run;
};

Outcome ba_pipeline() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ext = ba::canonical_extension_ba(ba::FinBoolAlg::with_atoms(n));
    o.require(ext.extension().size() == ext.algebra().size(), "|C| != |B| at " + std::to_string(n) + " atoms");
    Report r = ba::verify_canonical_ba(ext, {.seed = kSeed});
    for (const char* name : {"embedding", "surjective", "dense", "compact", "pseudocomplement"}) {
      const Check* c = r.find(name);
      o.require(c != nullptr, std::string("missing check ") + name);
    }
    o.require(r.find("compact")->mode == Mode::Exhaustive, "compactness not exhaustive");
    o.require(r);
  }
  return o;
}

Outcome ro_equivalence() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    auto ext = ba::canonical_extension_ba(ba::FinBoolAlg::with_atoms(n));
    Report r = ba::verify_canonical_ba(ext, {.seed = kSeed});
    for (const char* name : {"ro_iso", "ro_size", "upsets_iso"}) {
      const Check* c = r.find(name);
      o.require(c != nullptr && c->pass && c->mode == Mode::Exhaustive, std::string(name) + " failed or missing at " + std::to_string(n));
    }
    for (auto b : ext.algebra().elements())
      o.require(!ba::law::ro_membership(ext, b).has_value(), "phi(e(b)) mismatch");
  }
  return o;
}

Outcome archimedean_hull() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) o.require(lalg::verify_hull(n, {.samples = 200, .seed = kSeed}));
  return o;
}

Outcome bal_extension() {
  Outcome o;
  for (std::size_t n = 1; n <= 5; ++n) {
    bal::CanExtContext ctx(n);
    Report r = bal::verify_canext_bal(ctx, {.samples = 1000, .seed = kSeed});
    for (const char* name : {"dense", "compact"}) o.require(r.find(name)->mode == Mode::Sampled, "clause not labeled sampled");
    o.require(r);
  }
  return o;
}

Outcome appendix() {
  Outcome o;
  for (std::size_t n = 1; n <= 6; ++n) {
    bal::CanExtContext ctx(n);
    Report r = bal::appendix_suite(ctx, {.samples = 1000, .seed = kSeed});
    for (const auto& c : r.checks)
      o.require(c.cases == 1000 || (n == 1 && c.name == "separating_ideal"), c.name + " ran " + std::to_string(c.cases) + " cases");
    o.require(r);
  }
  return o;
}

Outcome normal_functions() {
  Outcome o;
  for (const auto& x : normal::generated_posets(8, kSeed)) {
    o.require(x.size() <= 8, "poset too large");
    Report r = normal::verify_normal_poset(x, {.samples = 100, .seed = kSeed});
    o.require(r.find("semicontinuity")->mode == Mode::Exhaustive, "semicontinuity not exhaustive");
    o.require(r.find("idempotents")->cases > 0, "idempotents not enumerated");
    o.require(r);
  }
  return o;
}

Outcome diagram() {
  Outcome o;
  for (std::size_t n = 1; n <= 4; ++n) {
    bal::CanExtContext ctx(n);
    normal::IdealSpace x(ctx);
    o.require(normal::verify_normal_space(x, {.samples = 500, .seed = kSeed}));
  }
  return o;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

int run(const std::string& cmd) {
  const int status = std::system(cmd.c_str());
  if (status == -1) return -1;
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

Outcome mutants() {
  Outcome o;
  const std::filesystem::path dir = std::filesystem::temp_directory_path() / "canext_acceptance";
  std::filesystem::create_directories(dir);
  const auto config = dir / "config.json";
  std::ofstream(config) << R"({"maxAtoms": 3, "maxDim": 3, "samples": 100, "seed": 7})";
  const std::filesystem::path bin = CANEXT_MUTANT_DIR;
  for (int m = 1; m <= 3; ++m) {
    const auto exe = bin / ("canext_mutant" + std::to_string(m));
    const auto report = dir / ("mutant" + std::to_string(m) + ".json");
    const auto replayed = dir / ("replay" + std::to_string(m) + ".json");
    const int code = run(exe.string() + " suite --quiet --config " + config.string() + " -o " + report.string());
    o.require(code == 1, "mutant " + std::to_string(m) + " suite exited " + std::to_string(code));
    const int rcode = run(exe.string() + " replay --file " + report.string() + " -o " + replayed.string());
    o.require(rcode == 1, "mutant " + std::to_string(m) + " replay exited " + std::to_string(rcode));
    if (!o.pass) return o;
    const Json r = Json::parse(slurp(replayed));
    o.require(!r["replayed"].empty(), "no counterexample recorded");
    for (const auto& x : r["replayed"])
      o.require(x["reproduced"].get<bool>() && x.value("message", "") == x["recorded"], "counterexample did not replay: " + x.dump());
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "BA pipeline: canonical extension, embedding, density, compactness (atoms 1-4)", 5, ba_pipeline},
      {2, "BA regular-open equivalence (atoms 1-4)", 5, ro_equivalence},
      {3, "Archimedean hull: formula, one k step and oracle agree (dims 1-5)", 2, archimedean_hull},
      {4, "bal canonical extension: monomorphism, shift independence, theta o alpha = zeta, dense, compact (dims 1-5)", 30,
       bal_extension},
      {5, "Appendix identities, 1000 instantiations per dim (dims 1-6)", 30, appendix},
      {6, "Normal functions: normalization, semicontinuity, idempotents = RO(X) (|X| <= 8)", 10, normal_functions},
      {7, "Ideal-space diagram: phi, psi, gamma, psi o phi o alpha = zeta (dims 1-4)", 20, diagram},
      {8, "Mutation sensitivity: three mutants fail the suite with replayable counterexamples", 120, mutants},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = secs < c.limit_seconds;
    const bool ok = o.pass && in_time;
    failures += ok ? 0 : 1;
    std::printf("%s [%d] %s (%.2f s, limit %.0f s)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), secs, c.limit_seconds);
    if (!o.pass) std::printf("       %s\n", o.detail.substr(0, 2000).c_str());
    if (!in_time) std::printf("       over the time limit\n");
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
