// canext: command-line driver for the canonical-extension checks.
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage or input error.

#include <CLI11.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "canext/ba/canonical_extension.hpp"
#include "canext/bal/appendix.hpp"
#include "canext/bal/verify.hpp"
#include "canext/io/export.hpp"
#include "canext/io/json_core.hpp"
#include "canext/io/normal_json.hpp"
#include "canext/lalg/verify.hpp"
#include "canext/normal/ideal_space.hpp"
#include "canext/normal/normal_fn.hpp"
#include "canext/normal/verify.hpp"
#include "canext/order/alexandroff.hpp"
#include "canext/suite.hpp"

namespace {

using canext::Json;

constexpr int kPass = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Json read_json(const std::string& path) {
  try {
    return Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(path + ": " + e.what());
  }
}

void emit(const std::string& text, const std::string& output) {
  if (output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(output, std::ios::binary);
  if (!out) throw UsageError("cannot write " + output);
  out << text;
}

int report_exit(bool pass) { return pass ? kPass : kFail; }

/// Accepts a bare poset, a poset instance or a function document.
canext::order::FinPoset poset_from(const Json& j) {
  if (j.contains("elements")) return canext::io::parse_poset(j);
  if (j.contains("poset")) return canext::io::parse_poset(j.at("poset"));
  throw canext::ValidationError("document holds no poset");
}

std::vector<std::string> labels_of(const canext::order::FinPoset& p, const canext::order::ElementSet& s) {
  std::vector<std::string> out;
  for (auto i : canext::order::members_of(s)) out.push_back(p.label(i));
  return out;
}

canext::lalg::LVec parse_coords(const std::string& text) {
  std::vector<canext::Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(canext::parse_rational(item));
  if (out.empty()) throw UsageError("empty coordinate list");
  return canext::lalg::LVec(std::move(out));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact checks of canonical extensions for boolean algebras and bounded archimedean l-algebras"};
  app.require_subcommand(1);

  std::string output;
  bool with_time = false;
  auto add_common = [&](CLI::App* sub) {
    sub->add_option("-o,--output", output, "Write the result here instead of stdout");
    sub->add_flag("--time", with_time, "Include wall time per check");
  };

  std::uint64_t seed = 0;

  // ba
  std::size_t atoms = 2;
  auto* ba = app.add_subcommand("ba", "Canonical extension of the boolean algebra with N atoms");
  ba->add_option("--atoms", atoms, "Number of atoms")->required()->check(CLI::Range(1, 20));
  ba->add_option("--seed", seed, "Seed for sampled clauses");
  add_common(ba);

  // bal
  std::size_t dim = 2, samples = 1000;
  bool appendix = false, hull = false;
  std::vector<std::string> eps_grid;
  auto* bal = app.add_subcommand("bal", "Canonical extension of Q^N");
  bal->add_option("--dim", dim, "Dimension")->required()->check(CLI::Range(1, 8));
  bal->add_option("--samples", samples, "Samples per clause")->check(CLI::PositiveNumber);
  bal->add_option("--seed", seed, "Seed");
  bal->add_option("--eps", eps_grid, "Epsilon grid, e.g. --eps 1/2 1/4");
  bal->add_flag("--appendix", appendix, "Also run the appendix suite of auxiliary identities");
  bal->add_flag("--hull", hull, "Also run the archimedean hull checks");
  add_common(bal);

  // normal
  auto* normal = app.add_subcommand("normal", "Normal functions on the ideal space of Q^N");
  normal->add_option("--dim", dim, "Dimension")->required()->check(CLI::Range(1, 6));
  normal->add_option("--samples", samples, "Samples per clause")->check(CLI::PositiveNumber);
  normal->add_option("--seed", seed, "Seed");
  add_common(normal);

  // poset
  std::string file, op;
  auto* poset = app.add_subcommand("poset", "Operations on a poset or a function on it");
  poset->add_option("--file", file, "Poset, poset instance or function JSON")->required();
  poset->add_option("--op", op, "Operation")->required()->check(CLI::IsMember({"regular-opens", "normalize", "verify"}));
  poset->add_option("--samples", samples, "Samples for verify")->check(CLI::PositiveNumber);
  poset->add_option("--seed", seed, "Seed for verify");
  add_common(poset);

  // suite
  std::string config_path;
  auto* suite = app.add_subcommand("suite", "Run every suite the config covers");
  suite->add_option("--config", config_path, "Suite config JSON (defaults when omitted)");
  suite->add_flag("--quiet", "No progress lines on stderr");
  add_common(suite);

  // export
  std::string format, input, gamma;
  bool empty_report = false;
  auto* exp = app.add_subcommand("export", "Export an instance, function or report");
  exp->add_option("--format", format, "dot, csv or json")->required();
  exp->add_option("--input", input, "Input JSON");
  exp->add_option("--gamma", gamma, "csv: gamma table of this vector of Q^N, e.g. 1,2");
  exp->add_flag("--empty-report", empty_report, "json: an empty report skeleton");
  add_common(exp);

  // generate
  std::string kind;
  std::size_t n = 5, count = 4;
  auto* gen = app.add_subcommand("generate", "Generate a seeded instance");
  gen->add_option("--kind", kind, "poset, boolalg or lalg")->required();
  gen->add_option("--n", n, "Poset size");
  gen->add_option("--atoms", atoms, "Atom count");
  gen->add_option("--dim", dim, "Dimension");
  gen->add_option("--count", count, "Number of vectors");
  gen->add_option("--seed", seed, "Seed");
  add_common(gen);

  // replay
  auto* rep = app.add_subcommand("replay", "Re-evaluate the counterexamples in a report");
  rep->add_option("--file", file, "Report or counterexample JSON")->required();
  add_common(rep);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (ba->parsed()) {
      auto ext = canext::ba::canonical_extension_ba(canext::ba::FinBoolAlg::with_atoms(atoms));
      auto r = canext::ba::verify_canonical_ba(ext, {.seed = seed});
      emit(canext::io::canonical_json(r.to_json(with_time)), output);
      return report_exit(r.pass());
    }

    if (bal->parsed()) {
      canext::bal::CanExtContext ctx(dim);
      canext::bal::BalVerifyOptions opt{.samples = samples, .oracle_samples = samples / 5 + 1, .seed = seed};
      if (!eps_grid.empty()) {
        opt.eps_grid.clear();
        for (const auto& e : eps_grid) opt.eps_grid.push_back(canext::parse_rational(e));
      }
      canext::SuiteReport out;
      out.config = {{"dim", dim}, {"samples", samples}, {"seed", seed}};
      out.reports.push_back(canext::bal::verify_canext_bal(ctx, opt));
      if (appendix) out.reports.push_back(canext::bal::appendix_suite(ctx, {.samples = samples, .seed = seed}));
      if (hull) out.reports.push_back(canext::lalg::verify_hull(dim, {.samples = samples / 5 + 1, .seed = seed}));
      emit(canext::io::canonical_json(out.to_json(with_time)), output);
      return report_exit(out.pass());
    }

    if (normal->parsed()) {
      canext::bal::CanExtContext ctx(dim);
      canext::normal::IdealSpace space(ctx);
      auto r = canext::normal::verify_normal_space(space, {.samples = samples, .seed = seed});
      emit(canext::io::canonical_json(r.to_json(with_time)), output);
      return report_exit(r.pass());
    }

    if (poset->parsed()) {
      const Json doc = read_json(file);
      const auto p = poset_from(doc);
      if (op == "regular-opens") {
        const auto ro = canext::order::regular_opens(p);
        Json sets = Json::array();
        for (const auto& u : ro.elements()) sets.push_back(labels_of(p, u));
        emit(canext::io::canonical_json({{"count", ro.size()}, {"regularOpens", sets}}), output);
        return kPass;
      }
      if (op == "normalize") {
        if (!doc.contains("values")) throw UsageError("normalize needs a function document with \"values\"");
        const auto f = canext::io::parse_fn(doc.contains("elements") ? Json{{"poset", doc}, {"values", doc.at("values")}} : doc);
        const auto e = canext::normal::envelopes(f);
        emit(canext::io::canonical_json({{"f", canext::io::values_json(f)},
                                         {"upper", canext::io::values_json(e.upper)},
                                         {"lower", canext::io::values_json(e.lower)},
                                         {"sharp", canext::io::values_json(e.sharp)},
                                         {"normal", e.sharp == f}}),
             output);
        return kPass;
      }
      auto r = canext::normal::verify_normal_poset(p, {.samples = samples, .seed = seed});
      emit(canext::io::canonical_json(r.to_json(with_time)), output);
      return report_exit(r.pass());
    }

    if (suite->parsed()) {
      canext::SuiteConfig cfg = config_path.empty() ? canext::SuiteConfig{} : canext::parse_config(read_json(config_path));
      canext::apply_env_seed(cfg);
      if (!output.empty()) cfg.output = output;
      const bool quiet = suite->count("--quiet") > 0;
      auto out = canext::run_suite(cfg, [&](const canext::Report& r) {
        if (quiet) return;
        Json brief = r.instance;
        if (brief.contains("poset")) {
          brief["size"] = brief["poset"]["elements"].size();
          brief.erase("poset");
        }
        std::cerr << (r.pass() ? "PASS " : "FAIL ") << brief.dump() << '\n';
      });
      emit(canext::io::canonical_json(out.to_json(with_time)), cfg.output);
      if (!quiet)
        std::cerr << (out.pass() ? "all checks pass" : std::to_string(out.failed_checks()) + " check(s) failed") << '\n';
      return report_exit(out.pass());
    }

    if (exp->parsed()) {
      if (format == "json") {
        if (empty_report) {
          emit(canext::io::canonical_json(canext::io::empty_report_json()), output);
          return kPass;
        }
        if (input.empty()) throw UsageError("json export needs --input or --empty-report");
        Json doc = read_json(input);
        if (doc.contains("kind")) doc = canext::load_instance(doc);
        emit(canext::io::canonical_json(doc), output);
        return kPass;
      }
      if (format == "dot") {
        if (input.empty()) throw UsageError("dot export needs --input");
        emit(canext::io::to_dot(poset_from(read_json(input))), output);
        return kPass;
      }
      if (format == "csv") {
        if (!gamma.empty()) {
          const auto a = parse_coords(gamma);
          canext::bal::CanExtContext ctx(a.dim());
          canext::normal::IdealSpace space(ctx);
          emit(canext::io::gamma_csv(space, a), output);
          return kPass;
        }
        if (input.empty()) throw UsageError("csv export needs --input or --gamma");
        emit(canext::io::envelopes_csv(canext::io::parse_fn(read_json(input))), output);
        return kPass;
      }
      throw UsageError("unsupported format '" + format + "' (expected dot, csv or json)");
    }

    if (gen->parsed()) {
      Json params = Json::object();
      if (gen->count("--n")) params["n"] = n;
      if (gen->count("--atoms")) params["atoms"] = atoms;
      if (gen->count("--dim")) params["dim"] = dim;
      if (gen->count("--count")) params["count"] = count;
      emit(canext::io::canonical_json(canext::generate_instance(kind, params, seed)), output);
      return kPass;
    }

    if (rep->parsed()) {
      const auto results = canext::replay(read_json(file));
      Json rs = Json::array();
      bool any = false;
      for (const auto& r : results) {
        rs.push_back(r.to_json());
        any |= r.reproduced();
      }
      emit(canext::io::canonical_json({{"replayed", rs}, {"reproduced", any}}), output);
      return any ? kFail : kPass;
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const canext::ValidationError& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  } catch (const canext::CapExceeded& e) {
    std::cerr << "too large: " << e.what() << '\n';
    return kUsage;
  } catch (const Json::exception& e) {
    std::cerr << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
