#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace canext {

using Json = nlohmann::json;

/// How much of the quantified statement a check covers.
enum class Mode { Exhaustive, Sampled, FiniteInstance };

inline std::string to_string(Mode m) {
  switch (m) {
    case Mode::Exhaustive: return "exhaustive";
    case Mode::Sampled: return "sampled";
    case Mode::FiniteInstance: return "finite-instance";
  }
  return "?";
}

/// A failing case, stated so that `canext replay` can re-evaluate it: the law
/// id names a predicate in the law registry, args are its inputs.
struct Counterexample {
  std::string law;
  Json args;
  std::string message;
};

struct Check {
  std::string name;
  bool pass = true;
  Mode mode = Mode::Exhaustive;
  std::uint64_t cases = 0;
  std::set<std::string> laws;  // law ids evaluated at least once
  Json witness;
  std::optional<Counterexample> counterexample;
  std::string note;
  double seconds = 0;

  Json to_json(bool with_time = false) const {
    Json j{{"name", name}, {"pass", pass}, {"mode", to_string(mode)}, {"cases", cases}, {"laws", laws}};
    if (!witness.is_null()) j["witness"] = witness;
    if (counterexample)
      j["counterexample"] = {{"law", counterexample->law}, {"args", counterexample->args},
                             {"message", counterexample->message}};
    if (!note.empty()) j["note"] = note;
    if (with_time) j["seconds"] = seconds;
    return j;
  }
};

struct Report {
  Json instance;
  std::vector<Check> checks;

  bool pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }

  const Check* find(const std::string& name) const {
    for (const auto& c : checks)
      if (c.name == name) return &c;
    return nullptr;
  }

  void merge(Report other) {
    for (auto& c : other.checks) checks.push_back(std::move(c));
  }

  /// Wall time is left out unless asked for, so equal inputs give equal bytes.
  Json to_json(bool with_time = false) const {
    Json cs = Json::array();
    for (const auto& c : checks) cs.push_back(c.to_json(with_time));
    return {{"instance", instance.is_null() ? Json::object() : instance}, {"checks", cs}, {"pass", pass()}};
  }
};

/// Accumulates one named check. The first failing case is kept as the
/// counterexample; later cases still count.
class CheckRun {
 public:
  CheckRun(std::string name, Mode mode) : start_(std::chrono::steady_clock::now()) {
    check_.name = std::move(name);
    check_.mode = mode;
  }

  /// Records one case of `law`. Returns ok so callers can stop early.
  bool expect(bool ok, const std::string& law, Json args, const std::string& message = {}) {
    ++check_.cases;
    check_.laws.insert(law);
    if (!ok && check_.pass) {
      check_.pass = false;
      check_.counterexample = Counterexample{law, std::move(args), message};
    }
    return ok;
  }

  /// Same, with the predicate returning the failure text when violated.
  bool expect(const std::optional<std::string>& failure, const std::string& law, Json args) {
    return expect(!failure.has_value(), law, std::move(args), failure.value_or(""));
  }

  bool passing() const { return check_.pass; }
  void witness(Json w) { check_.witness = std::move(w); }
  void note(std::string n) { check_.note = std::move(n); }
  void mode(Mode m) { check_.mode = m; }

  Check finish() {
    check_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(check_);
  }

 private:
  Check check_;
  std::chrono::steady_clock::time_point start_;
};

}  // namespace canext
