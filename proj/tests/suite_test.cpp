#include <gtest/gtest.h>

#include <cstdlib>
#include <set>
#include <string>

#include "canext/laws.hpp"
#include "canext/suite.hpp"

using namespace canext;

namespace {

SuiteConfig small_config() {
  SuiteConfig c;
  c.max_atoms = 2;
  c.max_dim = 2;
  c.samples = 30;
  c.seed = 17;
  return c;
}

}  // namespace

TEST(Config, DefaultsAndParsing) {
  SuiteConfig d;
  EXPECT_EQ(d.max_atoms, 4u);
  EXPECT_EQ(d.max_dim, 5u);
  EXPECT_EQ(d.samples, 1000u);
  EXPECT_EQ(d.eps_grid.size(), 3u);
  auto c = parse_config(Json::parse(R"({"maxAtoms":3,"maxDim":2,"samples":10,"seed":"18446744073709551615","epsGrid":["1/3"]})"));
  EXPECT_EQ(c.max_atoms, 3u);
  EXPECT_EQ(c.seed, 18446744073709551615ULL);
  EXPECT_EQ(c.eps_grid.front(), Rational(1, 3));
}

TEST(Config, RejectsBadValues) {
  EXPECT_THROW(parse_config(Json::parse(R"({"maxDim":0})")), ValidationError);
  EXPECT_THROW(parse_config(Json::parse(R"({"samples":5,"bogus":1})")), ValidationError);
  EXPECT_THROW(parse_config(Json::parse(R"({"epsGrid":["-1/2"]})")), ValidationError);
  EXPECT_THROW(parse_config(Json::parse(R"({"seed":-3})")), ValidationError);
}

TEST(Config, EnvSeedOverrides) {
  SuiteConfig c = small_config();
  ::setenv("CANEXT_SEED", "99", 1);
  apply_env_seed(c);
  ::unsetenv("CANEXT_SEED");
  EXPECT_EQ(c.seed, 99u);
  ::setenv("CANEXT_SEED", "x9", 1);
  EXPECT_THROW(apply_env_seed(c), ValidationError);
  ::unsetenv("CANEXT_SEED");
}

TEST(Suite, SmallConfigPassesAndIsDeterministic) {
  const auto a = run_suite(small_config());
  EXPECT_TRUE(a.pass()) << a.to_json().dump();
  EXPECT_EQ(a.to_json().dump(), run_suite(small_config()).to_json().dump());
}

TEST(Suite, DegenerateDimensionOne) {
  SuiteConfig c = small_config();
  c.max_atoms = 1;
  c.max_dim = 1;
  EXPECT_TRUE(run_suite(c).pass());
}

TEST(Suite, EveryExercisedLawIsReplayable) {
  const LawRegistry registry;
  std::set<std::string> seen;
  for (const auto& r : run_suite(small_config()).reports)
    for (const auto& c : r.checks) seen.insert(c.laws.begin(), c.laws.end());
  EXPECT_GT(seen.size(), 50u);
  for (const auto& id : seen) EXPECT_TRUE(registry.has(id)) << id;
}

TEST(Replay, HandMadeShiftCase) {
  // a shift leaving a + s negative is invalid input, not a law failure
  Json cx = {{"law", "bal.alpha_shift"},
             {"args", {{"dim", 2}, {"a", {{"dim", 2}, {"coords", {"-1", "3"}}}}, {"s1", "1"}, {"s2", "0"}}},
             {"message", ""}};
  EXPECT_THROW(replay(cx), ValidationError);
  cx["args"]["s2"] = "5/2";
  auto rs = replay(cx);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_FALSE(rs[0].reproduced());
}

TEST(Replay, UnknownLawAndMalformedArgs) {
  const LawRegistry registry;
  EXPECT_THROW(registry.evaluate("no.such_law", Json::object()), ValidationError);
  EXPECT_THROW(registry.evaluate("bal.theta_zeta", Json{{"dim", 2}}), ValidationError);
}

TEST(Replay, CollectsFromNestedReports) {
  Json suite = {{"reports",
                 {{{"checks",
                    {{{"name", "x"}, {"counterexample", {{"law", "app.unit_gap"}, {"args", {{"dim", 1}, {"a", {{"dim", 1}, {"coords", {"2"}}}}, {"t", "1"}}}, {"message", "m"}}}}}}}}}};
  auto rs = replay(suite);
  ASSERT_EQ(rs.size(), 1u);
  EXPECT_EQ(rs[0].law, "app.unit_gap");
  EXPECT_FALSE(rs[0].reproduced());
}

TEST(Generate, DeterministicInstances) {
  EXPECT_EQ(generate_instance("poset", {{"n", 5}}, 42), generate_instance("poset", {{"n", 5}}, 42));
  EXPECT_NE(generate_instance("poset", {{"n", 5}}, 42).dump(), generate_instance("poset", {{"n", 5}}, 43).dump());
  EXPECT_EQ(generate_instance("lalg", {{"dim", 2}}, 7), generate_instance("lalg", {{"dim", 2}}, 7));
  const Json b = generate_instance("boolalg", {{"atoms", 3}}, 0);
  EXPECT_EQ(b["atoms"].size(), 3u);
  EXPECT_THROW(generate_instance("poset", {{"n", 0}}, 1), ValidationError);
  EXPECT_THROW(generate_instance("graph", Json::object(), 1), ValidationError);
}

TEST(Generate, LoadRoundTrip) {
  for (const char* kind : {"poset", "boolalg", "lalg"}) {
    const Json j = generate_instance(kind, Json::object(), 11);
    EXPECT_EQ(load_instance(j), j) << kind;
  }
}
