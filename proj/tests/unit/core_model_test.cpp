#include <gtest/gtest.h>

#include "ambipref/instance_json.hpp"
#include "ambipref/model.hpp"
#include "support.hpp"

namespace ambipref {
namespace {

using testing::q;
using testing::uv;

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error thrown";
  return ErrorCode::MalformedDocument;
}

TEST(Rational, ParsesFractionsAndIntegers) {
  EXPECT_EQ(q("6/8"), Rational(3, 4));
  EXPECT_EQ(q("-2"), Rational(-2));
  EXPECT_EQ(to_string(q("6/8")), "3/4");
  EXPECT_EQ(to_string(q("4/2")), "2");
  EXPECT_EQ(code_of([] { q("1/0"); }), ErrorCode::MalformedRational);
  EXPECT_EQ(code_of([] { q("abc"); }), ErrorCode::MalformedRational);
  EXPECT_EQ(code_of([] { q(""); }), ErrorCode::MalformedRational);
}

TEST(Rational, RatioIsCanonical) {
  const Rational r = ratio(2, 4);
  EXPECT_EQ(r.get_num(), 1);
  EXPECT_EQ(r.get_den(), 2);
  EXPECT_EQ(ratio(0, 7) + ratio(0, 3), 0);
}

TEST(Prior, ValidatesSimplex) {
  EXPECT_NO_THROW(Prior::make({q("1/2"), q("1/2")}));
  EXPECT_EQ(code_of([] { Prior::make({q("3/4"), q("3/4")}); }), ErrorCode::NonSimplexPrior);
  EXPECT_EQ(code_of([] { Prior::make({q("3/2"), q("-1/2")}); }), ErrorCode::NonSimplexPrior);
}

TEST(UtilityFunction, RejectsConstant) {
  EXPECT_EQ(code_of([] { UtilityFunction::make({1, 1}); }), ErrorCode::ConstantUtility);
  EXPECT_EQ(code_of([] { UtilityFunction::make({1}); }), ErrorCode::TooFewPrizes);
}

TEST(Lottery, UtilityIsAffine) {
  const auto u = UtilityFunction::make({0, 1});
  EXPECT_EQ(utility_of_lottery(u, Lottery::degenerate(2, 1)), 1);
  EXPECT_EQ(utility_of_lottery(u, Lottery::make({q("1/2"), q("1/2")})), q("1/2"));
  const auto v = UtilityFunction::make({-2, 4});
  EXPECT_EQ(utility_of_lottery(v, Lottery::make({q("1/3"), q("2/3")})), 2);
  EXPECT_EQ(code_of([] { Lottery::make({q("1/2"), q("1/3")}); }), ErrorCode::NonSimplexLottery);
}

TEST(Act, UtilityVectorsAndMixtures) {
  const auto u = UtilityFunction::make({0, 1});
  const Lottery z1 = Lottery::degenerate(2, 0);
  const Lottery z2 = Lottery::degenerate(2, 1);
  EXPECT_EQ(utility_vector(u, Act::make({z2, z1})), uv({"1", "0"}));

  const auto w = UtilityFunction::make({0, 4});
  const Lottery three = Lottery::make({q("1/4"), q("3/4")});
  EXPECT_EQ(utility_vector(w, Act::constant(2, three)), uv({"3", "3"}));

  const Act f = act_with_utilities(w, uv({"2", "0"}));
  const Act g = act_with_utilities(w, uv({"0", "2"}));
  EXPECT_EQ(utility_vector(w, mix_acts(q("1/2"), f, g)), uv({"1", "1"}));
  EXPECT_EQ(mix_acts(1, f, g), f);
  EXPECT_EQ(mix_acts(0, f, g), g);
  EXPECT_EQ(code_of([&] { mix_acts(q("3/2"), f, g); }), ErrorCode::AlphaOutOfRange);
  EXPECT_EQ(code_of([&] { act_with_utilities(w, uv({"5", "0"})); }), ErrorCode::RadiusExceedsUtilityRange);
}

TEST(Expectation, HandValues) {
  EXPECT_EQ(expected_value(Prior::make({q("1/2"), q("1/2")}), uv({"1", "-1"})), 0);
  EXPECT_EQ(expected_value(Prior::make({q("1/5"), q("4/5")}), uv({"1", "-1"})), q("-3/5"));
  EXPECT_EQ(expected_value(Prior::degenerate(2, 0), uv({"7/3", "-9"})), q("7/3"));
}

TEST(Dominance, Statewise) {
  EXPECT_TRUE(statewise_dominates(uv({"1", "1"}), uv({"1", "1"})));
  EXPECT_TRUE(statewise_dominates(uv({"2", "1"}), uv({"1", "1"})));
  EXPECT_FALSE(statewise_dominates(uv({"2", "0"}), uv({"1", "1"})));
}

TEST(BeliefCollection, StructuralErrors) {
  EXPECT_EQ(code_of([] { BeliefCollection::make({}); }), ErrorCode::EmptyCollection);
  EXPECT_EQ(code_of([] { BeliefSet::make("P", {}); }), ErrorCode::EmptyBeliefSet);
  EXPECT_EQ(code_of([] { BeliefSet::make("P", {testing::binary(q("1/2")), testing::binary(q("1/2"))}); }),
            ErrorCode::DuplicateVertex);
  EXPECT_EQ(code_of([] {
              BeliefSet::make("P", {testing::binary(q("1/2")), Prior::make({q("1/3"), q("1/3"), q("1/3")})});
            }),
            ErrorCode::DimensionMismatch);
  EXPECT_EQ(code_of([] {
              BeliefCollection::make({testing::interval("P", "0", "1"), testing::interval("P", "1/4", "1/2")});
            }),
            ErrorCode::DuplicateLabel);
}

const char* kDocument = R"({
  "states": ["s1", "s2"],
  "prizes": ["z0", "z1"],
  "utility": {"z0": 0, "z1": 1},
  "belief_collection": [
    {"name": "P1", "vertices": [["1/5", "4/5"], ["2/5", "3/5"]]},
    {"name": "P2", "vertices": [["3/5", "2/5"], ["4/5", "1/5"]]}
  ],
  "acts": {
    "f": {"s1": {"z1": 1}, "s2": {"z0": 1}},
    "g": {"s1": {"z0": 1}, "s2": {"z1": 1}}
  }
})";

TEST(InstanceJson, RoundTrip) {
  const Instance inst = parse_instance(kDocument);
  EXPECT_EQ(inst.states.size(), 2u);
  EXPECT_EQ(inst.collection.size(), 2u);
  EXPECT_EQ(utility_vector(inst.utility, inst.act("f")), uv({"1", "0"}));
  const Instance again = validate_instance(to_json(inst));
  EXPECT_EQ(to_json(again), to_json(inst));
}

TEST(InstanceJson, CollectsEveryIssue) {
  nlohmann::json doc = nlohmann::json::parse(kDocument);
  doc["belief_collection"][0]["vertices"][0] = {"3/4", "3/4"};
  doc["utility"] = {{"z0", 1}, {"z1", 1}};
  try {
    validate_instance(doc);
    FAIL() << "expected ValidationError";
  } catch (const ValidationError& e) {
    bool prior = false, utility = false;
    for (const auto& issue : e.issues()) {
      prior = prior || issue.code == ErrorCode::NonSimplexPrior;
      utility = utility || issue.code == ErrorCode::ConstantUtility;
    }
    EXPECT_TRUE(prior);
    EXPECT_TRUE(utility);
  }
}

TEST(InstanceJson, UnknownAct) {
  const Instance inst = parse_instance(kDocument);
  EXPECT_EQ(code_of([&] { inst.act("h"); }), ErrorCode::UnknownAct);
}

TEST(InstanceJson, Malformed) {
  EXPECT_THROW(parse_instance("{not json"), Error);
  EXPECT_THROW(parse_instance("[]"), Error);
}

}  // namespace
}  // namespace ambipref
