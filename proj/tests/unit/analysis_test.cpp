#include <gtest/gtest.h>

#include "ambipref/analysis.hpp"
#include "ambipref/generator.hpp"
#include "support.hpp"

namespace ambipref {
namespace {

using testing::q;
using testing::uv;

TEST(Intersect, IdenticalSets) {
  const BeliefSet p = testing::interval("P", "1/5", "2/5");
  const auto r = polytopes_intersect(p, p);
  ASSERT_TRUE(std::holds_alternative<CommonPrior>(r));
  EXPECT_TRUE(verify_intersection(p, p, r));
}

TEST(Intersect, DisjointPairCertificate) {
  const auto c = testing::disjoint_pair();
  const auto r = polytopes_intersect(c.at(0), c.at(1));
  ASSERT_TRUE(std::holds_alternative<Disjoint>(r));
  const auto& cert = std::get<Disjoint>(r).certificate;
  EXPECT_EQ(cert.phi1 + cert.phi2, uv({"0", "0"}));
  EXPECT_EQ(cert.slack, q("1/5"));
  EXPECT_GE(set_min(c.at(0), cert.phi1), cert.slack);
  EXPECT_GE(set_min(c.at(1), cert.phi2), cert.slack);
  EXPECT_TRUE(verify_intersection(c.at(0), c.at(1), r));

  // A forged certificate must not verify.
  Disjoint forged{{uv({"1", "-1"}), uv({"-1", "1"}), q("1/5")}};
  EXPECT_FALSE(verify_intersection(c.at(0), c.at(1), Intersection{forged}));
}

TEST(Intersect, OverlapCommonPrior) {
  const BeliefSet a = testing::interval("A", "1/5", "2/5");
  const BeliefSet b = testing::interval("B", "3/10", "1/2");
  const auto r = polytopes_intersect(a, b);
  ASSERT_TRUE(std::holds_alternative<CommonPrior>(r));
  const Prior& p = std::get<CommonPrior>(r).prior;
  EXPECT_GE(p[0], q("3/10"));
  EXPECT_LE(p[0], q("2/5"));
  EXPECT_TRUE(verify_intersection(a, b, r));
}

TEST(Intersect, TouchingCounts) {
  const auto c = testing::touching_pair();
  const auto r = polytopes_intersect(c.at(0), c.at(1));
  ASSERT_TRUE(std::holds_alternative<CommonPrior>(r));
  EXPECT_EQ(std::get<CommonPrior>(r).prior, testing::binary(q("2/5")));
}

TEST(Pairwise, Cases) {
  EXPECT_TRUE(pairwise_intersection_holds(BeliefCollection::make({testing::interval("P", "0", "1")})).holds);
  const auto d = pairwise_intersection_holds(testing::disjoint_pair());
  EXPECT_FALSE(d.holds);
  ASSERT_TRUE(d.failing);
  EXPECT_EQ(*d.failing, 0u);
  EXPECT_TRUE(pairwise_intersection_holds(testing::touching_pair()).holds);
}

TEST(Cutting, DisjointHasNone) { EXPECT_FALSE(find_cutting_hyperplane(testing::disjoint_pair())); }

TEST(Cutting, JustifiableFormHasNone) {
  const auto c = BeliefCollection::make({BeliefSet::make("a", {testing::binary(q("1/5"))}),
                                         BeliefSet::make("b", {testing::binary(q("3/5"))})});
  EXPECT_FALSE(find_cutting_hyperplane(c));
}

TEST(Cutting, OverlappingIntervalsAreCut) {
  const auto c = testing::cutting_pair();
  const auto cut = find_cutting_hyperplane(c);
  ASSERT_TRUE(cut);
  EXPECT_TRUE(verify_cutting_hyperplane(c, *cut));
  for (const auto& set : c.sets()) {
    EXPECT_LT(set_min(set, cut->normal), cut->offset);
    EXPECT_GT(set_max(set, cut->normal), cut->offset);
  }
  // The hand-derived plane phi = (1, 0) at 9/20 also cuts.
  CuttingHyperplane hand{uv({"1", "0"}), q("9/20"), {{1, 0}, {1, 0}}};
  EXPECT_TRUE(verify_cutting_hyperplane(c, hand));
  hand.offset = q("1/2");
  EXPECT_FALSE(verify_cutting_hyperplane(c, hand));
}

TEST(Witness, Incompleteness) {
  const Instance inst = testing::two_state(testing::cutting_pair());
  const auto cut = find_cutting_hyperplane(inst.collection);
  ASSERT_TRUE(cut);
  const auto w = build_incompleteness_witness(inst, *cut);
  EXPECT_LT(w.forward.maxmin, 0);
  EXPECT_LT(w.backward.maxmin, 0);
  const UtilityVector phi = utility_vector(inst.utility, w.act) - utility_vector(inst.utility, w.reference);
  EXPECT_EQ(margin_profile(inst.collection, phi), w.forward);
  EXPECT_EQ(margin_profile(inst.collection, -phi), w.backward);
  EXPECT_TRUE(w.reference.is_constant());
}

TEST(Witness, ConstantBoundsOnDisjointPair) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  const auto r = polytopes_intersect(inst.collection.at(0), inst.collection.at(1));
  const auto w = build_cbt_witness(inst, std::get<Disjoint>(r).certificate);
  const auto& u = inst.utility;
  EXPECT_GT(w.high_utility, w.low_utility);
  EXPECT_TRUE(w.low.is_constant());
  EXPECT_TRUE(w.high.is_constant());
  const ModelKind gb = models::GeneralizedBewley{};
  EXPECT_TRUE(weakly_prefers(gb, inst, w.low, w.act));
  EXPECT_TRUE(weakly_prefers(gb, inst, w.act, w.high));
  EXPECT_FALSE(weakly_prefers(gb, inst, w.low, w.high));
  EXPECT_EQ(w.low_over_act, model_margin(gb, inst.collection, utility_vector(u, w.low) - utility_vector(u, w.act)));
  EXPECT_EQ(w.act_over_high, model_margin(gb, inst.collection, utility_vector(u, w.act) - utility_vector(u, w.high)));
  EXPECT_LT(w.low_over_high, 0);
}

TEST(Commutativity, Cases) {
  const std::vector<UtilityVector> battery{uv({"1", "-1"}), uv({"0", "1"}), uv({"2", "3"})};
  const auto d = check_commutativity(testing::disjoint_pair(), battery);
  EXPECT_FALSE(d.commutes);
  ASSERT_TRUE(d.counterexample);
  EXPECT_EQ(*d.counterexample, uv({"1", "-1"}));
  EXPECT_EQ(d.counterexample_profile->maxmin, q("1/5"));
  EXPECT_EQ(d.counterexample_profile->minmax, q("-1/5"));
  EXPECT_TRUE(check_commutativity(testing::touching_pair(), battery).commutes);
  const auto single = BeliefCollection::make({BeliefSet::make("p", {testing::binary(q("1/7"))})});
  EXPECT_TRUE(check_commutativity(single, battery).commutes);
}

TEST(SeuCollapse, Cases) {
  EXPECT_EQ(seu_collapse_binary(testing::touching_pair()), testing::binary(q("2/5")));
  EXPECT_FALSE(seu_collapse_binary(testing::disjoint_pair()));
  const auto single = BeliefCollection::make({BeliefSet::make("p", {testing::binary(q("1/7"))})});
  EXPECT_EQ(seu_collapse_binary(single), testing::binary(q("1/7")));
  const auto three = BeliefCollection::make({BeliefSet::make("p", {Prior::degenerate(3, 0)})});
  try {
    seu_collapse_binary(three);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::WrongDimension);
  }
}

TEST(Analyze, HandInstances) {
  const auto d = analyze(testing::two_state(testing::disjoint_pair()));
  EXPECT_TRUE(d.complete_param);
  EXPECT_FALSE(d.cbt_param);
  EXPECT_TRUE(d.cbt_witness);
  EXPECT_FALSE(d.incompleteness_witness);
  EXPECT_FALSE(d.commutes.commutes);

  const auto t = analyze(testing::two_state(testing::touching_pair()));
  EXPECT_TRUE(t.complete_param);
  EXPECT_TRUE(t.cbt_param);
  EXPECT_TRUE(t.commutes.commutes);
  EXPECT_EQ(t.seu_collapse, testing::binary(q("2/5")));

  const auto c = analyze(testing::two_state(testing::cutting_pair()));
  EXPECT_FALSE(c.complete_param);
  EXPECT_TRUE(c.incompleteness_witness);
}

TEST(Analyze, Limits) {
  AnalysisLimits tight;
  tight.max_sets = 1;
  try {
    analyze(testing::two_state(testing::disjoint_pair()), tight);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::InstanceTooLarge);
  }
}

// Every certificate the analysis emits re-verifies, across generated instances.
TEST(AnalyzeProperty, CertificatesVerify) {
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const Instance inst = generate_instance(seed);
    const auto r = analyze(inst);
    for (const auto& e : r.pairwise.pairs) {
      EXPECT_TRUE(verify_intersection(inst.collection.at(e.first), inst.collection.at(e.second), e.result));
    }
    EXPECT_EQ(r.cbt_param, r.pairwise.holds);
    EXPECT_EQ(r.complete_param, !r.cutting.has_value());
    if (r.cutting) EXPECT_TRUE(verify_cutting_hyperplane(inst.collection, *r.cutting));
    if (r.complete_param && r.cbt_param) EXPECT_TRUE(r.commutes.commutes) << "seed " << seed;
  }
}

}  // namespace
}  // namespace ambipref
