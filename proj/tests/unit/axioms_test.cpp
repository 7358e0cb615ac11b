#include <gtest/gtest.h>

#include "ambipref/axioms.hpp"
#include "ambipref/generator.hpp"
#include "support.hpp"

namespace ambipref {
namespace {

using testing::q;

const ModelKind kGb = models::GeneralizedBewley{};

AuditReport run(AxiomKind axiom, const ModelKind& kind, const Instance& inst, int resolution = 2) {
  return audit(axiom, kind, inst, generate_act_grid(inst, resolution, 1));
}

TEST(AxiomNames, RoundTrip) {
  for (AxiomKind a : all_axioms()) EXPECT_EQ(parse_axiom(to_string(a)), a);
  EXPECT_EQ(parse_axiom("cbt"), AxiomKind::ConstantBoundTransitivity);
  EXPECT_EQ(parse_axiom("ncbt"), AxiomKind::NegativeConstantBoundTransitivity);
  try {
    parse_axiom("symmetry");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownAxiom);
  }
  EXPECT_EQ(all_axioms().size(), 12u);
}

// The bracketing constants must fall strictly inside the gap (2/5, 3/5), which
// the resolution-2 lattice cannot resolve.
TEST(Audit, DisjointPairBreaksConstantBounds) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  EXPECT_TRUE(run(AxiomKind::ConstantBoundTransitivity, kGb, inst, 2).passed);
  const Battery battery = generate_act_grid(inst, 4, 1);
  const AuditReport r = audit(AxiomKind::ConstantBoundTransitivity, kGb, inst, battery);
  ASSERT_FALSE(r.passed);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_GE(r.violations, r.witnesses.size());
  for (const auto& w : r.witnesses) {
    ASSERT_EQ(w.acts.size(), 3u);
    const Rational ux = battery.utilities[w.acts[0]][0];
    const Rational uy = battery.utilities[w.acts[2]][0];
    EXPECT_TRUE(battery.acts[w.acts[0]].is_constant());
    EXPECT_TRUE(battery.acts[w.acts[2]].is_constant());
    EXPECT_GT(uy, ux);
    EXPECT_TRUE(replay(r, inst, battery, w));
  }
}

TEST(Audit, WitnessCap) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  const Battery battery = generate_act_grid(inst, 4, 1);
  AuditOptions capped;
  capped.max_witnesses = 1;
  AuditOptions all;
  all.max_witnesses = 0;
  const AuditReport a = audit(AxiomKind::ConstantBoundTransitivity, kGb, inst, battery, capped);
  const AuditReport b = audit(AxiomKind::ConstantBoundTransitivity, kGb, inst, battery, all);
  EXPECT_EQ(a.witnesses.size(), 1u);
  EXPECT_EQ(a.violations, b.violations);
  EXPECT_EQ(b.witnesses.size(), b.violations);
}

TEST(Audit, ModelDirectionsOnDisjointPair) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  EXPECT_TRUE(run(AxiomKind::Completeness, models::Disjunctive{}, inst).passed);
  EXPECT_TRUE(run(AxiomKind::ConstantBoundTransitivity, models::Conjunctive{}, inst).passed);
  EXPECT_TRUE(run(AxiomKind::Completeness, models::HalfMixture{}, inst).passed);
  EXPECT_TRUE(run(AxiomKind::ConstantBoundTransitivity, models::HalfMixture{}, inst).passed);
  EXPECT_TRUE(run(AxiomKind::NegativeCompleteness, models::Conjunctive{}, inst).passed);
  EXPECT_TRUE(run(AxiomKind::NegativeConstantBoundTransitivity, models::Disjunctive{}, inst).passed);
}

TEST(AuditSuite, SeuPassesEverything) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  const Battery battery = generate_act_grid(inst, 2, 1);
  for (const auto& r : audit_suite(models::Seu{testing::binary(q("1/3"))}, inst, battery)) {
    EXPECT_TRUE(r.passed) << to_string(r.axiom);
  }
}

TEST(AuditSuite, BewleyAndJustifiable) {
  const Instance inst = testing::two_state(BeliefCollection::make({testing::interval("P", "1/5", "3/5")}));
  const Battery battery = generate_act_grid(inst, 2, 1);
  EXPECT_FALSE(audit(AxiomKind::Completeness, models::Bewley{"P"}, inst, battery).passed);
  EXPECT_TRUE(audit(AxiomKind::Transitivity, models::Bewley{"P"}, inst, battery).passed);
  EXPECT_TRUE(audit(AxiomKind::Completeness, models::Justifiable{"P"}, inst, battery).passed);
  const AuditReport t = audit(AxiomKind::Transitivity, models::Justifiable{"P"}, inst, battery);
  EXPECT_FALSE(t.passed);
  for (const auto& w : t.witnesses) EXPECT_TRUE(replay(t, inst, battery, w));
}

TEST(Audit, MissingConstants) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  const Battery battery = Battery::from_acts(inst.utility, {inst.act("f"), inst.act("g")}, "f and g");
  try {
    audit(AxiomKind::ConstantBoundTransitivity, kGb, inst, battery);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::BatteryMissingConstants);
  }
  EXPECT_TRUE(audit(AxiomKind::Reflexivity, kGb, inst, battery).passed);
  const auto suite = audit_suite(kGb, inst, battery);
  for (const auto& r : suite) EXPECT_FALSE(needs_constants(r.axiom));
  const Battery empty = Battery::from_acts(inst.utility, {}, "empty");
  EXPECT_THROW(audit(AxiomKind::Reflexivity, kGb, inst, empty), Error);
}

// Seeded sweep: reflexivity and monotonicity hold for every kind, and every
// recorded witness replays.
TEST(AuditProperty, WitnessesReplayAndMonotonicityHolds) {
  const std::vector<ModelKind> kinds{kGb, models::Disjunctive{}, models::Conjunctive{}, models::HalfMixture{},
                                     models::AlphaMixture{q("3/4")}, models::AlphaMixture{q("1/5")}};
  const std::vector<AxiomKind> pair_and_constant{AxiomKind::Completeness, AxiomKind::ConstantBoundTransitivity,
                                                 AxiomKind::NegativeCompleteness,
                                                 AxiomKind::NegativeConstantBoundTransitivity,
                                                 AxiomKind::UnambiguousCompleteness, AxiomKind::Transitivity};
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    const Instance inst = generate_instance(seed, {2, 3, 3, 10});
    const Battery battery = generate_act_grid(inst, 2, 1);
    for (const auto& kind : kinds) {
      EXPECT_TRUE(audit(AxiomKind::Reflexivity, kind, inst, battery).passed);
      EXPECT_TRUE(audit(AxiomKind::Monotonicity, kind, inst, battery).passed);
      for (AxiomKind axiom : pair_and_constant) {
        const AuditReport r = audit(axiom, kind, inst, battery);
        EXPECT_EQ(r.passed, r.violations == 0);
        for (const auto& w : r.witnesses) {
          EXPECT_TRUE(replay(r, inst, battery, w)) << seed << " " << to_string(kind) << " " << to_string(axiom);
        }
      }
    }
  }
}

TEST(AuditProperty, IndependenceAndMixingReplay) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    const Instance inst = generate_instance(seed, {2, 3, 3, 10});
    const Battery battery = generate_act_grid(inst, 2, 1);
    for (const ModelKind& kind : {kGb, ModelKind{models::HalfMixture{}}}) {
      EXPECT_TRUE(audit(AxiomKind::Independence, kind, inst, battery).passed);
      const AuditReport fm = audit(AxiomKind::FavorableMixing, kind, inst, battery);
      for (const auto& w : fm.witnesses) EXPECT_TRUE(replay(fm, inst, battery, w));
    }
  }
}

TEST(Replay, RejectsTamperedWitness) {
  const Instance inst = testing::two_state(testing::disjoint_pair());
  const Battery battery = generate_act_grid(inst, 4, 1);
  const AuditReport r = audit(AxiomKind::ConstantBoundTransitivity, kGb, inst, battery);
  ASSERT_FALSE(r.witnesses.empty());
  Witness w = r.witnesses.front();
  ASSERT_FALSE(w.judgments.empty());
  w.judgments.front().margin += 1;
  EXPECT_FALSE(replay(r, inst, battery, w));
}

}  // namespace
}  // namespace ambipref
