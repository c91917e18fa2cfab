#include <gtest/gtest.h>

#include "glacm/checks.hpp"
#include "glacm/orbits.hpp"

namespace glacm {
namespace {

TEST(Sigma, Action) {
  const Weights w({3, 4, 5, 6});
  EXPECT_EQ(orbits::sigma_action(w, 0b0011, picard::zero()), (LElem{{1, 2, 0, 0}, 0}));
  EXPECT_EQ(orbits::sigma_action(w, 0b1111, picard::zero()), picard::distinguished(w).delta);
  EXPECT_EQ(orbits::sigma_action(w, 0, picard::zero()), picard::zero());
  EXPECT_THROW(orbits::sigma_action(w, 0b0001, picard::zero()), DomainError);
  EXPECT_THROW(orbits::sigma_action(w, 0b0111, picard::zero()), DomainError);
}

TEST(Burnside, Counts) {
  EXPECT_EQ(orbits::burnside_count(Weights()).burnside, 1);
  EXPECT_EQ(orbits::burnside_count(Weights({3, 3, 3, 3})).burnside, 2);
  // (24 + 8) / 8: only I = {} and I = {1,3} fix anything.
  const OrbitReport r = orbits::burnside_count(Weights({2, 3, 4, 5}));
  EXPECT_EQ(r.burnside, 4);
  EXPECT_EQ(r.fixed_total, 32);
  EXPECT_EQ(r.fixed_counts.at(0b0000), 24);
  EXPECT_EQ(r.fixed_counts.at(0b0101), 8);
  EXPECT_EQ(r.fixed_counts.at(0b0011), 0);
  EXPECT_EQ(r.orbits.size(), 4u);
  EXPECT_EQ(r.closed_formula, 4);
}

TEST(Burnside, MatchesClosedFormulaOnSweep) {
  for (const Weights& w : checks::weight_sweep(6)) {
    const OrbitReport r = orbits::burnside_count(w);
    ASSERT_EQ(r.fixed_total % 8, 0) << w.to_string();
    ASSERT_EQ(r.burnside, r.closed_formula) << w.to_string();
    ASSERT_EQ(static_cast<Int>(r.orbits.size()), r.burnside) << w.to_string();
  }
}

TEST(Burnside, FaithfulOrder) {
  EXPECT_EQ(orbits::burnside_count(Weights()).faithful_order, 1u);
  EXPECT_EQ(orbits::burnside_count(Weights({3, 3, 3, 3})).faithful_order, 8u);
  // p_1 = 2: sigma_I and sigma_{I xor {1}} agree, leaving 8 distinct maps on
  // the remaining three coordinates.
  EXPECT_EQ(orbits::burnside_count(Weights({2, 3, 3, 3})).faithful_order, 8u);
  EXPECT_EQ(orbits::burnside_count(Weights({2, 2, 3, 3})).faithful_order, 4u);
}

TEST(Transitivity, ListedTuples) {
  EXPECT_TRUE(orbits::is_transitive(Weights()));
  EXPECT_TRUE(orbits::is_transitive(Weights({2, 2, 2, 3})));
  EXPECT_TRUE(orbits::is_transitive(Weights({3, 2, 3, 2})));
  EXPECT_FALSE(orbits::is_transitive(Weights({3, 3, 3, 3})));
  EXPECT_FALSE(orbits::is_transitive(Weights({2, 2, 2, 4})));
}

TEST(Transitivity, TwoThreeThreeThreeIsTransitive) {
  // Not in the short list, but the orbit count is 1.
  for (const Weights& w : {Weights({2, 3, 3, 3}), Weights({3, 3, 2, 3})}) {
    EXPECT_TRUE(orbits::is_transitive(w));
    EXPECT_FALSE(checks::transitive_listed(w));
    EXPECT_TRUE(checks::transitive_by_formula(w));
  }
}

TEST(Transitivity, FormulaClassificationOnSweep) {
  int transitive = 0;
  for (const Weights& w : checks::weight_sweep(5)) {
    ASSERT_EQ(orbits::is_transitive(w), checks::transitive_by_formula(w)) << w.to_string();
    if (orbits::is_transitive(w)) ++transitive;
  }
  // 3^4 - 2^4 quadruples over {2,3} containing a 2.
  EXPECT_EQ(transitive, 15);
}

TEST(OrbitChecks, Pass) {
  for (const Weights& w : {Weights({2, 3, 4, 5}), Weights({4, 4, 6, 3})}) {
    EXPECT_TRUE(checks::orbit_report(w).pass) << w.to_string();
    EXPECT_TRUE(checks::sigma_group(w).pass) << w.to_string();
    EXPECT_TRUE(checks::orbit_iso_agreement(w).pass) << w.to_string();
  }
}

}  // namespace
}  // namespace glacm
