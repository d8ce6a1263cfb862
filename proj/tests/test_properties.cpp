#include <gtest/gtest.h>

#include "properties.hpp"

namespace {

void expect_ok(const ineq::props::Report& r) {
  EXPECT_GT(r.trials, 0u);
  EXPECT_EQ(r.failures, 0u) << r.first_failure << " (worst " << r.worst << ")";
}

}  // namespace

TEST(Properties, GiniMatchesPairwise) { expect_ok(ineq::props::gini_matches_pairwise()); }
TEST(Properties, ScaleInvariance) { expect_ok(ineq::props::scale_invariance()); }
TEST(Properties, ReplicationInvariance) { expect_ok(ineq::props::replication_invariance()); }
TEST(Properties, PigouDalton) { expect_ok(ineq::props::pigou_dalton()); }
TEST(Properties, GeLimits) { expect_ok(ineq::props::ge_limits()); }
TEST(Properties, AtkinsonGeIdentity) { expect_ok(ineq::props::atkinson_ge_identity()); }
TEST(Properties, AtkinsonMonotoneInAversion) { expect_ok(ineq::props::atkinson_monotone_in_aversion()); }
TEST(Properties, CompositeGrid) { expect_ok(ineq::props::composite_grid()); }
TEST(Properties, GeneralizedReducesToComposite) { expect_ok(ineq::props::generalized_reduces()); }
TEST(Properties, GiniBounds) { expect_ok(ineq::props::gini_bounds()); }
