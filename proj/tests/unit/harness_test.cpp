#include <gtest/gtest.h>

#include "holomatch/errors.hpp"
#include "holomatch/harness.hpp"

namespace holomatch {
namespace {

std::string value_of(const HarnessReport& r, const std::string& key) {
  for (const auto& [k, v] : r.witness)
    if (k == key) return v;
  return {};
}

TEST(Harness, TrialSeedsAreDistinct) {
  EXPECT_NE(trial_seed(1, 0), trial_seed(1, 1));
  EXPECT_NE(trial_seed(1, 0), trial_seed(2, 0));
  EXPECT_EQ(trial_seed(9, 4), trial_seed(9, 4));
}

TEST(Harness, Gamma1ReportsBothCornerOrders) {
  const HarnessReport r = demo_gamma1();
  EXPECT_EQ(value_of(r, "counterclockwise mgi").rfind("pass", 0), 0U);
  EXPECT_EQ(value_of(r, "counterclockwise entries"), "0000 1, 0101 1, 1010 1, 1111 -1");
  EXPECT_EQ(value_of(r, "row-major matches expected"), "yes");
  EXPECT_EQ(value_of(r, "row-major mgi"), "fail alpha=1000 P={1,2,3,4} residual=2");
  EXPECT_EQ(value_of(r, "counterclockwise rank"), "4");
  EXPECT_EQ(value_of(r, "order reproducing expected entries"), "row-major");
  // no single order gives the expected entries and an MGI pass
  EXPECT_FALSE(r.pass);
}

TEST(Harness, EqualityTheoremSmallRun) {
  const HarnessReport r = verify_equality_theorem(3, 3, 2, 8, 17);
  EXPECT_TRUE(r.pass) << format_report(r);
  EXPECT_EQ(value_of(r, "first rank"), "3");
  EXPECT_THROW(verify_equality_theorem(2, 3, 1, 1, 1), PreconditionError);
  EXPECT_THROW(verify_equality_theorem(3, 2, 2, 1, 1), PreconditionError);
  EXPECT_THROW(verify_equality_theorem(5, 3, 2, 1, 1), PreconditionError);
  EXPECT_TRUE(verify_equality_control(3).pass);
}

TEST(Harness, RankBoundAndDecompositionAreDeterministic) {
  const HarnessReport a = verify_rank_bound(12, 3);
  EXPECT_TRUE(a.pass) << format_report(a);
  EXPECT_EQ(format_report(a), format_report(verify_rank_bound(12, 3)));
  const HarnessReport d = verify_decomposition(12, 3);
  EXPECT_TRUE(d.pass) << format_report(d);
  EXPECT_EQ(format_report(d), format_report(verify_decomposition(12, 3)));
  EXPECT_EQ(format_report(d).find("seconds"), std::string::npos);
  EXPECT_NE(format_report(d, true).find("seconds"), std::string::npos);
}

}  // namespace
}  // namespace holomatch
