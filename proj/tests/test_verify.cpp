#include <gtest/gtest.h>

#include "mcfluct/verify.hpp"

using namespace mcfluct;

class VerifySuite : public ::testing::TestWithParam<VerificationSuite> {};

TEST_P(VerifySuite, PassesWithNonEmptyChecks) {
  Engine engine;
  const auto report = run_verification(engine, GetParam());
  EXPECT_EQ(report.suite, GetParam());
  ASSERT_FALSE(report.checks.empty());
  for (const auto& c : report.checks) {
    EXPECT_TRUE(c.passed()) << c.name << ": " << c.first_failure;
    EXPECT_GT(c.checked, 0u) << c.name;
  }
  EXPECT_TRUE(report.passed());
}

INSTANTIATE_TEST_SUITE_P(All, VerifySuite,
                         ::testing::Values(VerificationSuite::identities, VerificationSuite::oracle,
                                           VerificationSuite::fes, VerificationSuite::ensembles),
                         [](const auto& info) { return suite_name(info.param); });

TEST(VerifySuiteNames, RoundTrip) {
  for (const char* name : {"identities", "oracle", "fes", "ensembles"}) {
    const auto suite = parse_suite(name);
    ASSERT_TRUE(suite.has_value()) << name;
    EXPECT_EQ(suite_name(*suite), name);
  }
  EXPECT_FALSE(parse_suite("plateau").has_value());
}

TEST(VerificationReport, EmptyOrFailingReportDoesNotPass) {
  VerificationReport report;
  EXPECT_FALSE(report.passed());
  report.checks.push_back({"ok", 3, 0, ""});
  EXPECT_TRUE(report.passed());
  report.checks.push_back({"bad", 3, 1, "n=2"});
  EXPECT_FALSE(report.passed());
  EXPECT_FALSE((VerificationCheck{"unchecked", 0, 0, ""}).passed());
}
