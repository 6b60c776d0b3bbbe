#include <gtest/gtest.h>

#include "borel/verify.hpp"

using namespace borel;

class ModuleSuite : public ::testing::TestWithParam<const char*> {};

TEST_P(ModuleSuite, Passes) {
  const auto r = run_suite(GetParam());
  EXPECT_TRUE(r.ok()) << (r.failures.empty() ? "" : r.failures.front());
  EXPECT_GT(r.passed, 0u);
  EXPECT_EQ(r.failures.empty(), r.ok());
}

INSTANTIATE_TEST_SUITE_P(Verify, ModuleSuite,
                         ::testing::Values("gaussian-ranks", "blattice-meet", "fountains", "monomials", "filters", "ideals"),
                         [](const auto& info) {
                           std::string s = info.param;
                           for (auto& c : s)
                             if (c == '-') c = '_';
                           return s;
                         });

TEST(Verify, DeterministicForASeed) {
  for (const char* suite : {"acceptance-6", "ideals", "monomials"}) {
    const auto a = run_suite(suite, 42), b = run_suite(suite, 42);
    EXPECT_EQ(a.passed, b.passed);
    EXPECT_EQ(a.failed, b.failed);
    EXPECT_EQ(a.failures, b.failures);
  }
}

TEST(Verify, UnknownSuite) { EXPECT_THROW(run_suite("nope"), parse_error); }

TEST(Verify, AllExpandsToEverySuite) {
  const auto names = suite_names();
  EXPECT_EQ(names.size(), 16u);
  EXPECT_EQ(names.front(), "acceptance-1");
}
