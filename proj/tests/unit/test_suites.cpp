#include <gtest/gtest.h>

#include "glacm/suites.hpp"

namespace glacm {
namespace {

std::string failures(const SuiteResult& r) {
  std::string s;
  for (const auto& c : r.checks)
    if (!c.pass) s += c.name + ": " + c.detail + "; ";
  return s;
}

TEST(Suites, Names) {
  const auto& n = suites::names();
  EXPECT_EQ(n.front(), "picard");
  EXPECT_EQ(n.back(), "all");
  EXPECT_EQ(n.size(), 10u);
}

TEST(Suites, AllOnSmallestWeights) {
  const SuiteResult r = suites::run_suite("all", Weights(), 4);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_FALSE(r.checks.empty());
}

TEST(Suites, PerTupleSuites) {
  const Weights w({2, 3, 4, 5});
  for (const char* name : {"picard", "graded-oracle", "k0-gram", "extbundle-iso", "hulls-covers",
                                  "homrig-crosscheck", "rigidity", "quiver-cartan"}) {
    const SuiteResult r = suites::run_suite(name, w);
    EXPECT_EQ(r.suite, name);
    EXPECT_TRUE(r.passed()) << name << ": " << failures(r);
  }
}

TEST(Suites, OrbitSweep) {
  const SuiteResult r = suites::run_suite("orbit-sweep", Weights(), 5);
  EXPECT_TRUE(r.passed()) << failures(r);
  EXPECT_EQ(r.checks.size(), 3u);
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(suites::run_suite("nope", Weights()), std::invalid_argument);
}

TEST(Suites, ExceptionsBecomeFailures) {
  SuiteResult r;
  suites::detail::record(r, "boom", []() -> CheckOutcome { throw DomainError("bad"); });
  ASSERT_EQ(r.checks.size(), 1u);
  EXPECT_FALSE(r.checks[0].pass);
  EXPECT_FALSE(r.passed());
}

}  // namespace
}  // namespace glacm
