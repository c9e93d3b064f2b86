#include <gtest/gtest.h>

#include "jinsig/selfcheck.hpp"

using namespace jinsig;

TEST(Selfcheck, AllSuitesPass) {
  const auto results = run_selfcheck(7, 200);
  ASSERT_EQ(results.size(), 7u);
  for (const auto& r : results) {
    EXPECT_EQ(r.trials, 200);
    EXPECT_EQ(r.failures, 0) << r.name << ": " << r.first_failure;
  }
}

TEST(Selfcheck, DeterministicForSeed) {
  const auto a = run_selfcheck(3, 10), b = run_selfcheck(3, 10);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t k = 0; k < a.size(); ++k) {
    EXPECT_EQ(a[k].name, b[k].name);
    EXPECT_EQ(a[k].failures, b[k].failures);
  }
}
