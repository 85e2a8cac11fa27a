#include <gtest/gtest.h>

#include "torlink/torlink.hpp"

using namespace torlink;

TEST(Properties, AllSuitesHold) {
  auto results = run_all_properties(20261017, 200);
  EXPECT_EQ(results.size(), 9u);
  for (auto const& r : results) {
    EXPECT_EQ(r.cases, 200) << r.name;
    EXPECT_TRUE(r.ok()) << r.name << ": " << r.first_failure;
  }
}

TEST(Properties, OtherSeeds) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    for (auto const& r : run_all_properties(seed, 30)) {
      EXPECT_TRUE(r.ok()) << r.name << " seed " << seed << ": "
                          << r.first_failure;
    }
  }
}
