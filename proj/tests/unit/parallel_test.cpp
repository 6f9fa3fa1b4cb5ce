#include <gtest/gtest.h>

#include <stdexcept>

#include "ccbench/parallel.hpp"

namespace ccbench {
namespace {

TEST(ParallelMap, GathersInIndexOrder) {
  for (unsigned threads : {1u, 2u, 8u, 64u}) {
    const auto out = parallel_map(1000, threads, [](std::size_t i) { return i * i; });
    ASSERT_EQ(out.size(), 1000u);
    for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  }
  EXPECT_TRUE(parallel_map(0, 4, [](std::size_t i) { return i; }).empty());
}

TEST(ParallelMap, RethrowsLowestFailingIndex) {
  for (unsigned threads : {1u, 8u}) {
    try {
      parallel_map(200, threads, [](std::size_t i) -> int {
        if (i == 17 || i == 150) throw std::runtime_error(std::to_string(i));
        return 0;
      });
      FAIL();
    } catch (const std::runtime_error& e) {
      EXPECT_STREQ(e.what(), "17");
    }
  }
}

}  // namespace
}  // namespace ccbench
