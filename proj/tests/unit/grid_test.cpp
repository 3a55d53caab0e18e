#include <gtest/gtest.h>

#include <atomic>
#include <stdexcept>

#include "vnum/error.hpp"
#include "vnum/grid.hpp"

namespace vnum {
namespace {

TEST(GridBox, EnumerationOrder) {
  const GridBox box({1, 2}, {2, 4});
  EXPECT_EQ(box.size(), 6u);
  const auto pts = box.points();
  const std::vector<GridPoint> expected{{1, 2}, {1, 3}, {1, 4}, {2, 2}, {2, 3}, {2, 4}};
  EXPECT_EQ(pts, expected);
  for (std::size_t i = 0; i < pts.size(); ++i) EXPECT_EQ(box.indexOf(pts[i]), i);
  EXPECT_TRUE(box.contains({2, 3}));
  EXPECT_FALSE(box.contains({3, 3}));
  EXPECT_EQ(box.minSide(), 2);
  EXPECT_EQ(toString(box), "(1,2)..(2,4)");
  EXPECT_EQ(toString(GridPoint{4}), "(4)");
}

TEST(GridBox, RejectsBadCorners) {
  EXPECT_THROW(GridBox({3}, {2}), Error);
  EXPECT_THROW(GridBox({1, 1}, {2}), Error);
}

TEST(GridBox, TailKeepsCeilingOfFraction) {
  EXPECT_EQ(GridBox::cube(2, 1, 6).tail(0.5), GridBox::cube(2, 4, 6));
  EXPECT_EQ(GridBox::cube(1, 1, 5).tail(0.5), GridBox::cube(1, 3, 5));
  EXPECT_EQ(GridBox::cube(1, 1, 5).tail(0.01), GridBox::cube(1, 5, 5));
  EXPECT_THROW(GridBox::cube(1, 1, 5).tail(0.0), Error);
  EXPECT_EQ(GridBox::cube(1, 1, 5).tail(1.0), GridBox::cube(1, 1, 5));
}

TEST(LargestGoodTail, PicksBiggestVolume) {
  const GridBox line({1}, {5});
  EXPECT_EQ(largestGoodTail(line, {false, true, false, true, true}), (GridPoint{4}));
  EXPECT_FALSE(largestGoodTail(line, {true, true, true, true, false}));
  const GridBox sq({1, 1}, {3, 3});
  // Bad only at (1,1): tails starting at (1,2) and (2,1) tie, the smaller wins.
  std::vector<bool> good(9, true);
  good[0] = false;
  EXPECT_EQ(largestGoodTail(sq, good), (GridPoint{1, 2}));
}

TEST(ParallelFor, SlotsAreDeterministic) {
  for (unsigned jobs : {1u, 2u, 8u}) {
    std::vector<std::size_t> out(1000);
    parallelFor(out.size(), jobs, [&](std::size_t i) { out[i] = i * i; });
    for (std::size_t i = 0; i < out.size(); ++i) ASSERT_EQ(out[i], i * i);
  }
}

TEST(ParallelFor, RethrowsLowestIndexError) {
  std::atomic<int> ran{0};
  try {
    parallelFor(50, 4, [&](std::size_t i) {
      ++ran;
      if (i == 7 || i == 30) throw std::runtime_error("at " + std::to_string(i));
    });
    FAIL();
  } catch (const std::runtime_error& e) {
    EXPECT_STREQ(e.what(), "at 7");
  }
  EXPECT_EQ(ran.load(), 50);
}

}  // namespace
}  // namespace vnum
