#include "itersplit/grid.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace itersplit;

TEST(ValidFrames, AllPassValidationAndIncludeKnownFrames) {
  const auto frames = valid_frames(2);
  EXPECT_FALSE(frames.empty());
  bool saw_trivial = false, saw_t35 = false;
  for (const FareyFrame& f : frames) {
    EXPECT_TRUE(f.verified());
    saw_trivial |= f == validate_frame(1, 0, 0, 1);
    saw_t35 |= f == validate_frame(2, 3, 1, 2);
  }
  EXPECT_TRUE(saw_trivial);
  EXPECT_FALSE(saw_t35);  // q = 3 is outside the bound
  const auto wider = valid_frames(3);
  EXPECT_TRUE(std::any_of(wider.begin(), wider.end(),
                          [](const FareyFrame& f) { return f == validate_frame(2, 3, 1, 2); }));
}

TEST(TwistSequences, CountsAndOrder) {
  const auto seqs = twist_sequences(3, {-1, 1});
  ASSERT_EQ(seqs.size(), 2u + 4u + 8u);
  EXPECT_EQ(seqs.front(), TwistSequence({-1}));
  EXPECT_EQ(seqs[2], TwistSequence({-1, -1}));
  EXPECT_EQ(seqs.back(), TwistSequence({1, 1, 1}));
}

TEST(ContinuedFractions, SkipsInvalid) {
  const auto cfs = continued_fractions(1, {-1, 0, 1});
  // d=0: 2 signs x 2 nonzero b_0. d=1: 4 sign patterns x b_0 in {+-1} x 3
  // choices of b_1, minus the 2 sign-changing patterns with b_1=0 (x2 b_0).
  EXPECT_EQ(cfs.size(), 4u + (4 * 2 * 3 - 2 * 2));
}

TEST(SampleIndices, DistinctAndDeterministic) {
  const auto all = sample_indices(10, 20);
  EXPECT_EQ(all.size(), 10u);
  EXPECT_EQ(all.back(), 9u);

  const auto picks = sample_indices(1'000'000, 5000);
  EXPECT_EQ(picks.size(), 5000u);
  EXPECT_EQ(std::set<std::uint64_t>(picks.begin(), picks.end()).size(), 5000u);
  EXPECT_EQ(picks, sample_indices(1'000'000, 5000));
  for (auto i : picks) EXPECT_LT(i, 1'000'000u);
}

TEST(ParallelMap, PreservesOrder) {
  const auto out = parallel_map<std::size_t>(1000, [](std::size_t i) { return i * i; }, 4);
  ASSERT_EQ(out.size(), 1000u);
  for (std::size_t i = 0; i < out.size(); ++i) EXPECT_EQ(out[i], i * i);
  EXPECT_TRUE(parallel_map<int>(0, [](std::size_t) { return 1; }, 3).empty());
}

TEST(ParallelMap, RethrowsWorkerFailure) {
  EXPECT_THROW(parallel_map<int>(
                   100,
                   [](std::size_t i) -> int {
                     if (i == 37) throw ValidationError("boom");
                     return 0;
                   },
                   4),
               ValidationError);
}
