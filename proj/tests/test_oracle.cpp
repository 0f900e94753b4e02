#include <gtest/gtest.h>

#include "support.hpp"

using namespace demaz;
using namespace demaz::testing;
using oracle::OneLine;

TEST(Oracle, CountingByScan) {
  auto a = sym({5, 6, 2, 8, 3, 9, 7, 4, 1});
  EXPECT_EQ(oracle::oracle_eval_s(a, 4, 5, 64), 2);
  EXPECT_EQ(oracle::oracle_eval_s(make_affine({1, 0}, 2), 1, 0, 32), 1);
  EXPECT_THROW(oracle::oracle_eval_s(make_shift(5), 40, 0, 6), Error);
}

TEST(Oracle, MinPlusOnTables) {
  EXPECT_EQ(oracle::ol_star({2, 1, 3}, {1, 3, 2}), (OneLine{2, 3, 1}));
  EXPECT_EQ(oracle::ol_star({2, 1, 3}, {2, 1, 3}), (OneLine{2, 1, 3}));
  EXPECT_EQ(oracle::ol_star({3, 2, 1}, {3, 2, 1}), (OneLine{3, 2, 1}));
}

TEST(Oracle, GreedyAndStingy) {
  EXPECT_EQ(oracle::ol_greedy_max({2, 1, 3}, {2, 1, 3}), (OneLine{2, 1, 3}));
  EXPECT_EQ(oracle::ol_greedy_max({2, 1, 3}, {1, 3, 2}), (OneLine{2, 3, 1}));
  EXPECT_EQ(oracle::ol_stingy_min({3, 2, 1}, {2, 1, 3}), (OneLine{2, 3, 1}));
}

TEST(Oracle, WordFold) {
  auto w = oracle::oracle_star_word(identity(), {1, 2, 1});
  EXPECT_EQ(w, sym({3, 2, 1}));
  EXPECT_EQ(oracle::oracle_star_word(identity(), {1, 1}), sym({2, 1}));
}

TEST(Oracle, ExtremeNeedsUniqueAnswer) {
  EXPECT_THROW(oracle::ol_extreme({{2, 1, 3}, {1, 3, 2}}, true), Error);
}

TEST(Oracle, ResidualsAgreeWithEngineOnS3) {
  auto all = oracle::all_perms(3);
  for (auto& x : all)
    for (auto& y : all) {
      auto px = oracle::from_one_line(x), py = oracle::from_one_line(y);
      EXPECT_EQ(oracle::from_one_line(oracle::ol_tll_min(x, y)), tll(px, py));
      EXPECT_EQ(oracle::from_one_line(oracle::ol_tlr_min(x, y)), tlr(px, py));
    }
}

TEST(Oracle, ExtendedSymmetricGroups) {
  if (!std::getenv("DEMAZ_EXTENDED")) GTEST_SKIP() << "set DEMAZ_EXTENDED=1 to run S5/S6 sweeps";
  for (int d : {5, 6}) {
    Rng rng(static_cast<unsigned>(d));
    for (int i = 0; i < 200; ++i) {
      auto x = random_sd(rng, d), y = random_sd(rng, d);
      EXPECT_EQ(star(x, y), oracle::oracle_star_sd(x, y, d));
      EXPECT_EQ(star(x, y), oracle::oracle_greedy_max(x, y, d));
    }
  }
}
