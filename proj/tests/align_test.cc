// Copyright 2026 The decompound Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "decompound/align.h"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.h"

namespace decompound {
namespace {

using Texts = std::vector<std::u32string>;

Word W(const std::u32string &s) { return Word(s, "en"); }

TEST(LevenshteinTest, Examples) {
  EXPECT_EQ(0, Levenshtein(U"maid", U"maid"));
  EXPECT_EQ(1, Levenshtein(U"brides", U"bride"));
  EXPECT_EQ(oracle::Levenshtein(U"kitten", U"sitting"),
            Levenshtein(U"kitten", U"sitting"));
  EXPECT_EQ(3, Levenshtein(U"kitten", U"sitting"));
  EXPECT_EQ(4, Levenshtein(U"", U"maid"));
  EXPECT_EQ(1, Levenshtein(U"naïve", U"naive"));
}

TEST(LevenshteinTest, MetricProperties) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto a = oracle::RandomString(rng, 0, 8, U"abcd");
    const auto b = oracle::RandomString(rng, 0, 8, U"abcd");
    const auto c = oracle::RandomString(rng, 0, 8, U"abcd");
    const int ab = Levenshtein(a, b);
    EXPECT_EQ(oracle::Levenshtein(a, b), ab);
    EXPECT_EQ(ab, Levenshtein(b, a));
    EXPECT_EQ(ab == 0, a == b);
    EXPECT_LE(Levenshtein(a, c), ab + Levenshtein(b, c));
    const int la = static_cast<int>(a.size()), lb = static_cast<int>(b.size());
    EXPECT_LE(std::abs(la - lb), ab);
    EXPECT_LE(ab, std::max(la, lb));
  }
}

TEST(TotalCostTest, Examples) {
  auto r = TotalCost(W(U"bridesmaid"), Boundaries({0, 6, 10}, 10),
                     {U"bride", U"maid"});
  EXPECT_EQ((std::vector<int>{1, 0}), r.per_segment_costs);
  EXPECT_EQ(1, r.total_cost);

  r = TotalCost(W(U"maid"), Boundaries({0, 4}, 4), {U"maid"});
  EXPECT_EQ((std::vector<int>{0}), r.per_segment_costs);
  EXPECT_EQ(0, r.total_cost);

  r = TotalCost(W(U"bridesmaid"), Boundaries({0, 5, 10}, 10),
                {U"bride", U"maid"});
  EXPECT_EQ((std::vector<int>{0, 1}), r.per_segment_costs);
  EXPECT_EQ(1, r.total_cost);

  EXPECT_THROW(TotalCost(W(U"maid"), Boundaries({0, 4}, 4), {U"ma", U"id"}),
               std::invalid_argument);
}

TEST(TieBreakTest, Examples) {
  const Word w = W(U"bridesmaid");
  const Texts c = {U"bride", U"maid"};
  const auto a = TotalCost(w, Boundaries({0, 6, 10}, 10), c);  // (1,0)
  const auto b = TotalCost(w, Boundaries({0, 5, 10}, 10), c);  // (0,1)
  EXPECT_EQ(&a, &TieBreak(a, b));
  EXPECT_EQ(&a, &TieBreak(b, a));

  // Identical cost vectors (1,1): smaller boundary list wins.
  const Word w2 = W(U"abab");
  const Texts c2 = {U"ab", U"ab"};
  const auto x = TotalCost(w2, Boundaries({0, 1, 4}, 4), c2);
  const auto y = TotalCost(w2, Boundaries({0, 3, 4}, 4), c2);
  ASSERT_EQ(x.per_segment_costs, y.per_segment_costs);
  EXPECT_EQ(&x, &TieBreak(x, y));
  EXPECT_EQ(&x, &TieBreak(y, x));

  // (2,0,0) vs (1,1,0).
  const Texts c3 = {U"xx", U"a", U"a"};
  const auto p = TotalCost(W(U"aaaa"), Boundaries({0, 2, 3, 4}, 4), c3);
  const auto q =
      TotalCost(W(U"xaaa"), Boundaries({0, 2, 3, 4}, 4), {U"xb", U"b", U"a"});
  ASSERT_EQ((std::vector<int>{2, 0, 0}), p.per_segment_costs);
  ASSERT_EQ((std::vector<int>{1, 1, 0}), q.per_segment_costs);
  EXPECT_EQ(&p, &TieBreak(p, q));

  const auto z = TotalCost(W(U"maid"), Boundaries({0, 4}, 4), {U"maid"});
  EXPECT_THROW(TieBreak(a, z), std::invalid_argument);
}

TEST(EnumerateOffsetsTest, Examples) {
  using V = std::vector<std::vector<int>>;
  EXPECT_EQ((V{{0, 0}}), EnumerateOffsets(2, 0, 0));
  EXPECT_EQ((V{{1, 0}, {0, 1}}), EnumerateOffsets(2, 1, 1));
  EXPECT_EQ((V{{1, -1}, {-1, 1}}), EnumerateOffsets(2, 0, 2));
  EXPECT_TRUE(EnumerateOffsets(2, 1, 2).empty());   // parity
  EXPECT_TRUE(EnumerateOffsets(3, -3, 1).empty());  // bound < |delta|
}

TEST(EnumerateOffsetsTest, MatchesExhaustiveOracle) {
  for (int k = 1; k <= 4; ++k) {
    for (int bound = 0; bound <= 5; ++bound) {
      for (int delta = -bound - 1; delta <= bound + 1; ++delta) {
        auto got = EnumerateOffsets(k, delta, bound);
        auto want = oracle::Offsets(k, delta, bound);
        std::sort(want.rbegin(), want.rend());
        EXPECT_EQ(want, got) << "k=" << k << " delta=" << delta
                             << " bound=" << bound;
      }
    }
  }
}

TEST(AlignTest, WorkedExamples) {
  for (auto align : {&AlignBruteforce, &AlignFast}) {
    auto r = align(W(U"bridesmaid"), {U"bride", U"maid"}, {});
    EXPECT_EQ((Texts{U"brides", U"maid"}), r.segments());
    EXPECT_EQ((std::vector<int>{1, 0}), r.per_segment_costs);
    EXPECT_EQ(1, r.total_cost);

    r = align(W(U"maid"), {U"maid"}, {});
    EXPECT_EQ((Texts{U"maid"}), r.segments());
    EXPECT_EQ(0, r.total_cost);

    r = align(W(U"sideexperiments"), {U"side", U"experiment"}, {});
    EXPECT_EQ((Texts{U"side", U"experiments"}), r.segments());
    EXPECT_EQ(1, r.total_cost);

    r = align(W(U"highwayman"), {U"high", U"way", U"man"}, {});
    EXPECT_EQ((Texts{U"high", U"way", U"man"}), r.segments());
    EXPECT_EQ(0, r.total_cost);
  }
}

TEST(AlignTest, Errors) {
  for (auto align : {&AlignBruteforce, &AlignFast}) {
    EXPECT_THROW(align(W(U"ab"), {U"a", U"b", U"c"}, {}),
                 std::invalid_argument);
    EXPECT_THROW(align(W(U"ab"), {U"a", U""}, {}), std::invalid_argument);
    EXPECT_THROW(align(W(U"ab"), {}, {}), std::invalid_argument);
  }
  AlignOptions tiny;
  tiny.max_candidates = 3;
  EXPECT_THROW(AlignBruteforce(W(U"abcdefgh"), {U"abc", U"def"}, tiny),
               SearchLimitExceeded);
  EXPECT_THROW(AlignFast(W(U"zzzzzzzzzzzz"), {U"ab", U"cd", U"ef"}, tiny),
               SearchLimitExceeded);
}

TEST(AlignTest, FastMatchesBruteforceAndOracle) {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto word = oracle::RandomString(rng, 1, 12, U"abcd");
    std::uniform_int_distribution<int> kdist(
        1, std::min<int>(3, static_cast<int>(word.size())));
    const int k = kdist(rng);
    Texts c;
    for (int i = 0; i < k; ++i) c.push_back(oracle::RandomString(rng, 1, 6, U"abcd"));

    const auto fast = AlignFast(W(word), c);
    const auto brute = AlignBruteforce(W(word), c);
    ASSERT_EQ(brute.boundaries(), fast.boundaries());
    ASSERT_EQ(brute.per_segment_costs, fast.per_segment_costs);
    ASSERT_EQ(brute.total_cost, fast.total_cost);

    const auto want = oracle::BruteAlign(word, c);
    ASSERT_EQ(want.boundaries, brute.boundaries().indices());
    ASSERT_EQ(want.costs, brute.per_segment_costs);
  }
}

TEST(AlignTest, AdmissibleBound) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    const auto word = oracle::RandomString(rng, 3, 12, U"abcd");
    Texts c = {oracle::RandomString(rng, 1, 6, U"abcd"),
               oracle::RandomString(rng, 1, 6, U"abcd")};
    std::vector<CandidateTrace> seen;
    AlignOptions opts;
    opts.observer = [&](const CandidateTrace &t) { seen.push_back(t); };
    const auto r = AlignFast(W(word), c, opts);
    ASSERT_FALSE(seen.empty());
    for (const auto &t : seen) {
      EXPECT_LE(t.bound, t.cost);
      EXPECT_LE(r.total_cost, t.cost);
    }
  }
}

TEST(AlignTest, ZeroCostIffConcatenation) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 500; ++trial) {
    Texts c = {oracle::RandomString(rng, 1, 4, U"ab"),
               oracle::RandomString(rng, 1, 4, U"ab")};
    const auto word = oracle::RandomString(rng, 2, 8, U"ab");
    const auto r = AlignFast(W(word), c);
    EXPECT_EQ(r.total_cost == 0, c[0] + c[1] == word);
    EXPECT_EQ(r.total_cost == 0, r.segments() == c);
    std::u32string joined;
    for (const auto &s : r.segments()) joined += s;
    EXPECT_EQ(word, joined);
    EXPECT_EQ(r, AlignFast(W(word), c));
  }
}

TEST(AlignTest, LongWord) {
  const std::u32string word =
      U"donaudampfschifffahrtselektrizitaetenhauptbetriebswerkbauunterbeamte";
  const Texts c = {U"donau",     U"dampf",    U"schiff", U"fahrt",
                   U"elektrizitaet", U"haupt", U"betrieb", U"werk",
                   U"bau",       U"unter",    U"beamte"};
  const auto r = AlignFast(W(word), c);
  EXPECT_EQ(4, r.total_cost);  // linking "s", "en", "s"
  std::u32string joined;
  for (const auto &s : r.segments()) joined += s;
  EXPECT_EQ(word, joined);
}

}  // namespace
}  // namespace decompound
