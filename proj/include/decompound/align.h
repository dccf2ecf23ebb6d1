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

// Turns compound normalization into compound segmentation.
//
// Given a word x of length n and normalized constituents c_1..c_k, find
// boundaries 0 = r_0 < r_1 < ... < r_k = n minimizing
//
//   C(s) = sum_i levenshtein(x[r_{i-1}:r_i], c_i).
//
// Ties on C(s) prefer the larger per-segment cost vector in lexicographic
// order (edits pushed towards earlier segments, e.g. brides+maid over
// bride+smaid), then the lexicographically smaller boundary list.
//
// AlignBruteforce enumerates every boundary set. AlignFast enumerates
// per-segment length offsets o_i = |s_i| - |c_i| in increasing order of
// sum_i |o_i|, which lower-bounds C(s), and stops once that bound exceeds
// the best cost found.

#ifndef DECOMPOUND_ALIGN_H_
#define DECOMPOUND_ALIGN_H_

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "decompound/types.h"

namespace decompound {

// Unit-cost insertions, deletions and substitutions.
int Levenshtein(std::u32string_view a, std::u32string_view b);

struct AlignmentResult {
  Segmentation segmentation;
  std::vector<int> per_segment_costs;
  int total_cost = 0;

  const Boundaries &boundaries() const { return segmentation.boundaries(); }
  const std::vector<std::u32string> &segments() const {
    return segmentation.segments();
  }
  friend bool operator==(const AlignmentResult &,
                         const AlignmentResult &) = default;
};

// Thrown when a search examines more than AlignOptions::max_candidates
// candidates.
class SearchLimitExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// One candidate examined by AlignFast; bound is sum_i |offsets_i|.
struct CandidateTrace {
  std::vector<int> offsets;
  std::vector<int> boundaries;
  int bound = 0;
  int cost = 0;
};

struct AlignOptions {
  uint64_t max_candidates = 10'000'000;
  // When set, AlignFast reports every candidate with its full cost. This
  // disables partial-cost pruning.
  std::function<void(const CandidateTrace &)> observer;
};

// Scores a fixed segmentation. Throws std::invalid_argument if the number of
// segments differs from the number of constituents.
AlignmentResult TotalCost(const Word &word, const Boundaries &boundaries,
                          const std::vector<std::u32string> &constituents);

// Strict preference between two candidates: lower total first, then the tie
// rule. Compares raw cost vectors and boundary lists.
bool IsPreferred(const std::vector<int> &costs_a, int total_a,
                 const std::vector<int> &boundaries_a,
                 const std::vector<int> &costs_b, int total_b,
                 const std::vector<int> &boundaries_b);

// Returns whichever of a and b the tie rule prefers. Throws
// std::invalid_argument if their total costs differ.
const AlignmentResult &TieBreak(const AlignmentResult &a,
                                const AlignmentResult &b);

// All integer k-vectors with sum |o_i| == bound and sum o_i == delta, in
// descending lexicographic order. Empty when bound < |delta| or the parities
// differ.
std::vector<std::vector<int>> EnumerateOffsets(int k, int delta, int bound);

// Both searches throw std::invalid_argument when constituents is empty,
// contains an empty text, or has more entries than the word has characters.
AlignmentResult AlignBruteforce(const Word &word,
                                const std::vector<std::u32string> &constituents,
                                const AlignOptions &options = {});
AlignmentResult AlignFast(const Word &word,
                          const std::vector<std::u32string> &constituents,
                          const AlignOptions &options = {});

}  // namespace decompound

#endif  // DECOMPOUND_ALIGN_H_
