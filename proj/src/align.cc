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

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <utility>

namespace decompound {
namespace {

void CheckInputs(const Word &word,
                 const std::vector<std::u32string> &constituents) {
  if (constituents.empty()) {
    throw std::invalid_argument("at least one constituent is required");
  }
  for (const auto &c : constituents) {
    if (c.empty()) throw std::invalid_argument("empty constituent");
  }
  if (word.size() < static_cast<int>(constituents.size())) {
    throw std::invalid_argument(
        "word '" + word.Utf8() + "' is shorter than its " +
        std::to_string(constituents.size()) + " constituents");
  }
}

void CountCandidate(uint64_t &examined, const AlignOptions &options,
                    const Word &word) {
  if (++examined > options.max_candidates) {
    throw SearchLimitExceeded("alignment of '" + word.Utf8() +
                              "' exceeded " +
                              std::to_string(options.max_candidates) +
                              " candidates");
  }
}

AlignmentResult MakeResult(const Word &word, std::vector<int> boundaries,
                           std::vector<int> costs) {
  const int total = std::accumulate(costs.begin(), costs.end(), 0);
  return AlignmentResult{
      Segmentation(word, Boundaries(std::move(boundaries), word.size())),
      std::move(costs), total};
}

// Memoized levenshtein(x[begin:begin+len], c_i).
class SegmentCostCache {
 public:
  SegmentCostCache(const std::u32string &word,
                   const std::vector<std::u32string> &constituents)
      : word_(word), constituents_(constituents), n_(word.size() + 1) {
    const std::size_t cells = constituents.size() * n_ * n_;
    if (cells <= (std::size_t{1} << 24)) cache_.assign(cells, -1);
  }

  int Get(std::size_t i, std::size_t begin, std::size_t len) {
    if (cache_.empty()) return Compute(i, begin, len);
    int &slot = cache_[(i * n_ + begin) * n_ + len];
    if (slot < 0) slot = Compute(i, begin, len);
    return slot;
  }

 private:
  int Compute(std::size_t i, std::size_t begin, std::size_t len) const {
    return Levenshtein(std::u32string_view(word_).substr(begin, len),
                       constituents_[i]);
  }

  const std::u32string &word_;
  const std::vector<std::u32string> &constituents_;
  std::size_t n_;
  std::vector<int> cache_;
};

// Visits every vector o with lo_i <= o_i <= hi_i, sum |o_i| == bound and
// sum o_i == delta, in descending lexicographic order.
template <typename Fn>
void ForEachBoundedOffset(const std::vector<int> &lo,
                          const std::vector<int> &hi, int delta, int bound,
                          Fn &&fn) {
  const int k = static_cast<int>(lo.size());
  if (k == 0 || bound < std::abs(delta) || (bound - delta) % 2 != 0) return;
  std::vector<int> o(k, 0);
  auto recurse = [&](auto &&self, int pos, int sum_left, int abs_left) -> void {
    if (pos == k - 1) {
      if (std::abs(sum_left) == abs_left && sum_left >= lo[pos] &&
          sum_left <= hi[pos]) {
        o[pos] = sum_left;
        fn(static_cast<const std::vector<int> &>(o));
      }
      return;
    }
    const int top = std::min(hi[pos], abs_left);
    const int bottom = std::max(lo[pos], -abs_left);
    for (int v = top; v >= bottom; --v) {
      const int rest_sum = sum_left - v;
      const int rest_abs = abs_left - std::abs(v);
      if (std::abs(rest_sum) > rest_abs) continue;
      o[pos] = v;
      self(self, pos + 1, rest_sum, rest_abs);
    }
  };
  recurse(recurse, 0, delta, bound);
}

}  // namespace

int Levenshtein(std::u32string_view a, std::u32string_view b) {
  if (a.size() < b.size()) std::swap(a, b);
  std::vector<int> row(b.size() + 1);
  std::iota(row.begin(), row.end(), 0);
  for (std::size_t i = 1; i <= a.size(); ++i) {
    int diagonal = row[0];
    row[0] = static_cast<int>(i);
    for (std::size_t j = 1; j <= b.size(); ++j) {
      const int above = row[j];
      row[j] = std::min({above + 1, row[j - 1] + 1,
                         diagonal + (a[i - 1] == b[j - 1] ? 0 : 1)});
      diagonal = above;
    }
  }
  return row[b.size()];
}

AlignmentResult TotalCost(const Word &word, const Boundaries &boundaries,
                          const std::vector<std::u32string> &constituents) {
  if (boundaries.num_segments() != static_cast<int>(constituents.size())) {
    throw std::invalid_argument(
        "boundaries define " + std::to_string(boundaries.num_segments()) +
        " segments but " + std::to_string(constituents.size()) +
        " constituents were given");
  }
  Segmentation segmentation(word, boundaries);
  std::vector<int> costs;
  costs.reserve(constituents.size());
  for (std::size_t i = 0; i < constituents.size(); ++i) {
    costs.push_back(Levenshtein(segmentation.segments()[i], constituents[i]));
  }
  const int total = std::accumulate(costs.begin(), costs.end(), 0);
  return AlignmentResult{std::move(segmentation), std::move(costs), total};
}

bool IsPreferred(const std::vector<int> &costs_a, int total_a,
                 const std::vector<int> &boundaries_a,
                 const std::vector<int> &costs_b, int total_b,
                 const std::vector<int> &boundaries_b) {
  if (total_a != total_b) return total_a < total_b;
  if (costs_a != costs_b) return costs_a > costs_b;
  return boundaries_a < boundaries_b;
}

const AlignmentResult &TieBreak(const AlignmentResult &a,
                                const AlignmentResult &b) {
  if (a.total_cost != b.total_cost) {
    throw std::invalid_argument("tie-break requires equal total costs (" +
                                std::to_string(a.total_cost) + " vs " +
                                std::to_string(b.total_cost) + ")");
  }
  return IsPreferred(b.per_segment_costs, b.total_cost,
                     b.boundaries().indices(), a.per_segment_costs,
                     a.total_cost, a.boundaries().indices())
             ? b
             : a;
}

std::vector<std::vector<int>> EnumerateOffsets(int k, int delta, int bound) {
  std::vector<std::vector<int>> out;
  if (k < 1) return out;
  const std::vector<int> lo(k, -bound), hi(k, bound);
  ForEachBoundedOffset(lo, hi, delta, bound,
                       [&](const std::vector<int> &o) { out.push_back(o); });
  return out;
}

AlignmentResult AlignBruteforce(const Word &word,
                                const std::vector<std::u32string> &constituents,
                                const AlignOptions &options) {
  CheckInputs(word, constituents);
  const int n = word.size();
  const int k = static_cast<int>(constituents.size());
  const std::u32string_view x = word.text();

  std::vector<int> r(k + 1);
  r[0] = 0;
  r[k] = n;
  // Interior boundaries r_1 < ... < r_{k-1} drawn from [1, n-1].
  for (int i = 1; i < k; ++i) r[i] = i;

  std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
  int best_total = 0;
  uint64_t examined = 0;
  std::vector<int> costs(k);
  while (true) {
    CountCandidate(examined, options, word);
    int total = 0;
    for (int i = 0; i < k; ++i) {
      costs[i] = Levenshtein(x.substr(r[i], r[i + 1] - r[i]), constituents[i]);
      total += costs[i];
    }
    if (!best || IsPreferred(costs, total, r, best->second, best_total,
                             best->first)) {
      best.emplace(r, costs);
      best_total = total;
    }
    // Next (k-1)-combination of [1, n-1] in lexicographic order.
    int i = k - 1;
    while (i >= 1 && r[i] == n - k + i) --i;
    if (i < 1) break;
    ++r[i];
    for (int j = i + 1; j < k; ++j) r[j] = r[j - 1] + 1;
  }
  return MakeResult(word, std::move(best->first), std::move(best->second));
}

AlignmentResult AlignFast(const Word &word,
                          const std::vector<std::u32string> &constituents,
                          const AlignOptions &options) {
  CheckInputs(word, constituents);
  const int n = word.size();
  const int k = static_cast<int>(constituents.size());

  // Segment i has length |c_i| + o_i, which must lie in [1, n - k + 1].
  std::vector<int> lo(k), hi(k);
  int total_len = 0;
  int max_bound = 0;
  for (int i = 0; i < k; ++i) {
    const int len = static_cast<int>(constituents[i].size());
    total_len += len;
    lo[i] = 1 - len;
    hi[i] = n - k + 1 - len;
    max_bound += std::max(-lo[i], std::abs(hi[i]));
  }
  const int delta = n - total_len;

  SegmentCostCache cache(word.text(), constituents);
  std::optional<std::pair<std::vector<int>, std::vector<int>>> best;
  int best_total = 0;
  uint64_t examined = 0;
  std::vector<int> r(k + 1), costs(k);

  // Only bounds with the parity of delta admit offset vectors, hence += 2.
  // The loop is inclusive of best_total so equal-cost candidates still meet
  // the tie rule.
  for (int bound = std::abs(delta);
       bound <= max_bound && (!best || bound <= best_total); bound += 2) {
    ForEachBoundedOffset(lo, hi, delta, bound, [&](const std::vector<int> &o) {
      CountCandidate(examined, options, word);
      r[0] = 0;
      for (int i = 0; i < k; ++i) {
        r[i + 1] = r[i] + static_cast<int>(constituents[i].size()) + o[i];
      }
      int total = 0;
      for (int i = 0; i < k; ++i) {
        costs[i] = cache.Get(i, r[i], r[i + 1] - r[i]);
        total += costs[i];
        // Partial sums above the incumbent cannot win or tie.
        if (!options.observer && best && total > best_total) return;
      }
      if (options.observer) {
        options.observer(CandidateTrace{o, r, bound, total});
      }
      if (!best || IsPreferred(costs, total, r, best->second, best_total,
                               best->first)) {
        best.emplace(r, costs);
        best_total = total;
      }
    });
  }
  return MakeResult(word, std::move(best->first), std::move(best->second));
}

}  // namespace decompound
