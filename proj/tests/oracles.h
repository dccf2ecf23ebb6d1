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

// Test-only reference implementations. Nothing here calls into the library
// code paths it is used to check.

#ifndef DECOMPOUND_TESTS_ORACLES_H_
#define DECOMPOUND_TESTS_ORACLES_H_

#include <cmath>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <limits>
#include <map>
#include <random>
#include <string>
#include <vector>

namespace decompound::oracle {

// Textbook recursive definition with memoization on (i, j).
inline int Levenshtein(const std::u32string &a, const std::u32string &b) {
  std::map<std::pair<std::size_t, std::size_t>, int> memo;
  std::function<int(std::size_t, std::size_t)> d = [&](std::size_t i,
                                                       std::size_t j) -> int {
    if (i == 0) return static_cast<int>(j);
    if (j == 0) return static_cast<int>(i);
    auto it = memo.find({i, j});
    if (it != memo.end()) return it->second;
    int best = d(i - 1, j) + 1;
    best = std::min(best, d(i, j - 1) + 1);
    best = std::min(best, d(i - 1, j - 1) + (a[i - 1] == b[j - 1] ? 0 : 1));
    memo[{i, j}] = best;
    return best;
  };
  return d(a.size(), b.size());
}

struct Alignment {
  std::vector<int> boundaries;
  std::vector<int> costs;
  int total = 0;
};

// Enumerates interior boundary sets as bitmasks over positions 1..n-1 and
// applies the tie rule directly: min total, then max cost vector, then min
// boundary list.
inline Alignment BruteAlign(const std::u32string &word,
                            const std::vector<std::u32string> &constituents) {
  const int n = static_cast<int>(word.size());
  const int k = static_cast<int>(constituents.size());
  Alignment best;
  bool have = false;
  for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    if (__builtin_popcount(mask) != k - 1) continue;
    Alignment cand;
    cand.boundaries.push_back(0);
    for (int p = 1; p < n; ++p) {
      if (mask & (1u << (p - 1))) cand.boundaries.push_back(p);
    }
    cand.boundaries.push_back(n);
    for (int i = 0; i < k; ++i) {
      const auto seg = word.substr(cand.boundaries[i],
                                   cand.boundaries[i + 1] - cand.boundaries[i]);
      cand.costs.push_back(Levenshtein(seg, constituents[i]));
      cand.total += cand.costs.back();
    }
    bool better = !have;
    if (have) {
      if (cand.total != best.total) {
        better = cand.total < best.total;
      } else if (cand.costs != best.costs) {
        better = cand.costs > best.costs;
      } else {
        better = cand.boundaries < best.boundaries;
      }
    }
    if (better) {
      best = cand;
      have = true;
    }
  }
  return best;
}

// Every vector in [-bound, bound]^k with the requested sums.
inline std::vector<std::vector<int>> Offsets(int k, int delta, int bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> v(k, -bound);
  while (true) {
    int s = 0, a = 0;
    for (int x : v) {
      s += x;
      a += std::abs(x);
    }
    if (s == delta && a == bound) out.push_back(v);
    int i = k - 1;
    while (i >= 0 && v[i] == bound) v[i--] = -bound;
    if (i < 0) break;
    ++v[i];
  }
  return out;
}

// Max over all segmentations of text into pieces of the summed log-prob.
// Characters absent from the vocabulary may be covered one at a time at
// unk_logprob.
inline double BestSegmentationLogProb(
    const std::u32string &text, const std::map<std::u32string, double> &vocab,
    double unk_logprob) {
  const int n = static_cast<int>(text.size());
  double best = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    double score = 0;
    int start = 0;
    bool ok = true;
    for (int p = 1; p <= n && ok; ++p) {
      if (p == n || (mask & (1u << (p - 1)))) {
        const auto piece = text.substr(start, p - start);
        auto it = vocab.find(piece);
        if (it != vocab.end()) {
          score += it->second;
        } else if (piece.size() == 1) {
          score += unk_logprob;
        } else {
          ok = false;
        }
        start = p;
      }
    }
    if (ok && score > best) best = score;
  }
  return best;
}

inline std::u32string RandomString(std::mt19937_64 &rng, int min_len,
                                   int max_len, std::u32string_view alphabet) {
  std::uniform_int_distribution<int> len(min_len, max_len);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::u32string s;
  const int l = len(rng);
  for (int i = 0; i < l; ++i) s.push_back(alphabet[pick(rng)]);
  return s;
}

}  // namespace decompound::oracle

#endif  // DECOMPOUND_TESTS_ORACLES_H_
