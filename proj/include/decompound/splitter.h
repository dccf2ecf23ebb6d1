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

#ifndef DECOMPOUND_SPLITTER_H_
#define DECOMPOUND_SPLITTER_H_

#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "decompound/jsonl.h"
#include "decompound/mine.h"
#include "decompound/types.h"

namespace decompound {

struct SplitterConfig {
  int min_part_len = 3;
  // Material that may end a non-final part, e.g. the German "s" in
  // arbeits+markt. Must contain "".
  std::vector<std::u32string> linking_morphemes = {U"", U"s", U"es"};
  int max_parts = 4;

  // Throws std::invalid_argument if an invariant is violated.
  void Validate() const;
  // Missing keys keep their defaults. Throws DataError on bad values.
  static SplitterConfig FromJson(const Json &j);
  Json ToJson() const;
};

struct FreqSplit {
  Boundaries boundaries;
  std::vector<std::u32string> constituents;
  // Mean log frequency of the parts; -inf for an unknown unsplit word.
  double log_score;
};

// Frequency-list decompounding. Every decomposition into at most max_parts
// parts is scored by the geometric mean of its part frequencies; a part
// qualifies if, after dropping one linking morpheme (non-final parts only),
// it has length >= min_part_len and a non-zero count. The unsplit word
// competes with its own count. Ties prefer fewer parts, then the alignment
// tie rule on (morpheme lengths, boundaries).
FreqSplit FrequencySplit(std::u32string_view word, const FrequencyTable &table,
                         const SplitterConfig &config = {});

// Produces constituent boundaries for a bare word (no language attached).
class Segmenter {
 public:
  virtual ~Segmenter() = default;
  virtual Boundaries Segment(std::u32string_view word) const = 0;
};

class FrequencySegmenter : public Segmenter {
 public:
  FrequencySegmenter(FrequencyTable table, SplitterConfig config);
  Boundaries Segment(std::u32string_view word) const override;

 private:
  FrequencyTable table_;
  SplitterConfig config_;
};

// Looks words up in a fixed list of (word, constituents) pairs, e.g. gold
// annotations or model predictions, and aligns the constituents onto the
// word. Unknown words stay whole. For duplicate words the first record wins.
class LookupSegmenter : public Segmenter {
 public:
  explicit LookupSegmenter(const std::vector<WordRecord> &records);
  explicit LookupSegmenter(const std::vector<CompoundEntry> &entries);
  Boundaries Segment(std::u32string_view word) const override;
  std::size_t size() const { return boundaries_.size(); }

 private:
  void Add(const Word &word, const std::vector<std::u32string> &constituents);
  std::unordered_map<std::u32string, Boundaries> boundaries_;
};

// Aligns predicted normalized constituents back onto the word.
Boundaries SegmentWithPredictions(const Word &word,
                                  const std::vector<std::u32string> &constituents);

}  // namespace decompound

#endif  // DECOMPOUND_SPLITTER_H_
