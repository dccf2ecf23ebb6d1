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

// Self-supervised hyphenation data from raw text.
//
// Hyphenated words are positives (input: hyphens removed, target: the
// original form). A hyphenated form is discarded when it is rare relative to
// its unhyphenated spelling, which catches line-break hyphenation such as
// "experi-ments". The same number of frequent unhyphenated words is added as
// identity pairs.

#ifndef DECOMPOUND_MINE_H_
#define DECOMPOUND_MINE_H_

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

namespace decompound {

class FrequencyTable {
 public:
  FrequencyTable() = default;
  explicit FrequencyTable(std::string lang) : lang_(std::move(lang)) {}

  const std::string &lang() const { return lang_; }
  const std::unordered_map<std::string, uint64_t> &counts() const {
    return counts_;
  }
  bool empty() const { return counts_.empty(); }
  std::size_t size() const { return counts_.size(); }

  // 0 when absent.
  uint64_t Count(const std::string &form) const;
  void Add(const std::string &form, uint64_t n = 1);
  // Commutative and associative; languages must match.
  void Merge(const FrequencyTable &other);

  // Count descending, then form ascending (bytewise).
  std::vector<std::pair<std::string, uint64_t>> Sorted() const;

  // TSV "form<TAB>count", LF endings, in Sorted() order.
  void WriteTsv(std::ostream &os) const;
  // Throws DataError with source:line on malformed rows.
  static FrequencyTable ReadTsv(std::istream &is, std::string lang,
                                const std::string &source = "<stream>");

  friend bool operator==(const FrequencyTable &,
                         const FrequencyTable &) = default;

 private:
  std::string lang_;
  std::unordered_map<std::string, uint64_t> counts_;
};

// Counts whitespace-delimited tokens, one document per line. Leading and
// trailing punctuation is trimmed (interior hyphens survive) and tokens are
// NFC-normalized. Lines with invalid UTF-8 are skipped; a message with the
// absolute byte offset is appended to diagnostics when given.
FrequencyTable CountWords(std::istream &corpus, const std::string &lang,
                          std::vector<std::string> *diagnostics = nullptr,
                          const std::string &source = "<stream>");

// Counts each file on its own worker (at most `threads` at once) and merges.
FrequencyTable CountWordsInFiles(const std::vector<std::string> &paths,
                                 const std::string &lang, int threads,
                                 std::vector<std::string> *diagnostics = nullptr);

inline const double kDefaultRatioThreshold = std::exp(-6.0);

// Keep iff freq_plain == 0 or freq_hyphenated / freq_plain > threshold.
bool RatioFilter(uint64_t freq_hyphenated, uint64_t freq_plain,
                 double threshold);

struct MineConfig {
  double threshold = kDefaultRatioThreshold;
  bool ratio_filter = true;
  std::u32string hyphens = U"-";
};

struct MinedPair {
  std::string input;
  std::string target;
  std::string lang;
  bool is_hyphenated = false;

  friend bool operator==(const MinedPair &, const MinedPair &) = default;
};

std::string StripHyphens(std::string_view form, std::u32string_view hyphens);

// Positives first (by count desc, form asc), then as many negatives: the
// most frequent unhyphenated forms that are not a stripped positive. Throws
// std::invalid_argument on an empty table.
std::vector<MinedPair> MinePairs(const FrequencyTable &table,
                                 const MineConfig &config = {});

}  // namespace decompound

#endif  // DECOMPOUND_MINE_H_
