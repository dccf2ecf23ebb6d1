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

// Decompounding dataset construction from a compound lexicon.
//
// The source annotates only top-level splits, so constituents that are
// themselves compounds are expanded recursively. Every constituent that is
// not itself a compound becomes a negative example. Languages with too few
// entries are dropped; each remaining language gets a seeded shuffle and an
// eval split of min(eval_cap, N / 2) entries.

#ifndef DECOMPOUND_DATASET_H_
#define DECOMPOUND_DATASET_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "decompound/text.h"
#include "decompound/types.h"

namespace decompound {

// word -> normalized constituents, for one language.
using LanguageLexicon = std::map<std::u32string, std::vector<std::u32string>>;
// lang -> lexicon.
using RawLexicon = std::map<std::string, LanguageLexicon>;

class CyclicEntryError : public DataError {
 public:
  using DataError::DataError;
};

// Rows are "word<TAB>c1,c2,...<TAB>lang". Every field is NFC-normalized.
// A word listed again with a different constituent list keeps its first
// list; the conflict is logged and appended to diagnostics. Throws DataError
// naming source:line for malformed rows or rows with fewer than two
// constituents.
RawLexicon ReadLexicon(std::istream &is, const std::string &source,
                       std::vector<std::string> *diagnostics = nullptr);

inline constexpr int kDefaultMaxSplitDepth = 16;

// Expands word's constituents until none is itself a lexicon key, except that
// a constituent equal to the word it came from stays as is. Throws
// std::invalid_argument if word is not a key and CyclicEntryError when the
// expansion nests deeper than max_depth.
std::vector<std::u32string> RecursiveSplit(const LanguageLexicon &lexicon,
                                           const std::u32string &word,
                                           int max_depth = kDefaultMaxSplitDepth);

// RecursiveSplit over every key. Cyclic entries are dropped and logged.
LanguageLexicon ExpandLexicon(const LanguageLexicon &lexicon,
                              int max_depth = kDefaultMaxSplitDepth,
                              std::vector<std::string> *diagnostics = nullptr);

// Distinct constituents of an expanded lexicon that are not keys themselves,
// in ascending order.
std::vector<std::u32string> DeriveNegatives(const LanguageLexicon &expanded);

// Positives and negatives for every language. Entries whose word or
// constituents contain whitespace are skipped with a diagnostic.
std::vector<CompoundEntry> BuildEntries(
    const RawLexicon &lexicon, int max_depth = kDefaultMaxSplitDepth,
    std::vector<std::string> *diagnostics = nullptr);

struct SplitOptions {
  int min_lang_size = 100;
  int eval_cap = 1000;
};

struct DatasetSplit {
  std::vector<CompoundEntry> train;
  std::vector<CompoundEntry> eval;
  // lang -> (train size, eval size), kept languages only.
  std::map<std::string, std::pair<int, int>> sizes;
};

// Same entries and seed give the same split regardless of input order.
DatasetSplit MakeSplits(const std::vector<CompoundEntry> &entries,
                        uint64_t seed, const SplitOptions &options = {});

struct LanguageStats {
  int train_positive = 0;
  int train_negative = 0;
  int eval_positive = 0;
  int eval_negative = 0;
  friend bool operator==(const LanguageStats &,
                         const LanguageStats &) = default;
};

std::map<std::string, LanguageStats> DatasetStats(const DatasetSplit &split);

}  // namespace decompound

#endif  // DECOMPOUND_DATASET_H_
