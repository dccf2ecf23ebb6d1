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

// Scoring of decompounding predictions: accuracy on positives (compounds),
// negatives and all examples per language, with unweighted macro averages.

#ifndef DECOMPOUND_EVAL_H_
#define DECOMPOUND_EVAL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "decompound/jsonl.h"
#include "decompound/tokenizer_model.h"
#include "decompound/types.h"

namespace decompound {

enum class EvalMode { kSegmentation, kNormalization, kGermanetHead };

std::string ToString(EvalMode mode);
// Accepts "germanet-head" and "germanet_head". Throws std::invalid_argument.
EvalMode ParseEvalMode(std::string_view name);

struct Accuracy {
  int correct = 0;
  int total = 0;
  void Add(bool ok) {
    correct += ok;
    ++total;
  }
  // Empty when there is nothing to score.
  std::optional<double> Percent() const;
};

struct LanguageScore {
  Accuracy positives, negatives, all;
};

struct EvalReport {
  EvalMode mode = EvalMode::kSegmentation;
  std::map<std::string, LanguageScore> languages;
  int missing = 0;  // gold examples without a prediction
  // Unweighted means over languages where the column is defined.
  std::optional<double> MacroPositives() const;
  std::optional<double> MacroNegatives() const;
  std::optional<double> MacroAll() const;
};

// Whether `prediction` (null when missing) gets `gold` right.
//  - negatives: a single constituent equal to the word, in every mode;
//  - normalization: constituent lists equal;
//  - segmentation: aligned boundaries of prediction and gold are equal;
//  - germanet_head: a split whose first constituent equals the gold
//    modifier or whose last equals the gold head.
bool IsCorrect(const CompoundEntry &gold, const WordRecord *prediction,
               EvalMode mode);

// Predictions are keyed by (word, lang); throws DataError on a duplicate
// key. Each gold line is scored once.
EvalReport Score(const std::vector<CompoundEntry> &gold,
                 const std::vector<WordRecord> &predictions, EvalMode mode);

struct HardEasy {
  Accuracy easy, hard;
};

// Positive accuracy split by whether the gold segmentation is hard for the
// tokenizer.
struct Breakdown {
  std::map<std::string, HardEasy> languages;
  HardEasy overall;
};

Breakdown HardEasyBreakdown(const std::vector<CompoundEntry> &gold,
                            const std::vector<WordRecord> &predictions,
                            EvalMode mode, const TokenizerModel &model);

Json ReportToJson(const EvalReport &report, const Breakdown *breakdown = nullptr);
// Rows P / N / All, one column per language, macro average last.
std::string FormatTable(const EvalReport &report,
                        const Breakdown *breakdown = nullptr);

}  // namespace decompound

#endif  // DECOMPOUND_EVAL_H_
