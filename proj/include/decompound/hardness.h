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

// Hard compounds: words whose constituent boundaries are not all token
// boundaries of a tokenizer. Boundaries are positions in the raw word; the
// word marker occupies none.

#ifndef DECOMPOUND_HARDNESS_H_
#define DECOMPOUND_HARDNESS_H_

#include <map>
#include <string>
#include <vector>

#include "decompound/tokenizer_model.h"
#include "decompound/types.h"

namespace decompound {

// True iff some gold index is not a token boundary of encode(model, word).
// Throws std::invalid_argument if gold does not span the word.
bool IsHard(std::u32string_view word, const Boundaries &gold,
            const TokenizerModel &model);

struct HardnessCount {
  int compounds = 0;
  int hard = 0;
  double Percent() const { return compounds ? 100.0 * hard / compounds : 0.0; }
};

struct HardnessReport {
  std::map<std::string, HardnessCount> languages;
  // Unweighted mean of per-language percentages; 0 with no compounds.
  double MacroPercent() const;
};

// Gold boundaries come from AlignFast on the gold constituents.
// Non-compound entries are ignored.
HardnessReport HardnessRate(const std::vector<CompoundEntry> &entries,
                            const TokenizerModel &model);

struct PieceOrigin {
  std::u32string piece;
  std::vector<std::string> languages;  // by mono piece probability desc
};

// One row per piece of the multilingual model, in its canonical order.
std::vector<PieceOrigin> TokenOrigins(
    const TokenizerModel &multi,
    const std::map<std::string, TokenizerModel> &mono);

}  // namespace decompound

#endif  // DECOMPOUND_HARDNESS_H_
