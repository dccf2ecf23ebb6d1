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

#include "decompound/hardness.h"

#include <algorithm>
#include <stdexcept>

#include "decompound/align.h"

namespace decompound {

bool IsHard(std::u32string_view word, const Boundaries &gold,
            const TokenizerModel &model) {
  if (gold.length() != static_cast<int>(word.size())) {
    throw std::invalid_argument("gold boundaries do not span the word");
  }
  const auto tokens = EncodeWord(model, word).token_boundaries;
  for (int r : gold.indices()) {
    if (!std::binary_search(tokens.begin(), tokens.end(), r)) return true;
  }
  return false;
}

double HardnessReport::MacroPercent() const {
  if (languages.empty()) return 0.0;
  double sum = 0;
  for (const auto &[lang, count] : languages) sum += count.Percent();
  return sum / static_cast<double>(languages.size());
}

HardnessReport HardnessRate(const std::vector<CompoundEntry> &entries,
                            const TokenizerModel &model) {
  HardnessReport report;
  for (const auto &e : entries) {
    if (!e.is_compound()) continue;
    const auto gold = AlignFast(e.word(), e.constituents()).boundaries();
    auto &count = report.languages[e.word().lang()];
    ++count.compounds;
    if (IsHard(e.word().text(), gold, model)) ++count.hard;
  }
  return report;
}

std::vector<PieceOrigin> TokenOrigins(
    const TokenizerModel &multi,
    const std::map<std::string, TokenizerModel> &mono) {
  std::vector<PieceOrigin> out;
  out.reserve(multi.size());
  for (const auto &piece : multi.pieces()) {
    std::vector<std::pair<double, std::string>> found;
    for (const auto &[lang, model] : mono) {
      if (auto id = model.Find(piece.text)) {
        found.emplace_back(model.pieces()[*id].log_prob, lang);
      }
    }
    std::sort(found.begin(), found.end(), [](const auto &a, const auto &b) {
      if (a.first != b.first) return a.first > b.first;
      return a.second < b.second;
    });
    PieceOrigin row{piece.text, {}};
    for (auto &[lp, lang] : found) row.languages.push_back(std::move(lang));
    out.push_back(std::move(row));
  }
  return out;
}

}  // namespace decompound
