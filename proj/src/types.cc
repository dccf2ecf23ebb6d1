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

#include "decompound/types.h"

#include <stdexcept>
#include <utility>

#include "decompound/text.h"

namespace decompound {

bool IsValidLang(std::string_view lang) {
  if (lang.size() < 2 || lang.size() > 3) return false;
  for (char c : lang) {
    if (c < 'a' || c > 'z') return false;
  }
  return true;
}

Word::Word(std::u32string text, std::string lang)
    : text_(std::move(text)), lang_(std::move(lang)) {
  if (text_.empty()) throw std::invalid_argument("word must be non-empty");
  if (ContainsWhitespace(text_)) {
    throw std::invalid_argument("word contains whitespace: " +
                                Utf32ToUtf8(text_));
  }
  if (!IsValidLang(lang_)) {
    throw std::invalid_argument("invalid language code: '" + lang_ + "'");
  }
}

Word Word::FromUtf8(std::string_view text, std::string lang) {
  return Word(Utf8ToUtf32(text), std::move(lang));
}

std::string Word::Utf8() const { return Utf32ToUtf8(text_); }

Boundaries::Boundaries(std::vector<int> indices, int n)
    : indices_(std::move(indices)) {
  if (indices_.size() < 2 || indices_.front() != 0 || indices_.back() != n) {
    throw std::invalid_argument("boundaries must start at 0 and end at " +
                                std::to_string(n));
  }
  for (std::size_t i = 1; i < indices_.size(); ++i) {
    if (indices_[i] <= indices_[i - 1]) {
      throw std::invalid_argument("boundaries must be strictly increasing");
    }
  }
}

Boundaries Boundaries::Whole(int n) { return Boundaries({0, n}, n); }

std::vector<std::u32string> SegmentsOf(std::u32string_view text,
                                       const Boundaries &boundaries) {
  if (boundaries.length() != static_cast<int>(text.size())) {
    throw std::invalid_argument("boundaries do not match word length");
  }
  std::vector<std::u32string> out;
  const auto &r = boundaries.indices();
  out.reserve(r.size() - 1);
  for (std::size_t i = 1; i < r.size(); ++i) {
    out.emplace_back(text.substr(r[i - 1], r[i] - r[i - 1]));
  }
  return out;
}

Segmentation::Segmentation(Word word, Boundaries boundaries)
    : word_(std::move(word)), boundaries_(std::move(boundaries)) {
  segments_ = SegmentsOf(word_.text(), boundaries_);
}

CompoundEntry::CompoundEntry(Word word, std::vector<std::u32string> constituents)
    : word_(std::move(word)), constituents_(std::move(constituents)) {
  if (constituents_.empty()) {
    throw std::invalid_argument("entry needs at least one constituent");
  }
  for (const auto &c : constituents_) {
    if (c.empty()) throw std::invalid_argument("empty constituent");
  }
  if (constituents_.size() == 1 && constituents_.front() != word_.text()) {
    throw std::invalid_argument(
        "single-constituent entry must equal its word: " + word_.Utf8());
  }
}

CompoundEntry CompoundEntry::NonCompound(Word word) {
  std::vector<std::u32string> c{word.text()};
  return CompoundEntry(std::move(word), std::move(c));
}

}  // namespace decompound
