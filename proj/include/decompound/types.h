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

#ifndef DECOMPOUND_TYPES_H_
#define DECOMPOUND_TYPES_H_

#include <compare>
#include <string>
#include <string_view>
#include <vector>

namespace decompound {

// A single whitespace-free word tagged with its ISO-639 language code.
class Word {
 public:
  // Throws std::invalid_argument if text is empty or contains whitespace,
  // or if lang is not 2-3 lowercase ASCII letters.
  Word(std::u32string text, std::string lang);
  static Word FromUtf8(std::string_view text, std::string lang);

  const std::u32string &text() const { return text_; }
  const std::string &lang() const { return lang_; }
  int size() const { return static_cast<int>(text_.size()); }
  std::string Utf8() const;

  friend bool operator==(const Word &, const Word &) = default;
  friend auto operator<=>(const Word &, const Word &) = default;

 private:
  std::u32string text_;
  std::string lang_;
};

bool IsValidLang(std::string_view lang);

// Strictly increasing offsets r_0 = 0 < r_1 < ... < r_k = n.
class Boundaries {
 public:
  // Throws std::invalid_argument if the invariants do not hold for length n.
  Boundaries(std::vector<int> indices, int n);
  // The trivial boundaries {0, n} of an unsplit word.
  static Boundaries Whole(int n);

  const std::vector<int> &indices() const { return indices_; }
  int num_segments() const { return static_cast<int>(indices_.size()) - 1; }
  int length() const { return indices_.back(); }

  friend bool operator==(const Boundaries &, const Boundaries &) = default;
  friend auto operator<=>(const Boundaries &, const Boundaries &) = default;

 private:
  std::vector<int> indices_;
};

std::vector<std::u32string> SegmentsOf(std::u32string_view text,
                                       const Boundaries &boundaries);

// A word cut at the given boundaries. segments() concatenates to the word.
class Segmentation {
 public:
  Segmentation(Word word, Boundaries boundaries);

  const Word &word() const { return word_; }
  const Boundaries &boundaries() const { return boundaries_; }
  const std::vector<std::u32string> &segments() const { return segments_; }

  friend bool operator==(const Segmentation &, const Segmentation &) = default;

 private:
  Word word_;
  Boundaries boundaries_;
  std::vector<std::u32string> segments_;
};

// A word with its normalized constituents; constituents == {word} marks a
// non-compound.
class CompoundEntry {
 public:
  CompoundEntry(Word word, std::vector<std::u32string> constituents);
  static CompoundEntry NonCompound(Word word);

  const Word &word() const { return word_; }
  const std::vector<std::u32string> &constituents() const {
    return constituents_;
  }
  bool is_compound() const { return constituents_.size() >= 2; }

  friend bool operator==(const CompoundEntry &,
                         const CompoundEntry &) = default;
  friend auto operator<=>(const CompoundEntry &,
                          const CompoundEntry &) = default;

 private:
  Word word_;
  std::vector<std::u32string> constituents_;
};

}  // namespace decompound

#endif  // DECOMPOUND_TYPES_H_
