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

// Hand-built tokenizer models shared by tests.

#ifndef DECOMPOUND_TESTS_MODEL_FIXTURES_H_
#define DECOMPOUND_TESTS_MODEL_FIXTURES_H_

#include <cmath>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "decompound/tokenizer_model.h"

namespace decompound::fixture {

// Every character of `words` plus the marker, uniform.
inline TokenizerModel AlphabetModel(const std::vector<std::u32string> &words) {
  std::set<char32_t> chars = {kWordMarker};
  for (const auto &w : words) chars.insert(w.begin(), w.end());
  std::vector<Piece> pieces;
  const double lp = -std::log(static_cast<double>(chars.size()));
  for (char32_t c : chars) pieces.push_back({std::u32string(1, c), lp});
  return TokenizerModel(std::move(pieces), Pretokenization::kWhitespace);
}

// `multi` pieces share `multi_mass` evenly; the alphabet of `words` plus
// the marker shares the rest.
inline TokenizerModel WeightedModel(const std::vector<std::u32string> &words,
                                    const std::vector<std::u32string> &multi,
                                    double multi_mass) {
  std::set<char32_t> chars = {kWordMarker};
  for (const auto &w : words) chars.insert(w.begin(), w.end());
  std::vector<Piece> pieces;
  for (char32_t c : chars) {
    pieces.push_back({std::u32string(1, c),
                      std::log((1 - multi_mass) / static_cast<double>(chars.size()))});
  }
  for (const auto &m : multi) {
    pieces.push_back({m, std::log(multi_mass / static_cast<double>(multi.size()))});
  }
  return TokenizerModel(std::move(pieces), Pretokenization::kWhitespace);
}

}  // namespace decompound::fixture

#endif  // DECOMPOUND_TESTS_MODEL_FIXTURES_H_
