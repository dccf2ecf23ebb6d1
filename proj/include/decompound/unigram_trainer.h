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

// Unigram LM training by EM with likelihood-based vocabulary pruning.
//
//  1. Seed: every pretoken substring of 2..max_piece_length characters seen
//     at least min_seed_count times, ranked by count * length and capped at
//     seed_factor * vocab_size, plus every character of the corpus.
//  2. Each round runs em_iterations EM steps. The E-step takes expected
//     piece counts from forward-backward over each pretoken lattice (log
//     space); the M-step sets log p = log(count / total). Multi-character
//     pieces expected less than half an occurrence are dropped.
//  3. If the vocabulary is still too large, keep the shrink_ratio fraction
//     with the largest likelihood loss on removal (characters are always
//     kept), but never fewer than vocab_size.
//  4. Training stops after the EM steps of the first round whose vocabulary
//     fits, so the model is normalized over the surviving pieces.
//
// Segmentation only matters here: the segmenter shapes the pretokens the
// vocabulary is learned from, never how text is encoded later.

#ifndef DECOMPOUND_UNIGRAM_TRAINER_H_
#define DECOMPOUND_UNIGRAM_TRAINER_H_

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "decompound/tokenizer_model.h"

namespace decompound {

struct TrainerOptions {
  int vocab_size = 8000;
  Pretokenization mode = Pretokenization::kWhitespace;
  const Segmenter *segmenter = nullptr;  // required for kCompound
  int max_piece_length = 16;
  uint64_t min_seed_count = 2;
  int seed_factor = 20;
  double shrink_ratio = 0.75;
  int em_iterations = 2;
  int threads = 1;
  char32_t marker = kWordMarker;
};

// Pretoken -> occurrence count over NFC-normalized lines.
std::map<std::u32string, uint64_t> CountPretokens(
    const std::vector<std::string> &lines, const TrainerOptions &options);

// Throws std::invalid_argument for an empty corpus, a vocab_size below the
// number of distinct characters, or kCompound without a segmenter.
TokenizerModel TrainUnigram(const std::vector<std::string> &lines,
                            const TrainerOptions &options);
TokenizerModel TrainUnigramFromCounts(
    const std::map<std::u32string, uint64_t> &pretokens,
    const TrainerOptions &options);

}  // namespace decompound

#endif  // DECOMPOUND_UNIGRAM_TRAINER_H_
