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

// Power-law language sampling for multilingual tokenizer corpora:
// p(L) proportional to |L|^alpha.

#ifndef DECOMPOUND_SAMPLING_H_
#define DECOMPOUND_SAMPLING_H_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace decompound {

// Throws std::invalid_argument for no languages, an empty language, or a
// negative alpha.
std::map<std::string, double> LanguageProbabilities(
    const std::map<std::string, uint64_t> &sizes, double alpha);

struct SampledLine {
  std::string lang;
  std::size_t index;  // line within that language
};

// `total` draws with replacement; deterministic under seed.
std::vector<SampledLine> SampleIndices(
    const std::map<std::string, uint64_t> &sizes, double alpha,
    std::size_t total, uint64_t seed);

std::vector<std::string> SampleCorpus(
    const std::map<std::string, std::vector<std::string>> &corpora,
    double alpha, std::size_t total, uint64_t seed);

}  // namespace decompound

#endif  // DECOMPOUND_SAMPLING_H_
