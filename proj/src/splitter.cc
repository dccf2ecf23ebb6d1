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

#include "decompound/splitter.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "decompound/align.h"
#include "decompound/text.h"

namespace decompound {
namespace {

constexpr double kScoreEpsilon = 1e-12;

struct Candidate {
  std::vector<int> boundaries;
  std::vector<std::u32string> constituents;
  std::vector<int> costs;  // linking morpheme length per part
  double log_score = -std::numeric_limits<double>::infinity();
};

bool Better(const Candidate &a, const Candidate &b) {
  if (std::abs(a.log_score - b.log_score) > kScoreEpsilon ||
      std::isinf(a.log_score) != std::isinf(b.log_score)) {
    return a.log_score > b.log_score;
  }
  if (a.constituents.size() != b.constituents.size()) {
    return a.constituents.size() < b.constituents.size();
  }
  if (a.costs != b.costs) return a.costs > b.costs;
  return a.boundaries < b.boundaries;
}

}  // namespace

void SplitterConfig::Validate() const {
  if (min_part_len < 1) throw std::invalid_argument("min_part_len must be >= 1");
  if (max_parts < 1) throw std::invalid_argument("max_parts must be >= 1");
  if (std::find(linking_morphemes.begin(), linking_morphemes.end(),
                std::u32string()) == linking_morphemes.end()) {
    throw std::invalid_argument("linking_morphemes must contain \"\"");
  }
}

SplitterConfig SplitterConfig::FromJson(const Json &j) {
  SplitterConfig config;
  try {
    if (j.contains("min_part_len")) config.min_part_len = j.at("min_part_len").get<int>();
    if (j.contains("max_parts")) config.max_parts = j.at("max_parts").get<int>();
    if (j.contains("linking_morphemes")) {
      config.linking_morphemes.clear();
      for (const auto &m : j.at("linking_morphemes")) {
        config.linking_morphemes.push_back(
            Utf8ToUtf32(NormalizeNfc(m.get<std::string>())));
      }
    }
    config.Validate();
  } catch (const Json::exception &e) {
    throw DataError(std::string("splitter config: ") + e.what());
  } catch (const std::invalid_argument &e) {
    throw DataError(std::string("splitter config: ") + e.what());
  }
  return config;
}

Json SplitterConfig::ToJson() const {
  Json j;
  j["min_part_len"] = min_part_len;
  j["linking_morphemes"] = TextsToJson(linking_morphemes);
  j["max_parts"] = max_parts;
  return j;
}

FreqSplit FrequencySplit(std::u32string_view word, const FrequencyTable &table,
                         const SplitterConfig &config) {
  config.Validate();
  const int n = static_cast<int>(word.size());
  if (n == 0) throw std::invalid_argument("cannot split an empty word");

  Candidate best;
  best.boundaries = {0, n};
  best.constituents = {std::u32string(word)};
  best.costs = {0};
  if (const uint64_t f = table.Count(Utf32ToUtf8(word)); f > 0) {
    best.log_score = std::log(static_cast<double>(f));
  }

  // Depth-first over part ends; parts[i] is (stem, log count, morpheme len).
  Candidate current;
  current.boundaries = {0};
  double log_sum = 0;
  auto recurse = [&](auto &&self, int start) -> void {
    const int parts_so_far = static_cast<int>(current.constituents.size());
    if (parts_so_far == config.max_parts) return;
    for (int end = start + config.min_part_len; end <= n; ++end) {
      const bool final_part = end == n;
      if (final_part && parts_so_far == 0) continue;  // unsplit handled above
      const std::u32string_view part = word.substr(start, end - start);

      // Highest-count reading of the part; longer morpheme on count ties.
      uint64_t best_count = 0;
      std::u32string best_stem;
      int best_morpheme = -1;
      for (const auto &m : config.linking_morphemes) {
        if (final_part && !m.empty()) continue;
        if (m.size() > part.size() ||
            part.substr(part.size() - m.size()) != m) {
          continue;
        }
        const std::u32string stem(part.substr(0, part.size() - m.size()));
        if (static_cast<int>(stem.size()) < config.min_part_len) continue;
        const uint64_t count = table.Count(Utf32ToUtf8(stem));
        if (count == 0) continue;
        if (count > best_count ||
            (count == best_count && static_cast<int>(m.size()) > best_morpheme)) {
          best_count = count;
          best_stem = stem;
          best_morpheme = static_cast<int>(m.size());
        }
      }
      if (best_count == 0) continue;

      const double part_log = std::log(static_cast<double>(best_count));
      current.boundaries.push_back(end);
      current.constituents.push_back(best_stem);
      current.costs.push_back(best_morpheme);
      log_sum += part_log;
      if (final_part) {
        current.log_score =
            log_sum / static_cast<double>(current.constituents.size());
        if (Better(current, best)) best = current;
      } else {
        self(self, end);
      }
      log_sum -= part_log;
      current.boundaries.pop_back();
      current.constituents.pop_back();
      current.costs.pop_back();
    }
  };
  recurse(recurse, 0);

  return FreqSplit{Boundaries(best.boundaries, n), best.constituents,
                   best.log_score};
}

FrequencySegmenter::FrequencySegmenter(FrequencyTable table,
                                       SplitterConfig config)
    : table_(std::move(table)), config_(std::move(config)) {
  config_.Validate();
}

Boundaries FrequencySegmenter::Segment(std::u32string_view word) const {
  return FrequencySplit(word, table_, config_).boundaries;
}

LookupSegmenter::LookupSegmenter(const std::vector<WordRecord> &records) {
  for (const auto &r : records) Add(r.word, r.constituents);
}

LookupSegmenter::LookupSegmenter(const std::vector<CompoundEntry> &entries) {
  for (const auto &e : entries) Add(e.word(), e.constituents());
}

void LookupSegmenter::Add(const Word &word,
                          const std::vector<std::u32string> &constituents) {
  if (boundaries_.count(word.text())) return;
  try {
    boundaries_.emplace(word.text(), SegmentWithPredictions(word, constituents));
  } catch (const std::exception &e) {
    spdlog::warn("cannot segment '{}': {}", word.Utf8(), e.what());
  }
}

Boundaries LookupSegmenter::Segment(std::u32string_view word) const {
  auto it = boundaries_.find(std::u32string(word));
  if (it == boundaries_.end()) {
    return Boundaries::Whole(static_cast<int>(word.size()));
  }
  return it->second;
}

Boundaries SegmentWithPredictions(
    const Word &word, const std::vector<std::u32string> &constituents) {
  return AlignFast(word, constituents).boundaries();
}

}  // namespace decompound
