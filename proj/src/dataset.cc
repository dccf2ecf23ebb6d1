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

#include "decompound/dataset.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <istream>
#include <set>
#include <stdexcept>

#include "decompound/random.h"

namespace decompound {
namespace {

void Note(std::vector<std::string> *diagnostics, const std::string &msg) {
  spdlog::warn("{}", msg);
  if (diagnostics) diagnostics->push_back(msg);
}

std::vector<std::string> SplitOn(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

std::u32string Field(const std::string &raw, const std::string &where) {
  try {
    return Utf8ToUtf32(NormalizeNfc(raw));
  } catch (const Utf8Error &e) {
    throw DataError(where + ": " + e.what());
  }
}

void Expand(const LanguageLexicon &lexicon, const std::u32string &word,
            int depth, int max_depth, std::vector<std::u32string> &out) {
  for (const auto &c : lexicon.at(word)) {
    if (c != word && lexicon.count(c)) {
      if (depth + 1 > max_depth) {
        throw CyclicEntryError("expansion deeper than " +
                               std::to_string(max_depth) +
                               " levels (cyclic entry?) at '" +
                               Utf32ToUtf8(c) + "'");
      }
      Expand(lexicon, c, depth + 1, max_depth, out);
    } else {
      out.push_back(c);
    }
  }
}

uint64_t LanguageSeed(uint64_t seed, const std::string &lang) {
  // FNV-1a over the language code, then one splitmix64 round.
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : lang) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  uint64_t z = seed ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

}  // namespace

RawLexicon ReadLexicon(std::istream &is, const std::string &source,
                       std::vector<std::string> *diagnostics) {
  RawLexicon lexicon;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const std::string where = source + ":" + std::to_string(line_no);
    const auto fields = SplitOn(line, '\t');
    if (fields.size() != 3) {
      throw DataError(where + ": expected 'word<TAB>constituents<TAB>lang'");
    }
    const std::u32string word = Field(fields[0], where);
    const std::string &lang = fields[2];
    if (word.empty()) throw DataError(where + ": empty word");
    if (!IsValidLang(lang)) {
      throw DataError(where + ": invalid language code '" + lang + "'");
    }
    std::vector<std::u32string> constituents;
    for (const auto &raw : SplitOn(fields[1], ',')) {
      constituents.push_back(Field(raw, where));
      if (constituents.back().empty()) {
        throw DataError(where + ": empty constituent");
      }
    }
    if (constituents.size() < 2) {
      throw DataError(where + ": a compound needs at least two constituents");
    }
    auto &lang_lexicon = lexicon[lang];
    auto [it, inserted] = lang_lexicon.emplace(word, constituents);
    if (!inserted && it->second != constituents) {
      Note(diagnostics, where + ": '" + fields[0] +
                            "' already listed with other constituents; "
                            "keeping the first");
    }
  }
  return lexicon;
}

std::vector<std::u32string> RecursiveSplit(const LanguageLexicon &lexicon,
                                           const std::u32string &word,
                                           int max_depth) {
  if (!lexicon.count(word)) {
    throw std::invalid_argument("not in lexicon: " + Utf32ToUtf8(word));
  }
  std::vector<std::u32string> out;
  Expand(lexicon, word, 0, max_depth, out);
  return out;
}

LanguageLexicon ExpandLexicon(const LanguageLexicon &lexicon, int max_depth,
                              std::vector<std::string> *diagnostics) {
  LanguageLexicon expanded;
  for (const auto &[word, parts] : lexicon) {
    try {
      expanded.emplace(word, RecursiveSplit(lexicon, word, max_depth));
    } catch (const CyclicEntryError &e) {
      Note(diagnostics, "dropping '" + Utf32ToUtf8(word) + "': " + e.what());
    }
  }
  return expanded;
}

std::vector<std::u32string> DeriveNegatives(const LanguageLexicon &expanded) {
  std::set<std::u32string> negatives;
  for (const auto &[word, parts] : expanded) {
    for (const auto &c : parts) {
      if (!expanded.count(c)) negatives.insert(c);
    }
  }
  return {negatives.begin(), negatives.end()};
}

std::vector<CompoundEntry> BuildEntries(const RawLexicon &lexicon,
                                        int max_depth,
                                        std::vector<std::string> *diagnostics) {
  std::vector<CompoundEntry> entries;
  for (const auto &[lang, raw] : lexicon) {
    LanguageLexicon expanded = ExpandLexicon(raw, max_depth, diagnostics);
    // Dropped (cyclic) keys are still compounds and must not become
    // negatives.
    std::set<std::u32string> keys;
    for (const auto &[word, parts] : raw) keys.insert(word);

    for (const auto &[word, parts] : expanded) {
      const bool spaced =
          ContainsWhitespace(word) ||
          std::any_of(parts.begin(), parts.end(), [](const auto &c) {
            return ContainsWhitespace(c);
          });
      if (spaced) {
        Note(diagnostics, lang + ": skipping multi-word entry '" +
                              Utf32ToUtf8(word) + "'");
        continue;
      }
      // Self-referencing rows such as a -> [a] cannot form a compound.
      if (parts.size() < 2) continue;
      entries.emplace_back(Word(word, lang), parts);
    }
    for (const auto &neg : DeriveNegatives(expanded)) {
      if (keys.count(neg) || ContainsWhitespace(neg)) continue;
      entries.push_back(CompoundEntry::NonCompound(Word(neg, lang)));
    }
  }
  return entries;
}

DatasetSplit MakeSplits(const std::vector<CompoundEntry> &entries,
                        uint64_t seed, const SplitOptions &options) {
  std::map<std::string, std::vector<CompoundEntry>> by_lang;
  for (const auto &e : entries) by_lang[e.word().lang()].push_back(e);

  DatasetSplit split;
  for (auto &[lang, group] : by_lang) {
    std::sort(group.begin(), group.end());
    group.erase(std::unique(group.begin(), group.end()), group.end());
    const int total = static_cast<int>(group.size());
    if (total < options.min_lang_size) {
      spdlog::info("dropping language {} with {} entries", lang, total);
      continue;
    }
    Rng rng(LanguageSeed(seed, lang));
    rng.Shuffle(group);
    const int eval_size = std::min(options.eval_cap, total / 2);
    split.eval.insert(split.eval.end(), group.begin(),
                      group.begin() + eval_size);
    split.train.insert(split.train.end(), group.begin() + eval_size,
                       group.end());
    split.sizes[lang] = {total - eval_size, eval_size};
  }
  return split;
}

std::map<std::string, LanguageStats> DatasetStats(const DatasetSplit &split) {
  std::map<std::string, LanguageStats> stats;
  for (const auto &e : split.train) {
    auto &s = stats[e.word().lang()];
    (e.is_compound() ? s.train_positive : s.train_negative)++;
  }
  for (const auto &e : split.eval) {
    auto &s = stats[e.word().lang()];
    (e.is_compound() ? s.eval_positive : s.eval_negative)++;
  }
  return stats;
}

}  // namespace decompound
