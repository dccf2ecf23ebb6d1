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

#include "decompound/mine.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <fstream>
#include <future>
#include <istream>
#include <ostream>
#include <stdexcept>
#include <unordered_set>

#include "decompound/text.h"

namespace decompound {
namespace {

bool IsHyphen(char32_t c, std::u32string_view hyphens) {
  return hyphens.find(c) != std::u32string_view::npos;
}

// Letters and marks, optionally joined by single interior hyphens.
bool HasWordShape(std::u32string_view form, std::u32string_view hyphens,
                  bool *has_hyphen) {
  *has_hyphen = false;
  if (form.empty()) return false;
  for (std::size_t i = 0; i < form.size(); ++i) {
    const char32_t c = form[i];
    if (IsHyphen(c, hyphens)) {
      if (i == 0 || i + 1 == form.size() || IsHyphen(form[i - 1], hyphens)) {
        return false;
      }
      *has_hyphen = true;
    } else if (!IsLetterOrMark(c)) {
      return false;
    }
  }
  return true;
}

std::u32string_view TrimPunctuation(std::u32string_view token) {
  while (!token.empty() && IsPunctuation(token.front())) token.remove_prefix(1);
  while (!token.empty() && IsPunctuation(token.back())) token.remove_suffix(1);
  return token;
}

}  // namespace

uint64_t FrequencyTable::Count(const std::string &form) const {
  auto it = counts_.find(form);
  return it == counts_.end() ? 0 : it->second;
}

void FrequencyTable::Add(const std::string &form, uint64_t n) {
  if (n == 0) return;
  counts_[form] += n;
}

void FrequencyTable::Merge(const FrequencyTable &other) {
  if (lang_ != other.lang_) {
    throw std::invalid_argument("cannot merge frequency tables for '" + lang_ +
                                "' and '" + other.lang_ + "'");
  }
  for (const auto &[form, n] : other.counts_) counts_[form] += n;
}

std::vector<std::pair<std::string, uint64_t>> FrequencyTable::Sorted() const {
  std::vector<std::pair<std::string, uint64_t>> out(counts_.begin(),
                                                    counts_.end());
  std::sort(out.begin(), out.end(), [](const auto &a, const auto &b) {
    if (a.second != b.second) return a.second > b.second;
    return a.first < b.first;
  });
  return out;
}

void FrequencyTable::WriteTsv(std::ostream &os) const {
  for (const auto &[form, n] : Sorted()) os << form << '\t' << n << '\n';
}

FrequencyTable FrequencyTable::ReadTsv(std::istream &is, std::string lang,
                                       const std::string &source) {
  FrequencyTable table(std::move(lang));
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto tab = line.find('\t');
    const auto where = source + ":" + std::to_string(line_no);
    if (tab == std::string::npos || tab == 0) {
      throw DataError(where + ": expected 'form<TAB>count'");
    }
    uint64_t n = 0;
    const char *first = line.data() + tab + 1;
    const char *last = line.data() + line.size();
    auto [ptr, ec] = std::from_chars(first, last, n);
    if (ec != std::errc() || ptr != last || n == 0) {
      throw DataError(where + ": invalid count");
    }
    const std::string form = line.substr(0, tab);
    try {
      if (ContainsWhitespace(Utf8ToUtf32(form))) {
        throw DataError(where + ": form contains whitespace");
      }
    } catch (const Utf8Error &e) {
      throw DataError(where + ": " + e.what());
    }
    table.Add(form, n);
  }
  return table;
}

FrequencyTable CountWords(std::istream &corpus, const std::string &lang,
                          std::vector<std::string> *diagnostics,
                          const std::string &source) {
  FrequencyTable table(lang);
  std::string line;
  std::size_t offset = 0;
  int line_no = 0;
  while (std::getline(corpus, line)) {
    ++line_no;
    const std::size_t line_start = offset;
    offset += line.size() + 1;
    std::u32string text;
    try {
      text = Utf8ToUtf32(line);
    } catch (const Utf8Error &e) {
      const std::string msg =
          source + ":" + std::to_string(line_no) +
          ": invalid UTF-8 at byte offset " +
          std::to_string(line_start + e.byte_offset()) + ", line skipped";
      spdlog::warn("{}", msg);
      if (diagnostics) diagnostics->push_back(msg);
      continue;
    }
    for (auto token : SplitWhitespace(text)) {
      token = TrimPunctuation(token);
      if (token.empty()) continue;
      table.Add(NormalizeNfc(Utf32ToUtf8(token)));
    }
  }
  return table;
}

FrequencyTable CountWordsInFiles(const std::vector<std::string> &paths,
                                 const std::string &lang, int threads,
                                 std::vector<std::string> *diagnostics) {
  struct Shard {
    FrequencyTable table;
    std::vector<std::string> messages;
  };
  auto count_one = [&lang](const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw DataError("cannot open corpus file: " + path);
    Shard shard;
    shard.table = CountWords(in, lang, &shard.messages, path);
    return shard;
  };

  FrequencyTable merged(lang);
  const std::size_t width = static_cast<std::size_t>(std::max(1, threads));
  for (std::size_t begin = 0; begin < paths.size(); begin += width) {
    const std::size_t end = std::min(paths.size(), begin + width);
    std::vector<std::future<Shard>> pending;
    for (std::size_t i = begin; i < end; ++i) {
      pending.push_back(std::async(std::launch::async, count_one, paths[i]));
    }
    // Merged in path order; the merge is commutative anyway.
    for (auto &f : pending) {
      Shard shard = f.get();
      merged.Merge(shard.table);
      if (diagnostics) {
        diagnostics->insert(diagnostics->end(), shard.messages.begin(),
                            shard.messages.end());
      }
    }
  }
  return merged;
}

bool RatioFilter(uint64_t freq_hyphenated, uint64_t freq_plain,
                 double threshold) {
  if (freq_plain == 0) return true;
  return static_cast<double>(freq_hyphenated) /
             static_cast<double>(freq_plain) >
         threshold;
}

std::string StripHyphens(std::string_view form, std::u32string_view hyphens) {
  std::u32string out;
  for (char32_t c : Utf8ToUtf32(form)) {
    if (!IsHyphen(c, hyphens)) out.push_back(c);
  }
  return Utf32ToUtf8(out);
}

std::vector<MinedPair> MinePairs(const FrequencyTable &table,
                                 const MineConfig &config) {
  if (table.empty()) {
    throw std::invalid_argument("cannot mine pairs from an empty table");
  }
  const auto sorted = table.Sorted();

  std::vector<MinedPair> pairs;
  std::unordered_set<std::string> stripped_positives;
  for (const auto &[form, count] : sorted) {
    bool hyphenated = false;
    if (!HasWordShape(Utf8ToUtf32(form), config.hyphens, &hyphenated) ||
        !hyphenated) {
      continue;
    }
    std::string plain = StripHyphens(form, config.hyphens);
    if (config.ratio_filter &&
        !RatioFilter(count, table.Count(plain), config.threshold)) {
      continue;
    }
    stripped_positives.insert(plain);
    pairs.push_back(MinedPair{std::move(plain), form, table.lang(), true});
  }

  const std::size_t num_positives = pairs.size();
  for (const auto &[form, count] : sorted) {
    if (pairs.size() == 2 * num_positives) break;
    bool hyphenated = false;
    if (!HasWordShape(Utf8ToUtf32(form), config.hyphens, &hyphenated) ||
        hyphenated || stripped_positives.count(form)) {
      continue;
    }
    pairs.push_back(MinedPair{form, form, table.lang(), false});
  }
  if (pairs.size() < 2 * num_positives) {
    spdlog::warn("{}: only {} negatives available for {} positives",
                 table.lang(), pairs.size() - num_positives, num_positives);
  }
  return pairs;
}

}  // namespace decompound
