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

// JSONL records of the form {"word", "lang", "constituents": [...]}, shared
// by datasets, predictions and alignment batches. Text is NFC-normalized on
// read.

#ifndef DECOMPOUND_JSONL_H_
#define DECOMPOUND_JSONL_H_

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"
#include "decompound/types.h"

namespace decompound {

using Json = nlohmann::ordered_json;

// A word with any non-empty list of non-empty constituents. Unlike
// CompoundEntry, a single constituent may differ from the word (a model may
// normalize a non-compound).
struct WordRecord {
  Word word;
  std::vector<std::u32string> constituents;
};

// Parses one JSON object per non-blank line. Throws DataError naming
// source:line on malformed JSON.
std::vector<Json> ReadJsonl(std::istream &is, const std::string &source);
std::vector<Json> ReadJsonlFile(const std::string &path);

// Throws DataError (with `where` as prefix) on missing or ill-typed fields.
WordRecord RecordFromJson(const Json &j, const std::string &where);
CompoundEntry EntryFromJson(const Json &j, const std::string &where);

std::vector<WordRecord> ReadRecordsFile(const std::string &path);
std::vector<CompoundEntry> ReadEntriesFile(const std::string &path);

Json EntryToJson(const CompoundEntry &entry);
Json TextsToJson(const std::vector<std::u32string> &texts);

// Compact single-line dump with raw UTF-8.
std::string DumpLine(const Json &j);

}  // namespace decompound

#endif  // DECOMPOUND_JSONL_H_
