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

#include "decompound/jsonl.h"

#include <fstream>
#include <istream>

#include "decompound/text.h"

namespace decompound {
namespace {

std::u32string NfcText(const Json &value, const std::string &where,
                       const char *field) {
  if (!value.is_string()) {
    throw DataError(where + ": field '" + field + "' must be a string");
  }
  try {
    return Utf8ToUtf32(NormalizeNfc(value.get<std::string>()));
  } catch (const Utf8Error &e) {
    throw DataError(where + ": field '" + field + "': " + e.what());
  }
}

}  // namespace

std::vector<Json> ReadJsonl(std::istream &is, const std::string &source) {
  std::vector<Json> out;
  std::string line;
  int line_no = 0;
  while (std::getline(is, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      out.push_back(Json::parse(line));
    } catch (const Json::parse_error &e) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": invalid JSON: " + e.what());
    }
    if (!out.back().is_object()) {
      throw DataError(source + ":" + std::to_string(line_no) +
                      ": expected a JSON object");
    }
  }
  return out;
}

std::vector<Json> ReadJsonlFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  return ReadJsonl(in, path);
}

WordRecord RecordFromJson(const Json &j, const std::string &where) {
  if (!j.contains("word") || !j.contains("lang") ||
      !j.contains("constituents")) {
    throw DataError(where + ": record needs 'word', 'lang' and 'constituents'");
  }
  const auto &lang = j.at("lang");
  if (!lang.is_string()) throw DataError(where + ": 'lang' must be a string");
  const auto &list = j.at("constituents");
  if (!list.is_array() || list.empty()) {
    throw DataError(where + ": 'constituents' must be a non-empty array");
  }
  std::vector<std::u32string> constituents;
  for (const auto &c : list) {
    constituents.push_back(NfcText(c, where, "constituents"));
    if (constituents.back().empty()) {
      throw DataError(where + ": empty constituent");
    }
  }
  try {
    return WordRecord{Word(NfcText(j.at("word"), where, "word"),
                           lang.get<std::string>()),
                      std::move(constituents)};
  } catch (const std::invalid_argument &e) {
    throw DataError(where + ": " + e.what());
  }
}

CompoundEntry EntryFromJson(const Json &j, const std::string &where) {
  WordRecord record = RecordFromJson(j, where);
  try {
    return CompoundEntry(std::move(record.word),
                         std::move(record.constituents));
  } catch (const std::invalid_argument &e) {
    throw DataError(where + ": " + e.what());
  }
}

std::vector<WordRecord> ReadRecordsFile(const std::string &path) {
  std::vector<WordRecord> out;
  const auto rows = ReadJsonlFile(path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(RecordFromJson(rows[i], path + ": record " +
                                              std::to_string(i + 1)));
  }
  return out;
}

std::vector<CompoundEntry> ReadEntriesFile(const std::string &path) {
  std::vector<CompoundEntry> out;
  const auto rows = ReadJsonlFile(path);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(
        EntryFromJson(rows[i], path + ": record " + std::to_string(i + 1)));
  }
  return out;
}

Json TextsToJson(const std::vector<std::u32string> &texts) {
  Json out = Json::array();
  for (const auto &t : texts) out.push_back(Utf32ToUtf8(t));
  return out;
}

Json EntryToJson(const CompoundEntry &entry) {
  Json j;
  j["word"] = entry.word().Utf8();
  j["lang"] = entry.word().lang();
  j["constituents"] = TextsToJson(entry.constituents());
  return j;
}

std::string DumpLine(const Json &j) {
  return j.dump(-1, ' ', false, Json::error_handler_t::strict);
}

}  // namespace decompound
