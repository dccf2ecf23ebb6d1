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

#include "decompound/tokenizer_model.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>
#include <stdexcept>

#include "decompound/jsonl.h"
#include "decompound/text.h"

namespace decompound {
namespace {

constexpr double kUnkPenalty = 10.0;

std::string FormatDouble(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

}  // namespace

std::string ToString(Pretokenization mode) {
  return mode == Pretokenization::kCompound ? "compound" : "whitespace";
}

Pretokenization ParsePretokenization(std::string_view name) {
  if (name == "whitespace") return Pretokenization::kWhitespace;
  if (name == "compound") return Pretokenization::kCompound;
  throw std::invalid_argument("unknown pretokenization: " + std::string(name));
}

std::vector<std::u32string> Pretokenize(std::u32string_view text,
                                        Pretokenization mode,
                                        const Segmenter *segmenter,
                                        char32_t marker) {
  if (mode == Pretokenization::kCompound && segmenter == nullptr) {
    throw std::invalid_argument("compound pretokenization needs a segmenter");
  }
  std::vector<std::u32string> out;
  for (auto word : SplitWhitespace(text)) {
    if (mode == Pretokenization::kWhitespace) {
      out.push_back(marker + std::u32string(word));
      continue;
    }
    const auto segments = SegmentsOf(word, segmenter->Segment(word));
    for (std::size_t i = 0; i < segments.size(); ++i) {
      out.push_back(i == 0 ? marker + segments[i] : segments[i]);
    }
  }
  return out;
}

void PieceTrie::Insert(std::u32string_view text, int id) {
  int32_t node = 0;
  for (char32_t c : text) {
    auto [it, inserted] =
        edges_.emplace(Key(node, c), static_cast<int32_t>(nodes_.size()));
    if (inserted) nodes_.push_back(-1);
    node = it->second;
  }
  nodes_[node] = id;
}

TokenizerModel::TokenizerModel(std::vector<Piece> pieces,
                               Pretokenization training_mode, char32_t marker,
                               std::string unk_piece)
    : pieces_(std::move(pieces)),
      training_mode_(training_mode),
      marker_(marker),
      unk_piece_(std::move(unk_piece)) {
  std::sort(pieces_.begin(), pieces_.end(),
            [](const Piece &a, const Piece &b) {
              if (a.log_prob != b.log_prob) return a.log_prob > b.log_prob;
              return a.text < b.text;
            });
  double min_log_prob = 0;
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece &p = pieces_[i];
    if (p.text.empty()) throw std::invalid_argument("empty piece");
    if (!std::isfinite(p.log_prob)) {
      throw std::invalid_argument("non-finite log-prob for piece " +
                                  Utf32ToUtf8(p.text));
    }
    if (!index_.emplace(p.text, static_cast<int>(i)).second) {
      throw std::invalid_argument("duplicate piece " + Utf32ToUtf8(p.text));
    }
    trie_.Insert(p.text, static_cast<int>(i));
    min_log_prob = std::min(min_log_prob, p.log_prob);
  }
  unk_log_prob_ = min_log_prob - kUnkPenalty;
}

std::optional<int> TokenizerModel::Find(std::u32string_view text) const {
  auto it = index_.find(std::u32string(text));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

void TokenizerModel::CheckNormalized(double tolerance) const {
  double sum = 0;
  for (const auto &p : pieces_) sum += std::exp(p.log_prob);
  if (std::abs(sum - 1.0) > tolerance) {
    throw DataError("piece probabilities sum to " + FormatDouble(sum));
  }
}

void TokenizerModel::Write(std::ostream &os) const {
  os << "{\"version\":" << kVersion << ",\"type\":\"unigram\",\"marker\":"
     << Json(Utf32ToUtf8(marker_)).dump() << ",\"unk_piece\":"
     << Json(unk_piece_).dump() << ",\"training_pretokenization\":"
     << Json(ToString(training_mode_)).dump() << ",\"pieces\":[";
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    os << (i ? ",\n" : "\n") << '[' << Json(Utf32ToUtf8(pieces_[i].text)).dump()
       << ',' << FormatDouble(pieces_[i].log_prob) << ']';
  }
  os << "\n]}\n";
}

void TokenizerModel::WriteFile(const std::string &path) const {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write " + path);
  Write(out);
  if (!out) throw DataError("failed writing " + path);
}

TokenizerModel TokenizerModel::Read(std::istream &is,
                                    const std::string &source) {
  Json j;
  try {
    j = Json::parse(is);
  } catch (const Json::parse_error &e) {
    throw DataError(source + ": invalid JSON: " + e.what());
  }
  try {
    if (j.at("version").get<int>() != kVersion) {
      throw DataError(source + ": unsupported model version");
    }
    if (j.at("type").get<std::string>() != "unigram") {
      throw DataError(source + ": unsupported model type");
    }
    const std::u32string marker =
        Utf8ToUtf32(j.at("marker").get<std::string>());
    if (marker.size() != 1) {
      throw DataError(source + ": marker must be a single character");
    }
    std::vector<Piece> pieces;
    for (const auto &row : j.at("pieces")) {
      if (!row.is_array() || row.size() != 2 || !row[1].is_number()) {
        throw DataError(source + ": each piece must be [text, logprob]");
      }
      pieces.push_back(
          Piece{Utf8ToUtf32(row[0].get<std::string>()), row[1].get<double>()});
    }
    TokenizerModel model(
        std::move(pieces),
        ParsePretokenization(j.at("training_pretokenization").get<std::string>()),
        marker[0], j.at("unk_piece").get<std::string>());
    model.CheckNormalized();
    return model;
  } catch (const DataError &) {
    throw;
  } catch (const std::exception &e) {
    throw DataError(source + ": invalid model: " + e.what());
  }
}

TokenizerModel TokenizerModel::ReadFile(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open model " + path);
  return Read(in, path);
}

EncodedPretoken EncodePretoken(const TokenizerModel &model,
                               std::u32string_view pretoken, int excluded) {
  const std::size_t n = pretoken.size();
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  std::vector<double> best(n + 1, kNegInf);
  std::vector<std::size_t> from(n + 1, 0);
  std::vector<int> via(n + 1, -1);
  best[0] = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (best[start] == kNegInf) continue;
    bool has_single = false;
    model.trie().ForEachPrefix(pretoken, start, [&](std::size_t end, int id) {
      if (id == excluded) return;
      if (end == start + 1) has_single = true;
      const double score = best[start] + model.pieces()[id].log_prob;
      if (score > best[end]) {
        best[end] = score;
        from[end] = start;
        via[end] = id;
      }
    });
    if (!has_single) {
      const double score = best[start] + model.unk_log_prob();
      if (score > best[start + 1]) {
        best[start + 1] = score;
        from[start + 1] = start;
        via[start + 1] = -1;
      }
    }
  }

  EncodedPretoken out;
  out.log_prob = best[n];
  for (std::size_t end = n; end > 0; end = from[end]) {
    out.surfaces.emplace_back(pretoken.substr(from[end], end - from[end]));
    out.ids.push_back(via[end]);
  }
  std::reverse(out.surfaces.begin(), out.surfaces.end());
  std::reverse(out.ids.begin(), out.ids.end());
  return out;
}

EncodedWord EncodeWord(const TokenizerModel &model, std::u32string_view word) {
  EncodedWord out;
  out.word = std::u32string(word);
  out.encoding = EncodePretoken(model, model.marker() + out.word);
  // The marker occupies no position of the raw word.
  out.token_boundaries.push_back(0);
  int offset = -1;
  for (const auto &s : out.encoding.surfaces) {
    offset += static_cast<int>(s.size());
    if (offset > out.token_boundaries.back()) {
      out.token_boundaries.push_back(offset);
    }
  }
  return out;
}

std::vector<std::string> Encoding::Pieces(const TokenizerModel &model) const {
  std::vector<std::string> out;
  for (const auto &w : words) {
    for (std::size_t i = 0; i < w.encoding.surfaces.size(); ++i) {
      out.push_back(w.encoding.ids[i] < 0
                        ? model.unk_piece()
                        : Utf32ToUtf8(w.encoding.surfaces[i]));
    }
  }
  return out;
}

double Encoding::log_prob() const {
  double sum = 0;
  for (const auto &w : words) sum += w.encoding.log_prob;
  return sum;
}

Encoding Encode(const TokenizerModel &model, std::string_view text) {
  const std::u32string normalized = Utf8ToUtf32(NormalizeNfc(text));
  Encoding out;
  for (auto word : SplitWhitespace(normalized)) {
    out.words.push_back(EncodeWord(model, word));
  }
  return out;
}

std::string Decode(const TokenizerModel &model,
                   const std::vector<std::string> &pieces) {
  std::u32string text;
  for (const auto &p : pieces) {
    for (char32_t c : Utf8ToUtf32(p)) text.push_back(c == model.marker() ? U' ' : c);
  }
  if (!text.empty() && text.front() == U' ') text.erase(0, 1);
  return Utf32ToUtf8(text);
}

}  // namespace decompound
