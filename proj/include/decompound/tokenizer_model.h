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

// Unigram language model tokenizer: model, pretokenization and Viterbi
// encoding.
//
// Text is split into pretokens at whitespace, each word prefixed with the
// word-boundary marker (U+2581). Compound pretokenization additionally cuts
// every word at its constituent boundaries; only the first piece of a word
// carries the marker. Encoding always uses whitespace pretokenization.

#ifndef DECOMPOUND_TOKENIZER_MODEL_H_
#define DECOMPOUND_TOKENIZER_MODEL_H_

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "decompound/splitter.h"

namespace decompound {

inline constexpr char32_t kWordMarker = U'▁';
inline constexpr char kDefaultUnkPiece[] = "<unk>";

enum class Pretokenization { kWhitespace, kCompound };

std::string ToString(Pretokenization mode);
// Throws std::invalid_argument for anything but "whitespace" / "compound".
Pretokenization ParsePretokenization(std::string_view name);

// Throws std::invalid_argument if mode is kCompound and segmenter is null.
std::vector<std::u32string> Pretokenize(std::u32string_view text,
                                        Pretokenization mode,
                                        const Segmenter *segmenter = nullptr,
                                        char32_t marker = kWordMarker);

struct Piece {
  std::u32string text;
  double log_prob = 0;
  friend bool operator==(const Piece &, const Piece &) = default;
};

// Prefix trie over piece texts.
class PieceTrie {
 public:
  PieceTrie() : nodes_(1) {}
  void Insert(std::u32string_view text, int id);
  // Calls fn(end, id) for every piece matching text[begin:end].
  template <typename Fn>
  void ForEachPrefix(std::u32string_view text, std::size_t begin,
                     Fn &&fn) const {
    int32_t node = 0;
    for (std::size_t i = begin; i < text.size(); ++i) {
      auto it = edges_.find(Key(node, text[i]));
      if (it == edges_.end()) return;
      node = it->second;
      if (nodes_[node] >= 0) fn(i + 1, nodes_[node]);
    }
  }

 private:
  static uint64_t Key(int32_t node, char32_t c) {
    return (static_cast<uint64_t>(node) << 21) | static_cast<uint64_t>(c);
  }
  std::vector<int32_t> nodes_;  // piece id per node, -1 if none
  std::unordered_map<uint64_t, int32_t> edges_;
};

class TokenizerModel {
 public:
  static constexpr int kVersion = 1;

  // Pieces are stored in canonical order: log-prob descending, then text
  // ascending. Throws std::invalid_argument on duplicate or empty pieces.
  TokenizerModel(std::vector<Piece> pieces, Pretokenization training_mode,
                 char32_t marker = kWordMarker,
                 std::string unk_piece = kDefaultUnkPiece);

  const std::vector<Piece> &pieces() const { return pieces_; }
  std::size_t size() const { return pieces_.size(); }
  char32_t marker() const { return marker_; }
  const std::string &unk_piece() const { return unk_piece_; }
  Pretokenization training_pretokenization() const { return training_mode_; }
  const PieceTrie &trie() const { return trie_; }

  std::optional<int> Find(std::u32string_view text) const;
  // Score of a single-character unknown: 10 below the least likely piece.
  double unk_log_prob() const { return unk_log_prob_; }

  // Throws DataError unless probabilities sum to 1 within tolerance.
  void CheckNormalized(double tolerance = 1e-4) const;

  // Canonical JSON; floats with 17 significant digits.
  void Write(std::ostream &os) const;
  void WriteFile(const std::string &path) const;
  // Throws DataError on malformed or unsupported model files.
  static TokenizerModel Read(std::istream &is, const std::string &source);
  static TokenizerModel ReadFile(const std::string &path);

 private:
  std::vector<Piece> pieces_;
  std::unordered_map<std::u32string, int> index_;
  PieceTrie trie_;
  Pretokenization training_mode_;
  char32_t marker_;
  std::string unk_piece_;
  double unk_log_prob_ = 0;
};

// Viterbi segmentation of one pretoken.
struct EncodedPretoken {
  std::vector<std::u32string> surfaces;  // piece surfaces, concatenating to
                                         // the pretoken
  std::vector<int> ids;                  // -1 for unknown characters
  double log_prob = 0;
};

// Best piece sequence under the model; characters not covered by any piece
// are emitted one at a time as unknowns. Ties keep the longest final piece.
// `excluded` removes one piece id from consideration.
EncodedPretoken EncodePretoken(const TokenizerModel &model,
                               std::u32string_view pretoken,
                               int excluded = -1);

struct EncodedWord {
  std::u32string word;  // raw word, no marker
  EncodedPretoken encoding;
  // t_0 = 0 < ... < t_l = |word|, offsets into the raw word.
  std::vector<int> token_boundaries;
};

struct Encoding {
  std::vector<EncodedWord> words;
  // Piece strings in order; unknowns appear as the model's unk piece.
  std::vector<std::string> Pieces(const TokenizerModel &model) const;
  double log_prob() const;
};

// Whitespace-pretokenized encoding of NFC-normalized text.
Encoding Encode(const TokenizerModel &model, std::string_view text);
EncodedWord EncodeWord(const TokenizerModel &model, std::u32string_view word);

// Concatenates pieces and turns markers back into single spaces.
std::string Decode(const TokenizerModel &model,
                   const std::vector<std::string> &pieces);

}  // namespace decompound

#endif  // DECOMPOUND_TOKENIZER_MODEL_H_
