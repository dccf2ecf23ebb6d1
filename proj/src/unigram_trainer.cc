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

#include "decompound/unigram_trainer.h"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "decompound/text.h"

namespace decompound {
namespace {

// Multi-character pieces expected fewer times than this are dropped; a
// character below it is clamped to it.
constexpr double kMinExpectedCount = 0.5;
constexpr std::size_t kChunkSize = 1024;

using PretokenList = std::vector<std::pair<std::u32string, uint64_t>>;

double LogAddExp(double a, double b) {
  if (a == -std::numeric_limits<double>::infinity()) return b;
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a > b ? a + std::log1p(std::exp(b - a)) : b + std::log1p(std::exp(a - b));
}

// Runs fn over fixed-size chunks of [0, n) on up to `threads` workers and
// hands each chunk's result to reduce in chunk order, so the reduction is
// identical for every thread count.
template <typename Result, typename Fn, typename Reduce>
void ForEachChunk(std::size_t n, int threads, Fn &&fn, Reduce &&reduce) {
  const std::size_t chunks = (n + kChunkSize - 1) / kChunkSize;
  const std::size_t width = static_cast<std::size_t>(std::max(1, threads));
  for (std::size_t first = 0; first < chunks; first += width) {
    const std::size_t last = std::min(chunks, first + width);
    std::vector<std::future<Result>> pending;
    for (std::size_t c = first; c < last; ++c) {
      const std::size_t begin = c * kChunkSize;
      const std::size_t end = std::min(n, begin + kChunkSize);
      if (width == 1) {
        reduce(fn(begin, end));
      } else {
        pending.push_back(std::async(std::launch::async, fn, begin, end));
      }
    }
    for (auto &f : pending) reduce(f.get());
  }
}

struct Contribution {
  std::vector<std::pair<int, double>> counts;
  double log_likelihood = 0;
};

// Expected piece counts by forward-backward.
std::vector<double> ExpectedCounts(const TokenizerModel &model,
                                   const PretokenList &pretokens, int threads,
                                   double *log_likelihood) {
  constexpr double kNegInf = -std::numeric_limits<double>::infinity();
  auto work = [&](std::size_t begin, std::size_t end) {
    Contribution out;
    struct Edge {
      std::size_t from, to;
      int id;
    };
    std::vector<Edge> edges;
    std::vector<double> alpha, beta;
    for (std::size_t p = begin; p < end; ++p) {
      const auto &[text, freq] = pretokens[p];
      const std::size_t n = text.size();
      edges.clear();
      for (std::size_t s = 0; s < n; ++s) {
        model.trie().ForEachPrefix(text, s, [&](std::size_t e, int id) {
          edges.push_back({s, e, id});
        });
      }
      alpha.assign(n + 1, kNegInf);
      beta.assign(n + 1, kNegInf);
      alpha[0] = 0;
      beta[n] = 0;
      // Edges are grouped by ascending start.
      for (const auto &e : edges) {
        alpha[e.to] = LogAddExp(alpha[e.to],
                                alpha[e.from] + model.pieces()[e.id].log_prob);
      }
      for (auto it = edges.rbegin(); it != edges.rend(); ++it) {
        beta[it->from] = LogAddExp(beta[it->from],
                                   beta[it->to] + model.pieces()[it->id].log_prob);
      }
      const double z = alpha[n];
      if (z == kNegInf) continue;  // not coverable; cannot happen in training
      const double f = static_cast<double>(freq);
      out.log_likelihood += f * z;
      for (const auto &e : edges) {
        const double posterior = std::exp(
            alpha[e.from] + model.pieces()[e.id].log_prob + beta[e.to] - z);
        out.counts.emplace_back(e.id, f * posterior);
      }
    }
    return out;
  };

  std::vector<double> expected(model.size(), 0.0);
  double ll = 0;
  ForEachChunk<Contribution>(pretokens.size(), threads, work,
                             [&](const Contribution &c) {
                               for (const auto &[id, v] : c.counts) expected[id] += v;
                               ll += c.log_likelihood;
                             });
  if (log_likelihood) *log_likelihood = ll;
  return expected;
}

TokenizerModel Normalize(const TokenizerModel &model,
                         const std::vector<double> &counts, bool drop_rare,
                         char32_t marker) {
  std::vector<Piece> kept;
  std::vector<double> kept_counts;
  for (std::size_t i = 0; i < model.size(); ++i) {
    const bool is_char = model.pieces()[i].text.size() == 1;
    double c = counts[i];
    if (is_char) {
      c = std::max(c, kMinExpectedCount);
    } else if (drop_rare && c < kMinExpectedCount) {
      continue;
    }
    kept.push_back(model.pieces()[i]);
    kept_counts.push_back(c);
  }
  double total = 0;
  for (double c : kept_counts) total += c;
  const double log_total = std::log(total);
  for (std::size_t i = 0; i < kept.size(); ++i) {
    kept[i].log_prob = std::log(kept_counts[i]) - log_total;
  }
  return TokenizerModel(std::move(kept), model.training_pretokenization(),
                        marker);
}

struct ViterbiStats {
  std::vector<std::pair<int, uint64_t>> pieces;  // (id, pretoken freq)
};

TokenizerModel Prune(const TokenizerModel &model, const PretokenList &pretokens,
                     std::size_t target, int threads, char32_t marker) {
  const std::size_t size = model.size();
  std::vector<double> freq(size, 0.0), inverted(size, 0.0);
  double pretoken_total = 0;
  ForEachChunk<ViterbiStats>(
      pretokens.size(), threads,
      [&](std::size_t begin, std::size_t end) {
        ViterbiStats out;
        for (std::size_t p = begin; p < end; ++p) {
          for (int id : EncodePretoken(model, pretokens[p].first).ids) {
            if (id >= 0) out.pieces.emplace_back(id, pretokens[p].second);
          }
        }
        return out;
      },
      [&](const ViterbiStats &s) {
        for (const auto &[id, f] : s.pieces) {
          freq[id] += static_cast<double>(f);
          inverted[id] += static_cast<double>(f);
        }
      });
  for (const auto &[text, f] : pretokens) {
    pretoken_total += static_cast<double>(f);
  }
  double sum = 0;
  for (double f : freq) sum += f;
  const double log_sum = std::log(sum);

  // Loss in corpus log-likelihood if a piece were replaced by its best
  // segmentation into the remaining pieces.
  std::vector<std::pair<double, int>> candidates;
  std::vector<Piece> kept;
  for (std::size_t i = 0; i < size; ++i) {
    const Piece &piece = model.pieces()[i];
    if (piece.text.size() == 1) {
      kept.push_back(piece);
      continue;
    }
    if (freq[i] == 0) {
      candidates.emplace_back(0.0, static_cast<int>(i));
      continue;
    }
    const auto alternative =
        EncodePretoken(model, piece.text, static_cast<int>(i)).ids;
    const double log_prob_piece = std::log(freq[i]) - log_sum;
    const double log_sum_alt = std::log(
        sum + freq[i] * (static_cast<double>(alternative.size()) - 1.0));
    double log_prob_alt = 0;
    for (int id : alternative) {
      log_prob_alt += std::log((id >= 0 ? freq[id] : 0.0) + freq[i]) - log_sum_alt;
    }
    const double share = inverted[i] / pretoken_total;
    candidates.emplace_back(share * (log_prob_piece - log_prob_alt),
                            static_cast<int>(i));
  }
  std::sort(candidates.begin(), candidates.end(),
            [&](const auto &a, const auto &b) {
              if (a.first != b.first) return a.first > b.first;
              return model.pieces()[a.second].text < model.pieces()[b.second].text;
            });
  const std::size_t room = target > kept.size() ? target - kept.size() : 0;
  for (std::size_t i = 0; i < std::min(room, candidates.size()); ++i) {
    kept.push_back(model.pieces()[candidates[i].second]);
  }
  return TokenizerModel(std::move(kept), model.training_pretokenization(),
                        marker);
}

TokenizerModel SeedModel(const PretokenList &pretokens,
                         const TrainerOptions &options) {
  std::unordered_map<std::u32string, uint64_t> substrings;
  std::map<char32_t, uint64_t> chars;
  for (const auto &[text, f] : pretokens) {
    for (std::size_t i = 0; i < text.size(); ++i) {
      chars[text[i]] += f;
      const std::size_t max_len = std::min<std::size_t>(
          options.max_piece_length, text.size() - i);
      for (std::size_t len = 2; len <= max_len; ++len) {
        substrings[text.substr(i, len)] += f;
      }
    }
  }
  if (chars.size() > static_cast<std::size_t>(options.vocab_size)) {
    throw std::invalid_argument(
        "vocab_size " + std::to_string(options.vocab_size) +
        " is below the alphabet size " + std::to_string(chars.size()));
  }

  std::vector<std::pair<double, std::u32string>> ranked;
  for (auto &[text, count] : substrings) {
    if (count < options.min_seed_count) continue;
    ranked.emplace_back(static_cast<double>(count) * text.size(), text);
  }
  std::sort(ranked.begin(), ranked.end(), [](const auto &a, const auto &b) {
    if (a.first != b.first) return a.first > b.first;
    return a.second < b.second;
  });
  const std::size_t cap =
      static_cast<std::size_t>(options.seed_factor) * options.vocab_size;
  if (ranked.size() > cap) ranked.resize(cap);

  std::vector<Piece> pieces;
  double total = 0;
  for (const auto &[c, count] : chars) {
    pieces.push_back(Piece{std::u32string(1, c), static_cast<double>(count)});
    total += static_cast<double>(count);
  }
  for (auto &[score, text] : ranked) {
    pieces.push_back(Piece{std::move(text), score});
    total += score;
  }
  const double log_total = std::log(total);
  for (auto &p : pieces) p.log_prob = std::log(p.log_prob) - log_total;
  return TokenizerModel(std::move(pieces), options.mode, options.marker);
}

}  // namespace

std::map<std::u32string, uint64_t> CountPretokens(
    const std::vector<std::string> &lines, const TrainerOptions &options) {
  std::map<std::u32string, uint64_t> words;
  for (const auto &line : lines) {
    const std::u32string text = Utf8ToUtf32(NormalizeNfc(line));
    for (auto word : SplitWhitespace(text)) words[std::u32string(word)] += 1;
  }
  // Segment each distinct word once.
  std::map<std::u32string, uint64_t> pretokens;
  for (const auto &[word, count] : words) {
    for (auto &p :
         Pretokenize(word, options.mode, options.segmenter, options.marker)) {
      pretokens[std::move(p)] += count;
    }
  }
  return pretokens;
}

TokenizerModel TrainUnigram(const std::vector<std::string> &lines,
                            const TrainerOptions &options) {
  return TrainUnigramFromCounts(CountPretokens(lines, options), options);
}

TokenizerModel TrainUnigramFromCounts(
    const std::map<std::u32string, uint64_t> &counts,
    const TrainerOptions &options) {
  if (counts.empty()) throw std::invalid_argument("empty training corpus");
  if (options.vocab_size < 1 || options.em_iterations < 1 ||
      options.shrink_ratio <= 0 || options.shrink_ratio >= 1) {
    throw std::invalid_argument("invalid trainer options");
  }
  const PretokenList pretokens(counts.begin(), counts.end());

  TokenizerModel model = SeedModel(pretokens, options);
  const std::size_t vocab_size = static_cast<std::size_t>(options.vocab_size);
  for (int round = 0;; ++round) {
    double ll = 0;
    for (int it = 0; it < options.em_iterations; ++it) {
      const auto expected =
          ExpectedCounts(model, pretokens, options.threads, &ll);
      model = Normalize(model, expected, /*drop_rare=*/true, options.marker);
    }
    spdlog::debug("round {}: {} pieces, log-likelihood {}", round,
                  model.size(), ll);
    if (model.size() <= vocab_size) break;
    const auto target = std::max(
        vocab_size, static_cast<std::size_t>(model.size() * options.shrink_ratio));
    model = Prune(model, pretokens, target, options.threads, options.marker);
  }
  return model;
}

}  // namespace decompound
