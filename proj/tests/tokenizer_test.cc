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

#include <gtest/gtest.h>

#include <map>
#include <random>
#include <sstream>

#include "decompound/hardness.h"
#include "decompound/sampling.h"
#include "decompound/text.h"
#include "decompound/tokenizer_model.h"
#include "decompound/unigram_trainer.h"
#include "model_fixtures.h"
#include "oracles.h"

namespace decompound {
namespace {

using Texts = std::vector<std::u32string>;

std::string Serialize(const TokenizerModel &m) {
  std::ostringstream os;
  m.Write(os);
  return os.str();
}

std::vector<std::string> RandomCorpus(uint64_t seed, int lines) {
  const std::vector<std::string> roots = {"haus", "tür", "bahn", "auto", "hof",
                                          "land", "see", "berg", "weg", "zug"};
  std::mt19937_64 rng(seed);
  std::vector<std::string> out;
  for (int i = 0; i < lines; ++i) {
    std::string line;
    const int words = 1 + static_cast<int>(rng() % 6);
    for (int w = 0; w < words; ++w) {
      if (w) line += ' ';
      const int parts = 1 + static_cast<int>(rng() % 2);
      for (int p = 0; p < parts; ++p) line += roots[rng() % roots.size()];
    }
    out.push_back(line);
  }
  return out;
}

std::map<std::u32string, double> VocabOf(const TokenizerModel &m) {
  std::map<std::u32string, double> v;
  for (const auto &p : m.pieces()) v[p.text] = p.log_prob;
  return v;
}

TEST(PretokenizeTest, Examples) {
  EXPECT_EQ((Texts{U"▁swim", U"▁suit"}),
            Pretokenize(U"swim suit", Pretokenization::kWhitespace));
  EXPECT_EQ((Texts{U"▁swimsuit"}),
            Pretokenize(U"swimsuit", Pretokenization::kWhitespace));
  const LookupSegmenter gold(std::vector<CompoundEntry>{
      CompoundEntry(Word(U"swimsuit", "en"), {U"swim", U"suit"})});
  EXPECT_EQ((Texts{U"▁swim", U"suit"}),
            Pretokenize(U"swimsuit", Pretokenization::kCompound, &gold));
  EXPECT_EQ((Texts{U"▁swim", U"suit", U"▁ok"}),
            Pretokenize(U" swimsuit  ok ", Pretokenization::kCompound, &gold));
  EXPECT_THROW(Pretokenize(U"swimsuit", Pretokenization::kCompound),
               std::invalid_argument);
}

TEST(TokenizerModelTest, CanonicalOrderAndValidation) {
  const TokenizerModel m({{U"b", std::log(0.25)}, {U"a", std::log(0.25)},
                          {U"ab", std::log(0.5)}},
                         Pretokenization::kWhitespace);
  EXPECT_EQ(U"ab", m.pieces()[0].text);
  EXPECT_EQ(U"a", m.pieces()[1].text);
  EXPECT_EQ(U"b", m.pieces()[2].text);
  EXPECT_DOUBLE_EQ(std::log(0.25) - 10, m.unk_log_prob());
  EXPECT_THROW(TokenizerModel({{U"a", -1}, {U"a", -2}}, Pretokenization::kWhitespace),
               std::invalid_argument);
  EXPECT_THROW(TokenizerModel({{U"", -1}}, Pretokenization::kWhitespace),
               std::invalid_argument);
}

TEST(TokenizerModelTest, FileRoundTripIsBitExact) {
  const auto m = TrainUnigram(RandomCorpus(3, 200), {.vocab_size = 60});
  const std::string text = Serialize(m);
  std::istringstream is(text);
  const auto back = TokenizerModel::Read(is, "model");
  EXPECT_EQ(m.pieces(), back.pieces());
  EXPECT_EQ(text, Serialize(back));
  EXPECT_EQ(0u, text.find(
      "{\"version\":1,\"type\":\"unigram\",\"marker\":\"▁\",\"unk_piece\":"
      "\"<unk>\",\"training_pretokenization\":\"whitespace\",\"pieces\":["));
}

TEST(TokenizerModelTest, ReadRejectsBadFiles) {
  for (const char *bad :
       {"{", R"({"version":2,"type":"unigram","marker":"▁","unk_piece":"<unk>",
                 "training_pretokenization":"whitespace","pieces":[["a",0]]})",
        R"({"version":1,"type":"unigram","marker":"▁","unk_piece":"<unk>",
                 "training_pretokenization":"whitespace","pieces":[["a",-1]]})",
        R"({"version":1,"type":"unigram","marker":"▁","unk_piece":"<unk>",
                 "training_pretokenization":"sideways","pieces":[["a",0]]})"}) {
    std::istringstream is(bad);
    EXPECT_THROW(TokenizerModel::Read(is, "m"), DataError) << bad;
  }
}

TEST(EncodeTest, SingleCharacterPieceEncodesToItself) {
  const auto m = fixture::AlphabetModel({U"abc"});
  const auto e = EncodePretoken(m, U"b");
  EXPECT_EQ((Texts{U"b"}), e.surfaces);
  EXPECT_EQ(*m.Find(U"b"), e.ids[0]);
}

TEST(EncodeTest, UnknownCharactersAreSingleUnkPieces) {
  const auto m = fixture::AlphabetModel({U"ab"});
  const auto e = Encode(m, "abx");
  EXPECT_EQ((std::vector<std::string>{"▁", "a", "b", "<unk>"}), e.Pieces(m));
  EXPECT_EQ(-1, e.words[0].encoding.ids[3]);
}

TEST(EncodeTest, ViterbiMatchesExhaustiveSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Piece> pieces;
    std::map<std::u32string, double> seen;
    const int count = 2 + static_cast<int>(rng() % 12);
    for (int i = 0; i < count; ++i) {
      auto text = oracle::RandomString(rng, 1, 3, U"abc");
      if (seen.count(text)) continue;
      const double lp = -1 - static_cast<double>(rng() % 1000) / 100.0;
      seen[text] = lp;
      pieces.push_back({text, lp});
    }
    const TokenizerModel m(pieces, Pretokenization::kWhitespace);
    for (int q = 0; q < 5; ++q) {
      const auto text = oracle::RandomString(rng, 1, 8, U"abcd");
      const auto e = EncodePretoken(m, text);
      EXPECT_NEAR(oracle::BestSegmentationLogProb(text, seen, m.unk_log_prob()),
                  e.log_prob, 1e-9);
      std::u32string joined;
      double sum = 0;
      for (std::size_t i = 0; i < e.surfaces.size(); ++i) {
        joined += e.surfaces[i];
        sum += e.ids[i] < 0 ? m.unk_log_prob() : m.pieces()[e.ids[i]].log_prob;
      }
      EXPECT_EQ(text, joined);
      EXPECT_NEAR(sum, e.log_prob, 1e-9);
    }
  }
}

TEST(EncodeTest, ExcludedPieceIsNeverUsed) {
  const TokenizerModel m({{U"ab", -0.1}, {U"a", -3}, {U"b", -3}},
                         Pretokenization::kWhitespace);
  EXPECT_EQ((Texts{U"ab"}), EncodePretoken(m, U"ab").surfaces);
  EXPECT_EQ((Texts{U"a", U"b"}), EncodePretoken(m, U"ab", *m.Find(U"ab")).surfaces);
}

TEST(EncodeTest, TokenBoundariesExcludeMarker) {
  const TokenizerModel m({{U"▁ab", -1}, {U"cd", -1}, {U"▁", -5}, {U"a", -5},
                          {U"b", -5}, {U"c", -5}, {U"d", -5}},
                         Pretokenization::kWhitespace);
  EXPECT_EQ((std::vector<int>{0, 2, 4}), EncodeWord(m, U"abcd").token_boundaries);
  const TokenizerModel split_marker({{U"▁", -1}, {U"abcd", -1}, {U"a", -5}},
                                    Pretokenization::kWhitespace);
  EXPECT_EQ((std::vector<int>{0, 4}),
            EncodeWord(split_marker, U"abcd").token_boundaries);
}

TEST(EncodeTest, DecodeRoundTrip) {
  const auto m = TrainUnigram(RandomCorpus(9, 300), {.vocab_size = 50});
  for (const auto &line : RandomCorpus(10, 50)) {
    const auto pieces = Encode(m, line).Pieces(m);
    EXPECT_EQ(line, Decode(m, pieces));
  }
  EXPECT_EQ("a b", Decode(m, {"▁a", "▁b"}));
}

TEST(TrainUnigramTest, PropertiesOnSyntheticCorpus) {
  const auto corpus = RandomCorpus(1, 500);
  TrainerOptions opts;
  opts.vocab_size = 80;
  const auto m = TrainUnigram(corpus, opts);
  EXPECT_LE(m.size(), 80u);
  EXPECT_NO_THROW(m.CheckNormalized());
  for (const auto &[pretoken, n] : CountPretokens(corpus, opts)) {
    for (char32_t c : pretoken) EXPECT_TRUE(m.Find(std::u32string(1, c)));
  }
  EXPECT_EQ(Serialize(m), Serialize(TrainUnigram(corpus, opts)));
  opts.threads = 3;
  EXPECT_EQ(Serialize(m), Serialize(TrainUnigram(corpus, opts)));
}

TEST(TrainUnigramTest, RepeatedWordExample) {
  const std::vector<std::string> corpus(100, "aaaa");
  const auto m = TrainUnigram(corpus, {.vocab_size = 3});
  ASSERT_EQ(3u, m.size());
  EXPECT_TRUE(m.Find(U"a"));
  EXPECT_TRUE(m.Find(U"▁"));
  // The one multi-character piece is whichever covers ▁aaaa best; encoding
  // must use it and reach the lattice maximum.
  const auto &multi = m.pieces()[0].text.size() > 1 ? m.pieces()[0] : m.pieces()[1];
  ASSERT_GT(multi.text.size(), 1u);
  const auto e = EncodeWord(m, U"aaaa");
  EXPECT_NE(e.encoding.surfaces.end(),
            std::find(e.encoding.surfaces.begin(), e.encoding.surfaces.end(),
                      multi.text));
  EXPECT_NEAR(oracle::BestSegmentationLogProb(U"▁aaaa", VocabOf(m), m.unk_log_prob()),
              e.encoding.log_prob, 1e-12);
}

TEST(TrainUnigramTest, SingleCharacterCorpusGivesUniformAlphabet) {
  const std::vector<std::string> corpus(50, "a");
  const auto m = TrainUnigram(corpus, {.vocab_size = 2});
  ASSERT_EQ(2u, m.size());
  EXPECT_TRUE(m.Find(U"a"));
  EXPECT_TRUE(m.Find(U"▁"));
  EXPECT_EQ(m.pieces()[0].log_prob, m.pieces()[1].log_prob);
  EXPECT_NEAR(std::log(0.5), m.pieces()[0].log_prob, 1e-12);
}

TEST(TrainUnigramTest, Errors) {
  EXPECT_THROW(TrainUnigram({}, {}), std::invalid_argument);
  EXPECT_THROW(TrainUnigram({"   "}, {}), std::invalid_argument);
  EXPECT_THROW(TrainUnigram({"abcdef"}, {.vocab_size = 3}), std::invalid_argument);
  EXPECT_THROW(TrainUnigram({"abc"}, {.mode = Pretokenization::kCompound}),
               std::invalid_argument);
}

TEST(TrainUnigramTest, CompoundModeWithoutCompoundsMatchesWhitespace) {
  const auto corpus = RandomCorpus(4, 200);
  const LookupSegmenter none(std::vector<CompoundEntry>{});
  TrainerOptions ws{.vocab_size = 60};
  TrainerOptions cp{.vocab_size = 60, .mode = Pretokenization::kCompound,
                    .segmenter = &none};
  const auto a = TrainUnigram(corpus, ws);
  const auto b = TrainUnigram(corpus, cp);
  EXPECT_EQ(a.pieces(), b.pieces());
  EXPECT_EQ(Pretokenization::kCompound, b.training_pretokenization());
}

TEST(TrainUnigramTest, CompoundModeLearnsFromSegmentedPretokens) {
  const LookupSegmenter gold(std::vector<CompoundEntry>{
      CompoundEntry(Word(U"swimsuit", "en"), {U"swim", U"suit"})});
  const auto counts = CountPretokens(
      {"swimsuit swimsuit"},
      {.mode = Pretokenization::kCompound, .segmenter = &gold});
  EXPECT_EQ((std::map<std::u32string, uint64_t>{{U"suit", 2}, {U"▁swim", 2}}),
            counts);
}

TEST(IsHardTest, Examples) {
  const Boundaries gold({0, 4, 8}, 8);
  EXPECT_FALSE(IsHard(U"swimsuit", gold, fixture::AlphabetModel({U"swimsuit"})));
  EXPECT_TRUE(IsHard(U"swimsuit", gold,
                     fixture::WeightedModel({U"swimsuit"}, {U"▁swimsuit"}, 0.5)));
  // ▁swi + msuit: 0.2 * 0.2 beats ▁swim + suit: 0.05 * 0.05, and any
  // character-level path (each character 0.5 / 7).
  std::vector<Piece> pieces = {{U"▁swi", std::log(0.2)}, {U"msuit", std::log(0.2)},
                               {U"▁swim", std::log(0.05)}, {U"suit", std::log(0.05)}};
  for (char32_t c : std::u32string(U"▁swimut")) {
    pieces.push_back({std::u32string(1, c), std::log(0.5 / 7)});
  }
  const TokenizerModel m(pieces, Pretokenization::kWhitespace);
  EXPECT_NO_THROW(m.CheckNormalized());
  const auto e = EncodeWord(m, U"swimsuit");
  EXPECT_EQ((Texts{U"▁swi", U"msuit"}), e.encoding.surfaces);
  EXPECT_EQ((std::vector<int>{0, 3, 8}), e.token_boundaries);
  EXPECT_TRUE(IsHard(U"swimsuit", gold, m));
  EXPECT_THROW(IsHard(U"swim", gold, m), std::invalid_argument);
}

TEST(HardnessRateTest, TrivialModels) {
  std::vector<CompoundEntry> entries = {
      CompoundEntry(Word(U"swimsuit", "en"), {U"swim", U"suit"}),
      CompoundEntry(Word(U"bridesmaid", "en"), {U"bride", U"maid"}),
      CompoundEntry::NonCompound(Word(U"maid", "en")),
      CompoundEntry(Word(U"haustür", "de"), {U"haus", U"tür"})};
  const Texts words = {U"swimsuit", U"bridesmaid", U"maid", U"haustür"};
  auto r = HardnessRate(entries, fixture::AlphabetModel(words));
  EXPECT_EQ(2, r.languages["en"].compounds);
  EXPECT_EQ(0.0, r.MacroPercent());
  r = HardnessRate(entries, fixture::WeightedModel(
                                words, {U"▁swimsuit", U"▁bridesmaid", U"▁haustür"}, 0.9));
  EXPECT_EQ(100.0, r.languages["en"].Percent());
  EXPECT_EQ(100.0, r.languages["de"].Percent());
  EXPECT_EQ(100.0, r.MacroPercent());
}

TEST(HardnessRateTest, HandCountedFixture) {
  const Texts en = {U"swimsuit", U"raincoat", U"bookshelf", U"sunlight",
                    U"football", U"teapot",   U"doorbell",  U"toothbrush",
                    U"moonlight", U"keyboard"};
  const std::vector<Texts> splits = {
      {U"swim", U"suit"}, {U"rain", U"coat"},   {U"book", U"shelf"},
      {U"sun", U"light"}, {U"foot", U"ball"},   {U"tea", U"pot"},
      {U"door", U"bell"}, {U"tooth", U"brush"}, {U"moon", U"light"},
      {U"key", U"board"}};
  std::vector<CompoundEntry> entries;
  for (std::size_t i = 0; i < en.size(); ++i) {
    entries.emplace_back(Word(en[i], "en"), splits[i]);
  }
  entries.emplace_back(Word(U"haustür", "de"), Texts{U"haus", U"tür"});
  entries.emplace_back(Word(U"autobahn", "de"), Texts{U"auto", U"bahn"});
  Texts all = en;
  all.push_back(U"haustür");
  all.push_back(U"autobahn");
  // Any multi-character piece (0.06 each) beats every character path
  // (< 0.4 / 24 per character). By hand: swimsuit, bookshelf (cut at 8) and
  // football (cut at 5) are hard; raincoat, sunlight and moonlight are cut at
  // their constituent boundary; the rest are all characters. haustür is
  // hard, autobahn is characters only.
  const auto m = fixture::WeightedModel(
      all,
      {U"▁swimsuit", U"▁rain", U"coat", U"▁bookshel", U"▁sun", U"light",
       U"▁footb", U"all", U"▁haustür", U"▁moon"},
      0.6);
  const auto r = HardnessRate(entries, m);
  EXPECT_EQ(10, r.languages.at("en").compounds);
  EXPECT_EQ(3, r.languages.at("en").hard);
  EXPECT_DOUBLE_EQ(30.0, r.languages.at("en").Percent());
  EXPECT_DOUBLE_EQ(50.0, r.languages.at("de").Percent());
  EXPECT_DOUBLE_EQ(40.0, r.MacroPercent());
}

TEST(TokenOriginsTest, Examples) {
  auto mono = [](std::vector<Piece> pieces) {
    return TokenizerModel(std::move(pieces), Pretokenization::kWhitespace);
  };
  std::map<std::string, TokenizerModel> models;
  models.emplace("de", mono({{U"▁haus", -1}, {U"▁see", -3}}));
  models.emplace("nl", mono({{U"▁haus", -2}, {U"▁see", -1}}));
  models.emplace("sv", mono({{U"▁haus", -0.5}, {U"▁zug", -1}}));
  const auto multi = mono({{U"▁haus", -1}, {U"▁see", -2}, {U"▁zug", -3},
                           {U"▁xyz", -4}});
  const auto rows = TokenOrigins(multi, models);
  ASSERT_EQ(4u, rows.size());
  EXPECT_EQ(U"▁haus", rows[0].piece);
  EXPECT_EQ((std::vector<std::string>{"sv", "de", "nl"}), rows[0].languages);
  EXPECT_EQ((std::vector<std::string>{"nl", "de"}), rows[1].languages);
  EXPECT_EQ((std::vector<std::string>{"sv"}), rows[2].languages);
  EXPECT_TRUE(rows[3].languages.empty());
}

TEST(SamplingTest, Probabilities) {
  auto p = LanguageProbabilities({{"de", 100}, {"en", 10}}, 0.2);
  const double a = std::pow(100.0, 0.2), b = std::pow(10.0, 0.2);
  EXPECT_NEAR(a / (a + b), p["de"], 1e-12);
  EXPECT_NEAR(b / (a + b), p["en"], 1e-12);
  // The rounded reference pair (0.6133, 0.3867) is about 2e-4 off the exact
  // 0.61314; it is only meant to hold at sampling tolerance.
  EXPECT_NEAR(0.6133, p["de"], 5e-4);
  EXPECT_NEAR(0.3867, p["en"], 5e-4);
  p = LanguageProbabilities({{"de", 100}, {"en", 10}, {"nl", 1}}, 0.0);
  for (const auto &[lang, v] : p) EXPECT_DOUBLE_EQ(1.0 / 3, v);
  p = LanguageProbabilities({{"de", 30}, {"en", 10}}, 1.0);
  EXPECT_DOUBLE_EQ(0.75, p["de"]);
  EXPECT_THROW(LanguageProbabilities({}, 0.2), std::invalid_argument);
  EXPECT_THROW(LanguageProbabilities({{"de", 1}}, -1), std::invalid_argument);
  EXPECT_THROW(LanguageProbabilities({{"de", 0}}, 1), std::invalid_argument);
}

TEST(SamplingTest, EmpiricalFrequenciesAndDeterminism) {
  const std::map<std::string, uint64_t> sizes = {{"de", 100}, {"en", 10}};
  const auto draws = SampleIndices(sizes, 0.2, 200000, 11);
  std::map<std::string, int> n;
  for (const auto &d : draws) {
    ++n[d.lang];
    EXPECT_LT(d.index, sizes.at(d.lang));
  }
  EXPECT_NEAR(0.6133, n["de"] / 200000.0, 0.005);
  const auto again = SampleIndices(sizes, 0.2, 200000, 11);
  for (std::size_t i = 0; i < draws.size(); ++i) {
    ASSERT_EQ(draws[i].lang, again[i].lang);
    ASSERT_EQ(draws[i].index, again[i].index);
  }
  const auto lines = SampleCorpus({{"de", {"x", "y"}}, {"en", {"z"}}}, 1.0, 30, 2);
  EXPECT_EQ(30u, lines.size());
}

}  // namespace
}  // namespace decompound
