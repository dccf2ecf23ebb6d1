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

#include "decompound/cli.h"

#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <regex>
#include <sstream>

#include "CLI11.hpp"
#include "decompound/align.h"
#include "decompound/dataset.h"
#include "decompound/eval.h"
#include "decompound/hardness.h"
#include "decompound/jsonl.h"
#include "decompound/mine.h"
#include "decompound/sampling.h"
#include "decompound/splitter.h"
#include "decompound/text.h"
#include "decompound/tokenizer_model.h"
#include "decompound/unigram_trainer.h"

namespace decompound {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input file, "-" for stdin.
class Input {
 public:
  explicit Input(const std::string &path) : path_(path) {
    if (path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot open " + path);
    }
  }
  std::istream &stream() { return path_ == "-" ? std::cin : file_; }
  std::string name() const { return path_ == "-" ? "<stdin>" : path_; }

 private:
  std::string path_;
  std::ifstream file_;
};

// Output file, "-" for the caller's stdout stream.
class Output {
 public:
  Output(const std::string &path, std::ostream &out) : path_(path), out_(out) {
    if (path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw DataError("cannot write " + path);
    }
  }
  std::ostream &stream() { return path_ == "-" ? out_ : file_; }
  void Close() {
    stream().flush();
    if (!stream()) throw DataError("failed writing " + path_);
  }

 private:
  std::string path_;
  std::ostream &out_;
  std::ofstream file_;
};

std::vector<std::string> ReadLines(const std::string &path) {
  Input in(path);
  std::vector<std::string> lines;
  std::string line;
  while (std::getline(in.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  return lines;
}

std::vector<Json> ReadRows(const std::string &path) {
  Input in(path);
  return ReadJsonl(in.stream(), in.name());
}

std::vector<WordRecord> ReadRecords(const std::string &path) {
  const auto rows = ReadRows(path);
  std::vector<WordRecord> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(RecordFromJson(rows[i], path + ":" + std::to_string(i + 1)));
  }
  return out;
}

std::vector<CompoundEntry> ReadEntries(const std::string &path) {
  const auto rows = ReadRows(path);
  std::vector<CompoundEntry> out;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    out.push_back(EntryFromJson(rows[i], path + ":" + std::to_string(i + 1)));
  }
  return out;
}

FrequencyTable ReadFrequencyTable(const std::string &path,
                                  const std::string &lang) {
  Input in(path);
  return FrequencyTable::ReadTsv(in.stream(), lang, in.name());
}

SplitterConfig ReadSplitterConfig(const std::string &path) {
  if (path.empty()) return {};
  Input in(path);
  try {
    return SplitterConfig::FromJson(Json::parse(in.stream()));
  } catch (const Json::parse_error &e) {
    throw DataError(in.name() + ": invalid JSON: " + e.what());
  }
}

// "lang:path" -> (lang, path); a bare path gets an empty language.
std::pair<std::string, std::string> SplitTagged(const std::string &arg) {
  static const std::regex tagged("^([a-z]{2,3}):(.+)$");
  std::smatch m;
  if (std::regex_match(arg, m, tagged)) return {m[1], m[2]};
  return {"", arg};
}

std::string LangCheck(const std::string &s) {
  return IsValidLang(s) ? "" : "not a 2-3 letter lowercase language code: " + s;
}

std::vector<int> Indices(const Boundaries &b) { return b.indices(); }

// Global options plus those of the chosen subcommand.
void LogConfig(const CLI::App &app, const CLI::App &sub) {
  std::istringstream all(app.config_to_str(true, false));
  std::string config, line;
  const std::string prefix = sub.get_name() + ".";
  while (std::getline(all, line)) {
    if (line.empty()) continue;
    const auto eq = line.find('=');
    const auto dot = line.find('.');
    if (dot == std::string::npos || dot > eq || line.rfind(prefix, 0) == 0) {
      config += "\n  " + line;
    }
  }
  spdlog::info("resolved config:{}", config);
}

void ReportDiagnostics(const std::vector<std::string> &diagnostics) {
  for (const auto &d : diagnostics) spdlog::warn("{}", d);
}

// ---- mine

struct MineArgs {
  std::vector<std::string> corpus;
  std::vector<std::string> freq_in;
  std::string lang;
  double threshold = kDefaultRatioThreshold;
  bool no_ratio_filter = false;
  std::string hyphens = "-";
  std::string out = "-";
  std::string freq_out;
};

void RunMine(const MineArgs &a, int threads, std::ostream &stdout_stream) {
  if (a.corpus.empty() && a.freq_in.empty()) {
    throw UsageError("mine needs --corpus or --freq-in");
  }
  std::vector<std::string> diagnostics;
  FrequencyTable table(a.lang);
  if (!a.corpus.empty()) {
    table = CountWordsInFiles(a.corpus, a.lang, threads, &diagnostics);
  }
  for (const auto &path : a.freq_in) table.Merge(ReadFrequencyTable(path, a.lang));
  ReportDiagnostics(diagnostics);
  if (table.empty()) throw DataError("no words counted");
  if (!a.freq_out.empty()) {
    Output freq(a.freq_out, stdout_stream);
    table.WriteTsv(freq.stream());
    freq.Close();
  }
  MineConfig config;
  config.threshold = a.threshold;
  config.ratio_filter = !a.no_ratio_filter;
  config.hyphens = Utf8ToUtf32(a.hyphens);
  const auto pairs = MinePairs(table, config);
  Output out(a.out, stdout_stream);
  int positives = 0;
  for (const auto &p : pairs) {
    Json j;
    j["input"] = p.input;
    j["target"] = p.target;
    j["lang"] = p.lang;
    j["hyphenated"] = p.is_hyphenated;
    out.stream() << DumpLine(j) << '\n';
    positives += p.is_hyphenated;
  }
  out.Close();
  spdlog::info("mined {} positives and {} negatives from {} forms", positives,
               pairs.size() - positives, table.size());
}

// ---- build-dataset

struct DatasetArgs {
  std::string lexicon;
  int min_lang_size = 100;
  int eval_cap = 1000;
  int max_depth = kDefaultMaxSplitDepth;
  uint64_t seed = 0;
  std::string out_dir;
};

void WriteEntries(const std::filesystem::path &path,
                  const std::vector<CompoundEntry> &entries) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw DataError("cannot write " + path.string());
  for (const auto &e : entries) out << DumpLine(EntryToJson(e)) << '\n';
  if (!out) throw DataError("failed writing " + path.string());
}

void RunBuildDataset(const DatasetArgs &a) {
  std::vector<std::string> diagnostics;
  Input in(a.lexicon);
  const auto lexicon = ReadLexicon(in.stream(), in.name(), &diagnostics);
  const auto entries = BuildEntries(lexicon, a.max_depth, &diagnostics);
  ReportDiagnostics(diagnostics);
  const auto split = MakeSplits(entries, a.seed, {a.min_lang_size, a.eval_cap});
  const std::filesystem::path dir(a.out_dir);
  std::filesystem::create_directories(dir);
  WriteEntries(dir / "train.jsonl", split.train);
  WriteEntries(dir / "eval.jsonl", split.eval);

  Json stats = Json::object();
  for (const auto &[lang, s] : DatasetStats(split)) {
    stats[lang] = {{"train_positive", s.train_positive},
                   {"train_negative", s.train_negative},
                   {"eval_positive", s.eval_positive},
                   {"eval_negative", s.eval_negative}};
    spdlog::info("{}: train {}+{}, eval {}+{}", lang, s.train_positive,
                 s.train_negative, s.eval_positive, s.eval_negative);
  }
  std::ofstream out(dir / "stats.json", std::ios::binary | std::ios::trunc);
  out << stats.dump(2) << '\n';
  if (!out) throw DataError("failed writing stats.json");
}

// ---- align

struct AlignArgs {
  std::string in = "-";
  std::string out = "-";
  bool bruteforce = false;
  long long max_candidates = AlignOptions{}.max_candidates;
};

void RunAlign(const AlignArgs &a, std::ostream &stdout_stream) {
  const auto rows = ReadRows(a.in);
  Output out(a.out, stdout_stream);
  AlignOptions options;
  options.max_candidates = a.max_candidates;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = a.in + ":" + std::to_string(i + 1);
    const auto record = RecordFromJson(rows[i], where);
    AlignmentResult r = [&] {
      try {
        return a.bruteforce ? AlignBruteforce(record.word, record.constituents)
                            : AlignFast(record.word, record.constituents, options);
      } catch (const std::invalid_argument &e) {
        throw DataError(where + ": " + e.what());
      } catch (const SearchLimitExceeded &e) {
        throw DataError(where + ": " + e.what());
      }
    }();
    Json j = rows[i];
    j["boundaries"] = Indices(r.boundaries());
    j["segments"] = TextsToJson(r.segments());
    j["cost"] = r.total_cost;
    out.stream() << DumpLine(j) << '\n';
  }
  out.Close();
}

// ---- split-predict

struct SplitArgs {
  std::string freq_table;
  std::string config;
  std::string lang;
  std::string in = "-";
  std::string out = "-";
};

void RunSplitPredict(const SplitArgs &a, std::ostream &stdout_stream) {
  const auto table = ReadFrequencyTable(a.freq_table, a.lang);
  const auto config = ReadSplitterConfig(a.config);
  const auto rows = ReadRows(a.in);
  Output out(a.out, stdout_stream);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const std::string where = a.in + ":" + std::to_string(i + 1);
    const Json &row = rows[i];
    if (!row.is_object() || !row.contains("word") || !row["word"].is_string() ||
        !row.contains("lang") || !row["lang"].is_string()) {
      throw DataError(where + ": record needs string 'word' and 'lang'");
    }
    std::optional<Word> word;
    try {
      word.emplace(Utf8ToUtf32(NormalizeNfc(row["word"].get<std::string>())),
                   row["lang"].get<std::string>());
    } catch (const std::invalid_argument &e) {
      throw DataError(where + ": " + e.what());
    }
    const auto split = FrequencySplit(word->text(), table, config);
    Json j;
    j["word"] = word->Utf8();
    j["lang"] = word->lang();
    j["constituents"] = TextsToJson(split.constituents);
    out.stream() << DumpLine(j) << '\n';
  }
  out.Close();
}

// ---- train-tokenizer

struct TrainArgs {
  std::vector<std::string> corpus;
  int vocab_size = 8000;
  std::string mode = "whitespace";
  std::string segmenter;
  std::string gold;
  std::string freq_table;
  std::string splitter_config;
  double alpha = 0.2;
  long long sample_lines = 0;
  uint64_t seed = 0;
  int max_piece_length = 16;
  int em_iterations = 2;
  double shrink_ratio = 0.75;
  int seed_factor = 20;
  uint64_t min_seed_count = 2;
  std::string out;
};

std::unique_ptr<Segmenter> MakeSegmenter(const TrainArgs &a) {
  if (a.segmenter == "gold") {
    if (a.gold.empty()) throw UsageError("--segmenter gold needs --gold FILE");
    return std::make_unique<LookupSegmenter>(ReadEntries(a.gold));
  }
  if (a.segmenter == "freq") {
    if (a.freq_table.empty()) {
      throw UsageError("--segmenter freq needs --freq-table FILE");
    }
    return std::make_unique<FrequencySegmenter>(
        ReadFrequencyTable(a.freq_table, ""), ReadSplitterConfig(a.splitter_config));
  }
  const std::string prefix = "predictions:";
  if (a.segmenter.rfind(prefix, 0) == 0 && a.segmenter.size() > prefix.size()) {
    return std::make_unique<LookupSegmenter>(
        ReadRecords(a.segmenter.substr(prefix.size())));
  }
  throw UsageError("--segmenter must be gold, freq or predictions:FILE");
}

std::vector<std::string> TrainingLines(const TrainArgs &a) {
  std::map<std::string, std::vector<std::string>> tagged;
  std::vector<std::string> untagged;
  for (const auto &arg : a.corpus) {
    auto [lang, path] = SplitTagged(arg);
    auto lines = ReadLines(path);
    auto &dest = lang.empty() ? untagged : tagged[lang];
    dest.insert(dest.end(), std::make_move_iterator(lines.begin()),
                std::make_move_iterator(lines.end()));
  }
  if (!tagged.empty() && !untagged.empty()) {
    throw UsageError("either tag every --corpus with LANG: or none");
  }
  if (tagged.empty()) return untagged;
  std::size_t total = 0;
  for (const auto &[lang, lines] : tagged) {
    if (lines.empty()) throw DataError("corpus for " + lang + " is empty");
    total += lines.size();
  }
  if (a.sample_lines > 0) total = static_cast<std::size_t>(a.sample_lines);
  for (const auto &[lang, p] : LanguageProbabilities(
           [&] {
             std::map<std::string, uint64_t> sizes;
             for (const auto &[l, lines] : tagged) sizes[l] = lines.size();
             return sizes;
           }(),
           a.alpha)) {
    spdlog::info("sampling {} with probability {:.4f}", lang, p);
  }
  return SampleCorpus(tagged, a.alpha, total, a.seed);
}

void RunTrainTokenizer(const TrainArgs &a, int threads) {
  TrainerOptions options;
  options.vocab_size = a.vocab_size;
  options.mode = ParsePretokenization(a.mode);
  options.max_piece_length = a.max_piece_length;
  options.em_iterations = a.em_iterations;
  options.shrink_ratio = a.shrink_ratio;
  options.seed_factor = a.seed_factor;
  options.min_seed_count = a.min_seed_count;
  options.threads = threads;
  std::unique_ptr<Segmenter> segmenter;
  if (options.mode == Pretokenization::kCompound) {
    if (a.segmenter.empty()) throw UsageError("--mode compound needs --segmenter");
    segmenter = MakeSegmenter(a);
    options.segmenter = segmenter.get();
  } else if (!a.segmenter.empty()) {
    spdlog::warn("--segmenter is ignored in whitespace mode");
  }
  const auto lines = TrainingLines(a);
  const auto model = TrainUnigram(lines, options);
  model.WriteFile(a.out);
  spdlog::info("wrote {} pieces to {}", model.size(), a.out);
}

// ---- encode

struct EncodeArgs {
  std::string model;
  std::string in = "-";
  std::string out = "-";
};

void RunEncode(const EncodeArgs &a, std::ostream &stdout_stream) {
  const auto model = TokenizerModel::ReadFile(a.model);
  const auto lines = ReadLines(a.in);
  Output out(a.out, stdout_stream);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    Encoding e;
    try {
      e = Encode(model, lines[i]);
    } catch (const Utf8Error &err) {
      throw DataError(a.in + ":" + std::to_string(i + 1) + ": " + err.what());
    }
    Json j;
    j["pieces"] = e.Pieces(model);
    j["token_boundaries"] = Json::array();
    for (const auto &w : e.words) j["token_boundaries"].push_back(w.token_boundaries);
    out.stream() << DumpLine(j) << '\n';
  }
  out.Close();
}

// ---- hardness

struct HardnessArgs {
  std::string model;
  std::string gold;
  std::string report;
  std::string per_word;
};

void RunHardness(const HardnessArgs &a, std::ostream &stdout_stream) {
  const auto model = TokenizerModel::ReadFile(a.model);
  const auto entries = ReadEntries(a.gold);
  const auto report = HardnessRate(entries, model);
  if (!a.per_word.empty()) {
    Output out(a.per_word, stdout_stream);
    for (const auto &e : entries) {
      if (!e.is_compound()) continue;
      const auto gold = AlignFast(e.word(), e.constituents()).boundaries();
      Json j;
      j["word"] = e.word().Utf8();
      j["lang"] = e.word().lang();
      j["boundaries"] = Indices(gold);
      j["hard"] = IsHard(e.word().text(), gold, model);
      out.stream() << DumpLine(j) << '\n';
    }
    out.Close();
  }
  Json j;
  j["languages"] = Json::object();
  for (const auto &[lang, c] : report.languages) {
    j["languages"][lang] = {{"compounds", c.compounds}, {"hard", c.hard},
                            {"percent", c.Percent()}};
    stdout_stream << lang << '\t' << c.hard << '/' << c.compounds << '\t'
                  << fmt::format("{:.1f}", c.Percent()) << '\n';
  }
  j["macro_percent"] = report.MacroPercent();
  stdout_stream << "avg\t\t" << fmt::format("{:.1f}", report.MacroPercent()) << '\n';
  if (!a.report.empty()) {
    Output out(a.report, stdout_stream);
    out.stream() << j.dump(2) << '\n';
    out.Close();
  }
}

// ---- token-origins

struct OriginsArgs {
  std::string multi;
  std::vector<std::string> mono;
  std::string out = "-";
};

void RunTokenOrigins(const OriginsArgs &a, std::ostream &stdout_stream) {
  const auto multi = TokenizerModel::ReadFile(a.multi);
  std::map<std::string, TokenizerModel> mono;
  for (const auto &arg : a.mono) {
    auto [lang, path] = SplitTagged(arg);
    if (lang.empty()) throw UsageError("--mono expects LANG:FILE, got " + arg);
    if (!mono.emplace(lang, TokenizerModel::ReadFile(path)).second) {
      throw UsageError("--mono lists " + lang + " twice");
    }
  }
  Output out(a.out, stdout_stream);
  const auto rows = TokenOrigins(multi, mono);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    std::string langs;
    for (const auto &l : rows[i].languages) langs += (langs.empty() ? "" : ",") + l;
    out.stream() << Utf32ToUtf8(rows[i].piece) << '\t'
                 << fmt::format("{:.17g}", multi.pieces()[i].log_prob) << '\t'
                 << langs << '\n';
  }
  out.Close();
}

// ---- eval

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::string mode = "segmentation";
  std::string model;
  std::string report;
};

void RunEval(const EvalArgs &a, std::ostream &stdout_stream) {
  const auto gold = ReadEntries(a.gold);
  const auto predictions = ReadRecords(a.pred);
  const EvalMode mode = ParseEvalMode(a.mode);
  const auto report = Score(gold, predictions, mode);
  std::optional<Breakdown> breakdown;
  if (!a.model.empty()) {
    breakdown = HardEasyBreakdown(gold, predictions, mode,
                                  TokenizerModel::ReadFile(a.model));
  }
  const Breakdown *b = breakdown ? &*breakdown : nullptr;
  if (!a.report.empty()) {
    Output out(a.report, stdout_stream);
    out.stream() << ReportToJson(report, b).dump(2) << '\n';
    out.Close();
  }
  stdout_stream << FormatTable(report, b);
}

void InstallLogger(std::ostream &err, const std::string &level) {
  auto sink = std::make_shared<spdlog::sinks::ostream_sink_mt>(err, true);
  auto logger = std::make_shared<spdlog::logger>("decompound", sink);
  logger->set_pattern("[%l] %v");
  logger->set_level(spdlog::level::from_str(level));
  spdlog::set_default_logger(logger);
}

}  // namespace

int RunCli(int argc, const char *const *argv, std::ostream &out,
           std::ostream &err) {
  CLI::App app{"Decompounding data mining, alignment, tokenizer training and "
               "evaluation."};
  app.name("decompound");
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");
  int threads = 1;
  std::string log_level = "info";
  app.add_option("--threads", threads, "Worker threads")
      ->check(CLI::Range(1, 1024))
      ->capture_default_str();
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off")
      ->check(CLI::IsMember({"trace", "debug", "info", "warn", "error", "off"}))
      ->capture_default_str();

  MineArgs mine;
  auto *mine_cmd = app.add_subcommand("mine", "Mine hyphenation pairs from raw text");
  mine_cmd->add_option("--corpus", mine.corpus, "Raw text files")->check(CLI::ExistingFile);
  mine_cmd->add_option("--freq-in", mine.freq_in, "Frequency tables to merge in")
      ->check(CLI::ExistingFile);
  mine_cmd->add_option("--lang", mine.lang, "Language code")->required()->check(LangCheck);
  mine_cmd->add_option("--threshold", mine.threshold, "Minimum hyphenated/plain ratio")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  mine_cmd->add_flag("--no-ratio-filter", mine.no_ratio_filter,
                     "Keep every hyphenated form");
  mine_cmd->add_option("--hyphens", mine.hyphens, "Hyphen characters")
      ->capture_default_str();
  mine_cmd->add_option("--out", mine.out, "Pairs JSONL, - for stdout")->capture_default_str();
  mine_cmd->add_option("--freq-out", mine.freq_out, "Write the merged frequency table");

  DatasetArgs dataset;
  auto *dataset_cmd =
      app.add_subcommand("build-dataset", "Build train/eval splits from a lexicon");
  dataset_cmd->add_option("--lexicon", dataset.lexicon, "word<TAB>c1,c2<TAB>lang TSV")
      ->required()
      ->check(CLI::ExistingFile);
  dataset_cmd->add_option("--min-lang-size", dataset.min_lang_size)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  dataset_cmd->add_option("--eval-cap", dataset.eval_cap)
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  dataset_cmd->add_option("--max-depth", dataset.max_depth, "Recursive split depth cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  dataset_cmd->add_option("--seed", dataset.seed)->capture_default_str();
  dataset_cmd->add_option("--out-dir", dataset.out_dir)->required();

  AlignArgs align;
  auto *align_cmd =
      app.add_subcommand("align", "Align constituents onto surface forms (JSONL)");
  align_cmd->add_option("--in", align.in, "Records JSONL, - for stdin")->capture_default_str();
  align_cmd->add_option("--out", align.out, "- for stdout")->capture_default_str();
  align_cmd->add_flag("--bruteforce", align.bruteforce, "Exhaustive search");
  align_cmd->add_option("--max-candidates", align.max_candidates)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  SplitArgs split;
  auto *split_cmd =
      app.add_subcommand("split-predict", "Frequency-based decompounding (JSONL)");
  split_cmd->add_option("--freq-table", split.freq_table, "form<TAB>count TSV")
      ->required()
      ->check(CLI::ExistingFile);
  split_cmd->add_option("--config", split.config, "Splitter config JSON")
      ->check(CLI::ExistingFile);
  split_cmd->add_option("--lang", split.lang, "Language of the frequency table")
      ->check(LangCheck);
  split_cmd->add_option("--in", split.in, "Words JSONL, - for stdin")->capture_default_str();
  split_cmd->add_option("--out", split.out, "- for stdout")->capture_default_str();

  TrainArgs train;
  auto *train_cmd =
      app.add_subcommand("train-tokenizer", "Train a unigram LM tokenizer");
  train_cmd->add_option("--corpus", train.corpus, "FILE or LANG:FILE, repeatable")
      ->required();
  train_cmd->add_option("--vocab-size", train.vocab_size)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--mode", train.mode)
      ->check(CLI::IsMember({"whitespace", "compound"}))
      ->capture_default_str();
  train_cmd->add_option("--segmenter", train.segmenter, "gold, freq or predictions:FILE");
  train_cmd->add_option("--gold", train.gold, "Gold entries JSONL for --segmenter gold")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--freq-table", train.freq_table, "TSV for --segmenter freq")
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--splitter-config", train.splitter_config)
      ->check(CLI::ExistingFile);
  train_cmd->add_option("--alpha", train.alpha, "Language sampling exponent")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  train_cmd->add_option("--sample-lines", train.sample_lines,
                        "Lines to sample from tagged corpora (default: their total)")
      ->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--seed", train.seed)->capture_default_str();
  train_cmd->add_option("--max-piece-length", train.max_piece_length)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--em-iterations", train.em_iterations)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--shrink-ratio", train.shrink_ratio)
      ->check(CLI::Range(0.01, 0.99))
      ->capture_default_str();
  train_cmd->add_option("--seed-factor", train.seed_factor)
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train_cmd->add_option("--min-seed-count", train.min_seed_count)->capture_default_str();
  train_cmd->add_option("--out", train.out, "Model file")->required();

  EncodeArgs encode;
  auto *encode_cmd = app.add_subcommand("encode", "Tokenize text lines (JSONL out)");
  encode_cmd->add_option("--model", encode.model)->required()->check(CLI::ExistingFile);
  encode_cmd->add_option("--in", encode.in, "Text, - for stdin")->capture_default_str();
  encode_cmd->add_option("--out", encode.out, "- for stdout")->capture_default_str();

  HardnessArgs hardness;
  auto *hardness_cmd =
      app.add_subcommand("hardness", "Percentage of hard compounds per language");
  hardness_cmd->add_option("--model", hardness.model)->required()->check(CLI::ExistingFile);
  hardness_cmd->add_option("--gold", hardness.gold, "Entries JSONL")
      ->required()
      ->check(CLI::ExistingFile);
  hardness_cmd->add_option("--report", hardness.report, "JSON report");
  hardness_cmd->add_option("--per-word", hardness.per_word, "Per-compound JSONL");

  OriginsArgs origins;
  auto *origins_cmd = app.add_subcommand(
      "token-origins", "Which monolingual vocabularies hold each multilingual piece");
  origins_cmd->add_option("--multi", origins.multi)->required()->check(CLI::ExistingFile);
  origins_cmd->add_option("--mono", origins.mono, "LANG:FILE, repeatable")->required();
  origins_cmd->add_option("--out", origins.out, "TSV, - for stdout")->capture_default_str();

  EvalArgs eval;
  auto *eval_cmd = app.add_subcommand("eval", "Score predictions against gold");
  eval_cmd->add_option("--gold", eval.gold)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--pred", eval.pred)->required()->check(CLI::ExistingFile);
  eval_cmd->add_option("--mode", eval.mode)
      ->check(CLI::IsMember({"segmentation", "normalization", "germanet-head",
                             "germanet_head"}))
      ->capture_default_str();
  eval_cmd->add_option("--model", eval.model, "Tokenizer for the hard/easy breakdown")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--report", eval.report, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  InstallLogger(err, log_level);
  CLI::App *sub = app.get_subcommands().front();
  LogConfig(app, *sub);
  try {
    if (sub == mine_cmd) RunMine(mine, threads, out);
    if (sub == dataset_cmd) RunBuildDataset(dataset);
    if (sub == align_cmd) RunAlign(align, out);
    if (sub == split_cmd) RunSplitPredict(split, out);
    if (sub == train_cmd) RunTrainTokenizer(train, threads);
    if (sub == encode_cmd) RunEncode(encode, out);
    if (sub == hardness_cmd) RunHardness(hardness, out);
    if (sub == origins_cmd) RunTokenOrigins(origins, out);
    if (sub == eval_cmd) RunEval(eval, out);
  } catch (const UsageError &e) {
    err << "usage error: " << e.what() << "\n" << sub->help();
    return kExitUsage;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  out.flush();
  return kExitOk;
}

}  // namespace decompound
