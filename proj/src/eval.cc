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

#include "decompound/eval.h"

#include <spdlog/spdlog.h>

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "decompound/align.h"
#include "decompound/hardness.h"
#include "decompound/text.h"

namespace decompound {
namespace {

using Key = std::pair<std::u32string, std::string>;

std::map<Key, const WordRecord *> IndexPredictions(
    const std::vector<WordRecord> &predictions) {
  std::map<Key, const WordRecord *> index;
  for (const auto &p : predictions) {
    if (!index.emplace(Key(p.word.text(), p.word.lang()), &p).second) {
      throw DataError("duplicate prediction for " + p.word.Utf8() + " (" +
                      p.word.lang() + ")");
    }
  }
  return index;
}

const WordRecord *Lookup(const std::map<Key, const WordRecord *> &index,
                         const Word &word) {
  auto it = index.find(Key(word.text(), word.lang()));
  return it == index.end() ? nullptr : it->second;
}

std::optional<double> Mean(const std::vector<double> &values) {
  if (values.empty()) return std::nullopt;
  double sum = 0;
  for (double v : values) sum += v;
  return sum / static_cast<double>(values.size());
}

template <typename Get>
std::optional<double> Macro(const EvalReport &r, Get get) {
  std::vector<double> values;
  for (const auto &[lang, s] : r.languages) {
    if (auto p = get(s).Percent()) values.push_back(*p);
  }
  return Mean(values);
}

Json PercentJson(const std::optional<double> &v) {
  return v ? Json(*v) : Json(nullptr);
}

Json AccuracyJson(const Accuracy &a) {
  Json j;
  j["accuracy"] = PercentJson(a.Percent());
  j["correct"] = a.correct;
  j["total"] = a.total;
  return j;
}

Json HardEasyJson(const HardEasy &h) {
  Json j;
  j["easy"] = AccuracyJson(h.easy);
  j["hard"] = AccuracyJson(h.hard);
  return j;
}

std::string Cell(const std::optional<double> &v) {
  if (!v) return "n/a";
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.1f", *v);
  return buf;
}

std::string Table(const std::vector<std::string> &header,
                  const std::vector<std::vector<std::string>> &rows) {
  std::vector<std::size_t> width(header.size(), 0);
  auto widen = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      width[i] = std::max(width[i], CharLen(row[i]));
    }
  };
  widen(header);
  for (const auto &r : rows) widen(r);
  std::string out;
  auto emit = [&](const std::vector<std::string> &row) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      const std::string pad(width[i] - CharLen(row[i]), ' ');
      out += i == 0 ? row[i] + pad : "  " + pad + row[i];
    }
    out += '\n';
  };
  emit(header);
  for (const auto &r : rows) emit(r);
  return out;
}

}  // namespace

std::string ToString(EvalMode mode) {
  switch (mode) {
    case EvalMode::kSegmentation:
      return "segmentation";
    case EvalMode::kNormalization:
      return "normalization";
    case EvalMode::kGermanetHead:
      return "germanet_head";
  }
  return "";
}

EvalMode ParseEvalMode(std::string_view name) {
  if (name == "segmentation") return EvalMode::kSegmentation;
  if (name == "normalization") return EvalMode::kNormalization;
  if (name == "germanet-head" || name == "germanet_head") {
    return EvalMode::kGermanetHead;
  }
  throw std::invalid_argument("unknown eval mode: " + std::string(name));
}

std::optional<double> Accuracy::Percent() const {
  if (total == 0) return std::nullopt;
  return 100.0 * correct / total;
}

std::optional<double> EvalReport::MacroPositives() const {
  return Macro(*this, [](const LanguageScore &s) { return s.positives; });
}
std::optional<double> EvalReport::MacroNegatives() const {
  return Macro(*this, [](const LanguageScore &s) { return s.negatives; });
}
std::optional<double> EvalReport::MacroAll() const {
  return Macro(*this, [](const LanguageScore &s) { return s.all; });
}

bool IsCorrect(const CompoundEntry &gold, const WordRecord *prediction,
               EvalMode mode) {
  if (prediction == nullptr) return false;
  const auto &pred = prediction->constituents;
  if (!gold.is_compound()) {
    return pred.size() == 1 && pred[0] == gold.word().text();
  }
  const auto &ref = gold.constituents();
  switch (mode) {
    case EvalMode::kNormalization:
      return pred == ref;
    case EvalMode::kGermanetHead:
      return pred.size() >= 2 && (pred.front() == ref.front() || pred.back() == ref.back());
    case EvalMode::kSegmentation:
      break;
  }
  if (pred.size() < 2 || pred.size() > static_cast<std::size_t>(gold.word().size())) return false;
  try {
    return AlignFast(gold.word(), pred).boundaries() ==
           AlignFast(gold.word(), ref).boundaries();
  } catch (const SearchLimitExceeded &) {
    spdlog::warn("alignment search limit hit for {}; counted wrong",
                 gold.word().Utf8());
    return false;
  }
}

EvalReport Score(const std::vector<CompoundEntry> &gold,
                 const std::vector<WordRecord> &predictions, EvalMode mode) {
  const auto index = IndexPredictions(predictions);
  EvalReport report;
  report.mode = mode;
  for (const auto &g : gold) {
    const WordRecord *pred = Lookup(index, g.word());
    if (pred == nullptr) {
      ++report.missing;
      spdlog::debug("no prediction for {} ({})", g.word().Utf8(), g.word().lang());
    }
    const bool ok = IsCorrect(g, pred, mode);
    auto &s = report.languages[g.word().lang()];
    (g.is_compound() ? s.positives : s.negatives).Add(ok);
    s.all.Add(ok);
  }
  if (report.missing) {
    spdlog::warn("{} gold examples have no prediction; counted wrong",
                 report.missing);
  }
  return report;
}

Breakdown HardEasyBreakdown(const std::vector<CompoundEntry> &gold,
                            const std::vector<WordRecord> &predictions,
                            EvalMode mode, const TokenizerModel &model) {
  const auto index = IndexPredictions(predictions);
  Breakdown out;
  for (const auto &g : gold) {
    if (!g.is_compound()) continue;
    const auto boundaries = AlignFast(g.word(), g.constituents()).boundaries();
    const bool hard = IsHard(g.word().text(), boundaries, model);
    const bool ok = IsCorrect(g, Lookup(index, g.word()), mode);
    auto &lang = out.languages[g.word().lang()];
    (hard ? lang.hard : lang.easy).Add(ok);
    (hard ? out.overall.hard : out.overall.easy).Add(ok);
  }
  return out;
}

Json ReportToJson(const EvalReport &report, const Breakdown *breakdown) {
  Json j;
  j["mode"] = ToString(report.mode);
  j["languages"] = Json::object();
  for (const auto &[lang, s] : report.languages) {
    Json l;
    l["P"] = AccuracyJson(s.positives);
    l["N"] = AccuracyJson(s.negatives);
    l["All"] = AccuracyJson(s.all);
    j["languages"][lang] = l;
  }
  j["macro"] = {{"P", PercentJson(report.MacroPositives())},
                {"N", PercentJson(report.MacroNegatives())},
                {"All", PercentJson(report.MacroAll())}};
  j["missing"] = report.missing;
  if (breakdown) {
    Json b;
    b["languages"] = Json::object();
    for (const auto &[lang, h] : breakdown->languages) {
      b["languages"][lang] = HardEasyJson(h);
    }
    b["overall"] = HardEasyJson(breakdown->overall);
    j["hard_easy"] = b;
  }
  return j;
}

std::string FormatTable(const EvalReport &report, const Breakdown *breakdown) {
  std::vector<std::string> header = {ToString(report.mode)};
  for (const auto &[lang, s] : report.languages) header.push_back(lang);
  header.push_back("avg");
  std::vector<std::vector<std::string>> rows;
  auto row = [&](const std::string &name, auto get, std::optional<double> macro) {
    std::vector<std::string> r = {name};
    for (const auto &[lang, s] : report.languages) r.push_back(Cell(get(s).Percent()));
    r.push_back(Cell(macro));
    rows.push_back(std::move(r));
  };
  row("P", [](const LanguageScore &s) { return s.positives; }, report.MacroPositives());
  row("N", [](const LanguageScore &s) { return s.negatives; }, report.MacroNegatives());
  row("All", [](const LanguageScore &s) { return s.all; }, report.MacroAll());
  if (breakdown) {
    std::vector<std::string> easy = {"P easy"}, hard = {"P hard"};
    std::vector<double> easy_all, hard_all;
    for (const auto &[lang, s] : report.languages) {
      auto it = breakdown->languages.find(lang);
      const HardEasy h = it == breakdown->languages.end() ? HardEasy{} : it->second;
      easy.push_back(Cell(h.easy.Percent()));
      hard.push_back(Cell(h.hard.Percent()));
      if (auto p = h.easy.Percent()) easy_all.push_back(*p);
      if (auto p = h.hard.Percent()) hard_all.push_back(*p);
    }
    easy.push_back(Cell(Mean(easy_all)));
    hard.push_back(Cell(Mean(hard_all)));
    rows.push_back(std::move(easy));
    rows.push_back(std::move(hard));
  }
  std::string out = Table(header, rows);
  if (report.missing) {
    out += "missing predictions: " + std::to_string(report.missing) + "\n";
  }
  return out;
}

}  // namespace decompound
