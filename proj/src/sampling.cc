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

#include "decompound/sampling.h"

#include <cmath>
#include <stdexcept>

#include "decompound/random.h"

namespace decompound {

std::map<std::string, double> LanguageProbabilities(
    const std::map<std::string, uint64_t> &sizes, double alpha) {
  if (sizes.empty()) throw std::invalid_argument("no languages to sample");
  if (!(alpha >= 0)) throw std::invalid_argument("alpha must be >= 0");
  std::map<std::string, double> p;
  double total = 0;
  for (const auto &[lang, n] : sizes) {
    if (n == 0) throw std::invalid_argument("language " + lang + " is empty");
    total += p[lang] = std::pow(static_cast<double>(n), alpha);
  }
  for (auto &[lang, w] : p) w /= total;
  return p;
}

std::vector<SampledLine> SampleIndices(
    const std::map<std::string, uint64_t> &sizes, double alpha,
    std::size_t total, uint64_t seed) {
  const auto p = LanguageProbabilities(sizes, alpha);
  std::vector<std::pair<double, const std::string *>> cumulative;
  double acc = 0;
  for (const auto &[lang, w] : p) {
    acc += w;
    cumulative.emplace_back(acc, &lang);
  }
  Rng rng(seed);
  std::vector<SampledLine> out;
  out.reserve(total);
  for (std::size_t i = 0; i < total; ++i) {
    const double u = rng.UniformDouble() * acc;
    std::size_t l = 0;
    while (l + 1 < cumulative.size() && u >= cumulative[l].first) ++l;
    const std::string &lang = *cumulative[l].second;
    out.push_back({lang, static_cast<std::size_t>(rng.UniformInt(sizes.at(lang)))});
  }
  return out;
}

std::vector<std::string> SampleCorpus(
    const std::map<std::string, std::vector<std::string>> &corpora,
    double alpha, std::size_t total, uint64_t seed) {
  std::map<std::string, uint64_t> sizes;
  for (const auto &[lang, lines] : corpora) sizes[lang] = lines.size();
  std::vector<std::string> out;
  out.reserve(total);
  for (const auto &s : SampleIndices(sizes, alpha, total, seed)) {
    out.push_back(corpora.at(s.lang)[s.index]);
  }
  return out;
}

}  // namespace decompound
