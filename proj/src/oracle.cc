// Copyright 2026 The ptrac Authors.
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

#include "ptrac/oracle.h"

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "ptrac/error.h"

namespace ptrac::oracle {
namespace {

using Symbols = std::vector<std::string>;

// CVCC syllables of a word, or nothing if the word has no valid parse.
std::optional<std::vector<std::vector<PhonemeId>>> CvccSyllables(
    const std::vector<PhonemeId>& word, const Inventory& inv) {
  std::vector<std::size_t> vowels;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (inv.IsVowel(word[i])) vowels.push_back(i);
  }
  if (vowels.empty() || vowels.front() != 1) return std::nullopt;
  std::vector<std::vector<PhonemeId>> out;
  for (std::size_t k = 0; k < vowels.size(); ++k) {
    const std::size_t begin = vowels[k] - 1;
    const std::size_t end = k + 1 < vowels.size() ? vowels[k + 1] - 1 : word.size();
    if (k + 1 < vowels.size() && vowels[k + 1] == vowels[k] + 1) return std::nullopt;
    const std::size_t coda = end - vowels[k] - 1;
    if (coda > 2) return std::nullopt;
    if (coda == 2) out.emplace_back(word.begin() + begin, word.begin() + end);
  }
  return out;
}

std::string Subscript(std::size_t n) {
  static const char* const kDigits[] = {"₀", "₁", "₂", "₃", "₄",
                                        "₅", "₆", "₇", "₈", "₉"};
  std::string s;
  for (char c : std::to_string(n)) s += kDigits[c - '0'];
  return s;
}

}  // namespace

ContrastMatrix OracleMatrix(const Lexicon& lex, const Inventory& inv,
                            const StudyConfig& config, Scheme scheme) {
  if (scheme == Scheme::kPosition && config.kind != StudyKind::kPositions) {
    throw Error("oracle: position scheme needs a position study");
  }
  ContrastMatrix matrix(
      {config.kind, config.weighting, config.orientation, scheme});

  // Every occurrence, in lexicon order.
  std::vector<std::vector<PhonemeId>> occurrences;
  for (const LexEntry& entry : lex.entries()) {
    const auto syllables = CvccSyllables(entry.transcription, inv);
    if (!syllables) continue;
    for (const auto& syl : *syllables) {
      if (config.kind == StudyKind::kClusters) {
        occurrences.push_back({syl[2], syl[3]});
      } else {
        occurrences.push_back(syl);
      }
    }
  }

  std::vector<std::vector<PhonemeId>> distinct;
  for (const auto& occ : occurrences) {
    if (std::find(distinct.begin(), distinct.end(), occ) == distinct.end()) {
      distinct.push_back(occ);
      if (distinct.size() > kMaxDistinctSequences) {
        throw Error("oracle: more than " + std::to_string(kMaxDistinctSequences) +
                    " distinct sequences");
      }
    }
  }

  auto symbols = [&](const std::vector<PhonemeId>& seq) {
    Symbols s;
    for (PhonemeId id : seq) s.push_back(inv.symbol(id));
    return s;
  };

  for (std::size_t i = 0; i < distinct.size(); ++i) {
    for (std::size_t j = 0; j < distinct.size(); ++j) {
      if (i == j) continue;
      const auto& a = distinct[i];
      const auto& b = distinct[j];
      if (a.size() != b.size()) continue;
      if (config.orientation == Orientation::kUnordered && !(symbols(a) < symbols(b))) {
        continue;
      }

      std::size_t differences = 0;
      std::size_t where = 0;
      for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k] != b[k]) {
          ++differences;
          where = k;
        }
      }
      if (differences != 1) continue;
      if (config.kind == StudyKind::kClusters && where != 0) continue;
      if (!inv.IsConsonant(a[where]) || !inv.IsConsonant(b[where])) continue;
      const auto feature = inv.ContrastingFeature(a[where], b[where]);
      if (!feature) continue;
      if (config.feature && *config.feature != *feature) continue;

      std::string frame;
      for (std::size_t k = 0; k < a.size(); ++k) {
        frame += k == where ? std::string("_") : inv.symbol(a[k]);
      }
      std::string next = where + 1 < a.size() ? inv.symbol(a[where + 1]) : "#";
      std::string next_class = where + 1 < a.size()
                                   ? std::string(inv.FollowingClass(a[where + 1]))
                                   : "boundary";
      std::size_t slot = 1;
      for (std::size_t k = 0; k < where; ++k) slot += inv.IsConsonant(a[k]) ? 1 : 0;

      auto key_for = [&](Scheme s) -> std::string {
        switch (s) {
          case Scheme::kFrame:
            return frame;
          case Scheme::kFollowingSegment:
            return "_" + next;
          case Scheme::kFollowingClass:
            return next_class;
          case Scheme::kPosition:
            return "C" + Subscript(slot);
          case Scheme::kTotal:
            return "total";
        }
        return "";
      };
      if (config.context && key_for(config.context->scheme) != config.context->key) {
        continue;
      }

      const auto freq_a = static_cast<std::uint64_t>(
          std::count(occurrences.begin(), occurrences.end(), a));
      const auto freq_b = static_cast<std::uint64_t>(
          std::count(occurrences.begin(), occurrences.end(), b));
      const std::uint64_t weight =
          config.weighting == Weighting::kTypeFrequency ? std::min(freq_a, freq_b) : 1;
      matrix.Add(key_for(scheme), *feature, weight, 1);
    }
  }
  return matrix;
}

}  // namespace ptrac::oracle
