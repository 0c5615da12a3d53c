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

#ifndef PTRAC_CORE_H_
#define PTRAC_CORE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "ptrac/inventory.h"
#include "ptrac/lexicon.h"
#include "ptrac/study.h"

namespace ptrac {

struct SequenceStats {
  // Occurrences over all syllables of all entries.
  std::uint64_t frequency = 0;
  // Indices of contributing lexicon entries, ascending, without repeats.
  std::vector<std::size_t> entries;
};

// Study-specific map from segment sequence to type frequency.
class SequenceTable {
 public:
  using Map = std::map<Sequence, SequenceStats>;

  void Add(const Sequence& seq, std::size_t entry_index);

  // 0 for sequences not in the table.
  std::uint64_t frequency(const Sequence& seq) const;
  const SequenceStats* find(const Sequence& seq) const;

  std::size_t size() const { return map_.size(); }
  bool empty() const { return map_.empty(); }
  std::uint64_t total_frequency() const { return total_; }
  Map::const_iterator begin() const { return map_.begin(); }
  Map::const_iterator end() const { return map_.end(); }

 private:
  Map map_;
  std::uint64_t total_ = 0;
};

// Two equal-length sequences differing in one consonant that is itself a
// featural minimal pair. `first` < `second` in unordered output.
struct MinimalSequencePair {
  Sequence first;
  Sequence second;
  Feature feature = Feature::kManner;
  // min(freq(first), freq(second)).
  std::uint64_t weight = 0;
  ContextInfo context;

  std::size_t position() const { return context.hole; }
};

// Syllabifies every entry and collects the study's sequences. Entries that
// fail to syllabify are skipped and reported in `excluded`. Throws Error on
// an empty lexicon or when `lex` was built over a different inventory.
SequenceTable ExtractSequences(const Lexicon& lex, const Inventory& inv,
                               const StudyConfig& config,
                               std::vector<Diagnostic>* excluded = nullptr);

// Filters in `config` are not applied here; see FilterPairs.
std::vector<MinimalSequencePair> EnumerateMinimalSequencePairs(
    const SequenceTable& table, const Inventory& inv,
    const StudyConfig& config);

// Frame-granularity matrix: each pair adds its weight (or 1 when unweighted)
// to (frame, feature) and 1 to the pair count.
ContrastMatrix CountContrasts(std::span<const MinimalSequencePair> pairs,
                              const StudyConfig& config);

// Merges columns under `scheme`. Frame matrices aggregate to any scheme;
// other matrices only to themselves or to kTotal. Throws Error otherwise,
// and for the position scheme on cluster studies.
ContrastMatrix Aggregate(const ContrastMatrix& matrix, Scheme scheme);

// Validates a user-supplied context key and returns its canonical spelling
// ("C1" becomes "C₁"). Throws Error for keys that cannot occur under the
// scheme.
std::string NormalizeContextKey(Scheme scheme, std::string_view key,
                                const Inventory& inv);

bool MatchesContext(const MinimalSequencePair& pair,
                    const ContextFilter& filter);

// Applies the feature and context filters of `config`. The context key must
// already be canonical.
std::vector<MinimalSequencePair> FilterPairs(
    std::vector<MinimalSequencePair> pairs, const StudyConfig& config);

struct WitnessPair {
  std::string first;
  std::string second;

  friend bool operator==(const WitnessPair&, const WitnessPair&) = default;
};

struct PairReportRow {
  MinimalSequencePair pair;
  std::string context;  // key under the requested scheme
  std::vector<WitnessPair> witnesses;
};

// Pairs of `feature` whose context matches `filter`, each with up to
// `max_witnesses` word pairs (orthographies) that contain the two sequences.
// Word pairs that differ only at the contrast are listed first.
std::vector<PairReportRow> ListPairsFor(
    std::span<const MinimalSequencePair> pairs, Feature feature,
    const ContextFilter& filter, const SequenceTable& table,
    const Lexicon& lex, std::size_t max_witnesses = 3);

struct StudyReport {
  StudyConfig config;
  SequenceTable table;
  std::vector<MinimalSequencePair> pairs;
  ContrastMatrix matrix;  // frame scheme
  std::vector<Diagnostic> diagnostics;
  std::size_t entries = 0;  // lexicon size
};

// extract -> enumerate -> filter -> count.
StudyReport RunStudy(const Lexicon& lex, const Inventory& inv,
                     const StudyConfig& config);

}  // namespace ptrac

#endif  // PTRAC_CORE_H_
