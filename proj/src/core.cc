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

#include "ptrac/core.h"

#include <algorithm>
#include <limits>

#include "ptrac/syllabifier.h"

namespace ptrac {
namespace {

constexpr PhonemeId kMasked = std::numeric_limits<PhonemeId>::max();

ContextInfo MakeContext(const Sequence& seq, std::size_t hole,
                        const Inventory& inv) {
  ContextInfo info;
  info.hole = hole;
  info.slot = 1;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    if (i == hole) {
      info.frame += kHole;
      continue;
    }
    info.frame += inv.symbol(seq[i]);
    if (i < hole && inv.IsConsonant(seq[i])) ++info.slot;
  }
  if (hole + 1 < seq.size()) {
    info.following = inv.symbol(seq[hole + 1]);
    info.following_class = std::string(inv.FollowingClass(seq[hole + 1]));
  } else {
    info.following = std::string(kBoundary);
    info.following_class = std::string(kClassBoundary);
  }
  return info;
}

// Positions whose segment may differ within a minimal sequence pair. In the
// cluster study only the preconsonantal C1 varies; C2 is the context.
bool IsCandidatePosition(const Sequence& seq, std::size_t pos,
                         StudyKind kind, const Inventory& inv) {
  if (kind == StudyKind::kClusters && pos != 0) return false;
  return inv.IsConsonant(seq[pos]);
}

bool IsSubscriptDigit(std::string_view s) {
  return s.size() == 3 && s[0] == '\xE2' && s[1] == '\x82' &&
         static_cast<unsigned char>(s[2]) >= 0x80 &&
         static_cast<unsigned char>(s[2]) <= 0x89;
}

}  // namespace

void SequenceTable::Add(const Sequence& seq, std::size_t entry_index) {
  SequenceStats& stats = map_[seq];
  ++stats.frequency;
  ++total_;
  if (stats.entries.empty() || stats.entries.back() != entry_index) {
    stats.entries.push_back(entry_index);
  }
}

std::uint64_t SequenceTable::frequency(const Sequence& seq) const {
  const auto it = map_.find(seq);
  return it == map_.end() ? 0 : it->second.frequency;
}

const SequenceStats* SequenceTable::find(const Sequence& seq) const {
  const auto it = map_.find(seq);
  return it == map_.end() ? nullptr : &it->second;
}

SequenceTable ExtractSequences(const Lexicon& lex, const Inventory& inv,
                               const StudyConfig& config,
                               std::vector<Diagnostic>* excluded) {
  if (&lex.inventory() != &inv) {
    throw Error("lexicon was parsed against a different inventory");
  }
  if (lex.empty()) throw Error("empty lexicon");

  SequenceTable table;
  for (std::size_t i = 0; i < lex.size(); ++i) {
    const LexEntry& entry = lex[i];
    std::vector<Syllable> syllables;
    try {
      syllables = Syllabify(entry.transcription, inv);
    } catch (const SyllabificationError& e) {
      if (excluded) {
        excluded->push_back({entry.line, "'" + entry.orthography +
                                             "' excluded: " + e.what()});
      }
      continue;
    }
    for (const Syllable& syl : syllables) {
      if (syl.shape() != SyllableShape::kCVCC) continue;
      table.Add(config.kind == StudyKind::kClusters ? syl.coda : syl.phonemes(),
                i);
    }
  }
  return table;
}

std::vector<MinimalSequencePair> EnumerateMinimalSequencePairs(
    const SequenceTable& table, const Inventory& inv,
    const StudyConfig& config) {
  using Entry = SequenceTable::Map::value_type;
  // Sequences sharing a frame, keyed by (hole, sequence with the hole
  // masked). Members are pushed in table order, i.e. ascending.
  std::map<std::pair<std::size_t, Sequence>, std::vector<const Entry*>> frames;
  for (const Entry& entry : table) {
    const Sequence& seq = entry.first;
    for (std::size_t pos = 0; pos < seq.size(); ++pos) {
      if (!IsCandidatePosition(seq, pos, config.kind, inv)) continue;
      Sequence masked = seq;
      masked[pos] = kMasked;
      frames[{pos, std::move(masked)}].push_back(&entry);
    }
  }

  std::vector<MinimalSequencePair> pairs;
  for (const auto& [key, members] : frames) {
    const std::size_t pos = key.first;
    if (members.size() < 2) continue;
    const ContextInfo info = MakeContext(members.front()->first, pos, inv);
    for (std::size_t i = 0; i < members.size(); ++i) {
      for (std::size_t j = i + 1; j < members.size(); ++j) {
        const Entry& a = *members[i];
        const Entry& b = *members[j];
        const auto feature = inv.ContrastingFeature(a.first[pos], b.first[pos]);
        if (!feature) continue;
        const std::uint64_t weight =
            std::min(a.second.frequency, b.second.frequency);
        pairs.push_back({a.first, b.first, *feature, weight, info});
        if (config.orientation == Orientation::kOrdered) {
          pairs.push_back({b.first, a.first, *feature, weight, info});
        }
      }
    }
  }
  std::sort(pairs.begin(), pairs.end(), [](const auto& x, const auto& y) {
    if (x.first != y.first) return x.first < y.first;
    return x.second < y.second;
  });
  return pairs;
}

ContrastMatrix CountContrasts(std::span<const MinimalSequencePair> pairs,
                              const StudyConfig& config) {
  ContrastMatrix matrix(
      {config.kind, config.weighting, config.orientation, Scheme::kFrame});
  for (const MinimalSequencePair& pair : pairs) {
    const std::uint64_t weight =
        config.weighting == Weighting::kTypeFrequency ? pair.weight : 1;
    matrix.Add(pair.context, pair.feature, weight, 1);
  }
  return matrix;
}

ContrastMatrix Aggregate(const ContrastMatrix& matrix, Scheme scheme) {
  const MatrixMeta& meta = matrix.meta();
  if (scheme == Scheme::kPosition && meta.kind != StudyKind::kPositions) {
    throw Error("the position scheme applies to position studies only");
  }
  if (scheme == meta.scheme) return matrix;
  if (meta.scheme != Scheme::kFrame && scheme != Scheme::kTotal) {
    throw Error("cannot aggregate a " + std::string(SchemeName(meta.scheme)) +
                " matrix to " + std::string(SchemeName(scheme)));
  }

  MatrixMeta out_meta = meta;
  out_meta.scheme = scheme;
  ContrastMatrix out(out_meta);
  for (const auto& [key, col] : matrix.columns()) {
    std::string target(kTotalKey);
    if (scheme != Scheme::kTotal) {
      if (!col.info) throw Error("frame column '" + key + "' has no context");
      target = ContextKey(*col.info, scheme);
    }
    ContrastMatrix::Column& dst = out.column(target);
    for (std::size_t f = 0; f < dst.cells.size(); ++f) {
      dst.cells[f].weighted_count += col.cells[f].weighted_count;
      dst.cells[f].pair_count += col.cells[f].pair_count;
    }
  }
  return out;
}

std::string NormalizeContextKey(Scheme scheme, std::string_view key,
                                const Inventory& inv) {
  auto unknown = [&](const std::string& why) {
    return Error("unknown " + std::string(SchemeName(scheme)) + " context '" +
                 std::string(key) + "': " + why);
  };
  switch (scheme) {
    case Scheme::kFrame: {
      const auto hole = key.find(kHole);
      if (hole == std::string_view::npos || key.find(kHole, hole + 1) != std::string_view::npos) {
        throw unknown("a frame holds exactly one '_'");
      }
      std::string out;
      try {
        if (hole > 0) out += Transcribe(TokenizeTranscription(key.substr(0, hole), inv), inv);
        out += kHole;
        if (hole + 1 < key.size()) {
          out += Transcribe(TokenizeTranscription(key.substr(hole + 1), inv), inv);
        }
      } catch (const TokenizeError& e) {
        throw unknown(e.what());
      }
      if (out.size() == 1) throw unknown("a frame needs at least one segment");
      return out;
    }
    case Scheme::kFollowingSegment: {
      if (key.size() < 2 || key.front() != kHole) {
        throw unknown("expected '_' followed by a segment or '#'");
      }
      const std::string_view rest = key.substr(1);
      if (rest == kBoundary) return std::string(key);
      const auto id = inv.Find(rest);
      if (!id) throw unknown("'" + std::string(rest) + "' is not in the inventory");
      return std::string(1, kHole) + inv.symbol(*id);
    }
    case Scheme::kFollowingClass:
      for (std::string_view label : {kClassNasal, kClassLiquid, kClassGlide,
                                     kClassObstruent, kClassVowel, kClassBoundary}) {
        if (key == label) return std::string(key);
      }
      throw unknown("expected nasal, liquid, glide, obstruent, vowel or boundary");
    case Scheme::kPosition: {
      if (key.size() < 2 || key.front() != 'C') throw unknown("expected C1, C2, ...");
      std::size_t slot = 0;
      std::string_view rest = key.substr(1);
      while (!rest.empty()) {
        if (rest.front() >= '0' && rest.front() <= '9') {
          slot = slot * 10 + static_cast<std::size_t>(rest.front() - '0');
          rest.remove_prefix(1);
        } else if (IsSubscriptDigit(rest.substr(0, 3))) {
          slot = slot * 10 + static_cast<std::size_t>(static_cast<unsigned char>(rest[2]) - 0x80);
          rest.remove_prefix(3);
        } else {
          throw unknown("expected C1, C2, ...");
        }
        if (slot > 1000) throw unknown("slot out of range");
      }
      if (slot == 0) throw unknown("slots are numbered from 1");
      return SlotLabel(slot);
    }
    case Scheme::kTotal:
      if (key != kTotalKey) throw unknown("the only total context is 'total'");
      return std::string(key);
  }
  throw unknown("unsupported scheme");
}

bool MatchesContext(const MinimalSequencePair& pair,
                    const ContextFilter& filter) {
  return ContextKey(pair.context, filter.scheme) == filter.key;
}

std::vector<MinimalSequencePair> FilterPairs(
    std::vector<MinimalSequencePair> pairs, const StudyConfig& config) {
  std::erase_if(pairs, [&](const MinimalSequencePair& pair) {
    if (config.feature && pair.feature != *config.feature) return true;
    return config.context && !MatchesContext(pair, *config.context);
  });
  return pairs;
}

std::vector<PairReportRow> ListPairsFor(
    std::span<const MinimalSequencePair> pairs, Feature feature,
    const ContextFilter& filter, const SequenceTable& table,
    const Lexicon& lex, std::size_t max_witnesses) {
  const ContextFilter canonical{
      filter.scheme,
      NormalizeContextKey(filter.scheme, filter.key, lex.inventory())};

  auto differs_once = [&](std::size_t a, std::size_t b) {
    const Sequence& x = lex[a].transcription;
    const Sequence& y = lex[b].transcription;
    if (x.size() != y.size()) return false;
    std::size_t diff = 0;
    for (std::size_t i = 0; i < x.size(); ++i) diff += x[i] != y[i];
    return diff == 1;
  };

  std::vector<PairReportRow> rows;
  for (const MinimalSequencePair& pair : pairs) {
    if (pair.feature != feature || !MatchesContext(pair, canonical)) continue;
    PairReportRow row{pair, canonical.key, {}};
    const SequenceStats* a = table.find(pair.first);
    const SequenceStats* b = table.find(pair.second);
    if (a && b) {
      std::vector<std::pair<std::size_t, std::size_t>> exact, other;
      for (std::size_t ea : a->entries) {
        for (std::size_t eb : b->entries) {
          if (ea == eb) continue;
          (differs_once(ea, eb) ? exact : other).emplace_back(ea, eb);
        }
      }
      exact.insert(exact.end(), other.begin(), other.end());
      for (const auto& [ea, eb] : exact) {
        if (row.witnesses.size() >= max_witnesses) break;
        row.witnesses.push_back({lex[ea].orthography, lex[eb].orthography});
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

StudyReport RunStudy(const Lexicon& lex, const Inventory& inv,
                     const StudyConfig& config) {
  StudyReport report;
  report.config = config;
  report.entries = lex.size();
  if (report.config.context) {
    if (report.config.context->scheme == Scheme::kPosition &&
        config.kind != StudyKind::kPositions) {
      throw Error("the position scheme applies to position studies only");
    }
    report.config.context->key = NormalizeContextKey(
        config.context->scheme, config.context->key, inv);
  }
  if (&lex.inventory() != &inv) {
    throw Error("lexicon was parsed against a different inventory");
  }
  if (lex.empty()) {
    report.matrix = CountContrasts({}, report.config);
    return report;
  }
  report.table = ExtractSequences(lex, inv, report.config, &report.diagnostics);
  report.pairs = FilterPairs(
      EnumerateMinimalSequencePairs(report.table, inv, report.config),
      report.config);
  report.matrix = CountContrasts(report.pairs, report.config);
  return report;
}

}  // namespace ptrac
