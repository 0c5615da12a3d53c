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

#include "ptrac/inventory.h"

#include <algorithm>
#include <utility>

#include "ptrac/error.h"
#include "text_util.h"

namespace ptrac {
namespace {

using internal::SplitFields;

std::string NormalizeSymbol(std::string_view symbol) {
  if (symbol == kGlottalStopAlias) return std::string(kGlottalStop);
  return std::string(symbol);
}

void ValidateSymbol(std::string_view symbol, std::size_t line) {
  if (symbol.empty()) throw ParseError(line, "empty phoneme symbol");
  for (char c : symbol) {
    if (internal::IsSpace(c) || c == '#' || c == '_') {
      throw ParseError(line, "phoneme symbol '" + std::string(symbol) +
                                 "' contains a reserved character");
    }
  }
}

std::optional<std::string_view> ParseClassLabel(std::string_view label) {
  for (std::string_view known :
       {kClassNasal, kClassLiquid, kClassGlide, kClassObstruent}) {
    if (label == known) return known;
  }
  return std::nullopt;
}

std::string PairText(std::string_view a, std::string_view b) {
  return "(" + std::string(a) + ", " + std::string(b) + ")";
}

std::string LineRef(std::size_t line) {
  return line == 0 ? std::string("<definition>")
                   : "line " + std::to_string(line);
}

enum class Section { kNone, kPhonemes, kFeatures, kPairs, kClasses };

}  // namespace

std::string_view FeatureName(Feature feature) {
  switch (feature) {
    case Feature::kManner:
      return "manner";
    case Feature::kPlace:
      return "place";
    case Feature::kVoice:
      return "voice";
  }
  return "?";
}

std::optional<Feature> ParseFeature(std::string_view name) {
  for (Feature f : kFeatures) {
    if (FeatureName(f) == name) return f;
  }
  return std::nullopt;
}

std::string_view OrientationName(Orientation orientation) {
  return orientation == Orientation::kOrdered ? "ordered" : "unordered";
}

std::optional<Orientation> ParseOrientation(std::string_view name) {
  if (name == "ordered") return Orientation::kOrdered;
  if (name == "unordered") return Orientation::kUnordered;
  return std::nullopt;
}

Inventory Inventory::Parse(std::string_view text) {
  InventoryDefinition def;
  Section section = Section::kNone;
  bool seen[5] = {};

  internal::ForEachLine(text, [&](std::size_t line_no, std::string_view line) {
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = internal::Trim(line);
    if (line.empty()) return;

    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError(line_no, "malformed section header");
      const std::string_view name = internal::Trim(line.substr(1, line.size() - 2));
      if (name == "phonemes") {
        section = Section::kPhonemes;
      } else if (name == "features") {
        section = Section::kFeatures;
      } else if (name == "pairs") {
        section = Section::kPairs;
      } else if (name == "classes") {
        section = Section::kClasses;
      } else {
        throw ParseError(line_no, "unknown section [" + std::string(name) + "]");
      }
      auto& flag = seen[static_cast<int>(section)];
      if (flag) throw ParseError(line_no, "section [" + std::string(name) + "] repeated");
      flag = true;
      return;
    }

    const auto fields = SplitFields(line);
    switch (section) {
      case Section::kNone:
        throw ParseError(line_no, "content before the first section header");
      case Section::kPhonemes: {
        if (fields.size() != 2) {
          throw ParseError(line_no, "expected '<symbol> <consonant|vowel>'");
        }
        Phoneme p{NormalizeSymbol(fields[0]), PhonemeClass::kConsonant};
        if (fields[1] == "vowel") {
          p.phoneme_class = PhonemeClass::kVowel;
        } else if (fields[1] != "consonant") {
          throw ParseError(line_no, "unknown phoneme class '" + std::string(fields[1]) + "'");
        }
        def.phonemes.push_back({std::move(p), line_no});
        break;
      }
      case Section::kFeatures: {
        if (fields.size() != 4) {
          throw ParseError(line_no, "expected '<symbol> <manner> <place> <voiced|voiceless>'");
        }
        FeatureBundle bundle{std::string(fields[1]), std::string(fields[2]), false};
        if (fields[3] == "voiced") {
          bundle.voiced = true;
        } else if (fields[3] != "voiceless") {
          throw ParseError(line_no, "voice value must be 'voiced' or 'voiceless'");
        }
        def.bundles.push_back({NormalizeSymbol(fields[0]), std::move(bundle), line_no});
        break;
      }
      case Section::kPairs: {
        if (fields.size() != 3) {
          throw ParseError(line_no, "expected '<symbolA> <symbolB> <manner|place|voice>'");
        }
        const auto feature = ParseFeature(fields[2]);
        if (!feature) {
          throw ParseError(line_no, "unknown feature '" + std::string(fields[2]) + "'");
        }
        def.pairs.push_back({NormalizeSymbol(fields[0]), NormalizeSymbol(fields[1]), *feature, line_no});
        break;
      }
      case Section::kClasses: {
        if (fields.size() != 2) {
          throw ParseError(line_no, "expected '<symbol> <nasal|liquid|glide|obstruent>'");
        }
        def.classes.push_back({NormalizeSymbol(fields[0]), std::string(fields[1]), line_no});
        break;
      }
    }
  });

  const bool has_features = seen[static_cast<int>(Section::kFeatures)];
  const bool has_pairs = seen[static_cast<int>(Section::kPairs)];
  if (has_features == has_pairs) {
    throw ParseError(0, "exactly one of [features] and [pairs] must be present");
  }
  def.mode = has_features ? FeatureMode::kVector : FeatureMode::kPairList;
  return Build(def);
}

Inventory Inventory::Build(const InventoryDefinition& def) {
  Inventory inv;
  inv.mode_ = def.mode;

  // Phoneme ids follow symbol byte order.
  std::vector<const InventoryDefinition::PhonemeLine*> lines;
  std::map<std::string, std::size_t, std::less<>> first_line;
  for (const auto& p : def.phonemes) {
    const std::string symbol = NormalizeSymbol(p.phoneme.symbol);
    ValidateSymbol(symbol, p.line);
    auto [it, inserted] = first_line.emplace(symbol, p.line);
    if (!inserted) {
      throw ParseError(p.line, "duplicate phoneme symbol '" + symbol +
                                   "' (first defined at " +
                                   LineRef(it->second) + ")");
    }
    lines.push_back(&p);
  }
  std::sort(lines.begin(), lines.end(), [](const auto* a, const auto* b) {
    return NormalizeSymbol(a->phoneme.symbol) < NormalizeSymbol(b->phoneme.symbol);
  });
  if (lines.size() > 0xFFFF) throw ParseError(0, "too many phonemes");
  for (const auto* p : lines) {
    const auto id = static_cast<PhonemeId>(inv.phonemes_.size());
    Phoneme phoneme{NormalizeSymbol(p->phoneme.symbol), p->phoneme.phoneme_class};
    inv.max_symbol_length_ = std::max(inv.max_symbol_length_, phoneme.symbol.size());
    inv.index_.emplace(phoneme.symbol, id);
    (phoneme.phoneme_class == PhonemeClass::kConsonant ? inv.consonants_ : inv.vowels_)
        .push_back(id);
    inv.phonemes_.push_back(std::move(phoneme));
  }
  if (inv.consonants_.empty() || inv.vowels_.empty()) {
    throw ParseError(0, "an inventory needs at least one consonant and one vowel");
  }

  const std::size_t n = inv.size();
  inv.relation_.assign(n * n, -1);
  inv.bundles_.assign(n, std::nullopt);

  auto consonant = [&](const std::string& raw, std::size_t line,
                       std::string_view what) -> PhonemeId {
    const std::string symbol = NormalizeSymbol(raw);
    const auto id = inv.Find(symbol);
    if (!id) {
      throw ParseError(line, std::string(what) + " references unknown phoneme '" + symbol + "'");
    }
    if (inv.IsVowel(*id)) {
      throw ParseError(line, std::string(what) + " references vowel '" + symbol + "'");
    }
    return *id;
  };

  if (def.mode == FeatureMode::kPairList) {
    if (!def.bundles.empty()) {
      throw ParseError(def.bundles.front().line, "feature bundles given in pair-list mode");
    }
    std::vector<std::size_t> defined_at(n * n, 0);
    for (const auto& pair : def.pairs) {
      const PhonemeId a = consonant(pair.first, pair.line, "pair");
      const PhonemeId b = consonant(pair.second, pair.line, "pair");
      if (a == b) {
        throw ParseError(pair.line, "pair " + PairText(inv.symbol(a), inv.symbol(b)) +
                                        " relates a phoneme to itself");
      }
      const auto value = static_cast<std::int8_t>(pair.feature);
      auto& existing = inv.relation_[a * n + b];
      if (existing >= 0 && existing != value) {
        throw ParseError(
            pair.line,
            "pair " + PairText(inv.symbol(a), inv.symbol(b)) + " listed as " +
                std::string(FeatureName(static_cast<Feature>(existing))) + " at " +
                LineRef(defined_at[a * n + b]) + " and as " +
                std::string(FeatureName(pair.feature)) + " at " + LineRef(pair.line));
      }
      if (existing < 0) {
        defined_at[a * n + b] = defined_at[b * n + a] = pair.line;
      }
      existing = value;
      inv.relation_[b * n + a] = value;
    }
  } else {
    if (!def.pairs.empty()) {
      throw ParseError(def.pairs.front().line, "pair list given in vector mode");
    }
    std::vector<std::size_t> defined_at(n, 0);
    for (const auto& line : def.bundles) {
      const PhonemeId id = consonant(line.symbol, line.line, "feature bundle");
      if (inv.bundles_[id]) {
        throw ParseError(line.line, "second feature bundle for '" + inv.symbol(id) +
                                        "' (first at " + LineRef(defined_at[id]) + ")");
      }
      if (line.bundle.manner.empty() || line.bundle.place.empty()) {
        throw ParseError(line.line, "empty feature value for '" + inv.symbol(id) + "'");
      }
      inv.bundles_[id] = line.bundle;
      defined_at[id] = line.line;
    }
    for (PhonemeId c : inv.consonants_) {
      if (!inv.bundles_[c]) {
        throw ParseError(0, "consonant '" + inv.symbol(c) + "' has no feature bundle");
      }
    }
    for (PhonemeId a : inv.consonants_) {
      for (PhonemeId b : inv.consonants_) {
        const FeatureBundle& x = *inv.bundles_[a];
        const FeatureBundle& y = *inv.bundles_[b];
        const bool manner = x.manner != y.manner;
        const bool place = x.place != y.place;
        const bool voice = x.voiced != y.voiced;
        if (manner + place + voice != 1) continue;
        const Feature f = manner ? Feature::kManner
                          : place ? Feature::kPlace
                                  : Feature::kVoice;
        inv.relation_[a * n + b] = static_cast<std::int8_t>(f);
      }
    }
  }

  inv.class_labels_.assign(n, kClassObstruent);
  for (PhonemeId v : inv.vowels_) inv.class_labels_[v] = kClassVowel;
  const bool override_classes = !def.classes.empty();
  if (!override_classes) {
    const std::pair<std::string_view, std::string_view> defaults[] = {
        {"m", kClassNasal},  {"n", kClassNasal}, {"l", kClassLiquid},
        {"r", kClassLiquid}, {"w", kClassGlide}, {"y", kClassGlide}};
    for (const auto& [symbol, label] : defaults) {
      if (auto id = inv.Find(symbol); id && inv.IsConsonant(*id)) {
        inv.class_labels_[*id] = label;
      }
    }
  } else {
    std::vector<bool> assigned(n, false);
    for (const auto& line : def.classes) {
      const PhonemeId id = consonant(line.symbol, line.line, "class assignment");
      const auto label = ParseClassLabel(line.label);
      if (!label) {
        throw ParseError(line.line, "unknown segment class '" + line.label + "'");
      }
      if (assigned[id]) {
        throw ParseError(line.line, "segment class of '" + inv.symbol(id) + "' given twice");
      }
      assigned[id] = true;
      inv.class_labels_[id] = *label;
    }
  }
  return inv;
}

std::optional<PhonemeId> Inventory::Find(std::string_view symbol) const {
  if (symbol == kGlottalStopAlias) symbol = kGlottalStop;
  const auto it = index_.find(symbol);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const FeatureBundle* Inventory::bundle(PhonemeId id) const {
  const auto& b = bundles_[id];
  return b ? &*b : nullptr;
}

std::optional<Feature> Inventory::ContrastingFeature(std::string_view a,
                                                     std::string_view b) const {
  auto lookup = [this](std::string_view s) {
    const auto id = Find(s);
    if (!id) throw Error("unknown phoneme '" + std::string(s) + "'");
    if (IsVowel(*id)) {
      throw Error("'" + std::string(s) + "' is a vowel; only consonants form featural pairs");
    }
    return *id;
  };
  return ContrastingFeature(lookup(a), lookup(b));
}

std::vector<SymbolPair> Inventory::FeaturalPairs(Feature feature,
                                                 Orientation orientation) const {
  std::vector<SymbolPair> pairs;
  for (PhonemeId a : consonants_) {
    for (PhonemeId b : consonants_) {
      if (orientation == Orientation::kUnordered && b <= a) continue;
      if (ContrastingFeature(a, b) == feature) {
        pairs.push_back({symbol(a), symbol(b)});
      }
    }
  }
  // Ids are already in symbol order, so `pairs` is sorted.
  return pairs;
}

}  // namespace ptrac
