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

#ifndef PTRAC_INVENTORY_H_
#define PTRAC_INVENTORY_H_

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ptrac {

// Index of a phoneme inside its Inventory. Ids follow the byte order of the
// symbols, so comparing id sequences compares transcriptions
// lexicographically.
using PhonemeId = std::uint16_t;

enum class PhonemeClass : std::uint8_t { kConsonant, kVowel };

enum class Feature : std::uint8_t { kManner = 0, kPlace = 1, kVoice = 2 };

inline constexpr std::array<Feature, 3> kFeatures = {
    Feature::kManner, Feature::kPlace, Feature::kVoice};

std::string_view FeatureName(Feature feature);
std::optional<Feature> ParseFeature(std::string_view name);

enum class Orientation : std::uint8_t { kUnordered, kOrdered };

std::string_view OrientationName(Orientation orientation);
std::optional<Orientation> ParseOrientation(std::string_view name);

// Glottal stop spelling used by the inventory; "?" is read as an alias.
inline constexpr std::string_view kGlottalStop = "'";
inline constexpr std::string_view kGlottalStopAlias = "?";

// Labels for the segment following a contrast. The four consonant labels
// may be assigned in an inventory file; vowels and the end of a sequence get
// the fixed labels below.
inline constexpr std::string_view kClassNasal = "nasal";
inline constexpr std::string_view kClassLiquid = "liquid";
inline constexpr std::string_view kClassGlide = "glide";
inline constexpr std::string_view kClassObstruent = "obstruent";
inline constexpr std::string_view kClassVowel = "vowel";
inline constexpr std::string_view kClassBoundary = "boundary";

struct Phoneme {
  std::string symbol;
  PhonemeClass phoneme_class = PhonemeClass::kConsonant;
};

struct FeatureBundle {
  std::string manner;
  std::string place;
  bool voiced = false;
};

enum class FeatureMode : std::uint8_t { kVector, kPairList };

struct SymbolPair {
  std::string first;
  std::string second;

  auto operator<=>(const SymbolPair&) const = default;
};

// Unvalidated description of an inventory. Inventory::Parse fills one from a
// file; tests and generators may fill one directly. `line` fields are only
// used in error messages (0 = no line).
struct InventoryDefinition {
  struct PhonemeLine {
    Phoneme phoneme;
    std::size_t line = 0;
  };
  struct BundleLine {
    std::string symbol;
    FeatureBundle bundle;
    std::size_t line = 0;
  };
  struct PairLine {
    std::string first;
    std::string second;
    Feature feature = Feature::kManner;
    std::size_t line = 0;
  };
  struct ClassLine {
    std::string symbol;
    std::string label;
    std::size_t line = 0;
  };

  std::vector<PhonemeLine> phonemes;
  FeatureMode mode = FeatureMode::kPairList;
  std::vector<BundleLine> bundles;
  std::vector<PairLine> pairs;
  std::vector<ClassLine> classes;
};

// Phoneme set plus the featural-minimal-pair relation. Immutable once built.
class Inventory {
 public:
  // Parses the line-oriented inventory format:
  //
  //   [phonemes]   <symbol> <consonant|vowel>
  //   [features]   <symbol> <manner> <place> <voiced|voiceless>
  //   [pairs]      <symbolA> <symbolB> <manner|place|voice>
  //   [classes]    <symbol> <nasal|liquid|glide|obstruent>
  //
  // Exactly one of [features] and [pairs] must be present. Throws ParseError.
  static Inventory Parse(std::string_view text);

  // Validates `definition`. Throws ParseError.
  static Inventory Build(const InventoryDefinition& definition);

  std::size_t size() const { return phonemes_.size(); }
  const Phoneme& phoneme(PhonemeId id) const { return phonemes_[id]; }
  const std::string& symbol(PhonemeId id) const {
    return phonemes_[id].symbol;
  }
  bool IsConsonant(PhonemeId id) const {
    return phonemes_[id].phoneme_class == PhonemeClass::kConsonant;
  }
  bool IsVowel(PhonemeId id) const { return !IsConsonant(id); }

  std::span<const PhonemeId> consonants() const { return consonants_; }
  std::span<const PhonemeId> vowels() const { return vowels_; }

  // Looks a symbol up, mapping "?" to the glottal stop.
  std::optional<PhonemeId> Find(std::string_view symbol) const;

  FeatureMode mode() const { return mode_; }

  // Feature bundle of a consonant in vector mode, nullptr otherwise.
  const FeatureBundle* bundle(PhonemeId id) const;

  // The single feature distinguishing `a` and `b`, or nullopt when they are
  // not a featural minimal pair. Vowels never form pairs.
  std::optional<Feature> ContrastingFeature(PhonemeId a, PhonemeId b) const {
    const auto value = relation_[static_cast<std::size_t>(a) * size() + b];
    if (value < 0) return std::nullopt;
    return static_cast<Feature>(value);
  }

  // Symbol-level variant. Throws Error for unknown symbols and vowels.
  std::optional<Feature> ContrastingFeature(std::string_view a,
                                            std::string_view b) const;

  // All pairs contrasting in `feature`, sorted. Unordered mode lists each
  // pair once with the smaller symbol first.
  std::vector<SymbolPair> FeaturalPairs(Feature feature,
                                        Orientation orientation) const;

  // Class label of the segment: one of the kClass* constants.
  std::string_view FollowingClass(PhonemeId id) const {
    return class_labels_[id];
  }

  std::size_t max_symbol_length() const { return max_symbol_length_; }
  bool has_multi_char_symbols() const { return max_symbol_length_ > 1; }

 private:
  Inventory() = default;

  std::vector<Phoneme> phonemes_;
  std::map<std::string, PhonemeId, std::less<>> index_;
  std::vector<PhonemeId> consonants_;
  std::vector<PhonemeId> vowels_;
  FeatureMode mode_ = FeatureMode::kPairList;
  std::vector<std::optional<FeatureBundle>> bundles_;
  // size() x size(); -1 for "no pair", otherwise the Feature value.
  std::vector<std::int8_t> relation_;
  std::vector<std::string_view> class_labels_;
  std::size_t max_symbol_length_ = 0;
};

}  // namespace ptrac

#endif  // PTRAC_INVENTORY_H_
