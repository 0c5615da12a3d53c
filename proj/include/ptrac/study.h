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

#ifndef PTRAC_STUDY_H_
#define PTRAC_STUDY_H_

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

#include "ptrac/inventory.h"

namespace ptrac {

// cluster study: C1C2 codas of CVCC syllables, contrasts in C1.
// position study: whole CVCC syllables, contrasts in any consonant slot.
enum class StudyKind : std::uint8_t { kClusters, kPositions };
enum class Weighting : std::uint8_t { kTypeFrequency, kUnweighted };

// Granularity of context keys in a ContrastMatrix.
enum class Scheme : std::uint8_t {
  kFrame,             // "_and": the sequence with a hole
  kFollowingSegment,  // "_a": the segment after the hole, "_#" at the end
  kFollowingClass,    // "liquid": class of that segment
  kPosition,          // "C₁": consonant slot of the hole
  kTotal,             // "total"
};

std::string_view StudyKindName(StudyKind kind);
std::optional<StudyKind> ParseStudyKind(std::string_view name);
std::string_view WeightingName(Weighting weighting);
std::optional<Weighting> ParseWeighting(std::string_view name);
std::string_view SchemeName(Scheme scheme);
std::optional<Scheme> ParseScheme(std::string_view name);

inline constexpr char kHole = '_';
inline constexpr std::string_view kBoundary = "#";
inline constexpr std::string_view kTotalKey = "total";

// "C₁", "C₂", ... for a 1-based consonant slot.
std::string SlotLabel(std::size_t slot);

struct ContextFilter {
  Scheme scheme = Scheme::kFrame;
  std::string key;

  friend bool operator==(const ContextFilter&, const ContextFilter&) = default;
};

struct StudyConfig {
  StudyKind kind = StudyKind::kClusters;
  Weighting weighting = Weighting::kTypeFrequency;
  Orientation orientation = Orientation::kUnordered;
  std::optional<Feature> feature;
  std::optional<ContextFilter> context;

  friend bool operator==(const StudyConfig&, const StudyConfig&) = default;
};

// Where a contrast sits in its sequence; every context key derives from it.
struct ContextInfo {
  std::string frame;
  std::size_t hole = 0;
  std::size_t slot = 1;  // 1 + consonants before the hole
  std::string following;
  std::string following_class;
};

// Key of `info` under `scheme`.
std::string ContextKey(const ContextInfo& info, Scheme scheme);

struct Cell {
  std::uint64_t weighted_count = 0;
  std::uint64_t pair_count = 0;

  friend bool operator==(const Cell&, const Cell&) = default;
};

struct MatrixMeta {
  StudyKind kind = StudyKind::kClusters;
  Weighting weighting = Weighting::kTypeFrequency;
  Orientation orientation = Orientation::kUnordered;
  Scheme scheme = Scheme::kFrame;
};

// Feature x context grid. Columns are kept in byte order of their keys.
class ContrastMatrix {
 public:
  struct Column {
    std::array<Cell, 3> cells{};  // indexed by Feature
    // Set for frame-scheme columns; Aggregate() needs it.
    std::optional<ContextInfo> info;
  };

  ContrastMatrix() = default;
  explicit ContrastMatrix(MatrixMeta meta) : meta_(meta) {}

  const MatrixMeta& meta() const { return meta_; }

  // Adds to the column keyed by `info` under meta().scheme.
  void Add(const ContextInfo& info, Feature feature, std::uint64_t weight,
           std::uint64_t pairs);
  // Adds to a column by key; the column carries no ContextInfo.
  void Add(const std::string& key, Feature feature, std::uint64_t weight,
           std::uint64_t pairs);
  // Creates an all-zero column if `key` is absent.
  Column& column(const std::string& key) { return columns_[key]; }

  Cell cell(std::string_view key, Feature feature) const;
  // Row sum over all contexts.
  Cell total(Feature feature) const;

  const std::map<std::string, Column, std::less<>>& columns() const {
    return columns_;
  }
  bool empty() const { return columns_.empty(); }

  // Same scheme, same keys, same cells. Context info is not compared.
  friend bool operator==(const ContrastMatrix& a, const ContrastMatrix& b);

 private:
  MatrixMeta meta_;
  std::map<std::string, Column, std::less<>> columns_;
};

}  // namespace ptrac

#endif  // PTRAC_STUDY_H_
